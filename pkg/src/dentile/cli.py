"""Command-line entry point: ``dentile <subcommand> ...``.

Exit codes: 0 on success, 2 for bad arguments or inputs outside a
formula's domain, 3 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import asymptotics as asy
from . import exact_counts as ec
from .errors import DentileError, DomainError, InvariantViolation
from .io import csv_text, emit
from .path_numbers import ratio_sum
from .regions import build_aztec, build_hexagon, region_json


def int_list(text: str) -> list[int]:
    """``"1,4,7"`` or ranges like ``"6-24"`` (mixed: ``"1,3-5"``)."""
    out: list[int] = []
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _parse(kind):
    def conv(text):
        try:
            return kind(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    conv.__name__ = kind.__name__
    return conv


def _dump(json_obj) -> str:
    return json.dumps(json_obj, sort_keys=True) + "\n"


def _region_meta(region) -> dict:
    return {k: v for k, v in region.to_dict().items() if k != "cells"}


# ---------------------------------------------------------------- regions from flags


def _aztec_from(args):
    return build_aztec(args.n, args.dents_sw, args.dents_se, augmented=args.augmented)


def _hexagon_from(args):
    return build_hexagon(args.a, args.b, args.c, args.dents_n, args.dents_ne,
                         opposite_variant=args.opposite)


def _maybe_dump_region(args, region):
    if getattr(args, "dump_region", None):
        emit(region_json(region) + "\n", args.dump_region)


# ---------------------------------------------------------------- handlers


def cmd_count(args) -> int:
    region = _aztec_from(args) if args.geometry == "aztec" else _hexagon_from(args)
    _maybe_dump_region(args, region)
    if args.method == "lgv":
        res = ec.CountResult(region.to_dict(), ec.lgv_count(region), ec.Method.LGV)
    elif args.method == "oracle":
        from .oracle import count_matchings
        from .regions import dual_graph
        region.require_tileable()
        res = ec.CountResult(region.to_dict(), count_matchings(dual_graph(region)), ec.Method.ORACLE)
    else:
        res = ec.count_region(region)
    out = {"count": str(res.count), "method": res.method.value, "region": _region_meta(region)}
    emit(_dump(out), args.out)
    return 0


def cmd_ratio(args) -> int:
    if args.geometry == "aztec":
        rows = [(n, i, j, ec.aztec_ratio(n, i, j)) for n in args.n for i in args.i for j in args.j]
    else:
        fn = ec.opposite_ratio if args.opposite else ec.hexagon_ratio
        rows = [(f"{args.a},{args.b},{args.c}", i, j, fn(args.a, args.b, args.c, i, j))
                for i in args.i for j in args.j]
        if args.n and args.n != [0]:
            raise DomainError("--n is for Aztec ratios; hexagons take --a --b --c")
    fmt = args.format or ("csv" if len(rows) > 1 else "text")
    if fmt == "text":
        text = "".join(ec.decimal_string(r[3], args.digits) + "\n" for r in rows)
    elif fmt == "json":
        text = _dump([{"n": r[0], "i": r[1], "j": r[2], "ratio": f"{r[3].numerator}/{r[3].denominator}",
                       "decimal": ec.decimal_string(r[3], args.digits)} for r in rows])
    else:
        head = "n" if args.geometry == "aztec" else "sides"
        text = csv_text([head, "i", "j", "ratio"],
                        [(r[0], r[1], r[2], ec.decimal_string(r[3], args.digits)) for r in rows])
    emit(text, args.out)
    return 0


def _report(args):
    if args.geometry == "aztec":
        return asy.classify_aztec(args.a_s, args.b_s)
    return asy.classify_hexagon(args.A, args.B, args.C, args.alpha, args.beta)


def cmd_classify(args) -> int:
    rep = _report(args)
    if args.format == "json":
        emit(_dump(rep.to_dict()), args.out)
    else:
        emit(rep.classification.value + "\n", args.out)
    return 0


def cmd_asympt(args) -> int:
    if args.geometry == "aztec":
        if args.alphas:
            if not args.betas or len(args.betas) != len(args.alphas):
                raise DomainError("--alphas and --betas need the same length")
            n = args.n[0]
            out = {"n": n, "alphas": args.alphas, "betas": args.betas,
                   "predicted_ratio": asy.multi_dent_aztec_asymptotic(n, args.alphas, args.betas),
                   "entropy_diff": asy.entropy_diff(args.alphas, args.betas)}
            emit(_dump(out), args.out)
            return 0
        a, b = args.a_s, args.b_s
        rep = asy.classify_aztec(a, b)
        limit = asy.aztec_log_limit(a, b)

        def exact_log(n):
            i, j = asy.dent_indices(n, a, b)
            return math.log(ratio_sum(n, i, j)) / n

        def predicted(n):
            return asy.log_aztec_ratio_asymptotic(n, a, b) / n
    else:
        A, B, C, al, be = args.A, args.B, args.C, args.alpha, args.beta
        rep = asy.classify_hexagon(A, B, C, al, be)
        limit = asy.hexagon_log_limit(A, B, C, al, be)

        def exact_log(n):
            i, j = round(al * n * A), round(be * n * B)
            return math.log(ec.hexagon_ratio(round(A * n), round(B * n), round(C * n), i, j)) / n

        def predicted(n):
            return asy.log_hexagon_ratio_asymptotic(n, A, B, C, al, be) / n

    if len(args.n) > 1 or args.format == "csv":
        rows = []
        for n in args.n:
            ex, pr = exact_log(n), predicted(n)
            rows.append((n, f"{ex:.12g}", f"{pr:.12g}", f"{abs(ex - pr):.6g}"))
        emit(csv_text(["n", "exact_log_ratio", "predicted", "abs_error"], rows), args.out)
        return 0
    n = args.n[0]
    out = rep.to_dict()
    out.update({"n": n, "log_limit": limit, "exact_log_ratio": exact_log(n),
                "predicted_log_ratio": predicted(n)})
    emit(_dump(out), args.out)
    return 0


def cmd_helmet(args) -> int:
    grid = asy.helmet_grid(args.resolution)
    rows = [(f"{a:.10g}", f"{b:.10g}", f"{f:.12g}", reg) for a, b, f, reg in grid.rows]
    emit(csv_text(["a", "b", "f", "regime"], rows), args.out)
    return 0


def cmd_critical(args) -> int:
    pts = asy.critical_curve(args.samples)
    rows = [(f"{p.a:.12g}", f"{p.b:.12g}", f"{p.residual:.3e}") for p in pts]
    emit(csv_text(["a", "b", "residual"], rows), args.out)
    return 0


def cmd_verify(args) -> int:
    from .verify import format_table, run_suites
    checks = run_suites(args.suite)
    emit(format_table(checks), args.out)
    return 0 if all(c.passed for c in checks) else 3


def _stepset(text: str):
    from .oracle import StepSet, delannoy_steps
    if text == "delannoy":
        return delannoy_steps()
    if text == "simple":
        return StepSet.of([(1, 0), (0, 1)])
    steps = [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    return StepSet.of(steps)


def cmd_concentration(args) -> int:
    from .oracle import deviation_decay_fit
    fit = deviation_decay_fit(_stepset(args.steps), args.direction, Fraction(args.eps), args.k)
    rows = []
    for k, r, f in fit.fractions:
        rows.append((k, f"{r:.10g}", f.numerator, f.denominator,
                     f"{math.log(f):.10g}" if f > 0 else "-inf"))
    emit(csv_text(["k", "|w|", "fraction_numerator", "fraction_denominator", "log_fraction"], rows),
         args.out)
    c1 = "none (trivially concentrated)" if fit.c1 is None else f"{fit.c1:.6g}"
    print(f"fitted c1: {c1}", file=sys.stderr)
    return 0


def cmd_sample(args) -> int:
    from .sampler import KERNEL, encode_paths, frozen_stats, render_svg, sample
    region = _aztec_from(args)
    _maybe_dump_region(args, region)
    if args.seed < 0 or args.seed >= 1 << 64:
        raise DomainError("--seed must be a 64-bit unsigned value")
    if args.flips is not None and args.flips < 0:
        raise DomainError("--flips must be >= 0")
    tiling = sample(region, args.flips, args.seed, check=args.check)
    tiling.validate()
    fam = encode_paths(tiling)
    if args.svg:
        emit(render_svg(tiling, fam if args.paths else None), args.svg)
    stats = frozen_stats(tiling, args.radius)
    out = stats.to_dict(include_cells=args.cells)
    out.update({"region": _region_meta(region), "seed": args.seed,
                "flips": tiling.provenance["flips"], "rng": "splitmix64", "kernel": KERNEL.NAME,
                "paths": len(fam), "nontrivial_paths": fam.nontrivial})
    emit(_dump(out), args.out)
    return 0


# ---------------------------------------------------------------- parser


def _aztec_flags(p, need_n=True):
    p.add_argument("--n", type=int, required=need_n, help="order of the diamond")
    p.add_argument("--dents-sw", type=_parse(int_list), default=[], metavar="LIST",
                   help="southwestern dents, bottom to top (e.g. 1,4,7)")
    p.add_argument("--dents-se", type=_parse(int_list), default=[], metavar="LIST",
                   help="southeastern dents, bottom to top")
    p.add_argument("--augmented", action="store_true",
                   help="add squares next to the dent positions instead of removing them")


def _hex_flags(p):
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--dents-n", type=_parse(int_list), default=[], metavar="LIST",
                   help="top-side dents, right to left")
    p.add_argument("--dents-ne", type=_parse(int_list), default=[], metavar="LIST",
                   help="northeastern dents, top to bottom (bottom side with --opposite)")
    p.add_argument("--opposite", action="store_true",
                   help="second dent set on the bottom side, right to left")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="write to this file (atomically) instead of stdout")

    p = argparse.ArgumentParser(prog="dentile", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="exact tiling count (JSON)")
    cg = c.add_subparsers(dest="geometry", required=True)
    for name in ("aztec", "hexagon"):
        q = cg.add_parser(name, parents=[common])
        _aztec_flags(q) if name == "aztec" else _hex_flags(q)
        q.add_argument("--method", choices=["auto", "lgv", "oracle"], default="auto")
        q.add_argument("--dump-region", metavar="PATH", help="also write the region as JSON")
        q.set_defaults(func=cmd_count)

    r = sub.add_parser("ratio", parents=[common], help="exact dented/plain ratio")
    rg = r.add_subparsers(dest="geometry", required=True)
    ra = rg.add_parser("aztec", parents=[common])
    ra.add_argument("--n", type=_parse(int_list), required=True, metavar="LIST")
    rh = rg.add_parser("hexagon", parents=[common])
    rh.add_argument("--a", type=int, required=True)
    rh.add_argument("--b", type=int, required=True)
    rh.add_argument("--c", type=int, required=True)
    rh.add_argument("--opposite", action="store_true")
    rh.set_defaults(n=None)
    for q in (ra, rh):
        q.add_argument("--i", type=_parse(int_list), required=True, metavar="LIST")
        q.add_argument("--j", type=_parse(int_list), required=True, metavar="LIST")
        q.add_argument("--digits", type=int, default=12, help="significant digits")
        q.add_argument("--format", choices=["text", "json", "csv"])
        q.set_defaults(func=cmd_ratio)

    for name, func, helptext in (("classify", cmd_classify, "Outside / Crossing / Critical"),
                                 ("asympt", cmd_asympt, "asymptotic prediction vs exact")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        sg = s.add_subparsers(dest="geometry", required=True)
        sa = sg.add_parser("aztec", parents=[common])
        sa.add_argument("--a", dest="a_s", type=float, default=None, help="scaled SW dent position")
        sa.add_argument("--b", dest="b_s", type=float, default=None, help="scaled SE dent position")
        sh = sg.add_parser("hexagon", parents=[common])
        for flag in ("--A", "--B", "--C"):
            sh.add_argument(flag, type=float, default=1.0)
        sh.add_argument("--alpha", type=float, required=True)
        sh.add_argument("--beta", type=float, required=True)
        for q in (sa, sh):
            q.add_argument("--format", choices=["text", "json", "csv"],
                           default="text" if name == "classify" else "json")
            q.set_defaults(func=func)
        if name == "asympt":
            sa.add_argument("--alphas", type=_parse(float_list), help="multi-dent SW positions")
            sa.add_argument("--betas", type=_parse(float_list), help="multi-dent SE positions")
            for q in (sa, sh):
                q.add_argument("--n", type=_parse(int_list), default=[400], metavar="LIST",
                               help="one n for a JSON report, several for a CSV sweep")

    h = sub.add_parser("helmet", parents=[common], help="helmet surface grid (CSV)")
    h.add_argument("--resolution", type=int, default=64)
    h.set_defaults(func=cmd_helmet)

    k = sub.add_parser("critical-curve", parents=[common], help="critical curve samples (CSV)")
    k.add_argument("--samples", type=int, default=200)
    k.set_defaults(func=cmd_critical)

    v = sub.add_parser("verify", parents=[common], help="cross-method equality suites")
    v.add_argument("--suite", default="all")
    v.set_defaults(func=cmd_verify)

    co = sub.add_parser("concentration", parents=[common], help="path deviation fractions (CSV)")
    co.add_argument("--steps", default="delannoy",
                    help="delannoy, simple, or steps like '1,0;0,1;1,1'")
    co.add_argument("--direction", type=_parse(int_list), default=[1, 1])
    co.add_argument("--eps", default="1/4", help="tube radius as a fraction of the length")
    co.add_argument("--k", type=_parse(int_list), default=list(range(6, 25)), metavar="LIST")
    co.set_defaults(func=cmd_concentration)

    sm = sub.add_parser("sample", parents=[common], help="random tiling by flips")
    _aztec_flags(sm)
    sm.add_argument("--flips", type=int, default=None, help="default: 200 * cells^2")
    sm.add_argument("--seed", type=int, default=0)
    sm.add_argument("--svg", metavar="PATH", help="write an SVG picture")
    sm.add_argument("--paths", action="store_true", help="overlay the path family in the SVG")
    sm.add_argument("--radius", type=float, default=0.55)
    sm.add_argument("--cells", action="store_true", help="include the per-cell type map")
    sm.add_argument("--check", action="store_true", help="check the matching after every flip")
    sm.add_argument("--dump-region", metavar="PATH")
    sm.set_defaults(func=cmd_sample)
    return p


def _validate(args) -> None:
    if args.command in ("classify", "asympt") and args.geometry == "aztec":
        if args.command == "asympt" and args.alphas:
            return
        if args.a_s is None or args.b_s is None:
            raise DomainError("--a and --b are required")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
        return args.func(args)
    except InvariantViolation as exc:
        print(f"dentile: invariant violated: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"dentile: {exc}", file=sys.stderr)
        return 2
    except DentileError as exc:
        print(f"dentile: {exc}", file=sys.stderr)
        return exc.exit_code
    except AssertionError as exc:
        print(f"dentile: invariant violated: {exc}", file=sys.stderr)
        return 3


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
