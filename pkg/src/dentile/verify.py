"""Cross-method equality suites behind ``dentile verify``.

Each suite compares independent computations of the same quantity at desk
scale and reports one row per check.  The whole set runs in well under a
minute.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import asymptotics as asy
from . import exact_counts as ec
from . import path_numbers as pn
from .hypergeom import sears_pole_free, sears_transform_check
from .linalg import bareiss_det, exact_inverse
from .oracle import count_matchings, delannoy_steps, deviation_fraction
from .regions import build_aztec, build_hexagon, dual_graph


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _timed(suite: str, name: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(suite, name, bool(ok), detail, time.perf_counter() - t0)


def _first_failure(cases, test) -> tuple[bool, str]:
    n = 0
    for case in cases:
        n += 1
        if not test(*case):
            return False, f"fails at {case}"
    return True, f"{n} cases"


# ---------------------------------------------------------------- suites


def suite_aztec() -> list[Check]:
    s = "aztec"

    def dented():
        cases = [(n, i, j) for n in range(1, 5) for i in range(1, n + 1) for j in range(1, n + 1)]
        return _first_failure(cases, lambda n, i, j: ec.count_dented_aztec(n, i, j)
                              == count_matchings(dual_graph(build_aztec(n, [i], [j]))))

    def plain():
        return _first_failure([(n,) for n in range(0, 31)], lambda n: ec.count_aztec(n)
                              == bareiss_det(pn.delannoy_matrix(n + 1)))

    def lgv():
        cases = [(n, i, j) for n in range(1, 7) for i in range(1, n + 1) for j in range(1, n + 1)]
        return _first_failure(cases, lambda n, i, j: ec.lgv_count(build_aztec(n, [i], [j]))
                              == ec.count_dented_aztec(n, i, j))

    def augmented():
        cases = [(n, i, j) for n in range(1, 4) for i in range(1, n + 1) for j in range(1, n + 1)]
        return _first_failure(cases, lambda n, i, j: ec.count_augmented_aztec(n, i, j)
                              == count_matchings(dual_graph(build_aztec(n, [i], [j], True))))

    def complementation():
        cases = [(n, i, j) for n in range(1, 6) for i in range(1, n + 1) for j in range(1, n + 1)]
        return _first_failure(cases, lambda n, i, j: ec.count_dented_aztec(n + 1, i + 1, j + 1)
                              == 2 ** n * ec.count_augmented_aztec(n, i, j))

    def multi():
        cases = [(4, (1, 2), (1, 2)), (4, (1, 3), (2, 4)), (5, (2, 5), (1, 4)), (3, (1, 3), (2, 3))]
        return _first_failure(cases, lambda n, I, J: ec.count_multi_dented_aztec(n, I, J)
                              == count_matchings(dual_graph(build_aztec(n, I, J))))

    return [
        _timed(s, "dented count = matchings, n<=4", dented),
        _timed(s, "2^(n(n+1)/2) = det D_(n+1), n<=30", plain),
        _timed(s, "LGV = ratio formula, n<=6", lgv),
        _timed(s, "augmented minor = matchings, n<=3", augmented),
        _timed(s, "M(AD_(n+1)^(i+1,j+1)) = 2^n M(augmented), n<=5", complementation),
        _timed(s, "two-dent determinant = matchings", multi),
    ]


def suite_delannoy() -> list[Check]:
    s = "delannoy"

    def factor():
        return _first_failure([(n,) for n in range(1, 25)], pn.factorization_check)

    def inverse():
        def same(n):
            inv = exact_inverse(pn.delannoy_matrix(n))
            return all(inv[i][j] == pn.delannoy_inverse_entry(n, i, j)
                       for i in range(n) for j in range(n))
        return _first_failure([(n,) for n in range(1, 11)], same)

    def limit():
        def close(i, j):
            return abs(pn.ratio_sum(60, i, j) - pn.delannoy(i - 1, j - 1)) < Fraction(1, 1000)
        return _first_failure(itertools.product(range(1, 6), repeat=2), close)

    return [
        _timed(s, "D_n = L diag(2^k) L^T, n<=24", factor),
        _timed(s, "closed-form inverse = exact inverse, n<=10", inverse),
        _timed(s, "ratio_sum(60,i,j) within 1e-3 of D(i-1,j-1)", limit),
    ]


def suite_hexagon() -> list[Check]:
    s = "hexagon"
    sides = [t for t in itertools.product(range(1, 4), repeat=3)]

    def macmahon():
        return _first_failure(sides, lambda a, b, c: ec.count_hexagon(a, b, c)
                              == count_matchings(dual_graph(build_hexagon(a, b, c))))

    def dented():
        cases = [(a, b, c, i, j) for a, b, c in sides if a + b + c <= 7
                 for i in range(1, a + 1) for j in range(1, b + 1)]
        return _first_failure(cases, lambda a, b, c, i, j: ec.count_dented_hexagon(a, b, c, i, j)
                              == count_matchings(dual_graph(build_hexagon(a, b, c, [i], [j]))))

    def lgv():
        cases = [(a, b, c, i, j) for a, b, c in sides
                 for i in range(1, a + 1) for j in range(1, b + 1)]
        return _first_failure(cases, lambda a, b, c, i, j: ec.lgv_count(
            build_hexagon(a, b, c, [i], [j])) == ec.count_dented_hexagon(a, b, c, i, j))

    def opposite():
        cases = [(a, b, c, i, j) for a, b, c in sides if a + b + c <= 7
                 for i in range(1, a + 1) for j in range(1, a + 1)]
        return _first_failure(cases, lambda a, b, c, i, j: ec.count_hexagon(a, b, c)
                              * ec.opposite_ratio(a, b, c, i, j) == count_matchings(
                                  dual_graph(build_hexagon(a, b, c, [i], [j], opposite_variant=True))))

    def sears_forms():
        cases = [(n, i, j) for n in range(1, 7) for i in range(1, n + 1) for j in range(1, n + 1)]
        return _first_failure(cases, lambda n, i, j: ec.opposite_ratio(n, n, n, i, j)
                              == ec.opposite_ratio_untransformed(n, n, n, i, j))

    return [
        _timed(s, "MacMahon = matchings, sides<=3", macmahon),
        _timed(s, "3F2 ratio = matchings", dented),
        _timed(s, "LGV = 3F2 ratio, sides<=3", lgv),
        _timed(s, "opposite-side 4F3 = matchings", opposite),
        _timed(s, "4F3 before and after Sears agree, n<=6", sears_forms),
    ]


def suite_series() -> list[Check]:
    s = "series"

    def sears():
        rng = random.Random(20240601)
        tried = 0
        for _ in range(4000):
            N = rng.randint(0, 5)
            a, b, c, e, f = (rng.randint(-6, 6) for _ in range(5))
            if not sears_pole_free(a, b, c, e, f, N):
                continue
            tried += 1
            if not sears_transform_check(a, b, c, e, f, N):
                return False, f"fails at {(a, b, c, e, f, N)}"
        return True, f"{tried} pole-free tuples"

    def cauchy():
        rng = random.Random(7)
        for _ in range(50):
            k = rng.randint(1, 5)
            u = rng.sample(range(1, 40), k)
            v = [Fraction(rng.randint(1, 40), 3) for _ in range(k)]
            if asy.cauchy_det(u, v) != asy.cauchy_product(u, v):
                return False, f"cauchy fails at {u}, {v}"
        return True, "50 random Cauchy determinants"

    return [_timed(s, "Sears transformation on pole-free integer tuples", sears),
            _timed(s, "Cauchy determinant = product", cauchy)]


def suite_asymptotics() -> list[Check]:
    s = "asymptotics"

    def classify():
        return (asy.classify_aztec(0.1, 0.1).classification == asy.Regime.OUTSIDE
                and asy.classify_aztec(0.5, 0.5).classification == asy.Regime.CROSSING,
                "(0.1,0.1) Outside, (0.5,0.5) Crossing")

    def continuity():
        gap = asy.branch_gap(200)
        return gap < 1e-9, f"max branch gap on (1-a)(1-b)=1/2: {gap:.2e}"

    def convergence():
        worst = 0.0
        for a, b in [(0.3, 0.6), (0.2, 0.2), (0.7, 0.7)]:
            n = 200
            i, j = asy.dent_indices(n, a, b)
            exact = math.log(pn.ratio_sum(n, i, j)) / n
            worst = max(worst, abs(exact - asy.aztec_log_limit(a, b)))
        return worst < 0.05, f"max |(1/n) log ratio - f| at n=200: {worst:.4f}"

    return [_timed(s, "regime classification", classify),
            _timed(s, "branches agree on the regime boundary", continuity),
            _timed(s, "(1/n) log ratio near the helmet surface", convergence)]


def suite_paths() -> list[Check]:
    s = "paths"
    steps = delannoy_steps()

    def exact():
        return (deviation_fraction(steps, (1, 1), Fraction(1, 10)) == Fraction(2, 3)
                and deviation_fraction(steps, (1, 1), Fraction(3, 5)) == 0,
                "w=(1,1): 2/3 at eps=0.1, 0 at eps=0.6")

    def monotone():
        fr = [deviation_fraction(steps, (6, 6), Fraction(e, 20)) for e in range(1, 9)]
        return all(x >= y for x, y in zip(fr, fr[1:])), "nonincreasing in eps at w=(6,6)"

    return [_timed(s, "exact deviation fractions", exact),
            _timed(s, "tube monotonicity", monotone)]


def suite_sampler() -> list[Check]:
    from .sampler import encode_paths, sample
    from .sampler import tiling as T
    from .sampler import _kernel_py
    s = "sampler"

    def encode():
        regions = [build_aztec(6), build_aztec(8, [2], [4]), build_aztec(5, [1, 3], [2, 5]),
                   build_aztec(4, [2], [3], True)]
        for reg in regions:
            for seed in range(3):
                fam = encode_paths(sample(reg, 5000, seed, check=True))
                if not fam.disjoint():
                    return False, f"paths intersect for {reg}"
        return True, f"{3 * len(regions)} sampled tilings"

    def kernels():
        reg = build_aztec(5, [2], [4])
        a, _ = T.run_batch(reg, 8, 3000, 11, kernel=_kernel_py)
        b, _ = T.run_batch(reg, 8, 3000, 11)
        return bool((a == b).all()), f"active kernel: {T.KERNEL.NAME}"

    return [_timed(s, "path encoding of sampled tilings", encode),
            _timed(s, "compiled and Python kernels agree", kernels)]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "aztec": suite_aztec,
    "delannoy": suite_delannoy,
    "hexagon": suite_hexagon,
    "series": suite_series,
    "asymptotics": suite_asymptotics,
    "paths": suite_paths,
    "sampler": suite_sampler,
}


def run_suites(name: str = "all") -> list[Check]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        from .errors import DomainError
        raise DomainError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    out: list[Check] = []
    for n in names:
        out.extend(SUITES[n]())
    return out


def format_table(checks: list[Check]) -> str:
    width = max((len(c.suite) + len(c.name) for c in checks), default=10) + 3
    lines = []
    for c in checks:
        label = f"{c.suite}: {c.name}"
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {label:<{width}} {c.seconds:7.2f}s  {c.detail}")
    passed = sum(c.passed for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
