"""Brute-force ground truth.

Nothing in this module uses a closed form, a determinant, or any formula
from the rest of the package; it is the independent side of every
cross-check.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .regions import DualGraph

Vector = tuple[int, ...]


# ---------------------------------------------------------------- matchings


def count_matchings(graph: DualGraph) -> int:
    """Number of perfect matchings, by branching on a lowest-degree vertex.

    The remaining vertex set is a bitmask and subproblems are memoized, so
    regions whose cells are ordered row by row stay cheap: the live part of
    the mask is a narrow frontier.
    """
    nv = len(graph.vertices)
    if nv % 2:
        warnings.warn("odd vertex count: no perfect matching", stacklevel=2)
        return 0
    if nv == 0:
        return 1
    nbr_masks = [0] * nv
    for u, v in graph.edges:
        nbr_masks[u] |= 1 << v
        nbr_masks[v] |= 1 << u

    @lru_cache(maxsize=None)
    def solve(mask: int) -> int:
        if mask == 0:
            return 1
        # lowest-degree live vertex; ties go to the lowest index
        best, best_deg = -1, 99
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            deg = (nbr_masks[v] & mask).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
                if deg <= 1:
                    break
            m ^= low
        if best_deg == 0:
            return 0
        rest = mask & ~(1 << best)
        total = 0
        nb = nbr_masks[best] & rest
        while nb:
            low = nb & -nb
            total += solve(rest & ~low)
            nb ^= low
        return total

    try:
        return solve((1 << nv) - 1)
    finally:
        solve.cache_clear()


def enumerate_matchings(graph: DualGraph, limit: int = 10_000) -> list[frozenset]:
    """All perfect matchings as sets of edges (small graphs only)."""
    adj = graph.adjacency()
    out: list[frozenset] = []

    def rec(live: frozenset, chosen: list):
        if len(out) >= limit:
            return
        if not live:
            out.append(frozenset(chosen))
            return
        v = min(live)
        for u in adj[v]:
            if u in live:
                chosen.append((min(u, v), max(u, v)))
                rec(live - {u, v}, chosen)
                chosen.pop()

    rec(frozenset(range(len(graph.vertices))), [])
    return out


# ---------------------------------------------------------------- S-paths


@dataclass(frozen=True)
class StepSet:
    """A finite set of integer steps with a strictly positive direction.

    ``certificate`` is a vector ``u`` with ``u . v > 0`` for every step ``v``;
    it bounds the length of any path to a fixed endpoint.
    """

    steps: tuple[Vector, ...]
    certificate: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.steps:
            raise DomainError("empty step set")
        dim = len(self.steps[0])
        if any(len(v) != dim for v in self.steps) or len(self.certificate) != dim:
            raise DomainError("steps and certificate must share a dimension")
        for v in self.steps:
            if _dot(self.certificate, v) <= 0:
                raise DomainError(f"certificate is not positive on step {v}")

    @property
    def dim(self) -> int:
        return len(self.steps[0])

    @classmethod
    def of(cls, steps: Sequence[Sequence[int]], certificate=None) -> "StepSet":
        steps_t = tuple(tuple(int(x) for x in v) for v in steps)
        if certificate is None:
            certificate = _find_certificate(steps_t)
        return cls(steps_t, tuple(Fraction(x) for x in certificate))


DELANNOY_STEPS = ((1, 0), (0, 1), (1, 1))


def delannoy_steps() -> StepSet:
    return StepSet.of(DELANNOY_STEPS, (1, 1))


def _dot(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def _find_certificate(steps: tuple[Vector, ...]) -> tuple[Fraction, ...]:
    if not steps:
        raise DomainError("empty step set")
    dim = len(steps[0])
    # the all-ones vector and the step sum cover every step set used here
    candidates = [tuple([1] * dim), tuple(sum(v[k] for v in steps) for k in range(dim))]
    for u in candidates:
        if all(_dot(u, v) > 0 for v in steps):
            return tuple(Fraction(x) for x in u)
    raise DomainError("no positivity certificate found; pass one explicitly")


def _length_bounds(stepset: StepSet, w: Vector) -> tuple[int, int]:
    uw = _dot(stepset.certificate, w)
    dots = [_dot(stepset.certificate, v) for v in stepset.steps]
    if uw < 0:
        return 1, 0
    return math.ceil(uw / max(dots)), math.floor(uw / min(dots))


def _paths_by_length(stepset: StepSet, w: Vector, tube=None) -> dict[int, int]:
    """Count S-paths origin -> w, split by number of steps.

    Layered DP over path length; points whose certificate value already
    exceeds that of ``w`` are pruned.  ``tube(point, step_index, N)`` may
    reject intermediate points for a path of total length ``N``; in that
    case one DP is run per length.
    """
    w = tuple(w)
    lo, hi = _length_bounds(stepset, w)
    u = stepset.certificate
    uw = _dot(u, w)
    origin = tuple([0] * stepset.dim)
    counts: dict[int, int] = {}
    if tube is None:
        layer = {origin: 1}
        for n in range(hi + 1):
            if n >= lo and w in layer:
                counts[n] = layer[w]
            nxt: dict = {}
            for p, c in layer.items():
                for v in stepset.steps:
                    q = tuple(a + b for a, b in zip(p, v))
                    if _dot(u, q) <= uw:
                        nxt[q] = nxt.get(q, 0) + c
            layer = nxt
            if not layer:
                break
        return counts
    for n in range(max(lo, 0), hi + 1):
        layer = {origin: 1}
        for step in range(1, n + 1):
            nxt = {}
            for p, c in layer.items():
                for v in stepset.steps:
                    q = tuple(a + b for a, b in zip(p, v))
                    if _dot(u, q) <= uw and tube(q, step, n):
                        nxt[q] = nxt.get(q, 0) + c
            layer = nxt
        if w in layer:
            counts[n] = layer[w]
    return counts


def count_paths_dp(stepset: StepSet, w: Sequence[int]) -> int:
    """Number of S-paths from the origin to ``w`` over all lengths."""
    return sum(_paths_by_length(stepset, tuple(w)).values())


def deviation_fraction(stepset: StepSet, w: Sequence[int], eps) -> Fraction:
    """Fraction of S-paths to ``w`` that leave the tube of radius ``eps * N``.

    A path of length ``N`` with partial sums ``w_1, ..., w_N`` deviates when
    some ``|w_i - i w / N| > eps N`` (Euclidean norm).  The test is done on
    ``N``-scaled integer vectors: ``|N w_i - i w|^2 > eps^2 N^4``.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    w = tuple(int(x) for x in w)
    eps2 = eps * eps

    def inside(q, i, n):
        d2 = sum((n * a - i * b) ** 2 for a, b in zip(q, w))
        return d2 <= eps2 * n ** 4

    total = _paths_by_length(stepset, w)
    if not total or sum(total.values()) == 0:
        raise DomainError(f"{w} is not reachable with these steps")
    kept = _paths_by_length(stepset, w, tube=inside)
    all_paths = sum(total.values())
    return Fraction(all_paths - sum(kept.values()), all_paths)


@dataclass
class DecayFit:
    c1: float | None
    fractions: list[tuple[int, float, Fraction]]
    note: str = ""

    @property
    def trivially_concentrated(self) -> bool:
        return self.c1 is None


def deviation_decay_fit(stepset: StepSet, direction: Sequence[int], eps,
                        k_range: Sequence[int]) -> DecayFit:
    """Fractions at ``w = k * direction`` and the fitted decay rate.

    ``c1`` is the least-squares slope of ``-log f_k`` against ``|w|``,
    skipping zero fractions.
    """
    direction = tuple(int(x) for x in direction)
    norm = math.sqrt(sum(x * x for x in direction))
    rows = []
    for k in k_range:
        w = tuple(k * x for x in direction)
        rows.append((k, k * norm, deviation_fraction(stepset, w, eps)))
    pts = [(r, -math.log(f)) for _, r, f in rows if f > 0]
    if len(pts) < 2:
        return DecayFit(None, rows, "trivially concentrated")
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    sxy = sum((x - mx) * (y - my) for x, y in pts)
    return DecayFit(sxy / sxx, rows)
