"""Regime classification and closed-form asymptotics.

Everything is evaluated in log space; ``exp`` is applied only by the
non-``log_`` wrappers, which may overflow to ``inf`` for large ``n``.
Parameters follow the scaling conventions: for Aztec diamonds ``a = i/n``
and ``b = j/n``; for hexagons ``a ~ An``, ``i ~ alpha * a`` and so on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, RegimeError
from .linalg import bareiss_det

CRITICAL_TOL = 1e-9
LOG2 = math.log(2.0)


class Regime(str, Enum):
    OUTSIDE = "Outside"
    CROSSING = "Crossing"
    CRITICAL = "Critical"


def _xlogx(x: float) -> float:
    return 0.0 if x == 0 else x * math.log(x)


def F(x: float) -> float:
    """``-x log x`` (with ``F(0) = 0``)."""
    return -_xlogx(x)


def _regime(disc: float, tol: float = CRITICAL_TOL) -> Regime:
    if abs(disc) < tol:
        return Regime.CRITICAL
    return Regime.OUTSIDE if disc > 0 else Regime.CROSSING


@dataclass
class RegimeReport:
    geometry: str
    parameters: dict
    classification: Regime
    discriminant: float
    prediction: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "geometry": self.geometry,
            "parameters": self.parameters,
            "classification": self.classification.value,
            "discriminant": self.discriminant,
            "prediction": self.prediction,
        }
        out.update(self.extra)
        return out


@dataclass
class AsymptoticCoefficients:
    """Saddle-point data for the binomial sums behind the Aztec ratios.

    ``d`` is the log of the exponential base, ``e`` and ``f`` are the linear
    and quadratic coefficients of the Gaussian expansion around the saddle
    ``t0``.  ``U`` and ``V`` hold the two competing hexagon bases when
    computed by :func:`hexagon_bases`.
    """

    d: float | None = None
    e: float | None = None
    f: float | None = None
    t0: float | None = None
    U: float | None = None
    V: float | None = None


# ---------------------------------------------------------------- Aztec


def _check_unit(a: float, b: float) -> None:
    if not (0 < a < 1 and 0 < b < 1):
        raise DomainError(f"need 0 < a, b < 1, got a={a}, b={b}")


def aztec_discriminant(a: float, b: float) -> float:
    return (1 - a) * (1 - b) - 0.5


def segment_distance_to_center(a: float, b: float) -> float:
    """Euclidean distance from ``(1/2, 1/2)`` to the segment ``[(a,0), (0,b)]``."""
    px, py = 0.5, 0.5
    ax, ay, bx, by = a, 0.0, 0.0, b
    dx, dy = bx - ax, by - ay
    t = ((px - ax) * dx + (py - ay) * dy) / (dx * dx + dy * dy)
    t = min(1.0, max(0.0, t))
    return math.hypot(ax + t * dx - px, ay + t * dy - py)


def classify_aztec(a: float, b: float) -> RegimeReport:
    """Outside iff ``(1-a)(1-b) > 1/2``, cross-checked against geometry.

    The segment joining the two scaled dents misses the inscribed circle
    exactly when its distance from the center exceeds the radius 1/2.
    """
    _check_unit(a, b)
    disc = aztec_discriminant(a, b)
    regime = _regime(disc)
    dist = segment_distance_to_center(a, b)
    if regime is not Regime.CRITICAL and (dist > 0.5) != (regime is Regime.OUTSIDE):
        from .errors import InvariantViolation
        raise InvariantViolation(f"algebraic and geometric tests disagree at {(a, b)}")
    return RegimeReport("AztecSquare", {"a": a, "b": b}, regime, disc,
                        extra={"segment_distance": dist})


def regime_boundary(samples: int) -> list[tuple[float, float]]:
    """Points of the hyperbola ``(1-a)(1-b) = 1/2`` inside the unit square."""
    pts = []
    for k in range(1, samples + 1):
        a = 0.5 * k / (samples + 1)
        pts.append((a, 1 - 0.5 / (1 - a)))
    return pts


def branch_gap(samples: int = 400) -> float:
    """Largest difference of the two branches of ``f`` on the regime boundary."""
    return max(abs(aztec_log_limit_outside(a, b) - aztec_log_limit_crossing(a, b))
               for a, b in regime_boundary(samples))


def aztec_coefficients(a: float, b: float) -> AsymptoticCoefficients:
    r = math.hypot(a, b)
    t0 = a + b + r
    d = -_xlogx(a) - _xlogx(b) + b * math.log(a + r) + a * math.log(b + r)
    return AsymptoticCoefficients(d=d, e=-r / t0 ** 2, f=r / t0 ** 2, t0=t0)


def saddle_identity_residual(a: float, b: float) -> float:
    r = math.hypot(a, b)
    return 2 * (a + r) * (b + r) - (a + b + r) ** 2


def log_binomial_sum_asymptotic(n: int, a: float, b: float) -> float:
    """Log of the asymptotic value of ``sum_{k<n} C(k,an) C(k,bn) / 2^(k+1)``."""
    _check_unit(a, b)
    regime = _regime(aztec_discriminant(a, b))
    if regime is Regime.CRITICAL:
        raise RegimeError("no asymptotic formula on the critical hyperbola")
    if regime is Regime.OUTSIDE:
        co = aztec_coefficients(a, b)
        r = math.hypot(a, b)
        return (math.log(co.t0) + n * co.d
                - math.log(2 * math.sqrt(2 * math.pi * n)) - 0.5 * math.log(a * b * r))
    q = (1 - a) * (1 - b)
    return (0.5 * math.log(q) - n * aztec_crossing_exponent(a, b)
            - math.log(4 * math.pi * n * math.sqrt(a * b) * (0.5 - q)))


def aztec_crossing_exponent(a: float, b: float) -> float:
    """``log(2 a^a b^b (1-a)^(1-a) (1-b)^(1-b))``."""
    return LOG2 + _xlogx(a) + _xlogx(b) + _xlogx(1 - a) + _xlogx(1 - b)


def dent_indices(n: int, a: float, b: float) -> tuple[int, int]:
    """Dent positions ``i = round(a n)``, ``j = round(b n)`` clamped to ``[1, n]``."""
    return (min(n, max(1, round(a * n))), min(n, max(1, round(b * n))))


def log_aztec_ratio_asymptotic(n: int, a: float, b: float) -> float:
    """Log of the predicted ``M(AD_n^{i,j}) / M(AD_n)`` for ``i, j = round(an), round(bn)``.

    The ratio is a sum of ``C(k, i-1) C(k, j-1)``, so the asymptotic formula
    is evaluated at ``(i-1)/n`` and ``(j-1)/n``; at moderate ``n`` this shift
    is far from negligible because the base is raised to the ``n``-th power.
    """
    _check_unit(a, b)
    i, j = dent_indices(n, a, b)
    return log_binomial_sum_asymptotic(n, (i - 1) / n, (j - 1) / n)


def aztec_ratio_asymptotic(n: int, a: float, b: float) -> float:
    return math.exp(log_aztec_ratio_asymptotic(n, a, b))


def aztec_log_limit_outside(a: float, b: float) -> float:
    return b * math.log(a / b + math.sqrt(1 + (a / b) ** 2)) + a * math.log(
        b / a + math.sqrt(1 + (b / a) ** 2))


def aztec_log_limit_crossing(a: float, b: float) -> float:
    return -aztec_crossing_exponent(a, b)


def aztec_log_limit(a: float, b: float) -> float:
    """Limit of ``(1/n) log`` of the ratio: the "helmet" surface."""
    _check_unit(a, b)
    if aztec_discriminant(a, b) > 0:
        return aztec_log_limit_outside(a, b)
    return aztec_log_limit_crossing(a, b)


def exact_dichotomy_ratio(n: int, a: float, b: float) -> Fraction:
    """Exact ``ratio_sum(n, i, j) / D(i-1, j-1)`` with ``i = ceil(an)``, ``j = ceil(bn)``."""
    from .path_numbers import delannoy, ratio_sum
    i, j = math.ceil(a * n), math.ceil(b * n)
    return ratio_sum(n, i, j) / delannoy(i - 1, j - 1)


def _bisect(fn, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo, fhi = fn(lo), fn(hi)
    # endpoints that are roots up to rounding (the arc ends on the axes)
    if abs(flo) < 1e-14:
        return lo
    if abs(fhi) < 1e-14:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError("bisection bracket does not change sign")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def critical_residual(a: float, b: float) -> float:
    """``2 a^a b^b (1-a)^(1-a) (1-b)^(1-b) - 1``."""
    return math.exp(aztec_crossing_exponent(a, b)) - 1.0


@dataclass
class CurvePoint:
    a: float
    b: float
    residual: float
    piece: str


def critical_curve(samples: int) -> list[CurvePoint]:
    """Points of the curve where dented and plain diamonds have equal entropy.

    Order: along the bottom axis from the origin to ``(1/2, 0)``, then the
    curved arc (bisection along rays from ``(1/2, 1/2)``), then back down
    the left axis.  On the arc the residual is that of the defining
    equation; on the axis segments it is the outside-branch limit, which is
    exactly zero there.
    """
    if samples < 2:
        raise DomainError("critical_curve needs at least 2 samples")
    axis_n = max(2, samples // 4)
    pts: list[CurvePoint] = []
    for k in range(axis_n):
        a = 0.5 * k / axis_n
        pts.append(CurvePoint(a, 0.0, 0.0, "axis-a"))

    def level(a, b):
        return _xlogx(a) + _xlogx(1 - a) + _xlogx(b) + _xlogx(1 - b) + LOG2

    for k in range(samples):
        theta = -math.pi / 2 + 1.5 * math.pi * k / (samples - 1)
        c, s = math.cos(theta), math.sin(theta)
        if abs(c) < 1e-15:
            c = 0.0
        if abs(s) < 1e-15:
            s = 0.0
        # largest step that stays inside the closed unit square
        rmax = min(0.5 / abs(x) for x in (c, s) if x != 0)
        r = _bisect(lambda t: level(0.5 + t * c, 0.5 + t * s), 0.0, rmax)
        a, b = min(1.0, max(0.0, 0.5 + r * c)), min(1.0, max(0.0, 0.5 + r * s))
        pts.append(CurvePoint(a, b, critical_residual(a, b), "arc"))
    for k in range(axis_n - 1, -1, -1):
        b = 0.5 * k / axis_n
        pts.append(CurvePoint(0.0, b, 0.0, "axis-b"))
    return pts


@dataclass
class HelmetGrid:
    resolution: int
    rows: list[tuple[float, float, float, str]]

    def argmax(self) -> tuple[float, float, float, str]:
        return max(self.rows, key=lambda r: r[2])


def helmet_grid(resolution: int) -> HelmetGrid:
    """``f(a, b)`` on the interior nodes ``(k/res, l/res)`` of the unit square."""
    if resolution < 8:
        raise DomainError("helmet_grid needs resolution >= 8")
    rows = []
    for k in range(1, resolution):
        a = k / resolution
        for l in range(1, resolution):
            b = l / resolution
            rows.append((a, b, aztec_log_limit(a, b), _regime(aztec_discriminant(a, b)).value))
    return HelmetGrid(resolution, rows)


def _check_increasing(xs: Sequence[float], what: str) -> None:
    if any(not 0 < x < 1 for x in xs):
        raise DomainError(f"{what} must lie in (0, 1)")
    if any(x >= y for x, y in zip(xs, xs[1:])):
        raise DomainError(f"{what} must be strictly increasing")


def entropy_diff(alphas: Sequence[float], betas: Sequence[float]) -> float:
    """Limit of ``(1/n) log`` of the multi-dent ratio when every pair crosses."""
    if len(alphas) != len(betas):
        raise DomainError("need as many southwestern as southeastern dents")
    return -sum(aztec_crossing_exponent(a, b) for a, b in zip(alphas, betas))


def log_multi_dent_aztec_asymptotic(n: int, alphas: Sequence[float],
                                    betas: Sequence[float]) -> float:
    """Log of the predicted multi-dent ratio; every pair must be crossing.

    The entry asymptotics factor into row and column terms times the Cauchy
    matrix ``1 / (1/2 - (1-a_s)(1-b_t))``; the overall power of ``4 pi n``
    is ``k``, one per row.
    """
    k = len(alphas)
    if k != len(betas) or k == 0:
        raise DomainError("need equally many (and at least one) dents per side")
    _check_increasing(alphas, "alphas")
    _check_increasing(betas, "betas")
    for a in alphas:
        for b in betas:
            if _regime(aztec_discriminant(a, b)) is not Regime.CROSSING:
                raise RegimeError(f"pair {(a, b)} is not in the crossing regime")
    out = -k * math.log(4 * math.pi * n) - k * (k - 1) / 2 * LOG2
    for a, b in zip(alphas, betas):
        out += 0.5 * math.log((1 / a - 1) * (1 / b - 1)) - n * aztec_crossing_exponent(a, b)
    for s in range(k):
        for t in range(s + 1, k):
            out += math.log((alphas[t] - alphas[s]) * (betas[t] - betas[s]))
    for a in alphas:
        for b in betas:
            out -= math.log(0.5 - (1 - a) * (1 - b))
    return out


def multi_dent_aztec_asymptotic(n, alphas, betas) -> float:
    return math.exp(log_multi_dent_aztec_asymptotic(n, alphas, betas))


def cauchy_det(u: Sequence, v: Sequence) -> Fraction:
    return Fraction(bareiss_det([[1 / (1 - Fraction(x) * Fraction(y)) for y in v] for x in u]))


def cauchy_product(u: Sequence, v: Sequence) -> Fraction:
    """``prod_{i<j} (u_j-u_i)(v_j-v_i) / prod_{i,j} (1 - u_i v_j)``."""
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    num = Fraction(1)
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            num *= (u[j] - u[i]) * (v[j] - v[i])
    den = Fraction(1)
    for x in u:
        for y in v:
            den *= 1 - x * y
    return num / den


def cauchy_like_det(x, y, z, a: Sequence, b: Sequence) -> Fraction:
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    return Fraction(bareiss_det([[1 / (1 + x * Fraction(ai) + y * Fraction(bj) + z * Fraction(ai) * Fraction(bj))
                                  for bj in b] for ai in a]))


def cauchy_like_product(x, y, z, a: Sequence, b: Sequence) -> Fraction:
    """``(xy - z)^C(k,2) prod_{i<j}(a_j-a_i)(b_j-b_i) / prod (1 + x a_i + y b_j + z a_i b_j)``."""
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    a = [Fraction(t) for t in a]
    b = [Fraction(t) for t in b]
    k = len(a)
    num = (x * y - z) ** (k * (k - 1) // 2)
    for i in range(k):
        for j in range(i + 1, k):
            num *= (a[j] - a[i]) * (b[j] - b[i])
    den = Fraction(1)
    for ai in a:
        for bj in b:
            den *= 1 + x * ai + y * bj + z * ai * bj
    return num / den


# ---------------------------------------------------------------- hexagons


def _check_hex(A, B, C, alpha, beta) -> None:
    if min(A, B, C) <= 0:
        raise DomainError("hexagon side ratios must be positive")
    if not (0 < alpha < 1 and 0 < beta < 1):
        raise DomainError("dent fractions must lie in (0, 1)")


def hexagon_discriminant(A, B, C, alpha, beta) -> float:
    return (1 - alpha) * (1 - beta) * A * B - (alpha * A + beta * B) * C


def classify_hexagon(A, B, C, alpha, beta) -> RegimeReport:
    _check_hex(A, B, C, alpha, beta)
    disc = hexagon_discriminant(A, B, C, alpha, beta)
    return RegimeReport("Hexagon", {"A": A, "B": B, "C": C, "alpha": alpha, "beta": beta},
                        _regime(disc), disc)


def hexagon_bases(A, B, C, alpha, beta) -> AsymptoticCoefficients:
    """Logs of the two competing exponential bases ``U`` and ``V``."""
    p, q = (1 - alpha) * A, (1 - beta) * B
    log_u = (_xlogx(p) + _xlogx(q) + _xlogx(A + B + C) + _xlogx(C)
             - _xlogx(A + B) - _xlogx(p + C) - _xlogx(q + C))
    log_v = (_xlogx(alpha * A + B) + _xlogx(A + beta * B)
             - _xlogx(A + B) - _xlogx(alpha * A + beta * B))
    return AsymptoticCoefficients(U=log_u, V=log_v)


def log_3f2_asymptotic(n: int, A, B, C, alpha, beta) -> float:
    """Log asymptotics of ``3F2[c, j-b, i-a; c+1, 1-a-b; 1]``."""
    _check_hex(A, B, C, alpha, beta)
    regime = _regime(hexagon_discriminant(A, B, C, alpha, beta))
    if regime is Regime.CRITICAL:
        raise RegimeError("no asymptotic formula on the critical surface")
    bases = hexagon_bases(A, B, C, alpha, beta)
    p, q = (1 - alpha) * A, (1 - beta) * B
    if regime is Regime.OUTSIDE:
        pre = 0.5 * math.log(2 * math.pi * n * p * q * (A + B) * C
                             / ((p + C) * (q + C) * (A + B + C)))
        return pre + n * bases.U
    s = alpha * A + beta * B
    pre = (0.5 * math.log((A + B) * s ** 3 / ((alpha * A + B) * (A + beta * B)))
           + math.log(C / (s * C - p * q)))
    return pre + n * bases.V


def log_hexagon_prefactor_asymptotic(n: int, A, B, C, alpha, beta) -> float:
    """Log asymptotics of the factor multiplying the ``3F2`` in the exact ratio."""
    aa, bb = alpha * A, beta * B
    p, q = A - aa, B - bb
    pre = -math.log(2 * math.pi * n) + 0.5 * math.log(
        aa * bb * (p + C) * (q + C) * (A + B + C) / (p * q * (aa + bb) ** 3 * (A + B) * C))
    base = (_xlogx(aa + bb) + _xlogx(p + C) + _xlogx(q + C) + _xlogx(A + B)
            - _xlogx(aa) - _xlogx(p) - _xlogx(bb) - _xlogx(q) - _xlogx(A + B + C) - _xlogx(C))
    return pre + n * base


def log_binomial_asymptotic(n: int, A, B, alpha, beta) -> float:
    """Log asymptotics of ``C(i+j-2, i-1)`` for ``i ~ alpha A n``, ``j ~ beta B n``."""
    aa, bb = alpha * A, beta * B
    return (-0.5 * math.log(2 * math.pi * n) + 0.5 * math.log(aa * bb / (aa + bb) ** 3)
            + n * (_xlogx(aa + bb) - _xlogx(aa) - _xlogx(bb)))


def log_hexagon_ratio_asymptotic(n: int, A, B, C, alpha, beta) -> float:
    """Log of the predicted ``M(H^{i,j}) / M(H)``."""
    _check_hex(A, B, C, alpha, beta)
    regime = _regime(hexagon_discriminant(A, B, C, alpha, beta))
    if regime is Regime.CRITICAL:
        raise RegimeError("no asymptotic formula on the critical surface")
    aa, bb = alpha * A, beta * B
    if regime is Regime.OUTSIDE:
        return log_binomial_asymptotic(n, A, B, alpha, beta)
    p, q = A - aa, B - bb
    pre = (-math.log(2 * math.pi * n) - math.log((aa + bb) * C - p * q)
           + 0.5 * math.log(aa * bb * (p + C) * (q + C) * (A + B + C) * C
                            / (p * q * (aa + B) * (A + bb))))
    return pre + n * hexagon_log_limit_crossing(A, B, C, alpha, beta)


def hexagon_ratio_asymptotic(n: int, A, B, C, alpha, beta) -> float:
    return math.exp(log_hexagon_ratio_asymptotic(n, A, B, C, alpha, beta))


def hexagon_log_limit_outside(A, B, C, alpha, beta) -> float:
    return F(alpha * A) + F(beta * B) - F(alpha * A + beta * B)


def hexagon_log_limit_crossing(A, B, C, alpha, beta) -> float:
    aa, bb = alpha * A, beta * B
    p, q = A - aa, B - bb
    return (_xlogx(p + C) + _xlogx(q + C) + _xlogx(aa + B) + _xlogx(A + bb)
            - _xlogx(aa) - _xlogx(p) - _xlogx(bb) - _xlogx(q)
            - _xlogx(A + B + C) - _xlogx(C))


def hexagon_log_limit(A, B, C, alpha, beta) -> float:
    """Limit of ``(1/n) log`` of the single-pair hexagon ratio."""
    _check_hex(A, B, C, alpha, beta)
    if hexagon_discriminant(A, B, C, alpha, beta) > 0:
        return hexagon_log_limit_outside(A, B, C, alpha, beta)
    return hexagon_log_limit_crossing(A, B, C, alpha, beta)


def _perimeter_corner_terms(sides: Sequence[float], side: int, offset: float) -> float:
    """Signed ``F(distance)`` terms between one boundary point and four corners.

    ``side`` indexes the side (clockwise from the top) and ``offset`` is the
    distance from the side's clockwise-first corner.  The two corners of the
    side count with ``+``, the two corners one side further with ``-``.
    """
    m = len(sides)
    before = offset
    after = sides[side] - offset
    return (F(before) + F(after)
            - F(before + sides[(side - 1) % m]) - F(after + sides[(side + 1) % m]))


def hexagon_log_limit_perimeter(A, B, C, dents: Sequence[tuple[str, float]]) -> float:
    """Crossing-regime limit written through perimeter distances.

    ``dents`` lists ``(side, alpha)`` for dents on the top side (``"N"``,
    counted from its right end) and the northeastern side (``"NE"``, counted
    from its top end).  Each dent contributes its signed corner terms and
    every pair of dents contributes ``F(A+B+C) + F(C)`` once.
    """
    sides = [A, B, C, A, B, C]
    total = 0.0
    for name, frac in dents:
        if name == "N":
            total += _perimeter_corner_terms(sides, 0, A - frac * A)
        elif name == "NE":
            total += _perimeter_corner_terms(sides, 1, frac * B)
        else:
            raise DomainError(f"unsupported side {name!r}")
    pairs = len(dents) / 2
    return total + pairs * (F(A + B + C) + F(C))


def _check_all_crossing(A, B, C, alphas, betas) -> None:
    if len(alphas) != len(betas) or not alphas:
        raise DomainError("need equally many (and at least one) dents per side")
    _check_increasing(alphas, "alphas")
    _check_increasing(betas, "betas")
    for al in alphas:
        for be in betas:
            if _regime(hexagon_discriminant(A, B, C, al, be)) is not Regime.CROSSING:
                raise RegimeError(f"pair {(al, be)} does not cross the inscribed ellipse")


def log_hexagon_multi_dent(n: int, A, B, C, alphas: Sequence[float],
                           betas: Sequence[float]) -> float:
    """Log of the predicted ratio for ``k`` dents on each of two adjacent sides.

    Row and column factors of the ``k x k`` matrix of single-pair asymptotics
    are pulled out, and what remains is a Cauchy-like determinant.
    """
    _check_all_crossing(A, B, C, alphas, betas)
    k = len(alphas)
    S = A + B + C
    out = (-k * math.log(2 * math.pi * n) + 0.5 * k * math.log(S * C)
           - n * k * (_xlogx(S) + _xlogx(C)))
    for al in alphas:
        aa, p = al * A, A - al * A
        out += 0.5 * math.log(aa * (p + C) / (p * (aa + B)))
        out += n * (_xlogx(p + C) + _xlogx(aa + B) - _xlogx(aa) - _xlogx(p))
    for be in betas:
        bb, q = be * B, B - be * B
        out += 0.5 * math.log(bb * (q + C) / (q * (A + bb)))
        out += n * (_xlogx(q + C) + _xlogx(A + bb) - _xlogx(bb) - _xlogx(q))
    # (-1/AB)^k times the Cauchy-like product; the k^2 negative factors in
    # the denominator cancel the sign
    out += -k * math.log(A * B) + (k * (k - 1) / 2) * math.log(C * S / (A * B))
    for s in range(k):
        for t in range(s + 1, k):
            out += math.log((alphas[t] - alphas[s]) * (betas[t] - betas[s]))
    for al in alphas:
        for be in betas:
            g = 1 - (1 + C / B) * al - (1 + C / A) * be + al * be
            out -= math.log(-g)
    return out


def hexagon_multi_dent(n, A, B, C, alphas, betas) -> float:
    return math.exp(log_hexagon_multi_dent(n, A, B, C, alphas, betas))


def hexagon_entropy_diff(A, B, C, alphas: Sequence[float], betas: Sequence[float]) -> float:
    """Limit of ``(1/n) log`` of the multi-dent hexagon ratio (crossing regime)."""
    _check_all_crossing(A, B, C, alphas, betas)
    return sum(hexagon_log_limit_crossing(A, B, C, al, be) for al, be in zip(alphas, betas))


def tem_limit_check(n_list: Sequence[int]) -> list[Fraction]:
    """Exact adjacent-middle over opposite-middle ratios in regular hexagons."""
    from .exact_counts import opposite_vs_adjacent_ratio
    return [opposite_vs_adjacent_ratio(n) for n in n_list]
