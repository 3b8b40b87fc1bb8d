"""Exact tiling counts from closed forms and from LGV determinants.

Every ratio is an exact ``Fraction``; counts are Python ints.  Whenever a
closed form is multiplied out to a count, integrality is checked and a
failure raises :class:`InvariantViolation` rather than rounding.
"""
from __future__ import annotations

import decimal
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .errors import DomainError, InvariantViolation, UntileableRegion
from .hypergeom import hyp, pochhammer
from .linalg import bareiss_det, minor
from .path_numbers import binomial_half_sum, delannoy_matrix, ratio_sum
from .regions import AztecRegion, HexRegion, Region, lgv_endpoints


class Method(str, Enum):
    CLOSED_FORM = "ClosedForm"
    LGV = "LgvDeterminant"
    RATIO = "RatioFormula"
    HYPERGEOMETRIC = "Hypergeometric"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class CountResult:
    region: dict
    count: int
    method: Method

    def __post_init__(self):
        if self.count < 0:
            raise InvariantViolation(f"negative tiling count {self.count}")

    def to_dict(self) -> dict:
        return {"region": self.region, "count": str(self.count), "method": self.method.value}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def decimal_string(x: Fraction, digits: int = 12) -> str:
    """``x`` rounded to ``digits`` significant digits."""
    ctx = decimal.Context(prec=digits)
    value = ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator))
    return format(value, "f") if abs(value.adjusted()) < 20 else str(value)


def _as_count(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InvariantViolation(f"{what} is not an integer: {x}")
    return int(x)


def _check_dents(n: int, dents: Sequence[int], what: str) -> tuple[int, ...]:
    out = tuple(dents)
    if len(set(out)) != len(out):
        raise DomainError(f"{what}: repeated dent index")
    for d in out:
        if not 1 <= d <= n:
            raise DomainError(f"{what}: dent {d} outside [1, {n}]")
    return out


# ---------------------------------------------------------------- Aztec


def count_aztec(n: int) -> int:
    if n < 0:
        raise DomainError("Aztec order must be >= 0")
    return 1 << (n * (n + 1) // 2)


def aztec_ratio(n: int, i: int, j: int) -> Fraction:
    """``M(AD_n^{i,j}) / M(AD_n)``."""
    return ratio_sum(n, i, j)


def count_dented_aztec(n: int, i: int, j: int) -> int:
    return _as_count(count_aztec(n) * aztec_ratio(n, i, j), f"M(AD_{n}^{{{i},{j}}})")


def multi_dent_matrix(n: int, sw: Sequence[int], se: Sequence[int]) -> list[list[Fraction]]:
    return [[binomial_half_sum(n, i - 1, j - 1) for j in se] for i in sw]


def multi_aztec_ratio(n: int, sw: Sequence[int], se: Sequence[int]) -> Fraction:
    """Ratio for several dents on each side: a ``k x k`` determinant of sums."""
    sw = sorted(_check_dents(n, sw, "sw dents"))
    se = sorted(_check_dents(n, se, "se dents"))
    if len(sw) != len(se):
        raise UntileableRegion(f"{len(sw)} southwestern vs {len(se)} southeastern dents")
    return Fraction(bareiss_det(multi_dent_matrix(n, sw, se)))


def count_multi_dented_aztec(n: int, sw: Sequence[int], se: Sequence[int]) -> int:
    return _as_count(count_aztec(n) * multi_aztec_ratio(n, sw, se), "multi-dented Aztec count")


def count_augmented_aztec(n: int, i: int, j: int) -> int:
    """Tilings of the diamond with one square added beside dent positions ``i, j``.

    Equals the minor of ``D_{n+1}`` with row ``i`` and column ``j`` removed.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"augmented diamond needs 1 <= i,j <= n, got {(n, i, j)}")
    return bareiss_det(minor(delannoy_matrix(n + 1), [i], [j]))


# ---------------------------------------------------------------- hexagons


def count_hexagon(a: int, b: int, c: int) -> int:
    """Boxed plane partitions in an ``a x b x c`` box."""
    if min(a, b, c) < 0:
        raise DomainError("hexagon sides must be nonnegative")
    out = Fraction(1)
    for i in range(a):
        out *= pochhammer(b + i + 1, c) / pochhammer(1 + i, c)
    return _as_count(out, f"M(H_{a},{b},{c})")


def hexagon_ratio(a: int, b: int, c: int, i: int, j: int) -> Fraction:
    """``M(H^{i,j}) / M(H)`` for dents on the top and northeastern sides."""
    if not (1 <= i <= a and 1 <= j <= b):
        raise DomainError(f"dented hexagon needs 1 <= i <= a, 1 <= j <= b, got {(a, b, c, i, j)}")
    pre = (pochhammer(b, a) / pochhammer(b + c, a)
           * pochhammer(1 + c, a - i) * pochhammer(i, j - 1) * pochhammer(1 + b - j, j - 1)
           / (pochhammer(1, a - i) * pochhammer(1, j - 1) * pochhammer(1 + b + c - j, j - 1)))
    return pre * hyp([-a + i, -b + j, c], [1 - a - b, 1 + c])


def count_dented_hexagon(a: int, b: int, c: int, i: int, j: int) -> int:
    return _as_count(count_hexagon(a, b, c) * hexagon_ratio(a, b, c, i, j),
                     f"M(H_{a},{b},{c}^{{{i},{j}}})")


def count_multi_dented_hexagon(a: int, b: int, c: int, north: Sequence[int],
                               ne: Sequence[int]) -> int:
    from .regions import build_hexagon
    return lgv_count(build_hexagon(a, b, c, north, ne))


def hexagon_limit_matrix(north: Sequence[int], ne: Sequence[int]) -> list[list[int]]:
    """``(C(i + j - 2, j - 1))`` over the dent pairs; its determinant is the
    limiting ratio when the sides grow with the dents fixed."""
    return [[comb(i + j - 2, j - 1) for j in sorted(ne)] for i in sorted(north)]


def _opposite_check(a: int, i: int, j: int):
    if not (1 <= i <= a and 1 <= j <= a):
        raise DomainError(f"opposite dents need 1 <= i,j <= a, got {(a, i, j)}")


def opposite_ratio_untransformed(a: int, b: int, c: int, i: int, j: int) -> Fraction:
    """Ratio for dents ``i`` (top) and ``j`` (bottom), both counted right to left.

    This is the balanced ``4F3`` before Sears' transformation.  The factor
    ``(2+a-i-j)_{i+j-2}`` in front and the lower parameter ``2+a-i-j`` can
    both vanish; they are cancelled termwise, as are ``(1+b-j)_{i-1}`` and the
    lower parameter ``1+b-j``.
    """
    _opposite_check(a, i, j)
    pre = (pochhammer(a, b) * pochhammer(c, j - 1)
           / (pochhammer(a + c, b) * factorial(i - 1) * factorial(j - 1)
              * pochhammer(1 + a + c - i, i - 1) * pochhammer(1 + a + b - j, j - 1)))
    x, y = 2 + a - i - j, 1 + b - j
    total = Fraction(0)
    for k in range(min(i, j)):
        num = (pochhammer(1 - j, k) * pochhammer(1 - c - j, k) * pochhammer(1 + a + b - j, k)
               * pochhammer(1 - i, k))
        if num == 0:
            break
        den = pochhammer(2 - c - j, k) * factorial(k)
        total += (num / den * pochhammer(x + k, i + j - 2 - k)
                  * pochhammer(y + k, i - 1 - k))
    return pre * total


def opposite_ratio(a: int, b: int, c: int, i: int, j: int) -> Fraction:
    """Same ratio after Sears' transformation; pole-free for ``1 <= i,j <= a``."""
    _opposite_check(a, i, j)
    pre = (pochhammer(a, b) * pochhammer(c, j - 1) * pochhammer(1 + a - j, j - 1)
           * pochhammer(b, i - 1) * pochhammer(1 + a - i, i - 1)
           / (pochhammer(a + c, b) * factorial(i - 1) * factorial(j - 1)
              * pochhammer(1 + a + c - i, i - 1) * pochhammer(1 + a + b - j, j - 1)))
    return pre * hyp([1 - i, 1 - j, 1, 1 - a - b - c], [2 - c - j, 2 - b - i, 1 - a])


def count_opposite_dented_hexagon(n: int, i: int, j: int) -> int:
    """Regular hexagon of side ``n`` with dents ``i`` on top and ``j`` on the bottom."""
    if n < 1:
        raise DomainError("hexagon side must be >= 1")
    post = opposite_ratio(n, n, n, i, j)
    pre = opposite_ratio_untransformed(n, n, n, i, j)
    if pre != post:
        raise InvariantViolation(f"transformed and untransformed 4F3 disagree at {(n, i, j)}")
    return _as_count(count_hexagon(n, n, n) * post, "opposite-dented hexagon count")


def opposite_vs_adjacent_ratio(n: int) -> Fraction:
    """Adjacent-middle dents over opposite-middle dents in the regular hexagon."""
    m = n // 2
    return hexagon_ratio(n, n, n, m, m) / opposite_ratio(n, n, n, m, m)


# ---------------------------------------------------------------- generic LGV


def lgv_matrix(region: Region) -> list[list[int]]:
    return lgv_endpoints(region).matrix()


def lgv_count(region: Region) -> int:
    """Determinant of the path-count matrix between the region's endpoints."""
    region.require_tileable()
    det = bareiss_det(lgv_matrix(region))
    if det < 0:
        raise InvariantViolation(f"negative LGV determinant {det}; endpoint order is wrong")
    if det == 0:
        raise UntileableRegion("LGV determinant vanishes: the region has no tilings")
    return int(det)


def count_region(region: Region) -> CountResult:
    """Closed form when one applies, LGV otherwise."""
    region.require_tileable()
    if isinstance(region, AztecRegion):
        n, sw, se = region.order, region.sw_dents, region.se_dents
        if region.augmented:
            if len(sw) == 1:
                return CountResult(region.to_dict(), count_augmented_aztec(n, sw[0], se[0]),
                                   Method.LGV)
            return CountResult(region.to_dict(), lgv_count(region), Method.LGV)
        if not sw:
            return CountResult(region.to_dict(), count_aztec(n), Method.CLOSED_FORM)
        return CountResult(region.to_dict(), count_multi_dented_aztec(n, sw, se), Method.RATIO)
    assert isinstance(region, HexRegion)
    a, b, c = region.a, region.b, region.c
    if not region.north_dents:
        return CountResult(region.to_dict(), count_hexagon(a, b, c), Method.CLOSED_FORM)
    if len(region.north_dents) == 1:
        i, j = region.north_dents[0], region.ne_dents[0]
        if region.opposite_variant:
            val = _as_count(count_hexagon(a, b, c) * opposite_ratio(a, b, c, i, j), "count")
        else:
            val = count_dented_hexagon(a, b, c, i, j)
        return CountResult(region.to_dict(), val, Method.HYPERGEOMETRIC)
    return CountResult(region.to_dict(), lgv_count(region), Method.LGV)
