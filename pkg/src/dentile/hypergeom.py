"""Pochhammer symbols and terminating hypergeometric series at argument 1."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

Number = int | Fraction


def pochhammer(x: Number, k: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+k-1)``; ``(x)_0 = 1``."""
    if k < 0:
        raise DomainError(f"pochhammer: negative length {k}")
    x = Fraction(x)
    out = Fraction(1)
    for m in range(k):
        out *= x + m
        if out == 0:
            break
    return out


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HyperSeries:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    argument: Fraction = Fraction(1)

    @classmethod
    def of(cls, upper: Sequence[Number], lower: Sequence[Number], z: Number = 1):
        return cls(tuple(map(Fraction, upper)), tuple(map(Fraction, lower)), Fraction(z))

    @property
    def termination_index(self) -> int:
        stops = [int(-a) for a in self.upper if _nonpositive_int(a)]
        if not stops:
            raise DomainError(f"series with upper parameters {self.upper} does not terminate")
        return min(stops)

    def terms(self) -> list[Fraction]:
        n = self.termination_index
        out = []
        term = Fraction(1)
        for k in range(n + 1):
            out.append(term)
            if k == n:
                break
            num = Fraction(1)
            for a in self.upper:
                num *= a + k
            den = Fraction(k + 1)
            for b in self.lower:
                if b + k == 0:
                    raise DomainError(
                        f"lower parameter {b} vanishes at index {k + 1} <= {n}"
                    )
                den *= b + k
            term = term * num * self.argument / den
        return out


def evaluate_terminating(series: HyperSeries) -> Fraction:
    """Exact value of a terminating series, summed term by term."""
    return sum(series.terms(), Fraction(0))


def hyp(upper: Sequence[Number], lower: Sequence[Number], z: Number = 1) -> Fraction:
    return evaluate_terminating(HyperSeries.of(upper, lower, z))


def sears_sides(a: Number, b: Number, c: Number, e: Number, f: Number,
                N: int) -> tuple[Fraction, Fraction]:
    """Both sides of Sears' transformation of a balanced 4F3.

    Left: ``4F3[a, b, c, -N; e, f, 1+a+b+c-e-f-N; 1]``.
    Right: ``(e-a)_N (f-a)_N / ((e)_N (f)_N)`` times
    ``4F3[-N, a, 1+a+c-e-f-N, 1+a+b-e-f-N; 1+a+b+c-e-f-N, 1+a-e-N, 1+a-f-N; 1]``.
    """
    if N < 0:
        raise DomainError("Sears transformation needs N >= 0")
    a, b, c, e, f = map(Fraction, (a, b, c, e, f))
    if not sears_pole_free(a, b, c, e, f, N):
        raise DomainError("a lower parameter vanishes inside the summation range")
    g = 1 + a + b + c - e - f - N
    left = hyp([a, b, c, -N], [e, f, g])
    den = pochhammer(e, N) * pochhammer(f, N)
    if den == 0:
        raise DomainError("Sears prefactor has a vanishing denominator")
    pre = pochhammer(e - a, N) * pochhammer(f - a, N) / den
    right = pre * hyp([-N, a, 1 + a + c - e - f - N, 1 + a + b - e - f - N],
                      [g, 1 + a - e - N, 1 + a - f - N])
    return left, right


def sears_pole_free(a, b, c, e, f, N: int) -> bool:
    """No lower parameter on either side lies in ``{0, -1, ..., 1-N}``.

    Under this condition both series are genuine polynomials in their
    parameters summed over ``k = 0..N``, so an earlier termination caused by
    another upper parameter cannot hide a ``0/0`` term.
    """
    a, b, c, e, f = map(Fraction, (a, b, c, e, f))
    g = 1 + a + b + c - e - f - N
    lowers = (e, f, g, 1 + a - e - N, 1 + a - f - N)
    return not any(_nonpositive_int(x) and x > -N for x in lowers)


def sears_transform_check(a, b, c, e, f, N: int) -> bool:
    left, right = sears_sides(a, b, c, e, f, N)
    return left == right
