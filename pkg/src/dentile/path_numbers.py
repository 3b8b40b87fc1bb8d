"""Delannoy and binomial machinery.

Matrix indices are 0-based; dent indices never appear here.  The ``i - 1``
shift between dent labels and matrix rows happens only in
:mod:`dentile.exact_counts`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError
from .linalg import Matrix, matmul, transpose


_TABLE_SIZE = 128


@lru_cache(maxsize=1)
def _delannoy_table() -> tuple[tuple[int, ...], ...]:
    size = _TABLE_SIZE
    table = [[1] * size for _ in range(size)]
    for k in range(1, size):
        for l in range(1, size):
            table[k][l] = table[k - 1][l] + table[k][l - 1] + table[k - 1][l - 1]
    return tuple(tuple(row) for row in table)


def delannoy(k: int, l: int) -> int:
    """Number of lattice paths (0,0) -> (k,l) with steps E, N and NE.

    Computed by the three-term recurrence
    ``D(k,l) = D(k-1,l) + D(k,l-1) + D(k-1,l-1)``; small arguments come from
    a cached table, larger ones from a rolling row.
    """
    if k < 0 or l < 0:
        raise DomainError(f"delannoy({k}, {l}): arguments must be nonnegative")
    if k < _TABLE_SIZE and l < _TABLE_SIZE:
        return _delannoy_table()[k][l]
    if l > k:
        k, l = l, k
    row = [1] * (l + 1)
    for _ in range(k):
        diag = row[0]
        for c in range(1, l + 1):
            above = row[c]
            row[c] = above + row[c - 1] + diag
            diag = above
    return row[l]


def delannoy_sum(k: int, l: int) -> int:
    """Closed sum ``sum_m 2^m C(k,m) C(l,m)``; an independent route to D(k,l)."""
    if k < 0 or l < 0:
        raise DomainError(f"delannoy_sum({k}, {l}): arguments must be nonnegative")
    return sum((1 << m) * comb(k, m) * comb(l, m) for m in range(min(k, l) + 1))


def ratio_sum(n: int, i: int, j: int) -> Fraction:
    """``sum_{k<n} C(k,i-1) C(k,j-1) / 2^(k+1)`` as an exact rational.

    This is the tiling ratio of the Aztec diamond of order ``n`` with dents
    ``i`` (southwest) and ``j`` (southeast), 1-based.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"ratio_sum: need 1 <= i,j <= n, got n={n}, i={i}, j={j}")
    return binomial_half_sum(n, i - 1, j - 1)


def binomial_half_sum(n: int, x: int, y: int) -> Fraction:
    """``sum_{k<n} C(k,x) C(k,y) / 2^(k+1)`` with 0-based ``x, y``."""
    if n <= 0:
        return Fraction(0)
    # common denominator 2^n keeps the sum in integers
    num = 0
    for k in range(max(x, y), n):
        num += comb(k, x) * comb(k, y) << (n - 1 - k)
    return Fraction(num, 1 << n)


def delannoy_matrix(n: int) -> Matrix:
    """``D_n = (D(i,j))_{0<=i,j<n}``."""
    if n < 1:
        raise DomainError("delannoy_matrix: n must be >= 1")
    return [[delannoy(i, j) for j in range(n)] for i in range(n)]


def pascal_lower(n: int) -> Matrix:
    """Lower unitriangular ``L_n = (C(i,j))``."""
    if n < 1:
        raise DomainError("pascal_lower: n must be >= 1")
    return [[comb(i, j) for j in range(n)] for i in range(n)]


def pascal_lower_inverse(n: int) -> Matrix:
    """Closed-form inverse ``((-1)^(i+j) C(i,j))`` of :func:`pascal_lower`."""
    return [[(-1) ** (i + j) * comb(i, j) for j in range(n)] for i in range(n)]


def symmetric_pascal(n: int) -> Matrix:
    """``S_n = (C(i+j, j))``, which equals ``L_n L_n^T``."""
    if n < 1:
        raise DomainError("symmetric_pascal: n must be >= 1")
    return [[comb(i + j, j) for j in range(n)] for i in range(n)]


def factorization_product(n: int) -> Matrix:
    """``L_n diag(1, 2, ..., 2^(n-1)) L_n^T`` computed by explicit products."""
    lower = pascal_lower(n)
    scaled = [[x << k for k, x in enumerate(row)] for row in lower]
    return matmul(scaled, transpose(lower))


def factorization_check(n: int) -> bool:
    """True iff the Delannoy matrix equals its Pascal factorization entrywise."""
    return factorization_product(n) == delannoy_matrix(n)


def delannoy_inverse_entry(n: int, i: int, j: int) -> Fraction:
    """Entry ``(i, j)`` of ``D_n^{-1}`` from its closed form.

    ``2 (-1)^(i+j) sum_{k<n} C(k,i) C(k,j) / 2^(k+1)``.
    """
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"delannoy_inverse_entry: need 0 <= i,j < n={n}")
    sign = -1 if (i + j) % 2 else 1
    return 2 * sign * binomial_half_sum(n, i, j)


def delannoy_inverse(n: int) -> list[list[Fraction]]:
    return [[delannoy_inverse_entry(n, i, j) for j in range(n)] for i in range(n)]
