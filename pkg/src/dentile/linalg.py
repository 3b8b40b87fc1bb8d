"""Exact linear algebra over Python integers and ``Fraction``.

Matrices are plain lists of lists.  Nothing here touches floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def minor(m: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """Submatrix with the given rows and columns deleted."""
    drop_r, drop_c = set(rows), set(cols)
    return [
        [x for j, x in enumerate(row) if j not in drop_c]
        for i, row in enumerate(m)
        if i not in drop_r
    ]


def bareiss_det(m: Sequence[Sequence]) -> int | Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Integer input stays integer throughout; every division is exact.
    Rational input is scaled to integers first.
    """
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    scale = 1
    if any(isinstance(x, Fraction) and x.denominator != 1 for row in m for x in row):
        rows = []
        for row in m:
            den = math.lcm(*(Fraction(x).denominator for x in row))
            rows.append([int(Fraction(x) * den) for x in row])
            scale *= den
        a = rows
    else:
        a = [[int(x) for x in row] for row in m]

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    det = sign * a[n - 1][n - 1]
    if scale != 1:
        return Fraction(det, scale)
    return det


def exact_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse by Gauss-Jordan elimination over ``Fraction``."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
