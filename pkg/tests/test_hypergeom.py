import random
from fractions import Fraction

import pytest

from dentile.errors import DomainError
from dentile.hypergeom import (HyperSeries, hyp, pochhammer, sears_pole_free, sears_sides,
                               sears_transform_check)


def test_pochhammer():
    assert pochhammer(2, 3) == 24
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_zero_upper_parameter_gives_one():
    assert hyp([0, 5, 7], [2, 3]) == 1


def test_small_hexagon_series():
    assert hyp([0, 0, 1], [-1, 2]) == 1


def test_termination_index():
    s = HyperSeries.of([-3, -5, Fraction(1, 2)], [1])
    assert s.termination_index == 3
    assert len(s.terms()) == 4
    with pytest.raises(DomainError):
        HyperSeries.of([1, 2], [3]).termination_index


def test_vanishing_lower_parameter_inside_range():
    with pytest.raises(DomainError):
        hyp([-3, 1], [-1])
    # a zero denominator after the last term does not matter
    assert hyp([-1, 1], [-1]) == 1 + Fraction(-1 * 1, -1)


def test_chu_vandermonde():
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    for n in range(6):
        for b, c in [(2, 5), (Fraction(1, 3), Fraction(7, 2)), (-7, 3)]:
            assert hyp([-n, b], [c]) == pochhammer(c - b, n) / pochhammer(c, n)


def test_sears_trivial_and_generic():
    left, right = sears_sides(1, 2, 3, 4, 5, 0)
    assert left == right == 1
    q = Fraction
    assert sears_transform_check(q(1, 3), q(2, 7), q(5, 2), q(9, 4), q(11, 5), 1)
    assert sears_transform_check(q(-1, 3), q(3, 7), q(1, 2), q(13, 4), q(7, 5), 4)


def test_sears_random_integer_tuples():
    rng = random.Random(11)
    checked = 0
    for _ in range(3000):
        N = rng.randint(0, 6)
        args = [rng.randint(-6, 6) for _ in range(5)]
        if sears_pole_free(*args, N):
            checked += 1
            assert sears_transform_check(*args, N), (args, N)
    assert checked > 500


def test_sears_refuses_poles():
    assert not sears_pole_free(1, 1, 1, 0, 3, 2)
    with pytest.raises(DomainError):
        sears_sides(1, 1, 1, 0, 3, 2)
