import warnings
from fractions import Fraction
from math import comb

import pytest

from dentile.errors import DomainError
from dentile.oracle import (StepSet, count_matchings, count_paths_dp, delannoy_steps,
                            deviation_decay_fit, deviation_fraction, enumerate_matchings)
from dentile.path_numbers import delannoy
from dentile.regions import DualGraph, build_aztec, build_hexagon, dual_graph


def _cycle(n):
    return DualGraph(tuple(range(n)), tuple(k % 2 for k in range(n)),
                     tuple((k, (k + 1) % n) for k in range(n)))


def _grid(w, h):
    idx = {(x, y): x + w * y for y in range(h) for x in range(w)}
    edges = [(idx[p], idx[(p[0] + 1, p[1])]) for p in idx if (p[0] + 1, p[1]) in idx]
    edges += [(idx[p], idx[(p[0], p[1] + 1)]) for p in idx if (p[0], p[1] + 1) in idx]
    return DualGraph(tuple(idx), tuple((x + y) % 2 for x, y in idx), tuple(edges))


def test_small_graphs():
    assert count_matchings(DualGraph()) == 1
    assert count_matchings(_cycle(6)) == 2
    assert count_matchings(_grid(2, 4)) == 5  # Fibonacci
    assert count_matchings(_grid(4, 4)) == 36
    assert count_matchings(_grid(8, 8)) == 12988816


def test_odd_vertex_count_warns():
    g = DualGraph((0, 1, 2), (0, 1, 0), ((0, 1), (1, 2)))
    with pytest.warns(UserWarning):
        assert count_matchings(g) == 0


def test_known_regions():
    assert count_matchings(dual_graph(build_aztec(1))) == 2
    assert count_matchings(dual_graph(build_aztec(4))) == 1024
    assert count_matchings(dual_graph(build_hexagon(2, 2, 2))) == 20


def test_enumerate_agrees_with_count():
    for g in (_cycle(8), _grid(3, 4), dual_graph(build_aztec(3, [2], [1]))):
        ms = enumerate_matchings(g)
        assert len(ms) == count_matchings(g) == len(set(ms))
        n = len(g.vertices)
        for m in ms:
            assert sorted(v for e in m for v in e) == list(range(n))
    assert len(enumerate_matchings(_grid(4, 4), limit=10)) == 10


def test_stepset_validation():
    with pytest.raises(DomainError):
        StepSet.of([])
    with pytest.raises(DomainError):
        StepSet.of([(1, 0), (-1, 0)])
    s = StepSet.of([(1, 0), (0, 1)])
    assert all(sum(c * x for c, x in zip(s.certificate, v)) > 0 for v in s.steps)


def test_path_counts():
    steps = delannoy_steps()
    for m in range(6):
        for n in range(6):
            assert count_paths_dp(steps, (m, n)) == delannoy(m, n)
    assert count_paths_dp(StepSet.of([(1, 0), (0, 1)]), (4, 3)) == comb(7, 3)


def test_deviation_examples():
    steps = delannoy_steps()
    assert deviation_fraction(steps, (1, 1), Fraction(1, 10)) == Fraction(2, 3)
    assert deviation_fraction(steps, (1, 1), Fraction(3, 5)) == 0
    with pytest.raises(DomainError):
        deviation_fraction(steps, (1, 1), 0)
    with pytest.raises(DomainError):
        deviation_fraction(steps, (-1, 2), Fraction(1, 10))


def test_tube_monotone():
    steps = delannoy_steps()
    fr = [deviation_fraction(steps, (5, 7), Fraction(e, 20)) for e in range(1, 10)]
    assert all(x >= y for x, y in zip(fr, fr[1:]))


def test_decay_fit_simple_steps():
    fit = deviation_decay_fit(StepSet.of([(1, 0), (0, 1)]), (1, 1), Fraction(1, 5), range(4, 20))
    assert fit.c1 is not None and fit.c1 > 0
    fr = [f for _, _, f in fit.fractions]
    assert fr[-1] < fr[0]


def test_decay_fit_trivially_concentrated():
    # a single step has exactly one path, which never deviates
    fit = deviation_decay_fit(StepSet.of([(1, 1)]), (1, 1), Fraction(1, 10), range(1, 6))
    assert fit.trivially_concentrated
