import math
import random
from fractions import Fraction
from math import comb

import pytest

from dentile import asymptotics as asy
from dentile import exact_counts as ec
from dentile.errors import DomainError, RegimeError
from dentile.path_numbers import ratio_sum


def test_classify_aztec_examples():
    assert asy.classify_aztec(0.1, 0.1).classification == asy.Regime.OUTSIDE
    assert asy.classify_aztec(0.5, 0.5).classification == asy.Regime.CROSSING
    a = 0.2
    b = 1 - 0.5 / (1 - a)
    assert asy.classify_aztec(a, b).classification == asy.Regime.CRITICAL
    with pytest.raises(DomainError):
        asy.classify_aztec(0.0, 0.5)


def test_algebraic_and_geometric_tests_agree_on_grid():
    m = 200
    for k in range(1, m):
        for l in range(1, m):
            a, b = k / m, l / m
            disc = asy.aztec_discriminant(a, b)
            if abs(disc) < 1e-9:
                continue
            assert (asy.segment_distance_to_center(a, b) > 0.5) == (disc > 0)


def test_saddle_identity():
    rng = random.Random(5)
    for _ in range(1000):
        a, b = rng.uniform(0.01, 1), rng.uniform(0.01, 1)
        assert abs(asy.saddle_identity_residual(a, b)) < 1e-12


@pytest.mark.parametrize("a,b", [(0.1, 0.1), (0.5, 0.5)])
def test_ratio_asymptotic_n500(a, b):
    n = 500
    i, j = asy.dent_indices(n, a, b)
    exact = math.log(ratio_sum(n, i, j))
    assert abs(math.exp(exact - asy.log_aztec_ratio_asymptotic(n, a, b)) - 1) < 0.1


def test_ratio_asymptotic_refuses_critical():
    a = 0.3
    with pytest.raises(RegimeError):
        asy.log_binomial_sum_asymptotic(100, a, 1 - 0.5 / (1 - a))


def test_dichotomy():
    assert asy.exact_dichotomy_ratio(400, 0.1, 0.1) > 0.9
    assert asy.exact_dichotomy_ratio(400, 0.5, 0.5) < 0.1


def test_log_limit_values():
    assert asy.aztec_log_limit(0.5, 0.5) == pytest.approx(math.log(2), abs=1e-15)
    for a, b in [(0.5, 0.3), (0.6, 0.45), (0.7, 0.4)]:
        assert asy.classify_aztec(a, b).classification == asy.Regime.CROSSING
        assert asy.classify_aztec(a, 1 - b).classification == asy.Regime.CROSSING
        assert asy.aztec_log_limit(a, b) == pytest.approx(asy.aztec_log_limit(a, 1 - b), abs=1e-14)


def test_log_limit_n800():
    n = 800
    i, j = asy.dent_indices(n, 0.3, 0.6)
    assert abs(math.log(ratio_sum(n, i, j)) / n - asy.aztec_log_limit(0.3, 0.6)) < 0.02


def test_branch_continuity():
    assert len(asy.regime_boundary(100)) == 100
    assert asy.branch_gap(100) < 1e-9


def test_critical_curve():
    pts = asy.critical_curve(200)
    coords = {(round(p.a, 9), round(p.b, 9)) for p in pts}
    assert (0.5, 0.0) in coords and (0.0, 0.5) in coords
    for p in pts:
        assert abs(p.residual) < 1e-9
    diag = min(pts, key=lambda p: abs(p.a - p.b) if p.piece == "arc" else 9)
    assert diag.a == pytest.approx(0.89, abs=0.01)
    with pytest.raises(DomainError):
        asy.critical_curve(1)


def test_helmet_grid():
    grid = asy.helmet_grid(16)
    a, b, f, regime = grid.argmax()
    assert (a, b) == (0.5, 0.5) and f == pytest.approx(math.log(2))
    for a, b, f, regime in grid.rows:
        res = 2 * a**a * b**b * (1 - a) ** (1 - a) * (1 - b) ** (1 - b) - 1
        if regime == "Crossing" and abs(res) > 1e-6:
            assert (f > 0) == (res < 0)
    with pytest.raises(DomainError):
        asy.helmet_grid(4)


def test_multi_dent_entropy():
    assert asy.entropy_diff([0.6], [0.5]) == pytest.approx(asy.aztec_log_limit_crossing(0.6, 0.5))
    n = 600
    al, be = [0.5, 0.7], [0.5, 0.7]
    I = [round(x * n) for x in al]
    r = ec.multi_aztec_ratio(n, I, I)
    exact = (math.log(r.numerator) - math.log(r.denominator)) / n
    assert abs(exact - asy.entropy_diff(al, be)) < 0.03
    with pytest.raises(DomainError):
        asy.entropy_diff([0.5], [0.5, 0.7])
    with pytest.raises(DomainError):
        asy.log_multi_dent_aztec_asymptotic(n, [0.7, 0.5], [0.5, 0.7])
    with pytest.raises(RegimeError):
        asy.log_multi_dent_aztec_asymptotic(n, [0.1], [0.1])


def test_cauchy_identities():
    rng = random.Random(9)
    for _ in range(20):
        u = [Fraction(rng.randint(1, 30), 31) for _ in range(3)]
        v = [Fraction(rng.randint(1, 30), 37) for _ in range(3)]
        assert asy.cauchy_det(u, v) == asy.cauchy_product(u, v)
        x, y, z = (Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3))
        a = [Fraction(rng.randint(1, 20), 7) for _ in range(3)]
        b = [Fraction(rng.randint(1, 20), 5) for _ in range(3)]
        assert asy.cauchy_like_det(x, y, z, a, b) == asy.cauchy_like_product(x, y, z, a, b)


def test_classify_hexagon():
    rep = asy.classify_hexagon(1, 1, 1, 0.5, 0.5)
    assert rep.classification == asy.Regime.CROSSING and rep.discriminant == pytest.approx(-0.75)
    assert asy.classify_hexagon(1, 1, 1e-4, 0.1, 0.1).classification == asy.Regime.OUTSIDE
    # a point on the boundary surface: solve for C
    A, B, al, be = 1.0, 1.3, 0.2, 0.3
    C = (1 - al) * (1 - be) * A * B / (al * A + be * B)
    rep = asy.classify_hexagon(A, B, C, al, be)
    assert abs(rep.discriminant) < 1e-12 and rep.classification == asy.Regime.CRITICAL


def test_hexagon_ratio_asymptotic_regular():
    n = 200
    exact = math.log(ec.hexagon_ratio(n, n, n, n // 2, n // 2))
    assert abs(math.exp(exact - asy.log_hexagon_ratio_asymptotic(n, 1, 1, 1, 0.5, 0.5)) - 1) < 0.1


def test_hexagon_dichotomy():
    n = 200
    out = ec.hexagon_ratio(n, n, n, 10, 10) / comb(18, 9)
    cross = ec.hexagon_ratio(n, n, n, 100, 100) / comb(198, 99)
    assert asy.classify_hexagon(1, 1, 1, 0.05, 0.05).classification == asy.Regime.OUTSIDE
    assert abs(float(out) - 1) < 0.2 and float(cross) < 1e-10


def test_binomial_helper():
    n = 500
    for al, be in [(0.2, 0.3), (0.5, 0.5)]:
        i, j = round(al * n), round(be * n)
        exact = math.log(comb(i + j - 2, i - 1))
        assert abs(math.exp(exact - asy.log_binomial_asymptotic(n, 1, 1, al, be)) - 1) < 0.01


def test_u_greater_than_v_when_crossing():
    rng = random.Random(17)
    seen = 0
    for _ in range(3000):
        A, B, C = (rng.uniform(0.2, 3) for _ in range(3))
        al, be = rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98)
        if asy.classify_hexagon(A, B, C, al, be).classification == asy.Regime.CROSSING:
            seen += 1
            co = asy.hexagon_bases(A, B, C, al, be)
            assert co.U > co.V
    assert seen > 100


def test_hexagon_limits():
    A, B, C, al, be = 1.0, 1.0, 1.0, 0.1, 0.1
    F = asy.F
    assert asy.hexagon_log_limit_outside(A, B, C, al, be) == pytest.approx(
        F(al * A) + F(be * B) - F(al * A + be * B))
    assert asy.hexagon_entropy_diff(1, 1, 1, [0.5], [0.5]) == pytest.approx(
        asy.hexagon_log_limit_crossing(1, 1, 1, 0.5, 0.5))
    two = asy.hexagon_entropy_diff(1, 1, 1, [0.4, 0.6], [0.4, 0.6])
    assert two == pytest.approx(asy.hexagon_log_limit_crossing(1, 1, 1, 0.4, 0.4)
                                + asy.hexagon_log_limit_crossing(1, 1, 1, 0.6, 0.6))


def test_hexagon_multi_dent_converges():
    # exact ratio is the determinant of single-pair ratios (Jacobi); the
    # asymptotic formula's relative error shrinks roughly like 1/n
    al = be = [0.4, 0.6]
    errs = []
    for n in (40, 80):
        idx = [round(x * n) for x in al]
        m = [[ec.hexagon_ratio(n, n, n, i, j) for j in idx] for i in idx]
        exact = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        errs.append(abs(math.log(exact) - asy.log_hexagon_multi_dent(n, 1, 1, 1, al, be)))
    assert errs[1] < errs[0] < 0.3


def test_tem_limit_values():
    r = asy.tem_limit_check([10, 80])
    assert abs(float(r[-1]) - 2) < 0.1
