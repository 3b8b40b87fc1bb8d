import json
import random

import pytest

from dentile.errors import DomainError, UntileableRegion
from dentile.path_numbers import delannoy_matrix
from dentile.regions import (BLACK, WHITE, build_aztec, build_hexagon, dual_graph,
                             lgv_endpoints, region_json)


def test_aztec_cell_counts_examples():
    assert len(build_aztec(1).cells) == 4
    assert len(build_aztec(8, [2], [4]).cells) == 142
    cells = build_aztec(1, [1], [1]).cells
    assert len(cells) == 2
    (x0, y0), (x1, y1) = sorted(cells)
    assert y0 == y1 and abs(x0 - x1) == 1


def test_aztec_cell_counts_random():
    rng = random.Random(3)
    for n in range(1, 51):
        k = rng.randint(0, min(n, 4))
        sw, se = rng.sample(range(1, n + 1), k), rng.sample(range(1, n + 1), k)
        assert len(build_aztec(n, sw, se).cells) == 2 * n * (n + 1) - 2 * k
        assert len(build_aztec(n, sw, se, augmented=True).cells) == 2 * n * (n + 1) + 2 * k


def test_colors_balanced():
    for region in (build_aztec(5, [1, 4], [2, 3]), build_aztec(4, [2], [2], augmented=True),
                   build_hexagon(3, 2, 4, [1, 3], [1, 2]), build_hexagon(3, 3, 3, [2], [3], True)):
        g = dual_graph(region)
        assert g.colors.count(WHITE) == g.colors.count(BLACK)
        for u, v in g.edges:
            assert g.colors[u] != g.colors[v]


def test_unbalanced_cells_differ_in_color():
    g = dual_graph(build_aztec(4, [1, 2], [3], strict=False))
    assert g.colors.count(WHITE) != g.colors.count(BLACK)


def test_dual_graph_examples():
    g = dual_graph(build_aztec(1))
    assert (len(g.vertices), len(g.edges)) == (4, 4)
    g = dual_graph(build_aztec(2))
    # the spec lists 17; direct count is 16 (4n^2 in general)
    assert (len(g.vertices), len(g.edges)) == (12, 16)
    for n in range(1, 8):
        assert len(dual_graph(build_aztec(n)).edges) == 4 * n * n
    g = dual_graph(build_hexagon(1, 1, 1))
    assert (len(g.vertices), len(g.edges)) == (6, 6)


def test_hexagon_triangle_count():
    for a, b, c in [(1, 1, 1), (2, 3, 4), (4, 1, 2)]:
        assert len(build_hexagon(a, b, c).cells) == 2 * (a * b + b * c + c * a)
        assert len(build_hexagon(a, b, c, [1], [1]).cells) == 2 * (a * b + b * c + c * a) - 2


@pytest.mark.parametrize("n", range(1, 9))
def test_plain_lgv_matrix_is_delannoy(n):
    e = lgv_endpoints(build_aztec(n))
    assert len(e.starts) == len(e.ends) == n + 1
    assert e.starts[0] == e.ends[0]
    assert e.matrix() == delannoy_matrix(n + 1)


def test_dented_endpoints_prepend_dent_pair():
    e = lgv_endpoints(build_aztec(8, [2], [4]))
    assert len(e.starts) == 10
    assert e.labels[0][0] == "s2" and e.labels[1][0] == "t4"


def test_augmented_endpoints_drop_labels():
    e = lgv_endpoints(build_aztec(2, [1], [1], augmented=True))
    assert len(e.starts) == len(e.ends) == 2
    assert "u1" not in e.labels[0] and "v1" not in e.labels[1]


def test_hexagon_endpoints():
    e = lgv_endpoints(build_hexagon(2, 2, 2))
    assert len(e.starts) == 2
    assert e.matrix() == [[6, 4], [4, 6]]


def test_dent_range_errors():
    with pytest.raises(DomainError):
        build_aztec(3, [4], [1])
    with pytest.raises(DomainError):
        build_aztec(0)
    with pytest.raises(DomainError):
        build_hexagon(2, 2, 2, [3], [1])
    with pytest.raises(UntileableRegion):
        build_aztec(4, [1, 2], [3])
    region = build_aztec(4, [1, 2], [3], strict=False)
    with pytest.raises(UntileableRegion):
        region.require_tileable()


def test_region_json_schema():
    doc = json.loads(region_json(build_aztec(2, [1], [2])))
    assert doc["kind"] == "aztec" and doc["n"] == 2
    assert doc["dents"] == {"sw": [1], "se": [2]}
    assert len(doc["cells"]) == 10
    doc = json.loads(region_json(build_hexagon(2, 3, 1, [1], [2])))
    assert (doc["a"], doc["b"], doc["c"]) == (2, 3, 1)
    assert doc["dents"] == {"N": [1], "NE": [2]}
