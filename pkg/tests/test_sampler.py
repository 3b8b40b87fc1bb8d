import json
import re

import numpy as np
import pytest

from dentile.errors import DomainError, InvariantViolation
from dentile.regions import build_aztec, build_hexagon
from dentile.sampler import (SplitMix64, Tiling, chain_seed, encode_paths, flip_block,
                             flip_step, frozen_stats, initial_tiling, render_svg, run_batch,
                             sample, sample_many, thread_count)
from dentile.sampler import _kernel_py
from dentile.sampler import tiling as T
from dentile.sampler.kernel import KERNEL, load_kernel


def test_rng_reference_stream():
    # reference values of the standard SplitMix64 generator seeded with 0
    r = SplitMix64(0)
    assert [r.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
                                             0x06C45D188009454F]
    r = SplitMix64(5)
    assert all(0 <= r.below(7) < 7 for _ in range(1000))
    assert chain_seed(42, 0) == 42 and chain_seed(42, 1) != chain_seed(42, 2)


def test_ad1_single_block():
    t = initial_tiling(build_aztec(1))
    assert t.layout.blocks.shape == (1, 4)
    assert t.flippable_blocks() == [0]
    other = flip_block(t, 0)
    assert other != t and flip_block(other, 0) == t


def test_flip_is_an_involution():
    t = initial_tiling(build_aztec(5, [2], [4]))
    rng = SplitMix64(3)
    for _ in range(2000):
        b = rng.below(len(t.layout.blocks))
        assert flip_block(flip_block(t, b), b) == t
        t = flip_step(t, rng)
        t.validate()


def test_ad2_visits_all_tilings():
    t = initial_tiling(build_aztec(2))
    rng = SplitMix64(11)
    seen = {t.key()}
    for _ in range(10_000):
        t = flip_step(t, rng)
        seen.add(t.key())
    assert len(seen) == 8


def test_initial_tilings():
    t = initial_tiling(build_aztec(1, [1], [1]))
    assert len(t.dominoes()) == 1
    t = initial_tiling(build_aztec(8, [2], [4]))
    assert len(t.dominoes()) == 71
    t.validate()


def test_sample_is_deterministic():
    reg = build_aztec(6, [3], [2])
    a, b = sample(reg, 4000, seed=5), sample(reg, 4000, seed=5)
    assert a == b and a.provenance["seed"] == 5
    assert sample(reg, 4000, seed=6) != a
    many = sample_many(reg, 3, 4000, seed=5)
    assert many[0] == a


def test_kernels_agree():
    reg = build_aztec(5, [1, 4], [2, 3])
    x, _ = run_batch(reg, 6, 2500, 17, kernel=_kernel_py)
    y, _ = run_batch(reg, 6, 2500, 17, kernel=KERNEL)
    assert np.array_equal(x, y)
    # a single chain takes the scalar path in the Python kernel
    x1, _ = run_batch(reg, 1, 2500, 17, kernel=_kernel_py)
    assert np.array_equal(x1[0], x[0])


def test_kernel_selection(monkeypatch):
    monkeypatch.setenv("DENTILE_KERNEL", "python")
    assert load_kernel() is _kernel_py
    assert load_kernel("python").NAME == "python"


def test_threads_do_not_change_results(monkeypatch):
    reg = build_aztec(4)
    x, _ = run_batch(reg, 9, 1000, 3, threads=1)
    y, _ = run_batch(reg, 9, 1000, 3, threads=4)
    assert np.array_equal(x, y)
    monkeypatch.setenv("DENTILE_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("DENTILE_THREADS", "zero")
    with pytest.raises(DomainError):
        thread_count()


def test_check_mode_counts_no_violations():
    _, bad = run_batch(build_aztec(4, [2], [3]), 4, 5000, 1, check=True)
    assert bad == 0


def test_path_encoding():
    fam = encode_paths(initial_tiling(build_aztec(5)))
    assert len(fam) == 6 and fam.disjoint()
    fam = encode_paths(sample(build_aztec(8, [2], [4]), 20_000, seed=2))
    assert len(fam) == 10 and fam.nontrivial == 9 and fam.disjoint()
    fam = encode_paths(sample(build_aztec(4, [1], [3], True), 5000, seed=2))
    assert fam.disjoint()
    assert json.loads(json.dumps(fam.to_dict()))


def test_svg_output():
    t = sample(build_aztec(3, [2], [2]), 1000, seed=9)
    svg = render_svg(t, paths=True)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    meta = json.loads(re.search(r"<metadata>(.*)</metadata>", svg).group(1).replace("&quot;", '"'))
    assert meta["seed"] == 9 and meta["flips"] == 1000
    assert svg.count("<rect") == len(t.dominoes())
    assert "<polyline" in svg
    svg = render_svg(paths=encode_paths(t), cells=t.cells)
    assert svg.count("<rect") == len(t.cells)
    with pytest.raises(ValueError):
        render_svg()


def test_frozen_stats_small():
    t = sample(build_aztec(12), 200_000, seed=4)
    st = frozen_stats(t)
    assert sum(v[1] for v in st.sectors.values()) > 0
    assert 0 <= st.overall <= 1
    d = st.to_dict(include_cells=True)
    assert sum(d["type_counts"].values()) == len(t.dominoes())
    assert len(d["cells"]) == len(t.cells)


def test_corner_convention():
    assert T.corner_of(1, 1) == "N" and T.corner_of(-1, -1) == "S"
    assert T.corner_of(1, -1) == "E" and T.corner_of(-1, 1) == "W"


def test_rejects_non_aztec_and_bad_input():
    with pytest.raises(DomainError):
        sample(build_hexagon(2, 2, 2), 10)
    with pytest.raises(DomainError):
        run_batch(build_aztec(2), 1, -1, 0)


def test_tiling_validation_catches_corruption():
    t = initial_tiling(build_aztec(2))
    mate = list(t.mate)
    mate[0] = mate[1]
    with pytest.raises(InvariantViolation):
        Tiling(t.region, tuple(mate)).validate()
