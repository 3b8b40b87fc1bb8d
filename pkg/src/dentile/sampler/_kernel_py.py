"""Pure-Python flip kernel, used when the compiled one is unavailable.

A single chain runs as a plain loop over lists.  A batch of chains is
vectorized with numpy: every chain advances one flip per array operation,
which keeps the uniformity test (tens of thousands of short chains) fast
without a compiler.
"""
from __future__ import annotations

import numpy as np

from .rng import GAMMA, MASK64, MIX1, MIX2, SplitMix64

NAME = "python"
RELEASES_GIL = False


def _flip(mate, c00, c10, c01, c11) -> bool:
    if mate[c00] == c10 and mate[c01] == c11:
        mate[c00], mate[c01], mate[c10], mate[c11] = c01, c00, c11, c10
        return True
    if mate[c00] == c01 and mate[c10] == c11:
        mate[c00], mate[c10], mate[c01], mate[c11] = c10, c00, c11, c01
        return True
    return False


def _run_one(mate: list, blocks: list, state: int, flips: int, check: bool) -> tuple[int, int]:
    rng = SplitMix64(state)
    nb = len(blocks)
    bad = 0
    for _ in range(flips):
        blk = blocks[rng.below(nb)]
        _flip(mate, *blk)
        if check:
            for c in blk:
                if mate[mate[c]] != c:
                    bad += 1
    return rng.state, bad


def _next(states: np.ndarray) -> np.ndarray:
    states += np.uint64(GAMMA)
    z = states.copy()
    z ^= z >> np.uint64(30)
    z *= np.uint64(MIX1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(MIX2)
    z ^= z >> np.uint64(31)
    return z


def _below(states: np.ndarray, bound: int) -> np.ndarray:
    b = np.uint64(bound)
    low_mask = np.uint64(0xFFFFFFFF)
    m = (_next(states) >> np.uint64(32)) * b
    threshold = np.uint64(((1 << 32) - bound) % bound)
    redo = np.flatnonzero((m & low_mask) < threshold)
    while redo.size:
        sub = states[redo]
        m_sub = (_next(sub) >> np.uint64(32)) * b
        states[redo] = sub
        m[redo] = m_sub
        redo = redo[(m_sub & low_mask) < threshold]
    return (m >> np.uint64(32)).astype(np.intp)


def run_chains(mates: np.ndarray, blocks: np.ndarray, states: np.ndarray, flips: int,
               check: bool = False) -> int:
    """Advance every row of ``mates`` by ``flips`` flip steps in place.

    ``blocks`` rows are the cells ``(c00, c10, c01, c11)`` of one 2x2 block;
    ``states`` holds one generator state per chain and is updated in place.
    Returns the number of cells whose mate relation was found broken after
    a step (only counted when ``check`` is set).
    """
    nchains = mates.shape[0]
    nb = blocks.shape[0]
    if nchains == 0 or flips == 0:
        return 0
    if nchains == 1:
        mate = mates[0].tolist()
        final, bad = _run_one(mate, blocks.tolist(), int(states[0]), flips, check)
        mates[0] = mate
        states[0] = np.uint64(final & MASK64)
        return bad
    rows = np.arange(nchains)
    bad = 0
    for _ in range(flips):
        blk = blocks[_below(states, nb)]
        c00, c10, c01, c11 = blk[:, 0], blk[:, 1], blk[:, 2], blk[:, 3]
        m00 = mates[rows, c00]
        horiz = (m00 == c10) & (mates[rows, c01] == c11)
        vert = (m00 == c01) & (mates[rows, c10] == c11)
        h, v = rows[horiz], rows[vert]
        if h.size:
            a, b_, c, d = c00[horiz], c10[horiz], c01[horiz], c11[horiz]
            mates[h, a], mates[h, c], mates[h, b_], mates[h, d] = c, a, d, b_
        if v.size:
            a, b_, c, d = c00[vert], c10[vert], c01[vert], c11[vert]
            mates[v, a], mates[v, b_], mates[v, c], mates[v, d] = b_, a, d, c
        if check:
            for col in (c00, c10, c01, c11):
                partner = mates[rows, col]
                bad += int(np.count_nonzero(mates[rows, partner] != col))
    return bad
