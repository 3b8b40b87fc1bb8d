"""Domino tilings of Aztec regions and the 2x2 flip chain.

A tiling is stored as a ``mate`` array over the cells of the region's dual
graph (cell ``k`` is covered together with cell ``mate[k]``).  The chain
picks one of the region's 2x2 blocks uniformly and, if the block holds two
parallel dominoes, rotates them.  Every move has probability ``1/#blocks``
in both directions, so the chain is symmetric and its stationary law is
uniform on the (flip-connected) set of tilings.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import networkx as nx
import numpy as np

from ..errors import DomainError, InvariantViolation, UntileableRegion
from ..regions import BLACK, WHITE, AztecRegion, DualGraph, dual_graph, lgv_endpoints
from .kernel import KERNEL
from .rng import SplitMix64, chain_seed

Cell = tuple[int, int]
DOMINO_TYPES = ("N", "S", "E", "W")


@dataclass(frozen=True)
class Layout:
    graph: DualGraph
    index: dict
    blocks: np.ndarray  # rows (c00, c10, c01, c11)


@lru_cache(maxsize=32)
def layout(region: AztecRegion) -> Layout:
    if not isinstance(region, AztecRegion):
        raise DomainError("the flip sampler handles Aztec regions only")
    graph = dual_graph(region)
    index = {c: k for k, c in enumerate(graph.vertices)}
    rows = []
    for (x, y) in graph.vertices:
        quad = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
        if all(c in index for c in quad):
            rows.append([index[c] for c in quad])
    blocks = np.array(rows, dtype=np.int32).reshape(-1, 4)
    return Layout(graph, index, blocks)


def domino_type(region: AztecRegion, a: Cell, b: Cell) -> str:
    """``N``/``S`` for horizontal dominoes with white/black on the left,
    ``W``/``E`` for vertical ones with black/white at the bottom.

    In a large uniform tiling of the diamond each frozen corner is filled by
    the type of the same name.
    """
    lo, hi = sorted((a, b))
    white_first = region.color(lo) == WHITE
    if lo[1] == hi[1]:
        return "N" if white_first else "S"
    return "E" if white_first else "W"


@dataclass(frozen=True, eq=False)
class Tiling:
    region: AztecRegion
    mate: tuple[int, ...]
    provenance: dict = field(default_factory=dict)

    @property
    def layout(self) -> Layout:
        return layout(self.region)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self.layout.graph.vertices

    def dominoes(self) -> list[tuple[Cell, Cell]]:
        verts = self.cells
        return [(verts[k], verts[m]) for k, m in enumerate(self.mate) if k < m]

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((k, m) for k, m in enumerate(self.mate) if k < m)

    def key(self) -> bytes:
        return np.asarray(self.mate, dtype=np.int32).tobytes()

    def __eq__(self, other):
        return (isinstance(other, Tiling) and self.region == other.region
                and self.mate == other.mate)

    def __hash__(self):
        return hash((self.region, self.mate))

    def validate(self) -> None:
        """Raise :class:`InvariantViolation` unless ``mate`` is a perfect
        matching of the dual graph."""
        adj = self.layout.graph.adjacency()
        for k, m in enumerate(self.mate):
            if not 0 <= m < len(self.mate) or self.mate[m] != k or m == k:
                raise InvariantViolation(f"cell {self.cells[k]} is not covered exactly once")
            if m not in adj[k]:
                raise InvariantViolation(f"cells {self.cells[k]} and {self.cells[m]} are not adjacent")

    def flippable_blocks(self) -> list[int]:
        mate = self.mate
        out = []
        for b, (c00, c10, c01, c11) in enumerate(self.layout.blocks.tolist()):
            if (mate[c00] == c10 and mate[c01] == c11) or (mate[c00] == c01 and mate[c10] == c11):
                out.append(b)
        return out


def initial_tiling(region: AztecRegion) -> Tiling:
    """Some tiling, from a maximum bipartite matching of the dual graph."""
    region.require_tileable()
    lay = layout(region)
    g = nx.Graph()
    nv = len(lay.graph.vertices)
    g.add_nodes_from(range(nv))
    g.add_edges_from(lay.graph.edges)
    whites = [k for k in range(nv) if lay.graph.colors[k] == WHITE]
    if 2 * len(whites) != nv:
        raise UntileableRegion("white and black cell counts differ")
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=whites)
    if len(matching) != nv:
        raise UntileableRegion("the region has no domino tiling")
    tiling = Tiling(region, tuple(matching[k] for k in range(nv)))
    tiling.validate()
    return tiling


def flip_block(tiling: Tiling, block: int) -> Tiling:
    """Rotate the two dominoes in ``block`` if they are parallel."""
    mate = list(tiling.mate)
    c00, c10, c01, c11 = tiling.layout.blocks[block].tolist()
    if mate[c00] == c10 and mate[c01] == c11:
        mate[c00], mate[c01], mate[c10], mate[c11] = c01, c00, c11, c10
    elif mate[c00] == c01 and mate[c10] == c11:
        mate[c00], mate[c10], mate[c01], mate[c11] = c10, c00, c11, c01
    else:
        return tiling
    return Tiling(tiling.region, tuple(mate), tiling.provenance)


def flip_step(tiling: Tiling, rng: SplitMix64) -> Tiling:
    """One step of the chain: a uniform block, flipped when possible."""
    nb = len(tiling.layout.blocks)
    if nb == 0:
        return tiling
    return flip_block(tiling, rng.below(nb))


# ---------------------------------------------------------------- running chains


def default_burn_in(region: AztecRegion) -> int:
    """Heuristic burn-in of ``200 * cells**2`` flips (not a mixing bound)."""
    return 200 * len(region.cells) ** 2


def thread_count() -> int:
    cpus = os.cpu_count() or 1
    raw = os.environ.get("DENTILE_THREADS", "").strip()
    if not raw:
        return cpus
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"DENTILE_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise DomainError(f"DENTILE_THREADS must be a positive integer, got {raw!r}")
    return n


def run_batch(region: AztecRegion, chains: int, flips: int, seed: int,
              threads: int | None = None, check: bool = False,
              kernel=None) -> tuple[np.ndarray, int]:
    """Run ``chains`` independent chains from the same initial tiling.

    Returns the final ``mate`` arrays (one row per chain) and the number of
    matching violations seen (only counted with ``check``).  Chain ``k`` is
    seeded with ``chain_seed(seed, k)``, so results do not depend on how the
    rows are split between threads.
    """
    if flips < 0 or chains < 0:
        raise DomainError("flips and chains must be nonnegative")
    kernel = kernel or KERNEL
    start = np.asarray(initial_tiling(region).mate, dtype=np.int32)
    mates = np.tile(start, (chains, 1))
    states = np.array([chain_seed(seed, k) for k in range(chains)], dtype=np.uint64)
    blocks = layout(region).blocks
    if len(blocks) == 0 or chains == 0:
        return mates, 0
    workers = max(1, min(threads or thread_count(), chains))
    if workers == 1 or not kernel.RELEASES_GIL:
        return mates, kernel.run_chains(mates, blocks, states, flips, check)
    bounds = np.linspace(0, chains, workers + 1).astype(int)

    def work(lo_hi):
        lo, hi = lo_hi
        return kernel.run_chains(mates[lo:hi], blocks, states[lo:hi], flips, check)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        bad = sum(pool.map(work, zip(bounds[:-1], bounds[1:])))
    return mates, bad


def sample(region: AztecRegion, flips: int | None = None, seed: int = 0,
           check: bool = False) -> Tiling:
    """One chain of ``flips`` steps (default :func:`default_burn_in`)."""
    if flips is None:
        flips = default_burn_in(region)
    mates, bad = run_batch(region, 1, flips, seed, threads=1, check=check)
    if bad:
        raise InvariantViolation(f"{bad} matching violations during sampling")
    prov = {"seed": seed, "flips": flips, "rng": "splitmix64", "kernel": KERNEL.NAME}
    return Tiling(region, tuple(mates[0].tolist()), prov)


def sample_many(region: AztecRegion, chains: int, flips: int, seed: int = 0,
                threads: int | None = None) -> list[Tiling]:
    mates, _ = run_batch(region, chains, flips, seed, threads)
    return [Tiling(region, tuple(row), {"seed": chain_seed(seed, k), "flips": flips,
                                        "rng": "splitmix64", "kernel": KERNEL.NAME})
            for k, row in enumerate(mates.tolist())]


# ---------------------------------------------------------------- paths


Point = tuple[Fraction, Fraction]
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PathFamily:
    """Non-intersecting paths; each path is its list of visited points.

    Steps are ``(1,-1)``, ``(1,1)`` and ``(2,0)`` in cell coordinates, i.e.
    ``(1,0)``, ``(0,1)`` and ``(1,1)`` in the rotated basis.
    """

    paths: tuple[tuple[Point, ...], ...]
    starts: tuple[Point, ...]
    ends: tuple[Point, ...]

    def __len__(self):
        return len(self.paths)

    @property
    def nontrivial(self) -> int:
        return sum(1 for p in self.paths if len(p) > 1)

    def disjoint(self) -> bool:
        seen = set()
        for p in self.paths:
            for q in p:
                if q in seen:
                    return False
                seen.add(q)
        return True

    def to_dict(self) -> dict:
        return {"paths": [[[float(x), float(y)] for x, y in p] for p in self.paths]}


def _step(region: AztecRegion, active: Cell, partner: Cell):
    x, y = active
    px, py = partner
    start = (Fraction(x), y + HALF)
    if (px, py) == (x + 1, y):
        return start, (Fraction(x + 2), y + HALF)
    if (px, py) == (x, y + 1):
        return start, (Fraction(x + 1), y + 1 + HALF)
    if (px, py) == (x, y - 1):
        return start, (Fraction(x + 1), y - HALF)
    return None


def encode_paths(tiling: Tiling) -> PathFamily:
    """The path family of a tiling, marked on the lattice of the endpoints.

    Each domino whose cell of the active color (white for plain and dented
    diamonds, black for augmented ones) is not its right half contributes one
    step starting at the midpoint of that cell's left edge.  Paths start at
    the region's LGV starts and must end at the matching LGV ends; a single
    point path is kept (the ``w`` path of the plain diamond).
    """
    region = tiling.region
    active_color = BLACK if region.augmented else WHITE
    steps = {}
    for a, b in tiling.dominoes():
        act, other = (a, b) if region.color(a) == active_color else (b, a)
        st = _step(region, act, other)
        if st:
            steps[st[0]] = st[1]
    ends_expected = lgv_endpoints(region)
    paths = []
    used = 0
    for s, t in zip(ends_expected.starts, ends_expected.ends):
        p = [s]
        while p[-1] in steps:
            p.append(steps[p[-1]])
            used += 1
            if len(p) > 4 * region.order + 4:
                raise InvariantViolation("path does not terminate")
        if p[-1] != t:
            raise InvariantViolation(f"path from {s} ends at {p[-1]}, expected {t}")
        paths.append(tuple(p))
    if used != len(steps):
        raise InvariantViolation(f"{len(steps) - used} marked steps are not on any path")
    fam = PathFamily(tuple(paths), ends_expected.starts, ends_expected.ends)
    if not fam.disjoint():
        raise InvariantViolation("encoded paths intersect")
    return fam


# ---------------------------------------------------------------- frozen regions


SECTOR_TYPES = {"N": "N", "S": "S", "E": "E", "W": "W"}


@dataclass
class FrozenStats:
    """Domino types and how well the four corners match their frozen type.

    Positions are measured in the frame rotated by 45 degrees where the
    diamond of order ``n`` is a square of side ``n`` centered at the origin
    and the arctic circle has radius ``n/2``.
    """

    radius: float
    types: dict  # cell -> type of the domino covering it
    sectors: dict  # corner -> (matching, total)

    @property
    def fractions(self) -> dict:
        return {k: (m / t if t else math.nan) for k, (m, t) in self.sectors.items()}

    @property
    def overall(self) -> float:
        m = sum(v[0] for v in self.sectors.values())
        t = sum(v[1] for v in self.sectors.values())
        return m / t if t else math.nan

    @property
    def minimum(self) -> float:
        return min(self.fractions.values())

    def to_dict(self, include_cells: bool = False) -> dict:
        out = {
            "radius": self.radius,
            "overall_fraction": self.overall,
            "sectors": {k: {"matching": m, "total": t, "fraction": (m / t if t else None)}
                        for k, (m, t) in self.sectors.items()},
            "type_counts": {k: sum(1 for v in self.types.values() if v == k) // 2
                            for k in DOMINO_TYPES},
        }
        if include_cells:
            out["cells"] = [[x, y, t] for (x, y), t in sorted(self.types.items())]
        return out


def rotated_position(n: int, a: Cell, b: Cell) -> tuple[float, float]:
    """Domino center in the rotated frame (``s`` to the NE, ``t`` to the NW)."""
    cx = (a[0] + b[0]) / 2 + 0.5
    cy = (a[1] + b[1]) / 2 + 0.5 - n
    return (cx + cy) / 2, (cy - cx) / 2


def corner_of(s: float, t: float) -> str:
    if s >= 0 and t >= 0:
        return "N"
    if s <= 0 and t <= 0:
        return "S"
    return "E" if s > 0 else "W"


def frozen_stats(tiling: Tiling, radius: float = 0.55) -> FrozenStats:
    """Per-cell domino types and corner-sector agreement outside ``radius * n``."""
    region = tiling.region
    n = region.order
    types = {}
    sectors = {k: [0, 0] for k in DOMINO_TYPES}
    for a, b in tiling.dominoes():
        kind = domino_type(region, a, b)
        types[a] = types[b] = kind
        s, t = rotated_position(n, a, b)
        if math.hypot(s, t) > radius * n:
            corner = corner_of(s, t)
            sectors[corner][1] += 1
            sectors[corner][0] += kind == SECTOR_TYPES[corner]
    return FrozenStats(radius, types, {k: tuple(v) for k, v in sectors.items()})
