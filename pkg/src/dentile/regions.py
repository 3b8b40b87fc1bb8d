"""Lattice regions: dented and augmented Aztec diamonds, dented hexagons.

Aztec cells are unit squares named by their lower-left corner ``(x, y)``.
Rows ``y = 0 .. 2n-1`` are stacked bottom to top and centered on the
vertical line ``x = 0``.  A cell is white when ``x + y`` is even, which makes
the squares along the northwestern side white.

Hexagon cells are unit triangles in skew coordinates with basis
``e1 = (1, 0)`` and ``e2 = (1/2, sqrt(3)/2)``.  ``("U", p, q)`` is the
up-pointing triangle with vertices ``(p,q), (p+1,q), (p,q+1)``;
``("D", p, q)`` is the down-pointing one with vertices
``(p+1,q), (p,q+1), (p+1,q+1)``.  Up triangles are white.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .errors import DomainError, UntileableRegion
from .path_numbers import delannoy

WHITE, BLACK = 0, 1


def _dent_tuple(dents: Iterable[int], lo: int, hi: int, what: str) -> tuple[int, ...]:
    out = tuple(sorted(int(d) for d in dents))
    if len(set(out)) != len(out):
        raise DomainError(f"{what}: repeated dent index in {out}")
    for d in out:
        if not lo <= d <= hi:
            raise DomainError(f"{what}: dent index {d} outside [{lo}, {hi}]")
    return out


# ---------------------------------------------------------------- Aztec


@dataclass(frozen=True)
class AztecRegion:
    order: int
    sw_dents: tuple[int, ...] = ()
    se_dents: tuple[int, ...] = ()
    augmented: bool = False

    kind = "aztec"

    @property
    def balanced(self) -> bool:
        return len(self.sw_dents) == len(self.se_dents)

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(_aztec_cells(self))

    def color(self, cell: tuple[int, int]) -> int:
        return WHITE if (cell[0] + cell[1]) % 2 == 0 else BLACK

    def require_tileable(self) -> None:
        if not self.balanced:
            raise UntileableRegion(
                f"unequal dent sets {self.sw_dents} / {self.se_dents}: "
                "white and black cell counts differ"
            )

    def to_dict(self) -> dict:
        return {
            "kind": "aztec-augmented" if self.augmented else "aztec",
            "n": self.order,
            "dents": {"sw": list(self.sw_dents), "se": list(self.se_dents)},
            "cells": [list(c) for c in sorted(self.cells, key=lambda c: (c[1], c[0]))],
        }


def sw_dent_cell(i: int) -> tuple[int, int]:
    return (-i, i - 1)


def se_dent_cell(j: int) -> tuple[int, int]:
    return (j - 1, j - 1)


def _aztec_cells(region: AztecRegion) -> set[tuple[int, int]]:
    n = region.order
    cells = set()
    for y in range(2 * n):
        half = y + 1 if y < n else 2 * n - y
        for x in range(-half, half):
            cells.add((x, y))
    if region.augmented:
        # one extra square glued outside each chosen boundary square
        for i in region.sw_dents:
            cells.add((-i - 1, i - 1))
        for j in region.se_dents:
            cells.add((j, j - 1))
    else:
        for i in region.sw_dents:
            cells.discard(sw_dent_cell(i))
        for j in region.se_dents:
            cells.discard(se_dent_cell(j))
    return cells


def build_aztec(n: int, sw_dents: Iterable[int] = (), se_dents: Iterable[int] = (),
                augmented: bool = False, *, strict: bool = True) -> AztecRegion:
    """Aztec diamond of order ``n`` with dents counted from bottom to top.

    With ``strict`` (the default) unequal dent sets raise
    :class:`UntileableRegion`; pass ``strict=False`` to build such a region
    for inspection only.
    """
    if n < 1:
        raise DomainError(f"Aztec order must be >= 1, got {n}")
    region = AztecRegion(
        order=n,
        sw_dents=_dent_tuple(sw_dents, 1, n, "sw_dents"),
        se_dents=_dent_tuple(se_dents, 1, n, "se_dents"),
        augmented=augmented,
    )
    if strict:
        region.require_tileable()
    return region


# ---------------------------------------------------------------- hexagon

Triangle = tuple[str, int, int]

HEX_SIDES = ("N", "NE", "SE", "S", "SW", "NW")


@dataclass(frozen=True)
class HexRegion:
    """Hexagon with sides ``a, b, c, a, b, c`` clockwise from the top.

    ``north_dents`` are counted right to left along the top side.  In the
    adjacent variant ``ne_dents`` are counted top to bottom along the
    northeastern side; in the opposite variant they sit on the bottom side,
    counted right to left like the top (see :func:`hex_dent_triangle`).
    """

    a: int
    b: int
    c: int
    north_dents: tuple[int, ...] = ()
    ne_dents: tuple[int, ...] = ()
    opposite_variant: bool = False

    kind = "hexagon"

    @property
    def second_side(self) -> str:
        return "S" if self.opposite_variant else "NE"

    @property
    def balanced(self) -> bool:
        return len(self.north_dents) == len(self.ne_dents)

    @cached_property
    def cells(self) -> frozenset[Triangle]:
        cells = set(hexagon_triangles(self.a, self.b, self.c))
        for i in self.north_dents:
            cells.discard(hex_dent_triangle(self.a, self.b, self.c, "N", i))
        for j in self.ne_dents:
            cells.discard(hex_dent_triangle(self.a, self.b, self.c, self.second_side, j))
        return frozenset(cells)

    def color(self, cell: Triangle) -> int:
        return WHITE if cell[0] == "U" else BLACK

    def require_tileable(self) -> None:
        if not self.balanced:
            raise UntileableRegion(
                f"unequal dent sets {self.north_dents} / {self.ne_dents}"
            )

    def to_dict(self) -> dict:
        return {
            "kind": "hexagon-opposite" if self.opposite_variant else "hexagon",
            "a": self.a, "b": self.b, "c": self.c,
            "dents": {"N": list(self.north_dents), self.second_side: list(self.ne_dents)},
            "cells": [list(t) for t in sorted(self.cells, key=lambda t: (t[2], t[1], t[0]))],
        }


def _inside(a: int, b: int, c: int, p: int, q: int) -> bool:
    return 0 <= q <= b + c and -b <= p <= a and 0 <= p + q <= a + c


def triangle_vertices(t: Triangle) -> tuple[tuple[int, int], ...]:
    kind, p, q = t
    if kind == "U":
        return ((p, q), (p + 1, q), (p, q + 1))
    return ((p + 1, q), (p, q + 1), (p + 1, q + 1))


def hexagon_triangles(a: int, b: int, c: int) -> list[Triangle]:
    out = []
    for q in range(b + c):
        for p in range(-b - 1, a + 1):
            for kind in ("U", "D"):
                t = (kind, p, q)
                if all(_inside(a, b, c, *v) for v in triangle_vertices(t)):
                    out.append(t)
    return out


def hex_side_length(a: int, b: int, c: int, side: str) -> int:
    return {"N": a, "NE": b, "SE": c, "S": a, "SW": b, "NW": c}[side]


def hex_dent_triangle(a: int, b: int, c: int, side: str, k: int) -> Triangle:
    """The ``k``-th boundary triangle along ``side`` (1-based).

    N and S are counted right to left, NE top to bottom.
    """
    if not 1 <= k <= hex_side_length(a, b, c, side):
        raise DomainError(f"dent {k} outside side {side}")
    if side == "N":
        return ("D", a - b - k, b + c - 1)
    if side == "NE":
        return ("U", a - b + k - 1, b + c - k)
    if side == "S":
        return ("U", a - k, 0)
    if side == "SW":
        return ("D", -k, k - 1)
    if side == "SE":
        return ("D", a - 1, c - k)
    if side == "NW":
        return ("U", -b, b + k - 1)
    raise DomainError(f"unknown hexagon side {side!r}")


def build_hexagon(a: int, b: int, c: int, north_dents: Iterable[int] = (),
                  ne_dents: Iterable[int] = (), opposite_variant: bool = False,
                  *, strict: bool = True) -> HexRegion:
    if min(a, b, c) < 0:
        raise DomainError(f"hexagon sides must be nonnegative, got {(a, b, c)}")
    second = "S" if opposite_variant else "NE"
    region = HexRegion(
        a, b, c,
        north_dents=_dent_tuple(north_dents, 1, a, "north_dents"),
        ne_dents=_dent_tuple(ne_dents, 1, hex_side_length(a, b, c, second), "ne_dents"),
        opposite_variant=opposite_variant,
    )
    if strict:
        region.require_tileable()
    return region


Region = Union[AztecRegion, HexRegion]


# ---------------------------------------------------------------- dual graph


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple = ()
    colors: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def _aztec_neighbors(cell):
    x, y = cell
    return ((x + 1, y), (x, y + 1))


def _hex_neighbors(t):
    # each up triangle touches at most three down triangles
    kind, p, q = t
    if kind == "U":
        return (("D", p, q), ("D", p - 1, q), ("D", p, q - 1))
    return ()


def dual_graph(region: Region) -> DualGraph:
    """Cell adjacency graph; every edge joins a white cell to a black one."""
    cells = region.cells
    if isinstance(region, AztecRegion):
        order = sorted(cells, key=lambda c: (c[1], c[0]))
        nbrs = _aztec_neighbors
    else:
        order = sorted(cells, key=lambda t: (t[2], t[1], t[0]))
        nbrs = _hex_neighbors
    index = {c: k for k, c in enumerate(order)}
    edges = []
    for c in order:
        for d in nbrs(c):
            if d in index:
                edges.append(tuple(sorted((index[c], index[d]))))
    edges.sort()
    return DualGraph(tuple(order), tuple(region.color(c) for c in order), tuple(edges))


# ---------------------------------------------------------------- LGV endpoints

Point = tuple[Fraction, Fraction]
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LgvEndpoints:
    """Start and end points of the path families encoding the tilings.

    ``geometry`` selects the path-count rule: Delannoy steps for Aztec
    regions, unit east / south-east steps for hexagons.
    """

    starts: tuple[Point, ...]
    ends: tuple[Point, ...]
    step_basis: tuple[tuple[int, int], tuple[int, int]]
    geometry: str = "aztec"
    labels: tuple[tuple[str, ...], tuple[str, ...]] = field(default=((), ()))

    def path_count(self, s: Point, t: Point) -> int:
        dx, dy = t[0] - s[0], t[1] - s[1]
        if self.geometry == "aztec":
            # rotated axes: SE step = (1,0), NE step = (0,1), flat = (1,1)
            k, l = (dx - dy) / 2, (dx + dy) / 2
            if k.denominator != 1 or l.denominator != 1 or k < 0 or l < 0:
                return 0
            return delannoy(int(k), int(l))
        # hexagon: steps (1,0) and (1,-1) in skew coordinates
        down = -dy
        if dx < 0 or down < 0 or down > dx:
            return 0
        return comb(int(dx), int(down))

    def matrix(self) -> list[list[int]]:
        return [[self.path_count(s, t) for t in self.ends] for s in self.starts]

    def to_dict(self) -> dict:
        def pt(p):
            return [float(p[0]), float(p[1])]
        return {
            "geometry": self.geometry,
            "starts": [pt(p) for p in self.starts],
            "ends": [pt(p) for p in self.ends],
            "step_basis": [list(v) for v in self.step_basis],
        }


def _pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def aztec_endpoints(region: AztecRegion) -> LgvEndpoints:
    n = region.order
    basis = ((1, -1), (1, 1))
    if region.augmented:
        # marks on the lower lattice: u_k = (-k, k - 1/2), v_k = (k, k - 1/2)
        keep_u = [k for k in range(n + 1) if k not in region.sw_dents]
        keep_v = [k for k in range(n + 1) if k not in region.se_dents]
        return LgvEndpoints(
            tuple(_pt(-k, k - HALF) for k in keep_u),
            tuple(_pt(k, k - HALF) for k in keep_v),
            basis,
            labels=(tuple(f"u{k}" for k in keep_u), tuple(f"v{k}" for k in keep_v)),
        )
    # marks on the upper lattice: u'_k = (-k, 2n - k + 1/2), same for v'_k,
    # and one extra start/end at the midpoint of each dent's inner edge
    starts = [_pt(-i + 1, i - HALF) for i in region.sw_dents]
    ends = [_pt(j - 1, j - HALF) for j in region.se_dents]
    s_lab = [f"s{i}" for i in region.sw_dents]
    e_lab = [f"t{j}" for j in region.se_dents]
    for k in range(n + 1):
        starts.append(_pt(-k, 2 * n - k + HALF))
        ends.append(_pt(k, 2 * n - k + HALF))
        s_lab.append(f"u{k}")
        e_lab.append(f"v{k}")
    return LgvEndpoints(tuple(starts), tuple(ends), basis, labels=(tuple(s_lab), tuple(e_lab)))


def hexagon_endpoints(region: HexRegion) -> LgvEndpoints:
    """Sources and sinks read off the region's vertical (``e2``) edges.

    Paths run left to right through lozenges that carry an ``e2`` edge on
    both sides.  An ``e2`` edge with an up triangle on its right and nothing
    on its left starts a path; one with a down triangle on its left and
    nothing on its right ends one.  An edge whose two triangles were both
    removed carries a path of length zero.  Points are the lower vertices of the
    edges, ordered top to bottom.
    """
    cells = region.cells
    starts, ends = [], []
    for kind, p, q in cells:
        if kind == "U" and ("D", p - 1, q) not in cells:
            starts.append((p, q))
        if kind == "D" and ("U", p + 1, q) not in cells:
            ends.append((p + 1, q))
    # two adjacent dents sharing an e2 edge leave a path of length zero there
    removed = set(hexagon_triangles(region.a, region.b, region.c)) - cells
    for kind, p, q in removed:
        if kind == "U" and ("D", p - 1, q) in removed:
            starts.append((p, q))
            ends.append((p, q))
    starts.sort(key=lambda v: (-(2 * v[1] + v[0]), v[0]))
    ends.sort(key=lambda v: (-(2 * v[1] + v[0]), v[0]))
    return LgvEndpoints(
        tuple(_pt(*v) for v in starts),
        tuple(_pt(*v) for v in ends),
        ((1, 0), (1, -1)),
        geometry="hexagon",
    )


def lgv_endpoints(region: Region) -> LgvEndpoints:
    if isinstance(region, AztecRegion):
        return aztec_endpoints(region)
    return hexagon_endpoints(region)


def region_json(region: Region) -> str:
    return json.dumps(region.to_dict(), sort_keys=True)
