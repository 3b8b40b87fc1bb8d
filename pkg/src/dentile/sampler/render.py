"""SVG pictures of tilings and their path families.

One unit square is 10px.  Dominoes are colored by type; the path overlay
draws each path as a polyline through its lattice points.  The generator
settings (seed, flips, algorithm) go into ``<metadata>`` so a picture can
be regenerated.
"""
from __future__ import annotations

import json
from xml.sax.saxutils import escape

from .tiling import PathFamily, Tiling, domino_type, encode_paths

UNIT = 10
COLORS = {"N": "#d1495b", "S": "#edae49", "E": "#00798c", "W": "#30638e"}
PATH_COLOR = "#111111"


def _frame(cells):
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    return min(xs), max(xs) + 1, min(ys), max(ys) + 1


def render_svg(tiling: Tiling | None = None, paths: PathFamily | bool | None = None,
               *, cells=None, metadata: dict | None = None) -> str:
    """SVG text for a tiling, a path family, or both.

    ``paths=True`` overlays the tiling's own path encoding.  Rendering a
    path family alone needs ``cells`` (the region) for the frame.
    """
    if tiling is None and not isinstance(paths, PathFamily):
        raise ValueError("nothing to draw")
    if tiling is not None:
        cells = tiling.cells
        if paths is True:
            paths = encode_paths(tiling)
    if cells is None:
        raise ValueError("a path family needs the region cells for its frame")
    x0, x1, y0, y1 = _frame(cells)
    width, height = (x1 - x0) * UNIT, (y1 - y0) * UNIT

    def px(x):
        return (float(x) - x0) * UNIT

    def py(y):
        return (y1 - float(y)) * UNIT

    meta = dict(metadata or {})
    if tiling is not None:
        meta.setdefault("region", {k: v for k, v in tiling.region.to_dict().items() if k != "cells"})
        meta.update({k: v for k, v in tiling.provenance.items() if k not in meta})
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<metadata>{escape(json.dumps(meta, sort_keys=True))}</metadata>",
    ]
    if tiling is not None:
        out.append('<g stroke="#000" stroke-width="0.6">')
        for a, b in tiling.dominoes():
            lx, ly = min(a[0], b[0]), max(a[1], b[1]) + 1
            w = (abs(a[0] - b[0]) + 1) * UNIT
            h = (abs(a[1] - b[1]) + 1) * UNIT
            kind = domino_type(tiling.region, a, b)
            out.append(f'<rect x="{px(lx):g}" y="{py(ly):g}" width="{w}" height="{h}" '
                       f'fill="{COLORS[kind]}" class="{kind}"/>')
        out.append("</g>")
    else:
        out.append('<g fill="#eeeeee" stroke="#cccccc" stroke-width="0.4">')
        for x, y in sorted(cells):
            out.append(f'<rect x="{px(x):g}" y="{py(y + 1):g}" width="{UNIT}" height="{UNIT}"/>')
        out.append("</g>")
    if isinstance(paths, PathFamily):
        out.append(f'<g fill="none" stroke="{PATH_COLOR}" stroke-width="1.5">')
        for path in paths.paths:
            if len(path) == 1:
                x, y = path[0]
                out.append(f'<circle cx="{px(x):g}" cy="{py(y):g}" r="1.5" fill="{PATH_COLOR}"/>')
                continue
            pts = " ".join(f"{px(x):g},{py(y):g}" for x, y in path)
            out.append(f'<polyline points="{pts}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
