"""Deterministic SVG rendering of the gap lattice.

The drawing mirrors the grid diagrams used throughout: one unit cell per
gap, the diagonal from (0, alpha) to (beta, 0), the gap value at the bottom
of each cell and its Wilf number at the top, and toggleable shaded layers
for the triangles, the doubling rectangle, the symmetric sets and the
fundamental gaps.  Output bytes depend only on the inputs: integer
coordinates, fixed ordering, no timestamps.
"""

from __future__ import annotations

from .fundamental import fundamental_gaps
from .semigroup import TwoGen
from .symmetry import (
    rectangle_cells,
    self_symmetric_gaps,
    supersymmetric_gaps,
    triangle_r,
    triangle_u,
)
from .wilf import wilf_gap_formula

LAYERS = ("grid", "diagonal", "values", "wilf", "triangles", "rectangle", "sg", "ssg", "fg")

DEFAULT_LAYERS = ("grid", "diagonal", "values", "wilf", "sg", "ssg", "fg", "rectangle")

_FILL = {
    "triangles": "#d0e8ff",
    "sg": "#f2c28c",
    "ssg": "#caa6d8",
    "fg": "#b8d8b8",
}

CELL = 40


def _cell_rects(T: TwoGen, cells, color, opacity):
    out = []
    for a, b in sorted(cells, key=lambda p: (-p[1], p[0])):
        x = (a - 1) * CELL
        y = (T.alpha - b) * CELL
        out.append(
            f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
            f'fill="{color}" fill-opacity="{opacity}"/>'
        )
    return out


def render_svg(T: TwoGen, layers=DEFAULT_LAYERS) -> str:
    layers = set(layers)
    width = T.beta * CELL
    height = T.alpha * CELL
    el = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if "triangles" in layers:
        el += _cell_rects(T, triangle_u(T), _FILL["triangles"], "60%")
        el += _cell_rects(T, triangle_r(T), _FILL["triangles"], "60%")
    if "fg" in layers:
        cells = {(e.a, e.b) for g in fundamental_gaps(T.semigroup()).gaps for e in [T.gap_to_lattice(g)]}
        el += _cell_rects(T, cells, _FILL["fg"], "55%")
    if "sg" in layers:
        _, sg = supersymmetric_gaps(T)
        el += _cell_rects(T, sg, _FILL["sg"], "70%")
    if "ssg" in layers:
        el += _cell_rects(T, self_symmetric_gaps(T), _FILL["ssg"], "70%")
    if "grid" in layers:
        for i in range(T.beta + 1):
            el.append(f'<line x1="{i * CELL}" y1="0" x2="{i * CELL}" y2="{height}" stroke="#999" stroke-dasharray="3,3"/>')
        for j in range(T.alpha + 1):
            el.append(f'<line x1="0" y1="{j * CELL}" x2="{width}" y2="{j * CELL}" stroke="#999" stroke-dasharray="3,3"/>')
    if "rectangle" in layers:
        rect = rectangle_cells(T)
        if rect:
            w = (T.beta // 2) * CELL
            y = (T.alpha - T.alpha // 2) * CELL
            el.append(
                f'<rect x="0" y="{y}" width="{w}" height="{height - y}" '
                f'fill="none" stroke="#cc0000" stroke-width="3"/>'
            )
    if "diagonal" in layers:
        el.append(f'<line x1="0" y1="0" x2="{width}" y2="{height}" stroke="black" stroke-width="2"/>')
    if "values" in layers or "wilf" in layers:
        for e in T.lattice_gaps():
            x = (e.a - 1) * CELL
            y = (T.alpha - e.b) * CELL
            if "values" in layers:
                el.append(
                    f'<text x="{x + 3}" y="{y + CELL - 4}" font-size="12" '
                    f'font-family="monospace">{e.value}</text>'
                )
            if "wilf" in layers:
                w = wilf_gap_formula(T, e.a, e.b).w
                el.append(
                    f'<text x="{x + CELL - 3}" y="{y + 12}" font-size="10" '
                    f'font-family="monospace" text-anchor="end">{w}</text>'
                )
    el.append("</svg>")
    return "\n".join(el) + "\n"
