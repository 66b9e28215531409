"""Deterministic SVG 1.1 rendering of a patch."""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .pattern import PatternPatch

FILLS = {"thick": "#e8a33d", "thin": "#3d7ae8"}


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(patch: PatternPatch, px_per_unit: float = 40.0, stroke: str = "#222222",
               fill_by_kind: bool = True, dots: bool = False) -> str:
    """Faces as polygons (one class per tile kind), then edges, then optional vertex dots."""
    half = (patch.radius + 1.0) * px_per_unit
    size = 2 * half

    def xy(i):
        x, y = patch.points[i].display
        return half + x * px_per_unit, half - y * px_per_unit

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(size)}" height="{_f(size)}" '
        f'viewBox="0 0 {_f(size)} {_f(size)}">',
    ]
    if fill_by_kind and patch.faces:
        out.append("<style>.thick{fill:%s}.thin{fill:%s}</style>" % (FILLS["thick"], FILLS["thin"]))
    if patch.faces:
        out.append('<g id="faces" stroke="none">')
        for f in patch.faces:
            pts = " ".join(f"{_f(a)},{_f(b)}" for a, b in map(xy, f.verts))
            cls = f' class="{f.kind}"' if fill_by_kind else ' fill="#cccccc"'
            out.append(f'<polygon{cls} points="{pts}"/>')
        out.append("</g>")
    if patch.edges:
        out.append(f'<g id="edges" stroke={quoteattr(stroke)} stroke-width="1">')
        for i, j in patch.edges:
            (x1, y1), (x2, y2) = xy(i), xy(j)
            out.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')
        out.append("</g>")
    if dots and patch.points:
        out.append(f'<g id="vertices" fill={quoteattr(stroke)}>')
        for i in range(len(patch.points)):
            x, y = xy(i)
            out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="1.5"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
