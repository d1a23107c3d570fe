"""TikZ and static SVG export of two-dimensional frameworks."""

from __future__ import annotations

from .errors import UnsupportedDimensionError
from .frameworks import Framework
from .motion import SvgStyle, _fmt, _layout

TIKZ_STYLES = (
    "gvertex/.style={fill=black,draw=white,circle,inner sep=0pt,minimum size=4pt},"
    "edge/.style={line width=1.5pt,black!60!white}"
)


def _tikz_number(value) -> str:
    x = float(value)
    text = f"{x:.6f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"


def to_tikz(framework: Framework) -> str:
    """TikZ picture with one node per vertex and one draw statement per edge."""
    if framework.dim != 2:
        raise UnsupportedDimensionError("TikZ export needs a 2-dimensional framework")
    lines = [f"\\begin{{tikzpicture}}[{TIKZ_STYLES}]"]
    for v in framework.graph.vertices:
        x, y = framework.point(v)
        lines.append(
            f"  \\node[gvertex] ({v}) at ({_tikz_number(x)}, {_tikz_number(y)}) {{}};"
        )
    for u, v in framework.graph.sorted_edges:
        lines.append(f"  \\draw[edge] ({u}) to ({v});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


def framework_svg(framework: Framework, style: SvgStyle | None = None) -> str:
    """Static SVG drawing of a framework in dimension 1 or 2."""
    style = style or SvgStyle()
    if framework.dim > 2:
        raise UnsupportedDimensionError("SVG export supports dimensions 1 and 2 only")
    sample = {v: framework.point(v) for v in framework.graph.vertices}
    lo_x, hi_x, lo_y, hi_y = _layout([sample], framework.dim)

    def place(coords):
        x = float(coords[0])
        y = float(coords[1]) if framework.dim == 2 else 0.0
        return x, lo_y + hi_y - y

    size = max(hi_x - lo_x, hi_y - lo_y)
    radius = 0.015 * size
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="{_fmt(lo_x)} {_fmt(lo_y)} {_fmt(hi_x - lo_x)} {_fmt(hi_y - lo_y)}">',
    ]
    for u, v in framework.graph.sorted_edges:
        (x1, y1), (x2, y2) = place(sample[u]), place(sample[v])
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#555555" stroke-width="{_fmt(0.25 * radius)}"/>'
        )
    for v in framework.graph.vertices:
        x, y = place(sample[v])
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" fill="#1f4e8c"/>')
        if style.show_vertex_labels:
            parts.append(
                f'<text x="{_fmt(x + 1.2 * radius)}" y="{_fmt(y - 1.2 * radius)}" '
                f'font-size="{_fmt(2.5 * radius)}">{v}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
