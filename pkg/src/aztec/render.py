"""SVG and ASCII pictures of tilings, height functions and ice states."""

from __future__ import annotations

from .height import heights_from_tiling
from .ice import IceState
from .lattice import H_EAST, H_WEST, V_NORTH, V_SOUTH, Coloring, Tiling
from .shuffle import domino_parity

CELL = 20

FILLS = {
    ("H", "even"): "#d95f02",
    ("H", "odd"): "#fdb863",
    ("V", "even"): "#1b9e77",
    ("V", "odd"): "#a6dba0",
}


def render_svg(t: Tiling, heights: bool = False) -> str:
    """Dominoes as rectangles, filled by orientation and parity; y grows upwards."""
    n = t.order
    r = n + 1
    size = 2 * (r + 1) * CELL  # one spare cell of margin for height labels

    def px(x: int, y: int) -> tuple[int, int]:
        return (x + r + 1) * CELL, (r + 1 - y) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<style>rect{stroke:#222;stroke-width:1}text{font:9px sans-serif;text-anchor:middle}</style>",
    ]
    for d in t.dominoes:
        w, h = (2, 1) if d.orient == "H" else (1, 2)
        x0, y0 = px(d.a, d.b + h)
        cls = f"{d.orient.lower()}-{domino_parity(n, Coloring.EVEN, d)}"
        fill = FILLS[(d.orient, domino_parity(n, Coloring.EVEN, d))]
        out.append(
            f'<rect class="{cls}" x="{x0}" y="{y0}" width="{w * CELL}" height="{h * CELL}" fill="{fill}"/>'
        )
    if heights:
        for (x, y), v in heights_from_tiling(t).items():
            cx, cy = px(x, y)
            out.append(f'<text x="{cx}" y="{cy + 3}">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


_ASCII = {H_WEST: "[-", H_EAST: "-]", V_NORTH: "/\\", V_SOUTH: "\\/"}


def render_ascii(t: Tiling) -> str:
    """Two characters per cell, top row first."""
    n = t.order
    lines = []
    for b in range(n - 1, -n - 1, -1):
        row = "".join(_ASCII.get(t.code(a, b), "  ") for a in range(-n, n))
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


def render_ice_ascii(s: IceState) -> str:
    """Vertices as ``+``; arrows drawn on the edges between them."""
    n = s.size
    lines = []
    for i in range(n + 1):
        lines.append("  " + "   ".join("^" if s.north[i][j] else "v" for j in range(n)))
        if i < n:
            parts = []
            for c in range(n + 1):
                parts.append(">" if s.east[i][c] else "<")
                if c < n:
                    parts.append("+")
            lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def render_ice_svg(s: IceState) -> str:
    n = s.size
    g = 2 * CELL
    size = (n + 1) * g
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<defs><marker id="tip" markerWidth="6" markerHeight="6" refX="5" refY="3" orient="auto">'
        '<path d="M0,0 L6,3 L0,6 z"/></marker></defs>',
    ]

    def arrow(x1, y1, x2, y2):
        out.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#222" marker-end="url(#tip)"/>'
        )

    for i in range(n):
        cy = (i + 1) * g
        for c in range(n + 1):
            xl, xr = c * g + 4 + (g // 2 if c == 0 else 0), (c + 1) * g - 4 - (g // 2 if c == n else 0)
            if s.east[i][c]:
                arrow(xl, cy, xr, cy)
            else:
                arrow(xr, cy, xl, cy)
    for r in range(n + 1):
        for j in range(n):
            cx = (j + 1) * g
            yt, yb = r * g + 4 + (g // 2 if r == 0 else 0), (r + 1) * g - 4 - (g // 2 if r == n else 0)
            if s.north[r][j]:
                arrow(cx, yb, cx, yt)
            else:
                arrow(cx, yt, cx, yb)
    for i in range(n):
        for j in range(n):
            out.append(f'<circle cx="{(j + 1) * g}" cy="{(i + 1) * g}" r="3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
