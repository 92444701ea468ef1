"""Deterministic SVG drawings of frameworks projected to a coordinate plane."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .core import Framework

WIDTH = 480.0
RADIUS_FRACTION = 0.018


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(f: Framework, axes: tuple = (1, 2)) -> str:
    """SVG with bars as lines and joints as circles labeled by vertex id.

    ``axes`` are 1-based coordinate indices; the drawing shows the projection
    onto that plane with the y axis pointing up and a 10% margin.
    """
    a, b = axes
    if not (1 <= a <= f.dim and 1 <= b <= f.dim) or a == b:
        raise ValueError(f"axes must be two distinct indices in 1..{f.dim}, got {axes}")
    if f.dim == 1:
        raise ValueError("need at least two coordinates to draw")
    pts = {v: (float(p[a - 1]), -float(p[b - 1])) for v, p in f.config.points.items()}
    xs = [x for x, _ in pts.values()] or [0.0]
    ys = [y for _, y in pts.values()] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = 0.1 * span
    x0, y0 = min(xs) - margin, min(ys) - margin
    w = max(xs) - min(xs) + 2 * margin or 1.0
    h = max(ys) - min(ys) + 2 * margin or 1.0
    r = RADIUS_FRACTION * span
    height = WIDTH * h / w
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        f'<g stroke="black" stroke-width="{_fmt(r / 3)}">',
    ]
    for i, j in f.graph.edges:
        (x1, y1), (x2, y2) = pts[i], pts[j]
        out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    out.append(f'<g fill="white" stroke="black" stroke-width="{_fmt(r / 3)}">')
    for v, (x, y) in pts.items():
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(r)}"/>')
    out.append("</g>")
    out.append(f'<g font-family="sans-serif" font-size="{_fmt(3 * r)}" fill="black">')
    for v, (x, y) in pts.items():
        out.append(f'<text x="{_fmt(x + 1.5 * r)}" y="{_fmt(y - 1.5 * r)}">{escape(str(v))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
