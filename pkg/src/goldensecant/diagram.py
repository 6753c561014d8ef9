"""Minimal SVG rendering of a realized tangent-secant scene.

The drawing is assembled by hand as strings -- the element count is tiny
and a templating dependency would outweigh it.  Everything is derived from
the :class:`~goldensecant.geometry.Realization` alone (the radius is the
center-to-tangent-point distance), so the renderer needs no extra inputs
and the output is deterministic for a given scene.

Layout: the circle is drawn at a fixed 100-unit radius with a 20-unit
margin, and the y axis is flipped into screen orientation, so the center
(below the secant in scene coordinates) lands *below* the secant line on
screen as well, i.e. at a larger y attribute.
"""

from __future__ import annotations

import math

from .geometry import Realization, measure_angles

VIEW_RADIUS = 100.0
MARGIN = 20.0
CAPTION_BAND = 34.0


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(realization: Realization) -> str:
    """Render one scene as a standalone SVG document string."""
    p = realization.external_point
    t = realization.tangent_point
    x = realization.near_point
    y = realization.far_point
    w = realization.center
    radius = math.dist(w, t)
    scale = VIEW_RADIUS / radius

    xs = [p[0], t[0], x[0], y[0], w[0] - radius, w[0] + radius]
    ys = [p[1], t[1], x[1], y[1], w[1] - radius, w[1] + radius]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    width = 2.0 * MARGIN + (max_x - min_x) * scale
    height = 2.0 * MARGIN + CAPTION_BAND + (max_y - min_y) * scale

    def view(point: tuple[float, float]) -> tuple[float, float]:
        return (
            MARGIN + (point[0] - min_x) * scale,
            MARGIN + CAPTION_BAND + (max_y - point[1]) * scale,
        )

    angles = measure_angles(realization)
    ratio = math.dist(p, t) / math.dist(p, x)

    def line(a: tuple[float, float], b: tuple[float, float], stroke: str) -> str:
        (x1, y1), (x2, y2) = view(a), view(b)
        return (
            f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{stroke}" stroke-width="1.5" />'
        )

    def dot(point: tuple[float, float]) -> str:
        cx, cy = view(point)
        return f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.5" fill="#222" />'

    def label(point: tuple[float, float], text: str, dx: float, dy: float) -> str:
        cx, cy = view(point)
        return (
            f'  <text x="{_fmt(cx + dx)}" y="{_fmt(cy + dy)}" '
            f'font-family="sans-serif" font-size="13">{text}</text>'
        )

    center_view = view(w)
    caption_angles = (
        f"alpha={math.degrees(angles.alpha):.3f}deg  "
        f"beta={math.degrees(angles.beta):.3f}deg  "
        f"gamma={math.degrees(angles.gamma):.3f}deg"
    )
    caption_ratio = f"a/b={ratio:.3f}  a={math.dist(p, t):.3f}  b={math.dist(p, x):.3f}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'  <rect width="{width:.0f}" height="{height:.0f}" fill="white" />',
        f'  <text x="{_fmt(MARGIN)}" y="14" font-family="sans-serif" '
        f'font-size="12">{caption_angles}</text>',
        f'  <text x="{_fmt(MARGIN)}" y="28" font-family="sans-serif" '
        f'font-size="12">{caption_ratio}</text>',
        f'  <circle cx="{_fmt(center_view[0])}" cy="{_fmt(center_view[1])}" '
        f'r="{_fmt(VIEW_RADIUS)}" fill="none" stroke="#888" stroke-width="1.5" />',
        line(p, y, "#444"),
        line(p, t, "#0a7d4f"),
        line(t, x, "#c2611e"),
        line(t, y, "#c2611e"),
        dot(p),
        dot(x),
        dot(y),
        dot(t),
        dot(w),
        label(p, "p", -6.0, 16.0),
        label(x, "x", -4.0, 16.0),
        label(y, "y", 4.0, 16.0),
        label(t, "t", 4.0, -7.0),
        label(w, "w", 6.0, 12.0),
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
