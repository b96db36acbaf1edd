"""Deterministic SVG rendering of a polygon with labeled center markers.

The viewBox is the bounding box of the polygon together with every marker
point, padded by 10% of its larger side. The y axis is mirrored by hand
(SVG y grows downward) and every coordinate is written with a fixed
``%.8g`` format, so identical inputs produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from .framework import BarycentricWeights, ProjectiveCoords
from .geometry import Point2, Polygon

_PALETTE = (
    "#d62728",
    "#1f77b4",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#e377c2",
)

_OUTLINE = "#1f2937"


@dataclass(frozen=True)
class CenterRecord:
    """One computed center: coordinates on success, a diagnostic on failure."""

    name: str
    projective: Optional[ProjectiveCoords] = None
    weights: Optional[BarycentricWeights] = None
    point: Optional[Point2] = None
    error: Optional[str] = None
    error_type: Optional[str] = None
    extra: tuple[tuple[str, object], ...] = field(default=())


def _fmt(x: float) -> str:
    out = f"{x:.8g}"
    return "0" if out == "-0" else out


def render_svg(p: Polygon, records: list[CenterRecord]) -> str:
    points = [v for v in p.vertices]
    marked = [r for r in records if r.point is not None]
    points.extend(r.point for r in marked)  # type: ignore[misc]

    xs = [q.x for q in points]
    ys = [q.y for q in points]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    side = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    margin = 0.10 * side

    # mirror y about the bbox midline so screen-up matches plane-up
    def place(q: Point2) -> tuple[float, float]:
        return q.x, (lo_y + hi_y) - q.y

    vx = lo_x - margin
    vy = lo_y - margin
    vw = (hi_x - lo_x) + 2 * margin
    vh = (hi_y - lo_y) + 2 * margin

    width = 640.0
    height = width * vh / vw

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}" '
        f'width="{_fmt(width)}" height="{_fmt(height)}">'
    ]

    steps = []
    for k, v in enumerate(p.vertices):
        x, y = place(v)
        steps.append(f"{'M' if k == 0 else 'L'} {_fmt(x)} {_fmt(y)}")
    steps.append("Z")
    stroke = 0.004 * side
    lines.append(
        f'<path d="{" ".join(steps)}" fill="none" '
        f'stroke="{_OUTLINE}" stroke-width="{_fmt(stroke)}"/>'
    )

    radius = 0.012 * side
    font = 0.045 * side
    for k, rec in enumerate(marked):
        assert rec.point is not None
        x, y = place(rec.point)
        color = _PALETTE[k % len(_PALETTE)]
        lines.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" '
            f'fill="{color}"/>'
        )
        lines.append(
            f'<text x="{_fmt(x + 1.8 * radius)}" y="{_fmt(y - 1.8 * radius)}" '
            f'font-family="sans-serif" font-size="{_fmt(font)}" '
            f'fill="{color}">{escape(rec.name)}</text>'
        )

    for rec in records:
        if rec.error is not None:
            # XML comments must not contain "--"
            note = f"{rec.name} failed: {rec.error_type}: {rec.error}"
            lines.append(f"<!-- {note.replace('--', '- -')} -->")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(p: Polygon, records: list[CenterRecord], path: str) -> None:
    text = render_svg(p, records)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
