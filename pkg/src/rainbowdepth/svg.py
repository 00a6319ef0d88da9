"""Deterministic SVG rendering of planar configurations and certificates.

Exact rationals are converted to decimals (9 significant digits) only at
the final formatting step; everything upstream of the string assembly is
exact, so identical inputs produce byte-identical documents.
"""

from __future__ import annotations

from fractions import Fraction

from .config import ColoredConfiguration
from .errors import UnsupportedDimensionError
from .geometry import Point, convex_hull_2d
from .pipeline import ResultBundle

VIEW = 840
MARGIN = 40
PALETTE = ("#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(value: Fraction) -> str:
    return format(float(value), ".9g")


class _Frame:
    def __init__(self, points: list[Point]):
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0, Fraction(1))
        self.scale = Fraction(VIEW - 2 * MARGIN) / span

    def map(self, p: Point) -> tuple[str, str]:
        x = MARGIN + (p[0] - self.x0) * self.scale
        y = VIEW - MARGIN - (p[1] - self.y0) * self.scale  # y grows upward
        return _fmt(x), _fmt(y)


def render_svg(cfg: ColoredConfiguration, bundle: ResultBundle) -> str:
    if cfg.dimension != 2:
        raise UnsupportedDimensionError("SVG rendering requires dimension 2")
    all_pts = cfg.all_points() + [bundle.o_point]
    frame = _Frame(all_pts)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" '
        f'height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="white"/>',
    ]
    q_membership = [set(q) for q in bundle.q_sets]

    # Trim cut lines, dashed, clipped to the data bounding box.
    lo_x = min(p[0] for p in all_pts)
    hi_x = max(p[0] for p in all_pts)
    lo_y = min(p[1] for p in all_pts)
    hi_y = max(p[1] for p in all_pts)
    for step in bundle.trace.steps:
        h = step.hyperplane
        a, b = h.normal
        c = h.offset
        ends = []
        candidates = []
        if b != 0:
            for x in (lo_x, hi_x):
                candidates.append((x, (c - a * x) / b))
        if a != 0:
            for y in (lo_y, hi_y):
                candidates.append(((c - b * y) / a, y))
        for x, y in candidates:
            if lo_x <= x <= hi_x and lo_y <= y <= hi_y and (x, y) not in ends:
                ends.append((x, y))
        if len(ends) >= 2:
            (x1, y1), (x2, y2) = frame.map(ends[0]), frame.map(ends[1])
            parts.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                'stroke="#999999" stroke-width="1" stroke-dasharray="6,4"/>'
            )

    # Hull outlines of the trimmed subsets.
    for i, q in enumerate(bundle.q_sets):
        color = PALETTE[i % len(PALETTE)]
        hull = convex_hull_2d(q)
        if len(hull) >= 2:
            coords = " ".join(",".join(frame.map(p)) for p in hull)
            parts.append(
                f'<polygon points="{coords}" fill="none" stroke="{color}" '
                'stroke-width="1.5" stroke-opacity="0.6"/>'
            )

    for i, cls in enumerate(cfg.colors):
        color = PALETTE[i % len(PALETTE)]
        for p in cls:
            x, y = frame.map(p)
            if p in q_membership[i]:
                parts.append(
                    f'<circle cx="{x}" cy="{y}" r="7" fill="{color}" '
                    'stroke="black" stroke-width="1.5"/>'
                )
            else:
                parts.append(
                    f'<circle cx="{x}" cy="{y}" r="4" fill="{color}" '
                    'fill-opacity="0.45"/>'
                )

    ox, oy = frame.map(bundle.o_point)
    parts.append(
        f'<g stroke="black" stroke-width="2"><circle cx="{ox}" cy="{oy}" '
        'r="9" fill="none"/><path d="M -7 0 L 7 0 M 0 -7 L 0 7" '
        f'transform="translate({ox},{oy})"/></g>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
