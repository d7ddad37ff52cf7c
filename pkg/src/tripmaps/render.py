"""Subdivision figures: exact triangles per word and their SVG drawing."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .engine import build_trip_map, projected_vertices, word_triangle
from .errors import DepthLimitExceeded, DimensionMismatch

DEFAULT_MAX_DEPTH = 12
VIEWPORT = 1000


def max_depth() -> int:
    """Depth cap from TRIP_MAX_DEPTH, default 12."""
    raw = os.environ.get("TRIP_MAX_DEPTH")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_DEPTH
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_DEPTH


@dataclass(frozen=True)
class LabeledTriangle:
    word: tuple[int, ...]
    vertices: tuple[tuple[Fraction, Fraction], ...]

    @property
    def label(self) -> str:
        return "".join(map(str, self.word)) or "root"

    def area(self) -> Fraction:
        (x1, y1), (x2, y2), (x3, y3) = self.vertices
        return abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)) / 2


@dataclass(frozen=True)
class SubdivisionFigure:
    triple: str
    depth: int
    triangles: tuple[LabeledTriangle, ...]

    def total_area(self) -> Fraction:
        return sum((t.area() for t in self.triangles), Fraction(0))


DOMAIN_AREA = Fraction(1, 2)


def subdivision_figure(m, depth: int, cap: int | None = None) -> SubdivisionFigure:
    """Every triangle indexed by a word of length ``depth``, in lexicographic word order."""
    m = build_trip_map(m)
    if m.dim != 3:
        raise DimensionMismatch("figures are drawn for the triangle (matrix dimension 3) only")
    cap = max_depth() if cap is None else cap
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > cap:
        raise DepthLimitExceeded(f"depth {depth} exceeds the cap {cap} (TRIP_MAX_DEPTH)")
    tris = []
    for word in itertools.product((0, 1), repeat=depth):
        verts = tuple(tuple(p) for p in projected_vertices(word_triangle(m, word)))
        tris.append(LabeledTriangle(word, verts))
    return SubdivisionFigure(str(m.triple), depth, tuple(tris))


def fixed(q: Fraction, places: int) -> str:
    """Decimal string of q rounded half-up to ``places`` digits, trailing zeros dropped."""
    q = Fraction(q)
    scale = 10**places
    n = q * scale
    r = (abs(n.numerator) * 2 + n.denominator) // (2 * n.denominator)
    sign = "-" if n < 0 and r else ""
    whole, frac = divmod(r, scale)
    if places == 0:
        return f"{sign}{whole}"
    digits = str(frac).rjust(places, "0").rstrip("0")
    return f"{sign}{whole}.{digits}" if digits else f"{sign}{whole}"


def _screen(p, places: int) -> str:
    x, y = p
    return f"{fixed(x * VIEWPORT, places)},{fixed((1 - y) * VIEWPORT, places)}"


def to_svg(fig: SubdivisionFigure, precision: int = 9) -> str:
    """SVG of the figure; unit coordinates are rounded to 10^-precision before scaling.

    The triangle x in [0,1] maps onto a 1000 x 1000 viewport with y pointing up.
    """
    places = max(precision - 3, 0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEWPORT} {VIEWPORT}" '
        f'width="{VIEWPORT}" height="{VIEWPORT}" data-triple="{fig.triple}" data-depth="{fig.depth}">',
        '<g fill="none" stroke="black" stroke-width="1" stroke-linejoin="round">',
    ]
    for t in fig.triangles:
        pts = " ".join(_screen(p, places) for p in t.vertices)
        exact = ";".join(f"{x},{y}" for x, y in t.vertices)
        lines.append(f'<polygon points="{pts}" data-word="{t.label}" data-vertices="{exact}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
