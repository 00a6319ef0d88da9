"""Exact geometric predicates over rational coordinates.

Every predicate is a sign-of-determinant question computed with
`fractions.Fraction`; there is no floating point and no tolerance anywhere.
All functions are pure and safe to call concurrently.

Points are plain tuples of Fractions.  `point()` coerces ints, strings
("2", "1/3", "0.25") and Fractions into that representation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Point = tuple[Fraction, ...]
Sign = int  # -1, 0 or +1


def rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like "1/3" or "0.25" exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    if isinstance(value, float):
        raise InputError(
            f"float {value!r} rejected: pass an exact string or Fraction"
        )
    raise InputError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def point(*coords) -> Point:
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    return tuple(rational(c) for c in coords)


def sign(value) -> Sign:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


@dataclass(frozen=True)
class Hyperplane:
    """Oriented hyperplane {x : normal . x = offset}; normal must be nonzero."""

    normal: Point
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise InputError("hyperplane normal must be nonzero")

    def evaluate(self, p: Point) -> Fraction:
        if len(p) != len(self.normal):
            raise InputError(
                f"dimension mismatch: point has {len(p)} coords, "
                f"hyperplane normal has {len(self.normal)}"
            )
        return sum(a * x for a, x in zip(self.normal, p)) - self.offset

    def side(self, p: Point) -> Sign:
        return sign(self.evaluate(p))

    def flipped(self) -> "Hyperplane":
        return Hyperplane(tuple(-a for a in self.normal), -self.offset)


def hyperplane(normal, offset) -> Hyperplane:
    return Hyperplane(point(normal), rational(offset))


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with nonzero pivoting."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def orientation(vertices: Sequence[Point]) -> Sign:
    """Sign of the homogeneous determinant of d+1 points in dimension d.

    0 exactly when the points are affinely dependent.
    """
    verts = [point(v) for v in vertices]
    d = len(verts) - 1
    if d < 1:
        raise InputError("orientation needs at least 2 points")
    for v in verts:
        if len(v) != d:
            raise InputError(
                f"dimension mismatch: {len(verts)} points need dimension {d}, "
                f"got a point of dimension {len(v)}"
            )
    if d == 2:
        (ax, ay), (bx, by), (cx, cy) = verts
        return sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    rows = [
        [verts[i][j] - verts[0][j] for j in range(d)] for i in range(1, d + 1)
    ]
    return sign(_det(rows))


def orientation_value(vertices: Sequence[Point]) -> Fraction:
    """The homogeneous determinant itself (twice the signed simplex volume
    in the plane); linear in each vertex."""
    verts = [point(v) for v in vertices]
    d = len(verts) - 1
    rows = [
        [verts[i][j] - verts[0][j] for j in range(d)] for i in range(1, d + 1)
    ]
    return _det(rows)


def point_in_simplex_interior(p: Point, vertices: Sequence[Point]) -> bool:
    """Strict interior test: boundary points (and vertices) return False.

    True iff replacing any one vertex by p preserves the simplex
    orientation.  Requires a nondegenerate simplex.
    """
    p = point(p)
    verts = [point(v) for v in vertices]
    base = orientation(verts)
    if base == 0:
        raise InputError("degenerate simplex: vertices are affinely dependent")
    for i in range(len(verts)):
        replaced = verts[:i] + [p] + verts[i + 1 :]
        if orientation(replaced) != base:
            return False
    return True


def barycentric_coordinates(p: Point, vertices: Sequence[Point]) -> list[Fraction]:
    """Exact barycentric coordinates of p w.r.t. a nondegenerate simplex.

    Independent containment oracle: p is strictly interior iff every
    coordinate is strictly positive.
    """
    p = point(p)
    verts = [point(v) for v in vertices]
    total = orientation_value(verts)
    if total == 0:
        raise InputError("degenerate simplex: vertices are affinely dependent")
    coords = []
    for i in range(len(verts)):
        replaced = verts[:i] + [p] + verts[i + 1 :]
        coords.append(orientation_value(replaced) / total)
    return coords


def side_of_hyperplane(h: Hyperplane, p: Point) -> Sign:
    return h.side(point(p))


def general_position_check(points: Sequence[Point], d: int):
    """All (d+1)-tuples affinely independent.

    Returns None when fine, else the lexicographically first violating
    index tuple.  Fewer than d+1 points is vacuously fine.
    """
    pts = [point(p) for p in points]
    for p in pts:
        if len(p) != d:
            raise InputError(
                f"point of dimension {len(p)} in a dimension-{d} check"
            )
    for combo in itertools.combinations(range(len(pts)), d + 1):
        if orientation([pts[i] for i in combo]) == 0:
            return combo
    return None


def integer_scaled(points: Iterable[Point]) -> tuple[list[tuple[int, ...]], int]:
    """Scale rational points by the lcm of all denominators.

    Sign predicates are invariant under the uniform positive scaling, and
    pure-integer cross products are much faster in hot loops.
    """
    pts = [point(p) for p in points]
    scale = 1
    for p in pts:
        for c in p:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return [tuple(int(c * scale) for c in p) for p in pts], scale


def cross2i(ox: int, oy: int, ax: int, ay: int, bx: int, by: int) -> int:
    """Integer 2D orientation value of (o, a, b)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def convex_hull_2d(points: Sequence[Point]) -> list[Point]:
    """Exact planar convex hull (Andrew's monotone chain), CCW order.

    Collinear boundary points are dropped; degenerate inputs return the
    distinct extreme points (2 for a segment, 1 for a single point).
    """
    pts = sorted(set(point(p) for p in points))
    if len(pts) <= 2:
        return pts
    def build(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orientation([chain[-2], chain[-1], p]) <= 0:
                chain.pop()
            chain.append(p)
        return chain
    lower = build(pts)
    upper = build(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points equal after dedupe (cannot happen here)
        return pts[:1]
    return hull


def affine_image(p: Point, matrix: Sequence[Sequence], shift: Sequence) -> Point:
    """Apply x -> M x + t with exact rational entries."""
    p = point(p)
    mat = [[rational(e) for e in row] for row in matrix]
    t = point(shift)
    if len(mat) != len(p) or any(len(row) != len(p) for row in mat):
        raise InputError("affine map shape does not match point dimension")
    return tuple(
        sum(mat[i][j] * p[j] for j in range(len(p))) + t[i]
        for i in range(len(p))
    )
