"""Separated families, hyperplane transversals, ham-sandwich cuts,
and the trimming loop that makes {O} and the convex hulls of the color
subsets a separated family.

A family of convex sets is separated when, within every (d+1)-tuple,
each group of j <= d members can be strictly separated from the rest by
a hyperplane.  Strict separability is decided by an exact rational LP
(with an axis-aligned shortcut and a convex-hull reduction in front of
it, neither of which changes any answer); equivalently -- and this is
the cross-validation used in the tests -- a (d+1)-tuple is separated
exactly when no hyperplane meets all d+1 closed hulls.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InputError,
    TrimExhaustedError,
    UnsupportedDimensionError,
    ValidationError,
)
from .geometry import (
    Hyperplane,
    Point,
    Sign,
    convex_hull_2d,
    format_rational,
    orientation,
    point,
)
from .lp import OPTIMAL, solve_lp_max


@dataclass(frozen=True)
class SeparationWitness:
    """A (tuple, split) pair; `hyperplane` strictly separates the split
    group from the rest of the tuple, or is None when no such hyperplane
    exists (which is what makes the witness a failure report)."""

    tuple_indices: tuple[int, ...]
    split: tuple[int, ...]
    hyperplane: Hyperplane | None


def _axis_separator(a_pts, b_pts) -> Hyperplane | None:
    d = len(a_pts[0])
    for axis in range(d):
        a_lo = min(p[axis] for p in a_pts)
        a_hi = max(p[axis] for p in a_pts)
        b_lo = min(p[axis] for p in b_pts)
        b_hi = max(p[axis] for p in b_pts)
        normal = tuple(
            Fraction(1 if j == axis else 0) for j in range(d)
        )
        if a_hi < b_lo:
            return Hyperplane(normal, (a_hi + b_lo) / 2)
        if b_hi < a_lo:
            return Hyperplane(tuple(-v for v in normal), -(b_hi + a_lo) / 2)
    return None


def strictly_separating_hyperplane(
    a_pts: Sequence[Point], b_pts: Sequence[Point]
) -> Hyperplane | None:
    """Hyperplane with normal.a < offset < normal.b for all a, b.

    None exactly when the convex hulls intersect or touch.  Decided by
    maximizing the separation margin delta subject to a box
    normalization of the normal; delta > 0 iff strict separation exists.
    """
    a_pts = [point(p) for p in a_pts]
    b_pts = [point(p) for p in b_pts]
    if not a_pts or not b_pts:
        raise InputError("both point sets must be nonempty")
    d = len(a_pts[0])
    if any(len(p) != d for p in a_pts + b_pts):
        raise InputError("mixed dimensions in separation input")
    quick = _axis_separator(a_pts, b_pts)
    if quick is not None:
        return quick
    if d == 2:
        a_pts = convex_hull_2d(a_pts)
        b_pts = convex_hull_2d(b_pts)
    # Variables (w_1..w_d, c, delta); maximize delta.
    n_vars = d + 2
    a_ub: list[list[Fraction]] = []
    b_ub: list[Fraction] = []
    for p in a_pts:  # w.p - c + delta <= 0
        a_ub.append(list(p) + [Fraction(-1), Fraction(1)])
        b_ub.append(Fraction(0))
    for p in b_pts:  # -w.p + c + delta <= 0
        a_ub.append([-x for x in p] + [Fraction(1), Fraction(1)])
        b_ub.append(Fraction(0))
    max_abs = max(
        (abs(x) for p in a_pts + b_pts for x in p), default=Fraction(0)
    )
    bound_c = 1 + d * max_abs
    for j in range(d):  # |w_j| <= 1
        row = [Fraction(0)] * n_vars
        row[j] = Fraction(1)
        a_ub.append(row[:])
        b_ub.append(Fraction(1))
        row[j] = Fraction(-1)
        a_ub.append(row)
        b_ub.append(Fraction(1))
    row = [Fraction(0)] * n_vars
    row[d] = Fraction(1)
    a_ub.append(row[:])
    b_ub.append(bound_c)
    row[d] = Fraction(-1)
    a_ub.append(row)
    b_ub.append(bound_c)
    row = [Fraction(0)] * n_vars
    row[d + 1] = Fraction(1)
    a_ub.append(row)
    b_ub.append(Fraction(1))
    objective = [Fraction(0)] * (d + 1) + [Fraction(1)]
    result = solve_lp_max(objective, a_ub, b_ub)
    if result.status != OPTIMAL:
        raise AssertionError(f"separation LP returned {result.status}")
    if result.value <= 0:
        return None
    w = tuple(result.x[:d])
    c = result.x[d]
    return Hyperplane(w, c)


def _canonical_splits(tuple_indices: tuple[int, ...], d: int):
    """Unordered proper splits of a (d+1)-tuple: the group containing the
    first body, of size 1..d, in (size, lex) order."""
    first, rest = tuple_indices[0], tuple_indices[1:]
    for size in range(1, d + 1):
        for extra in itertools.combinations(rest, size - 1):
            yield (first,) + extra


def is_separated_family(
    bodies: Sequence[Sequence[Point]],
) -> SeparationWitness | None:
    """None when every (d+1)-tuple is separated along every split;
    otherwise the first failing (tuple, split) in enumeration order."""
    pts = [[point(p) for p in body] for body in bodies]
    if not pts or any(not body for body in pts):
        raise InputError("bodies must be nonempty point sets")
    d = len(pts[0][0])
    if len(pts) < d + 1:
        raise InputError(f"need at least d+1 = {d + 1} bodies, got {len(pts)}")
    for combo in itertools.combinations(range(len(pts)), d + 1):
        for group in _canonical_splits(combo, d):
            rest = tuple(i for i in combo if i not in group)
            g_pts = [p for i in group for p in pts[i]]
            h_pts = [p for i in rest for p in pts[i]]
            if strictly_separating_hyperplane(g_pts, h_pts) is None:
                return SeparationWitness(combo, group, None)
    return None


def _distinct(points):
    seen = []
    out = []
    for p in points:
        if p not in seen:
            seen.append(p)
            out.append(p)
    return out


def _line_meets_hull(h: Hyperplane, body: Sequence[Point]) -> bool:
    signs = {h.side(p) for p in body}
    return not (signs == {1} or signs == {-1})


def _primitive_fracs(a: Fraction, b: Fraction) -> tuple[int, int]:
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    ia, ib = int(a * den), int(b * den)
    g = math.gcd(abs(ia), abs(ib))
    if g:
        ia, ib = ia // g, ib // g
    if ia < 0 or (ia == 0 and ib < 0):
        ia, ib = -ia, -ib
    return ia, ib


def _line_through(p: Point, q: Point) -> Hyperplane:
    a = q[1] - p[1]
    b = p[0] - q[0]
    ia, ib = _primitive_fracs(a, b)
    normal = (Fraction(ia), Fraction(ib))
    return Hyperplane(normal, normal[0] * p[0] + normal[1] * p[1])


def _line_sort_key(h: Hyperplane):
    a, b = h.normal
    if a > 0:
        return (0, Fraction(b, a), h.offset)
    return (1, Fraction(0), h.offset)


def hyperplane_transversal_exists(
    bodies: Sequence[Sequence[Point]], mode: str = "exact"
) -> tuple[bool, Hyperplane | None]:
    """Does one hyperplane meet every closed convex hull?

    Exact in the plane: if a transversal exists, one exists through two
    points of the union (translate a transversal until it supports a
    hull at a vertex, then rotate about that vertex to a second
    contact), so sweeping all point-pair lines decides.  For d != 2 only
    a sampled diagnostic is offered: a True answer is certified by its
    witness, a False answer is inconclusive.
    """
    pts = [[point(p) for p in body] for body in bodies]
    if not pts or any(not body for body in pts):
        raise InputError("bodies must be nonempty point sets")
    d = len(pts[0][0])
    union = _distinct([p for body in pts for p in body])
    if d != 2:
        if mode != "sampled":
            raise UnsupportedDimensionError(
                "exact transversal decision requires dimension 2; "
                "pass mode='sampled' for the diagnostic"
            )
        for combo in itertools.combinations(union, d):
            h = _hyperplane_through(combo)
            if h is not None and all(_line_meets_hull(h, body) for body in pts):
                return True, h
        return False, None
    if len(union) == 1:
        p = union[0]
        return True, Hyperplane((Fraction(0), Fraction(1)), p[1])
    candidates = {}
    for p, q in itertools.combinations(union, 2):
        h = _line_through(p, q)
        candidates[(h.normal, h.offset)] = h
    for h in sorted(candidates.values(), key=_line_sort_key):
        if all(_line_meets_hull(h, body) for body in pts):
            return True, h
    return False, None


def _hyperplane_through(points_d: Sequence[Point]) -> Hyperplane | None:
    """Hyperplane through d points in dimension d (None if degenerate)."""
    pts = [point(p) for p in points_d]
    d = len(pts[0])
    from .geometry import orientation_value

    zero = tuple(Fraction(0) for _ in range(d))
    basis = [
        tuple(Fraction(1 if j == k else 0) for j in range(d)) for k in range(d)
    ]
    const = orientation_value(list(pts) + [zero])
    coeffs = [
        orientation_value(list(pts) + [basis[k]]) - const for k in range(d)
    ]
    if all(c == 0 for c in coeffs):
        return None
    return Hyperplane(tuple(coeffs), -const)


def satisfies_bisection_contract(
    h: Hyperplane, point_sets: Sequence[Sequence[Point]]
) -> bool:
    """Each open side contains at most floor(|S|/2) points of each set."""
    for pts in point_sets:
        above = sum(1 for p in pts if h.side(point(p)) > 0)
        below = sum(1 for p in pts if h.side(point(p)) < 0)
        if above > len(pts) // 2 or below > len(pts) // 2:
            return False
    return True


def ham_sandwich_cut(
    point_sets: Sequence[Sequence[Point]], anchor: Point | None = None
) -> Hyperplane:
    """A line bisecting the given planar sets as equally as possible.

    Contract: each open halfplane holds at most floor(|S_i|/2) points of
    each set (points on the line count for neither side).  Without an
    anchor up to two sets are bisected; with an anchor the line passes
    exactly through the anchor and bisects the single set.  The returned
    line is the first contract-satisfying candidate under a fixed
    angular ordering of the candidate lines, hence deterministic.
    """
    sets = [[point(p) for p in pts] for pts in point_sets]
    if not sets:
        raise InputError("need at least one point set")
    dims = {len(p) for pts in sets for p in pts}
    if dims and dims != {2}:
        raise UnsupportedDimensionError("ham-sandwich cut implemented for dimension 2")
    candidates: dict[tuple, Hyperplane] = {}

    def add(h: Hyperplane):
        candidates[(h.normal, h.offset)] = h

    if anchor is not None:
        anchor = point(anchor)
        if len(sets) > 1:
            raise InputError("anchored cut bisects at most one set")
        for p in _distinct([p for pts in sets for p in pts]):
            if p != anchor:
                add(_line_through(anchor, p))
        add(Hyperplane((Fraction(0), Fraction(1)), anchor[1]))
        add(Hyperplane((Fraction(1), Fraction(0)), anchor[0]))
    else:
        if len(sets) > 2:
            raise InputError("unanchored cut bisects at most two sets")
        union = _distinct([p for pts in sets for p in pts])
        for p, q in itertools.combinations(union, 2):
            add(_line_through(p, q))
        for p in union:
            add(Hyperplane((Fraction(0), Fraction(1)), p[1]))
            add(Hyperplane((Fraction(1), Fraction(0)), p[0]))
        if not union:
            add(Hyperplane((Fraction(0), Fraction(1)), Fraction(0)))
    for h in sorted(candidates.values(), key=_line_sort_key):
        if anchor is not None and h.side(anchor) != 0:
            continue
        if satisfies_bisection_contract(h, sets):
            return h
    raise AssertionError("no valid ham-sandwich candidate: contract violated")


def order_type(points: Sequence[Point]) -> tuple[Sign, ...]:
    """Orientations of all (d+1)-subsequences, in lexicographic index
    order; errors on any degenerate tuple."""
    pts = [point(p) for p in points]
    if not pts:
        raise InputError("order type of an empty sequence")
    d = len(pts[0])
    if len(pts) < d + 1:
        raise InputError(f"need at least {d + 1} points in dimension {d}")
    signs = []
    for combo in itertools.combinations(range(len(pts)), d + 1):
        s = orientation([pts[i] for i in combo])
        if s == 0:
            raise ValidationError(
                "degenerate tuple violates general position",
                witness={"indices": list(combo)},
            )
        signs.append(s)
    return tuple(signs)


# --- trimming loop -----------------------------------------------------------


@dataclass(frozen=True)
class TrimStep:
    tuple_indices: tuple[int, ...]  # body indices; body 0 is {O}
    split: tuple[int, ...]
    hyperplane: Hyperplane
    discarded: tuple[tuple[int, ...], ...]  # original indices, per set
    sizes_after: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "tuple": list(self.tuple_indices),
            "split": list(self.split),
            "hyperplane": {
                "normal": [format_rational(v) for v in self.hyperplane.normal],
                "offset": format_rational(self.hyperplane.offset),
            },
            "discarded": [list(idx) for idx in self.discarded],
            "sizes_after": list(self.sizes_after),
        }


@dataclass(frozen=True)
class TrimTrace:
    steps: tuple[TrimStep, ...]
    final_sizes: tuple[int, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def to_json_dict(self) -> dict:
        return {
            "steps": [s.to_json_dict() for s in self.steps],
            "final_sizes": list(self.final_sizes),
            "step_count": self.step_count,
        }


def _oriented_for_designated(h: Hyperplane, d_points: list[Point]) -> Hyperplane:
    """Flip the normal so at least half of the designated set's points lie
    strictly above (the designated set's group keeps the above side);
    ties keep the canonical orientation."""
    above = sum(1 for p in d_points if h.side(p) > 0)
    below = sum(1 for p in d_points if h.side(p) < 0)
    return h if above >= below else h.flipped()


def trim_to_separated(
    point_sets: Sequence[Sequence[Point]],
    o_point: Point,
    max_steps: int = 64,
) -> tuple[list[tuple[Point, ...]], TrimTrace]:
    """Discard points until {O} and the hulls of the sets are separated.

    Each step finds the first failing (tuple, split) of the d+2 bodies,
    cuts with a ham-sandwich line -- anchored at O when the tuple
    involves {O}, else bisecting the two non-designated sets -- orients
    the cut so the designated set keeps at least half of its points, and
    discards the split group's points above the line and the rest's
    points below.  O is on the anchored lines and is never discarded.

    Errors (with the partial trace attached) when a set would empty,
    when a step makes no progress, or after max_steps.
    """
    o_point = point(o_point)
    if len(o_point) != 2:
        raise UnsupportedDimensionError("trimming implemented for dimension 2")
    sets = [tuple(point(p) for p in pts) for pts in point_sets]
    if any(not pts for pts in sets):
        raise InputError("input sets must be nonempty")
    union = [p for pts in sets for p in pts]
    for u, v in itertools.combinations(union, 2):
        if orientation([o_point, u, v]) == 0:
            raise InputError(
                "O is collinear with two input points (not in general position)"
            )
    current: list[list[int]] = [list(range(len(pts))) for pts in sets]
    steps: list[TrimStep] = []

    def body_points(i: int) -> list[Point]:
        if i == 0:
            return [o_point]
        return [sets[i - 1][j] for j in current[i - 1]]

    def bodies() -> list[list[Point]]:
        return [body_points(i) for i in range(len(sets) + 1)]

    def violation_count() -> int:
        count = 0
        pts = bodies()
        for combo in itertools.combinations(range(len(pts)), 3):
            for group in _canonical_splits(combo, 2):
                rest = tuple(i for i in combo if i not in group)
                g_pts = [p for i in group for p in pts[i]]
                h_pts = [p for i in rest for p in pts[i]]
                if strictly_separating_hyperplane(g_pts, h_pts) is None:
                    count += 1
        return count

    def simulate(h: Hyperplane, group: tuple[int, ...], combo: tuple[int, ...]):
        """Per-set kept/discarded original indices under the cut."""
        kept, discarded = [], []
        for si in range(len(sets)):
            body = si + 1
            keep, drop = list(current[si]), []
            if body in combo:
                drop_sign = 1 if body in group else -1
                keep, drop = [], []
                for j in current[si]:
                    if h.side(sets[si][j]) == drop_sign:
                        drop.append(j)
                    else:
                        keep.append(j)
            kept.append(keep)
            discarded.append(drop)
        return kept, discarded

    for _ in range(max_steps):
        witness = is_separated_family(bodies())
        if witness is None:
            final_sizes = tuple(len(c) for c in current)
            trace = TrimTrace(tuple(steps), final_sizes)
            q_sets = [
                tuple(sets[i][j] for j in current[i]) for i in range(len(sets))
            ]
            return q_sets, trace
        combo, group = witness.tuple_indices, witness.split
        rest = tuple(i for i in combo if i not in group)
        # The designated set's group keeps the "above" side; the other
        # group of the split discards its points above the cut.
        if 0 in combo:
            real = [b for b in combo if b != 0]
            options = []
            for c_body in real:
                d_body = next(b for b in real if b != c_body)
                h = ham_sandwich_cut([body_points(c_body)], anchor=o_point)
                h = _oriented_for_designated(h, body_points(d_body))
                grp = group if d_body in rest else rest
                options.append((c_body, h, grp))
        else:
            d_body = max(combo)
            bis = [b for b in combo if b != d_body]
            h = ham_sandwich_cut([body_points(bis[0]), body_points(bis[1])])
            h = _oriented_for_designated(h, body_points(d_body))
            grp = group if d_body in rest else rest
            options = [(None, h, grp)]

        best = None
        any_progress = False
        for c_body, h, grp in options:
            kept, discarded = simulate(h, grp, combo)
            n_discarded = sum(len(dr) for dr in discarded)
            if n_discarded == 0:
                continue
            any_progress = True
            if any(not k for k in kept):
                continue
            if len(options) > 1:
                saved = [list(c) for c in current]
                for si in range(len(sets)):
                    current[si] = kept[si]
                viol = violation_count()
                for si in range(len(sets)):
                    current[si] = saved[si]
            else:
                viol = 0
            key = (viol, c_body if c_body is not None else 0)
            if best is None or key < best[0]:
                best = (key, h, grp, kept, discarded)
        if best is None:
            trace = TrimTrace(tuple(steps), tuple(len(c) for c in current))
            if any_progress:
                raise TrimExhaustedError(
                    "trim exhausted: every admissible cut empties a set",
                    trace=trace,
                )
            raise TrimExhaustedError(
                "trim stalled: no cut discards anything for the failing split",
                trace=trace,
            )
        _, h, grp, kept, discarded = best
        for si in range(len(sets)):
            current[si] = kept[si]
        steps.append(
            TrimStep(
                tuple_indices=combo,
                split=group,
                hyperplane=h,
                discarded=tuple(tuple(dr) for dr in discarded),
                sizes_after=tuple(len(c) for c in current),
            )
        )
    trace = TrimTrace(tuple(steps), tuple(len(c) for c in current))
    raise TrimExhaustedError(
        f"trim did not reach a separated family within {max_steps} steps",
        trace=trace,
    )
