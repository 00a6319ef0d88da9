"""(d+1)-partite hypergraph machinery.

Edges take exactly one vertex per part.  This module provides exact edge
counting, the averaging identity over all equal-size sub-tuples, and the
dense-subtuple extraction whose output is guaranteed to keep at least one
edge inside every pair of large enough subsets (the "no empty corner"
property, verified here by brute force).

Density functionals e / s^(d+1-eps^(2d)) are never evaluated in floating
point: comparisons cross-power to integers, with exact interval bounds
taking over when the exponent denominator makes literal powering
infeasible.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BudgetExceededError,
    ExactComparisonError,
    InputError,
    ParseError,
)

Subsets = tuple[tuple[int, ...], ...]

DEFAULT_GATE = 10**7
_CROSS_POWER_LIMIT = 4096  # largest exponent denominator powered literally


@dataclass(frozen=True)
class PartiteHypergraph:
    part_sizes: tuple[int, ...]
    edges: frozenset[tuple[int, ...]]

    @property
    def num_parts(self) -> int:
        return len(self.part_sizes)

    @property
    def d(self) -> int:
        return len(self.part_sizes) - 1

    def full_subsets(self) -> Subsets:
        return tuple(tuple(range(s)) for s in self.part_sizes)


def partite_hypergraph(part_sizes: Sequence[int], edges: Iterable[Sequence[int]]) -> PartiteHypergraph:
    sizes = tuple(int(s) for s in part_sizes)
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise InputError("need at least two parts, each nonempty")
    edge_set = set()
    for e in edges:
        e = tuple(int(i) for i in e)
        if len(e) != len(sizes):
            raise InputError(f"edge {e} has arity {len(e)}, expected {len(sizes)}")
        if any(not 0 <= e[i] < sizes[i] for i in range(len(sizes))):
            raise InputError(f"edge {e} out of range for part sizes {sizes}")
        edge_set.add(e)
    return PartiteHypergraph(sizes, frozenset(edge_set))


def _normalize_subsets(h: PartiteHypergraph, subsets) -> Subsets:
    if len(subsets) != h.num_parts:
        raise InputError(
            f"expected {h.num_parts} subsets, got {len(subsets)}"
        )
    out = []
    for i, sub in enumerate(subsets):
        idx = tuple(sorted(set(int(v) for v in sub)))
        if any(not 0 <= v < h.part_sizes[i] for v in idx):
            raise InputError(f"subset {i} out of range: {idx}")
        out.append(idx)
    return tuple(out)


def edge_count(h: PartiteHypergraph, subsets) -> int:
    subsets = _normalize_subsets(h, subsets)
    masks = [frozenset(s) for s in subsets]
    return sum(
        1
        for e in h.edges
        if all(e[i] in masks[i] for i in range(h.num_parts))
    )


def averaging_identity_check(
    h: PartiteHypergraph, subsets, t: Sequence[int], gate: int = DEFAULT_GATE
) -> bool:
    """Both sides of the subset-averaging identity, by full enumeration.

    e(S)/prod|S_i|  ==  [sum over all t_i-subsets T_i of e(T)/prod t_i]
                        / prod C(|S_i|, t_i)

    Exact rational equality; always true, exposed as a test oracle.
    """
    subsets = _normalize_subsets(h, subsets)
    t = [int(v) for v in t]
    if len(t) != h.num_parts:
        raise InputError("one t_i per part required")
    for ti, si in zip(t, subsets):
        if not 1 <= ti <= len(si):
            raise InputError(f"t={t} infeasible for subset sizes {[len(s) for s in subsets]}")
    n_terms = math.prod(math.comb(len(s), ti) for s, ti in zip(subsets, t))
    if n_terms > gate:
        raise BudgetExceededError(
            f"{n_terms} subset combinations exceed the gate {gate}"
        )
    lhs = Fraction(edge_count(h, subsets), math.prod(len(s) for s in subsets))
    # Full enumeration of all T combinations, organized part by part so
    # each level filters the surviving edge list once per subset.
    base_edges = [e for e in sorted(h.edges) if all(
        e[i] in set(subsets[i]) for i in range(h.num_parts)
    )]

    def accumulate(level: int, edges: list[tuple[int, ...]]) -> int:
        if level == h.num_parts:
            return len(edges)
        total = 0
        for combo in itertools.combinations(subsets[level], t[level]):
            chosen = set(combo)
            total += accumulate(
                level + 1, [e for e in edges if e[level] in chosen]
            )
        return total

    numerator = accumulate(0, base_edges)
    rhs = Fraction(numerator, math.prod(t)) / n_terms
    return lhs == rhs


@dataclass(frozen=True)
class DensityValue:
    """e / s^exponent packaged for exact comparison.

    The exponent is d+1 - eps^(2d) for eps in (0, 1/2), so it lies
    strictly between d and d+1.  Comparisons cross-power both sides to
    integers; when the exponent denominator is too large to power
    literally, exact rational bounds on r^delta (delta = the fractional
    deficit) decide instead.
    """

    edge_count: int
    size: int
    exponent: Fraction

    def __post_init__(self):
        if self.edge_count < 0 or self.size < 1:
            raise InputError("need edge_count >= 0 and size >= 1")
        if self.exponent <= 0:
            raise InputError("exponent must be positive")

    def _compare(self, other: "DensityValue") -> int:
        if not isinstance(other, DensityValue):
            raise TypeError("can only compare DensityValue with DensityValue")
        if self.exponent != other.exponent:
            raise InputError("cannot compare densities with different exponents")
        e1, s1 = self.edge_count, self.size
        e2, s2 = other.edge_count, other.size
        if e1 == 0 or e2 == 0:
            return (e1 > 0) - (e2 > 0)
        if s1 == s2:
            return (e1 > e2) - (e1 < e2)
        # Write the functional as (e/s^A) * s^delta with A = ceil(exponent)
        # and delta = A - exponent in (0, 1).  When the main terms e/s^A
        # and the sizes order the same way, the product does too; only the
        # mixed case needs the fractional power.
        a_int = math.ceil(self.exponent)
        x = e1 * s2**a_int
        y = e2 * s1**a_int
        if x == y:
            return (s1 > s2) - (s1 < s2)
        if x > y and s1 > s2:
            return 1
        if x < y and s1 < s2:
            return -1
        q = self.exponent.denominator
        p = self.exponent.numerator
        if q <= _CROSS_POWER_LIMIT:
            left = e1**q * s2**p
            right = e2**q * s1**p
            return (left > right) - (left < right)
        delta = a_int - self.exponent
        # Normalize so that the larger size sits on the right.
        flip = 1
        if s1 > s2:
            x, y, s1, s2 = y, x, s2, s1
            flip = -1
        r = Fraction(s2, s1)  # > 1
        ratio = Fraction(x, y)
        # 1 + delta(r-1)/r  <=  r^delta  <=  1 + delta(r-1)
        if ratio > 1 + delta * (r - 1):
            return flip
        if ratio < 1 + delta * (r - 1) / r:
            return -flip
        raise ExactComparisonError(
            f"comparison of {self} and {other} not decidable within bounds; "
            f"exponent denominator {q} is too large to cross-power"
        )

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0


def density_exponent(d: int, epsilon: Fraction) -> Fraction:
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < Fraction(1, 2):
        raise InputError("epsilon must lie in (0, 1/2)")
    return Fraction(d + 1) - epsilon ** (2 * d)


def density_value(h: PartiteHypergraph, subsets, epsilon) -> DensityValue:
    subsets = _normalize_subsets(h, subsets)
    sizes = {len(s) for s in subsets}
    if len(sizes) != 1:
        raise InputError(f"subsets must have equal size, got {[len(s) for s in subsets]}")
    s = sizes.pop()
    if s == 0:
        raise InputError("subsets must be nonempty")
    return DensityValue(
        edge_count(h, subsets), s, density_exponent(h.d, Fraction(epsilon))
    )


def _require_equal_parts(h: PartiteHypergraph) -> int:
    if len(set(h.part_sizes)) != 1:
        raise InputError(
            f"extraction requires equal part sizes, got {h.part_sizes}"
        )
    return h.part_sizes[0]


def _edge_bits(h: PartiteHypergraph) -> list[tuple[int, ...]]:
    return sorted(h.edges)


def _count_in_masks(edges: list[tuple[int, ...]], masks: list[int]) -> int:
    count = 0
    for e in edges:
        for i, v in enumerate(e):
            if not (masks[i] >> v) & 1:
                break
        else:
            count += 1
    return count


def _mask_of(sub: tuple[int, ...]) -> int:
    m = 0
    for v in sub:
        m |= 1 << v
    return m


def extract_dense_exact(
    h: PartiteHypergraph,
    epsilon,
    gate: int = DEFAULT_GATE,
    top: int = 1,
) -> Subsets | list[Subsets]:
    """Equal-size subset tuple maximizing e / s^(d+1-eps^(2d)), by full
    enumeration over every size s (up to the smallest part) and every
    tuple of s-subsets.

    Ties break to the lexicographically smallest tuple.  With `top` > 1,
    returns the best `top` tuples in tie-order (used for pipeline
    retries).
    """
    s_max = min(h.part_sizes)
    total = sum(
        math.prod(math.comb(n_i, s) for n_i in h.part_sizes)
        for s in range(1, s_max + 1)
    )
    if total > gate:
        raise BudgetExceededError(
            f"{total} candidate tuples exceed the gate {gate}; "
            "use extract_dense_local instead"
        )
    exponent = density_exponent(h.d, Fraction(epsilon))
    edges = _edge_bits(h)
    ranked: list[tuple[DensityValue, Subsets]] = []
    for s in range(1, s_max + 1):
        per_part = [
            [(c, _mask_of(c)) for c in itertools.combinations(range(n_i), s)]
            for n_i in h.part_sizes
        ]
        for choice in itertools.product(*per_part):
            tup = tuple(c for c, _ in choice)
            e = _count_in_masks(edges, [m for _, m in choice])
            value = DensityValue(e, s, exponent)
            _rank_insert(ranked, value, tup, top)
    if top == 1:
        return ranked[0][1]
    return [tup for _, tup in ranked]


def _rank_insert(
    ranked: list[tuple[DensityValue, Subsets]],
    value: DensityValue,
    tup: Subsets,
    top: int,
) -> None:
    if len(ranked) == top:
        last_value, last_tup = ranked[-1]
        cmp = value._compare(last_value)
        if cmp < 0 or (cmp == 0 and tup > last_tup):
            return
    pos = 0
    for pos in range(len(ranked) + 1):
        if pos == len(ranked):
            break
        held_value, held_tup = ranked[pos]
        cmp = value._compare(held_value)
        if cmp > 0 or (cmp == 0 and tup < held_tup):
            break
    ranked.insert(pos, (value, tup))
    del ranked[top:]


def extract_dense_local(h: PartiteHypergraph, epsilon, seed: int = 0) -> Subsets:
    """Hill-climbing surrogate for the exact extraction.

    Starts from the full parts; moves are (a) removing a minimum-degree
    vertex from every part simultaneously (on degree ties, the best of
    the tied removal combinations, capped) and (b) single-vertex swaps
    within a part.  Only strictly density-increasing moves are accepted,
    so every step preserves equal sizes and the walk terminates at a
    local maximum.  Deterministic for a fixed seed.
    """
    n = _require_equal_parts(h)
    exponent = density_exponent(h.d, Fraction(epsilon))
    edges = _edge_bits(h)
    rng = random.Random(f"densify:{seed}")
    current = [list(range(n)) for _ in range(h.num_parts)]

    def value_of(subs: list[list[int]]) -> DensityValue:
        e = _count_in_masks(edges, [_mask_of(tuple(s)) for s in subs])
        return DensityValue(e, len(subs[0]), exponent)

    current_value = value_of(current)
    while True:
        improved = False
        # Simultaneous min-degree removal, only meaningful above size 1.
        if len(current[0]) > 1:
            masks = [_mask_of(tuple(s)) for s in current]
            tied: list[list[int]] = []
            for i, sub in enumerate(current):
                degrees = {v: 0 for v in sub}
                for e in edges:
                    if all((masks[k] >> e[k]) & 1 for k in range(h.num_parts)):
                        degrees[e[i]] += 1
                low = min(degrees.values())
                tied.append([v for v in sub if degrees[v] == low])
            n_combos = math.prod(len(tv) for tv in tied)
            if n_combos > 64:
                tied = [tv[:1] for tv in tied]
            best_candidate = None
            best_value = None
            for drops in itertools.product(*tied):
                candidate = [
                    [v for v in sub if v != drops[i]]
                    for i, sub in enumerate(current)
                ]
                cand_value = value_of(candidate)
                if best_value is None or cand_value > best_value:
                    best_candidate, best_value = candidate, cand_value
            if best_value is not None and best_value > current_value:
                current, current_value = best_candidate, best_value
                continue
        # Single-vertex swaps, explored in a seeded order.
        swaps = [
            (i, u, w)
            for i in range(h.num_parts)
            for u in current[i]
            for w in range(n)
            if w not in current[i]
        ]
        rng.shuffle(swaps)
        for i, u, w in swaps:
            candidate = [list(s) for s in current]
            candidate[i] = sorted(v for v in candidate[i] if v != u) + [w]
            candidate[i].sort()
            cand_value = value_of(candidate)
            if cand_value > current_value:
                current, current_value = candidate, cand_value
                improved = True
                break
        if not improved:
            break
    return tuple(tuple(sorted(s)) for s in current)


@dataclass(frozen=True)
class PropertyIIReport:
    status: str  # "ok" | "counterexample" | "sampled-ok"
    counterexample: Subsets | None
    combinations_checked: int


def verify_property_ii(
    h: PartiteHypergraph,
    subsets,
    epsilon,
    gate: int = DEFAULT_GATE,
    samples: int = 2000,
    seed: int = 0,
) -> PropertyIIReport:
    """Check that every tuple of ceil(eps*s)-subsets still spans an edge.

    Exhaustive within the gate; beyond it the property is only
    spot-checked on seeded random tuples and reported as "sampled-ok".
    Edge counts are monotone in the subsets, so checking the minimum
    subset size suffices.
    """
    subsets = _normalize_subsets(h, subsets)
    sizes = {len(s) for s in subsets}
    if len(sizes) != 1:
        raise InputError("subsets must have equal size")
    s = sizes.pop()
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < Fraction(1, 2):
        raise InputError("epsilon must lie in (0, 1/2)")
    q = max(1, math.ceil(epsilon * s))
    edges = _edge_bits(h)

    def has_edge(masks: list[int]) -> bool:
        for e in edges:
            for i, v in enumerate(e):
                if not (masks[i] >> v) & 1:
                    break
            else:
                return True
        return False

    n_combos = math.comb(s, q) ** h.num_parts
    if n_combos <= gate:
        checked = 0
        for combo in itertools.product(
            *[itertools.combinations(sub, q) for sub in subsets]
        ):
            checked += 1
            if not has_edge([_mask_of(c) for c in combo]):
                return PropertyIIReport("counterexample", tuple(combo), checked)
        return PropertyIIReport("ok", None, checked)
    rng = random.Random(f"property-ii:{seed}")
    for k in range(samples):
        combo = tuple(
            tuple(sorted(rng.sample(sub, q))) for sub in subsets
        )
        if not has_edge([_mask_of(c) for c in combo]):
            return PropertyIIReport("counterexample", combo, k + 1)
    return PropertyIIReport("sampled-ok", None, samples)


def hypergraph_to_json(h: PartiteHypergraph) -> bytes:
    data = {
        "part_sizes": list(h.part_sizes),
        "edges": [list(e) for e in sorted(h.edges)],
    }
    return (json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n").encode()


def hypergraph_from_json(source) -> PartiteHypergraph:
    text = source.decode() if isinstance(source, bytes) else str(source)
    try:
        data = json.loads(text)
        return partite_hypergraph(data["part_sizes"], data["edges"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad hypergraph JSON: {exc}") from exc
