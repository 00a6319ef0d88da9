"""End-to-end pipeline: from a colored configuration to a certified
point O and subsets Q_i such that every rainbow simplex on the Q_i
strictly contains O.

Stages: (1) depth search for O; (2) the partite hypergraph of rainbow
tuples containing O; (3) dense equal-size extraction; (4) trimming to a
separated family {O}, hull(Q_1), ..., hull(Q_{d+1}); (5) independent
brute-force verification.  When trimming or verification fails, the
pipeline retries from stage 3 with the next-ranked extraction (exact
mode) or a reseeded local search; every retry is recorded.

The verifier is deliberately independent of the pipeline internals: it
re-tests containment tuple by tuple with the core predicates and never
reuses the stage-2 hypergraph.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .config import ColoredConfiguration, save_configuration
from .depth import deepest_point, rainbow_depth_at, theoretical_constants
from .errors import (
    BudgetExceededError,
    InputError,
    PipelineStageError,
    TrimExhaustedError,
)
from .geometry import (
    Point,
    format_rational,
    orientation,
    point,
    point_in_simplex_interior,
    rational,
)
from .hypergraph import (
    PartiteHypergraph,
    edge_count,
    extract_dense_exact,
    extract_dense_local,
    partite_hypergraph,
)
from .separation import TrimTrace, is_separated_family, trim_to_separated

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class PipelineParams:
    epsilon: Fraction | str = Fraction(1, 4)  # "paper" selects 1/2^(d*2^d)
    depth_strategy: str = "candidate-sampling"
    extraction: str = "auto"  # auto | exact | local
    seed: int = 0
    exact_gate: int = 10**7
    centroid_budget: int = 20000
    random_budget: int = 1000
    max_retries: int = 5
    trim_max_steps: int = 64

    def resolve_epsilon(self, d: int) -> Fraction:
        if self.epsilon == "paper":
            return theoretical_constants(d, 1).epsilon
        eps = rational(self.epsilon)
        if not 0 < eps < Fraction(1, 2):
            raise InputError("epsilon must lie in (0, 1/2)")
        return eps

    def to_json_dict(self, d: int) -> dict:
        return {
            "epsilon": format_rational(self.resolve_epsilon(d)),
            "epsilon_requested": (
                "paper" if self.epsilon == "paper" else format_rational(rational(self.epsilon))
            ),
            "depth_strategy": self.depth_strategy,
            "extraction": self.extraction,
            "seed": self.seed,
            "exact_gate": self.exact_gate,
            "centroid_budget": self.centroid_budget,
            "random_budget": self.random_budget,
            "max_retries": self.max_retries,
            "trim_max_steps": self.trim_max_steps,
        }


@dataclass(frozen=True)
class ResultBundle:
    o_point: Point
    q_sets: tuple[tuple[Point, ...], ...]
    depth_at_o: int
    sizes: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    trace: TrimTrace
    stats: dict
    verified: bool
    params: PipelineParams
    input_hash: str

    def min_ratio(self) -> Fraction:
        return min(self.ratios)

    def to_json_dict(self) -> dict:
        d = len(self.o_point)
        return {
            "schema_version": SCHEMA_VERSION,
            "input_hash": self.input_hash,
            "params": self.params.to_json_dict(d),
            "O": [format_rational(c) for c in self.o_point],
            "depth": self.depth_at_o,
            "Q": [
                [[format_rational(c) for c in p] for p in q]
                for q in self.q_sets
            ],
            "sizes": list(self.sizes),
            "ratios": [format_rational(r) for r in self.ratios],
            "trace": self.trace.to_json_dict(),
            "stats": self.stats,
            "verified": self.verified,
        }


def report_bytes(bundle: ResultBundle) -> bytes:
    text = json.dumps(bundle.to_json_dict(), sort_keys=True, separators=(",", ":"))
    return (text + "\n").encode()


def configuration_hash(cfg: ColoredConfiguration) -> str:
    return hashlib.sha256(save_configuration(cfg, "json")).hexdigest()


@dataclass(frozen=True)
class Counterexample:
    index_tuple: tuple[int, ...] | None
    vertices: tuple[Point, ...]
    reason: str


def verify_certificate(
    cfg: ColoredConfiguration, o_point: Point, q_sets
) -> Counterexample | None:
    """Independent oracle: every rainbow simplex on the Q_i must contain
    O strictly.  None means verified; otherwise the first violating
    tuple.  Each Q_i must be a nonempty subset of color class i.
    """
    o_point = point(o_point)
    q_sets = [tuple(point(p) for p in q) for q in q_sets]
    if len(q_sets) != cfg.num_colors:
        raise InputError(
            f"expected {cfg.num_colors} subsets, got {len(q_sets)}"
        )
    for i, q in enumerate(q_sets):
        if not q:
            raise InputError(f"Q_{i} is empty")
        members = set(cfg.colors[i])
        for p in q:
            if p not in members:
                raise InputError(
                    f"Q_{i} contains a point outside color class {i}"
                )
    # O must be unambiguous: off every hyperplane that can carry a
    # rainbow facet, i.e. spanned by d points of pairwise distinct colors.
    union = cfg.all_points()
    colors = [ci for ci, cls in enumerate(cfg.colors) for _ in cls]
    d = cfg.dimension
    for combo in itertools.combinations(range(len(union)), d):
        if len({colors[i] for i in combo}) < d:
            continue
        if orientation([union[i] for i in combo] + [o_point]) == 0:
            raise InputError(
                "O lies on a hyperplane spanned by differently colored "
                "configuration points"
            )
    for choice in itertools.product(*[range(len(q)) for q in q_sets]):
        verts = [q_sets[i][choice[i]] for i in range(len(q_sets))]
        if not point_in_simplex_interior(o_point, verts):
            return Counterexample(
                tuple(choice), tuple(verts), "simplex does not contain O strictly"
            )
    return None


def all_or_none_check(q_sets, o_point: Point, assume_separated: bool = False) -> str:
    """Classify containment of O over all rainbow tuples: "all", "none",
    or "mixed".  Requires {O} and the hulls of the Q_i to form a
    separated family, under which the answer is provably never "mixed";
    the classification is still computed honestly so tests can assert
    the dichotomy rather than assume it.
    """
    o_point = point(o_point)
    q_sets = [tuple(point(p) for p in q) for q in q_sets]
    if any(not q for q in q_sets):
        raise InputError("all subsets must be nonempty")
    if not assume_separated:
        bodies = [[o_point]] + [list(q) for q in q_sets]
        witness = is_separated_family(bodies)
        if witness is not None:
            raise InputError(
                "family {O} + hulls not separated: tuple "
                f"{witness.tuple_indices}, split {witness.split}"
            )
    saw_inside = saw_outside = False
    for choice in itertools.product(*[range(len(q)) for q in q_sets]):
        verts = [q_sets[i][choice[i]] for i in range(len(q_sets))]
        if point_in_simplex_interior(o_point, verts):
            saw_inside = True
        else:
            saw_outside = True
        if saw_inside and saw_outside:
            return "mixed"
    return "all" if saw_inside else "none"


def _extraction_candidates(
    h: PartiteHypergraph, epsilon: Fraction, params: PipelineParams
):
    """Ranked extraction attempts for the retry loop."""
    mode = params.extraction
    n = h.part_sizes[0]
    total = sum(math.comb(n, s) ** h.num_parts for s in range(1, n + 1))
    use_exact = mode == "exact" or (mode == "auto" and total <= params.exact_gate)
    if mode == "exact" and total > params.exact_gate:
        raise BudgetExceededError(
            f"exact extraction gated: {total} tuples > {params.exact_gate}"
        )
    if use_exact:
        ranked = extract_dense_exact(
            h, epsilon, gate=params.exact_gate, top=params.max_retries + 1
        )
        for subsets in ranked:
            yield "exact", subsets
    else:
        for attempt in range(params.max_retries + 1):
            yield "local", extract_dense_local(
                h, epsilon, seed=params.seed + attempt
            )


def run_pipeline(cfg: ColoredConfiguration, params: PipelineParams) -> ResultBundle:
    cfg.validate()
    d = cfg.dimension
    if d != 2:
        raise PipelineStageError(
            "depth", f"full pipeline requires dimension 2, got {d}"
        )
    epsilon = params.resolve_epsilon(d)
    input_hash = configuration_hash(cfg)

    deep = deepest_point(
        cfg,
        strategy=params.depth_strategy,
        seed=params.seed,
        centroid_budget=params.centroid_budget,
        random_budget=params.random_budget,
    )
    o_point = deep.witness

    depth_info = rainbow_depth_at(cfg, o_point)
    if depth_info.count == 0:
        raise PipelineStageError(
            "hypergraph", "no rainbow simplex contains O: empty hypergraph"
        )
    if depth_info.count != deep.depth:
        raise PipelineStageError(
            "hypergraph",
            f"stage inconsistency: depth {deep.depth} != recount {depth_info.count}",
        )
    h = partite_hypergraph((cfg.n,) * cfg.num_colors, depth_info.tuples)

    attempts = []
    last_error: dict | None = None
    for retry, (mode, subsets) in enumerate(
        _extraction_candidates(h, epsilon, params)
    ):
        s_sets = [
            tuple(cfg.colors[i][j] for j in subsets[i])
            for i in range(cfg.num_colors)
        ]
        edges_in_s = edge_count(h, subsets)
        attempt_stats = {
            "retry": retry,
            "extraction_mode": mode,
            "s": len(subsets[0]),
            "edges_in_s": edges_in_s,
        }
        try:
            q_sets, trace = trim_to_separated(
                s_sets, o_point, max_steps=params.trim_max_steps
            )
        except TrimExhaustedError as exc:
            attempt_stats["outcome"] = f"trim failed: {exc}"
            attempts.append(attempt_stats)
            last_error = {"stage": "trim", "message": str(exc)}
            continue
        counter = verify_certificate(cfg, o_point, q_sets)
        if counter is not None:
            attempt_stats["outcome"] = (
                f"verification failed at tuple {counter.index_tuple}"
            )
            attempts.append(attempt_stats)
            last_error = {
                "stage": "verify",
                "message": counter.reason,
                "tuple": counter.index_tuple,
            }
            continue
        attempt_stats["outcome"] = "verified"
        attempts.append(attempt_stats)
        q_indices = [
            tuple(j for j in subsets[i] if cfg.colors[i][j] in set(q_sets[i]))
            for i in range(cfg.num_colors)
        ]
        sizes = tuple(len(q) for q in q_sets)
        ratios = tuple(Fraction(len(q), cfg.n) for q in q_sets)
        stats = {
            "depth_candidates_examined": deep.candidates_examined,
            "edges_stage2": depth_info.count,
            "edges_stage3": edges_in_s,
            "edges_stage4": edge_count(h, q_indices),
            "trim_steps": trace.step_count,
            "attempts": attempts,
        }
        return ResultBundle(
            o_point=o_point,
            q_sets=tuple(q_sets),
            depth_at_o=depth_info.count,
            sizes=sizes,
            ratios=ratios,
            trace=trace,
            stats=stats,
            verified=True,
            params=params,
            input_hash=input_hash,
        )
    assert last_error is not None
    raise PipelineStageError(
        last_error["stage"],
        f"no verified certificate within {params.max_retries + 1} attempts: "
        f"{last_error['message']}",
        details={"attempts": attempts, **last_error},
    )


def load_report(source) -> dict:
    text = source.decode() if isinstance(source, bytes) else str(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed report JSON: {exc}") from exc
    if data.get("schema_version") != SCHEMA_VERSION:
        raise InputError(
            f"unsupported report schema_version {data.get('schema_version')!r}"
        )
    return data


def report_o_and_q(data: dict) -> tuple[Point, list[tuple[Point, ...]]]:
    try:
        o_point = point([rational(c) for c in data["O"]])
        q_sets = [
            tuple(point([rational(c) for c in p]) for p in q)
            for q in data["Q"]
        ]
    except (KeyError, TypeError) as exc:
        raise InputError(f"report missing O/Q fields: {exc}") from exc
    return o_point, q_sets
