import json
from fractions import Fraction
from pathlib import Path

import pytest

from rainbowdepth import (
    BudgetExceededError,
    GeneratorSpec,
    InputError,
    PipelineParams,
    all_or_none_check,
    configuration,
    generate,
    point,
    report_bytes,
    run_pipeline,
    verify_certificate,
)
from rainbowdepth.pipeline import load_report, report_o_and_q

DATA = Path(__file__).parent / "data"


def triangle_config():
    return configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])


def hexagon_config():
    v = [
        point(1, 0),
        point("1/2", 1),
        point("-1/2", 1),
        point(-1, 0),
        point("-1/2", -1),
        point("1/2", -1),
    ]
    return configuration(2, [[v[0], v[3]], [v[1], v[4]], [v[2], v[5]]])


def test_triangle_pipeline_trivial():
    cfg = triangle_config()
    bundle = run_pipeline(cfg, PipelineParams())
    assert bundle.verified
    assert bundle.depth_at_o == 1
    assert bundle.q_sets == cfg.colors  # the singletons survive untouched
    assert bundle.ratios == (Fraction(1), Fraction(1), Fraction(1))
    assert verify_certificate(cfg, bundle.o_point, bundle.q_sets) is None


def test_hexagon_pipeline_regression_fixture():
    cfg = hexagon_config()
    bundle = run_pipeline(
        cfg, PipelineParams(depth_strategy="exact-arrangement")
    )
    assert bundle.verified
    assert bundle.depth_at_o == 2
    assert all(len(q) >= 1 for q in bundle.q_sets)
    expected = (DATA / "hexagon_report.json").read_bytes()
    assert report_bytes(bundle) == expected


def test_pipeline_determinism():
    cfg = generate(GeneratorSpec(seed=3, n=6, d=2))
    params = PipelineParams(seed=3)
    b1 = run_pipeline(cfg, params)
    b2 = run_pipeline(cfg, params)
    assert report_bytes(b1) == report_bytes(b2)


def test_pipeline_stage_consistency():
    cfg = generate(GeneratorSpec(seed=12, n=6, d=2))
    bundle = run_pipeline(cfg, PipelineParams(seed=12))
    stats = bundle.stats
    assert stats["edges_stage2"] == bundle.depth_at_o
    assert stats["edges_stage3"] <= stats["edges_stage2"]
    assert stats["edges_stage4"] <= stats["edges_stage3"]
    assert all(0 < r <= 1 for r in bundle.ratios)


def test_pipeline_paper_epsilon():
    cfg = hexagon_config()
    bundle = run_pipeline(cfg, PipelineParams(epsilon="paper"))
    assert bundle.verified
    data = json.loads(report_bytes(bundle))
    assert data["params"]["epsilon"] == "1/256"
    assert data["params"]["epsilon_requested"] == "paper"


def test_pipeline_exact_gate_error():
    cfg = generate(GeneratorSpec(seed=0, n=6, d=2))
    with pytest.raises(BudgetExceededError):
        run_pipeline(cfg, PipelineParams(extraction="exact", exact_gate=10))


def test_pipeline_epsilon_validation():
    cfg = triangle_config()
    with pytest.raises(InputError):
        run_pipeline(cfg, PipelineParams(epsilon=Fraction(3, 4)))


def test_verify_certificate_examples():
    cfg = triangle_config()
    o_in = point(1, 1)
    assert verify_certificate(cfg, o_in, cfg.colors) is None
    counter = verify_certificate(cfg, point(-17, "-5/3"), cfg.colors)
    assert counter is not None
    assert counter.index_tuple == (0, 0, 0)


def test_verify_certificate_validations():
    cfg = triangle_config()
    with pytest.raises(InputError):
        verify_certificate(cfg, point(1, 1), [[point(9, 9)], [point(4, 0)], [point(0, 4)]])
    with pytest.raises(InputError):
        verify_certificate(cfg, point(1, 1), [[], [point(4, 0)], [point(0, 4)]])
    with pytest.raises(InputError):  # O on a spanned two-color line
        verify_certificate(cfg, point(2, 0), cfg.colors)


def test_verified_bundles_pass_independent_oracle():
    for seed in (1, 2):
        cfg = generate(GeneratorSpec(seed=seed, n=6, d=2))
        bundle = run_pipeline(cfg, PipelineParams(seed=seed))
        assert bundle.verified
        assert verify_certificate(cfg, bundle.o_point, bundle.q_sets) is None


FAR_DIRECTIONS = [
    (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1),
    (2, 1), (-2, 1), (2, -1), (-2, -1), (1, 2), (-1, 2), (1, -2), (-1, -2),
]


def far_translates(o_point, radius=10**7):
    x, y = o_point
    for dx, dy in FAR_DIRECTIONS:
        yield (x + dx * radius, y + dy * radius)


def test_all_or_none_from_bundle():
    cfg = generate(GeneratorSpec(seed=6, n=6, d=2))
    bundle = run_pipeline(cfg, PipelineParams(seed=6))
    assert all_or_none_check(bundle.q_sets, bundle.o_point) == "all"
    # a far translate of O in some direction keeps the family separated
    # and contains no simplex at all
    outcomes = []
    for far in far_translates(bundle.o_point):
        try:
            outcomes.append(all_or_none_check(bundle.q_sets, far))
        except InputError:
            continue  # this direction broke a pair split; try another
    assert outcomes and set(outcomes) == {"none"}


def test_all_or_none_requires_separated():
    # O inside the hull of a fat set, so the {O} split fails
    q_sets = [
        [point(0, 0), point(4, 0), point(2, 5)],
        [point(100, 0)],
        [point(0, 100)],
    ]
    with pytest.raises(InputError):
        all_or_none_check(q_sets, point(2, 1))


def test_report_roundtrip_and_tamper_detection():
    cfg = triangle_config()
    bundle = run_pipeline(cfg, PipelineParams())
    data = load_report(report_bytes(bundle))
    o_point, q_sets = report_o_and_q(data)
    assert verify_certificate(cfg, o_point, q_sets) is None
    # tamper: swap a Q point for another configuration point of that color
    tampered = json.loads(report_bytes(bundle))
    tampered["Q"][0] = [["0", "0"]]
    tampered["O"] = ["-31", "-57/2"]
    o2, q2 = report_o_and_q(tampered)
    counter = verify_certificate(cfg, o2, q2)
    assert counter is not None


def test_load_report_rejects_bad_schema():
    with pytest.raises(InputError):
        load_report(b'{"schema_version": 99}')
    with pytest.raises(InputError):
        load_report(b"not json")
