from pathlib import Path

import pytest

from rainbowdepth import (
    GeneratorSpec,
    PipelineParams,
    UnsupportedDimensionError,
    configuration,
    generate,
    point,
    render_svg,
    run_pipeline,
)

DATA = Path(__file__).parent / "data"


def test_triangle_svg_elements():
    cfg = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    bundle = run_pipeline(cfg, PipelineParams())
    svg = render_svg(cfg, bundle)
    assert svg.count("<circle") == 3 + 1  # 3 points + the O ring
    assert svg.count("<path") == 1  # the O cross marker
    assert svg.startswith("<svg")


def test_svg_deterministic():
    cfg = generate(GeneratorSpec(seed=2, n=4, d=2))
    bundle = run_pipeline(cfg, PipelineParams(seed=2))
    assert render_svg(cfg, bundle) == render_svg(cfg, bundle)


def test_hexagon_svg_fixture():
    v = [
        point(1, 0),
        point("1/2", 1),
        point("-1/2", 1),
        point(-1, 0),
        point("-1/2", -1),
        point("1/2", -1),
    ]
    cfg = configuration(2, [[v[0], v[3]], [v[1], v[4]], [v[2], v[5]]])
    bundle = run_pipeline(cfg, PipelineParams(depth_strategy="exact-arrangement"))
    svg = render_svg(cfg, bundle)
    assert svg.count("<circle") == 6 + 1
    assert svg == (DATA / "hexagon.svg").read_text()


def test_svg_dimension_gate():
    cfg3 = generate(GeneratorSpec(seed=1, n=2, d=3))
    cfg2 = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    bundle = run_pipeline(cfg2, PipelineParams())
    with pytest.raises(UnsupportedDimensionError):
        render_svg(cfg3, bundle)
