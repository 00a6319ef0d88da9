from fractions import Fraction

import pytest

from rainbowdepth import (
    GeneratorSpec,
    InputError,
    UnsupportedDimensionError,
    configuration,
    deepest_point,
    generate,
    point,
    rainbow_depth_at,
    theoretical_constants,
)
from rainbowdepth.depth import counting_inequality_diagnostic
from rainbowdepth.geometry import affine_image


def hexagon_config():
    """Affine image of the regular hexagon (rational coordinates), with
    opposite vertices sharing a color."""
    v = [
        point(1, 0),
        point("1/2", 1),
        point("-1/2", 1),
        point(-1, 0),
        point("-1/2", -1),
        point("1/2", -1),
    ]
    return configuration(2, [[v[0], v[3]], [v[1], v[4]], [v[2], v[5]]])


def test_constants_d2():
    c = theoretical_constants(2, 10)
    assert c.alpha == Fraction(1, 10000)
    assert c.beta == Fraction(1, 30000)
    assert c.epsilon == Fraction(1, 256)
    assert c.n_rainbow == 1000


def test_constants_d1():
    c = theoretical_constants(1, 5)
    assert c.alpha == Fraction(1, 5)
    assert c.beta == Fraction(1, 10)
    assert c.epsilon == Fraction(1, 4)
    assert c.n_rainbow == 25


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_epsilon_below_half(d):
    assert theoretical_constants(d, 2).epsilon < Fraction(1, 2)


def test_counting_diagnostic_reports_not_asserts():
    small = counting_inequality_diagnostic(2, 8)
    assert small["defined"] is True
    assert isinstance(small["lhs"], Fraction)
    assert small["holds"] in (True, False)
    assert counting_inequality_diagnostic(2, 5)["defined"] is False


def test_depth_triangle():
    cfg = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    inside = rainbow_depth_at(cfg, point(1, 1))
    assert inside.count == 1
    assert inside.tuples == ((0, 0, 0),)
    assert rainbow_depth_at(cfg, point(50, 50)).count == 0


def test_depth_hexagon_center():
    cfg = hexagon_config()
    info = rainbow_depth_at(cfg, point(0, 0))
    assert info.count == 2
    # exactly the two alternating triangles contain the center
    assert set(info.tuples) == {(0, 1, 0), (1, 0, 1)}


def test_depth_rejects_ambiguous_point():
    cfg = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    # midpoint of the red-green edge lies on a two-colored spanned line
    with pytest.raises(InputError, match="spanned"):
        rainbow_depth_at(cfg, point(2, 0))


def test_depth_dimension_mismatch():
    cfg = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    with pytest.raises(InputError):
        rainbow_depth_at(cfg, point(1, 1, 1))


def test_deepest_point_triangle():
    cfg = configuration(2, [[point(0, 0)], [point(4, 0)], [point(0, 4)]])
    res = deepest_point(cfg, "exact-arrangement")
    assert res.depth == 1
    assert rainbow_depth_at(cfg, res.witness).count == 1


def test_deepest_point_hexagon_arrangement():
    cfg = hexagon_config()
    res = deepest_point(cfg, "exact-arrangement")
    assert res.depth == 2  # exhaustive sweep agrees with the center oracle
    assert rainbow_depth_at(cfg, res.witness).count == 2
    assert res.candidates_examined > 0


def test_deepest_point_self_consistency_and_determinism():
    cfg = generate(GeneratorSpec(seed=5, n=4, d=2))
    a = deepest_point(cfg, "candidate-sampling", seed=5)
    b = deepest_point(cfg, "candidate-sampling", seed=5)
    assert a == b
    assert rainbow_depth_at(cfg, a.witness).count == a.depth


def test_exact_dominates_sampling():
    for seed in range(4):
        cfg = generate(GeneratorSpec(seed=seed, n=3, d=2))
        exact = deepest_point(cfg, "exact-arrangement")
        sampled = deepest_point(cfg, "candidate-sampling", seed=seed)
        assert exact.depth >= sampled.depth
        assert rainbow_depth_at(cfg, exact.witness).count == exact.depth


def test_depth_floor_from_disjoint_simplices():
    # with 8 points per color, three disjoint rainbow triangles share a
    # point, so the best depth is at least 3
    for seed in range(20):
        cfg = generate(GeneratorSpec(seed=seed, n=8, d=2))
        res = deepest_point(cfg, "candidate-sampling", seed=seed)
        assert res.depth >= 3, f"seed {seed} found only depth {res.depth}"


def test_depth_affine_invariance():
    cfg = generate(GeneratorSpec(seed=2, n=3, d=2))
    res = deepest_point(cfg, "candidate-sampling", seed=2)
    mat = [[3, 1], [2, 1]]  # determinant 1
    shift = ("5/7", -2)
    mapped = configuration(
        2,
        [[affine_image(p, mat, shift) for p in cls] for cls in cfg.colors],
    )
    mapped_o = affine_image(res.witness, mat, shift)
    assert rainbow_depth_at(mapped, mapped_o).count == res.depth


def test_arrangement_needs_dimension_2():
    cfg = generate(GeneratorSpec(seed=1, n=2, d=3))
    with pytest.raises(UnsupportedDimensionError):
        deepest_point(cfg, "exact-arrangement")


def test_unknown_strategy():
    cfg = generate(GeneratorSpec(seed=1, n=2, d=2))
    with pytest.raises(InputError):
        deepest_point(cfg, "magic")


def test_depth_general_dimension():
    cfg = generate(GeneratorSpec(seed=4, n=2, d=3))
    res = deepest_point(cfg, "candidate-sampling", seed=4, random_budget=50)
    assert res.depth >= 1
    assert rainbow_depth_at(cfg, res.witness).count == res.depth
