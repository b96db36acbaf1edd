import math
import random

import pytest

from polycenter.errors import AllZero, DomainViolation, EvalError, ZeroSum
from polycenter.framework import (
    BarycentricWeights,
    LengthCenterFunction,
    ProjectiveCoords,
    VertexCenterFunction,
    coordinate_map_length,
    coordinate_map_vertex,
    geometric_center,
    lift_length_to_vertex,
    lower_vertex_to_length,
    normalize,
    verify_axioms,
)
from polycenter.geometry import Point2, Polygon, distance_matrix
from polycenter.sampling import random_convex_polygon, random_polygon

TRI345 = Polygon.from_pairs([(0, 0), (3, 0), (0, 4)])

# exact in floating point: all three side lengths come out as 3.0
EQUILATERAL = Polygon.from_pairs([(0, 0), (3, 0), (1.5, 2.598076211353316)])


def g_adjacent(D):
    return D.d[D.n - 1][0] + D.d[0][1]


def f_opposite_side(p):
    return p.vertex(1).distance_to(p.vertex(2))


# -------------------------------------------------------- function wrappers


def test_vertex_function_guard():
    fn = VertexCenterFunction(
        "guarded", lambda p: 1.0, lambda p: p.n == 3, "triangles only"
    )
    assert fn.evaluate(TRI345) == 1.0
    with pytest.raises(DomainViolation):
        fn.evaluate(Polygon.from_pairs([(0, 0), (1, 0), (1, 1), (0, 1)]))


def test_nonfinite_value_is_an_eval_error():
    fn = VertexCenterFunction("bad", lambda p: math.inf)
    with pytest.raises(EvalError):
        fn.evaluate(TRI345)


def test_length_function_evaluates_matrix():
    g = LengthCenterFunction("adjacent", g_adjacent)
    assert g.evaluate(distance_matrix(TRI345)) == 7.0


# ----------------------------------------------------------------### coords


def test_projective_coords_reject_all_zero():
    with pytest.raises(ValueError):
        ProjectiveCoords((0.0, 0.0, 0.0))


def test_projective_proportionality():
    a = ProjectiveCoords((7.0, 8.0, 9.0))
    assert a.proportional_to(ProjectiveCoords((14.0, 16.0, 18.0)))
    assert a.proportional_to(ProjectiveCoords((-7.0, -8.0, -9.0)))
    assert not a.proportional_to(ProjectiveCoords((7.0, 8.0, 10.0)))


def test_barycentric_weights_sum_to_one():
    with pytest.raises(ValueError):
        BarycentricWeights((0.5, 0.4, 0.2))
    w = BarycentricWeights((0.25, 0.5, 0.25))
    got = w.combine(TRI345)
    assert got.as_tuple() == (1.5, 1.0)


def test_coordinate_map_vertex_fixture():
    f = VertexCenterFunction("opposite-side", f_opposite_side)
    coords = coordinate_map_vertex(f, TRI345)
    assert coords.values == (5.0, 4.0, 3.0)


def test_coordinate_map_length_fixture():
    g = LengthCenterFunction("adjacent", g_adjacent)
    coords = coordinate_map_length(g, distance_matrix(TRI345))
    assert coords.values == (7.0, 8.0, 9.0)


def test_coordinate_map_all_zero():
    f = VertexCenterFunction("null", lambda p: 0.0)
    with pytest.raises(AllZero):
        coordinate_map_vertex(f, TRI345)


def test_side_difference_vanishes_on_exact_equilateral():
    g = LengthCenterFunction("side-gap", lambda D: D.d[0][1] - D.d[1][2])
    with pytest.raises(AllZero):
        coordinate_map_length(g, distance_matrix(EQUILATERAL))


def test_normalize_zero_sum():
    with pytest.raises(ZeroSum):
        normalize(ProjectiveCoords((-2.0, 1.0, 1.0)))


def test_normalize_weights():
    w = normalize(ProjectiveCoords((7.0, 8.0, 9.0)))
    assert w.values == pytest.approx((7 / 24, 8 / 24, 9 / 24))


def test_geometric_center_vertex_and_length_routes():
    f = VertexCenterFunction("opposite-side", f_opposite_side)
    assert geometric_center(f, TRI345).as_tuple() == pytest.approx((1.0, 1.0))
    g = LengthCenterFunction("adjacent", g_adjacent)
    assert geometric_center(g, TRI345).as_tuple() == pytest.approx((1.0, 1.5))


# -------------------------------------------------------------- lift / lower


def test_lift_measures_distances():
    g = LengthCenterFunction("adjacent", g_adjacent)
    lifted = lift_length_to_vertex(g)
    assert lifted.evaluate(TRI345) == g.evaluate(distance_matrix(TRI345))


def test_lower_reconstructs():
    f = VertexCenterFunction("opposite-side", f_opposite_side)
    lowered = lower_vertex_to_length(f)
    assert lowered.evaluate(distance_matrix(TRI345)) == pytest.approx(5.0)


def test_lower_then_lift_round_trip():
    # motion-invariant f: the reconstructed congruent copy gives the same value
    f = VertexCenterFunction("opposite-side", f_opposite_side)
    back = lift_length_to_vertex(lower_vertex_to_length(f))
    rng = random.Random(2)
    for _ in range(25):
        p = random_polygon(rng, 5)
        assert back.evaluate(p) == pytest.approx(f.evaluate(p), rel=1e-7, abs=1e-7)


# ------------------------------------------------------------- axiom checks


def test_verify_axioms_constant_function():
    f = VertexCenterFunction("one", lambda p: 1.0)
    report = verify_axioms(f, lambda rng: random_polygon(rng, 5), trials=40)
    assert report.relabel_ok and report.motion_ok and report.homogeneity_ok
    assert report.estimated_degree == pytest.approx(0.0, abs=1e-9)


def test_verify_axioms_adjacent_sum():
    g = LengthCenterFunction("adjacent", g_adjacent)
    report = verify_axioms(g, lambda rng: random_convex_polygon(rng, 6), trials=40)
    assert report.relabel_ok and report.motion_ok and report.homogeneity_ok
    assert report.estimated_degree == pytest.approx(1.0, abs=1e-6)


def test_verify_axioms_flags_motion_dependence():
    f = VertexCenterFunction("x1", lambda p: p.vertices[0].x)
    report = verify_axioms(f, lambda rng: random_polygon(rng, 4), trials=40)
    assert not report.motion_ok


def test_verify_axioms_flags_asymmetry():
    # the first side is not fixed by the reversal relabeling
    f = VertexCenterFunction("first-side", lambda p: p.vertex(0).distance_to(p.vertex(1)))
    report = verify_axioms(f, lambda rng: random_polygon(rng, 5), trials=40)
    assert not report.relabel_ok


def test_verify_axioms_flags_inhomogeneity():
    f = VertexCenterFunction(
        "shifted", lambda p: p.vertex(1).distance_to(p.vertex(2)) + 1.0
    )
    report = verify_axioms(f, lambda rng: random_polygon(rng, 5), trials=40)
    assert not report.homogeneity_ok
