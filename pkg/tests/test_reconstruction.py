import math
import random

import pytest

from polycenter.errors import InfeasibleDistances
from polycenter.geometry import (
    DistanceMatrix,
    Polygon,
    distance_matrix,
    signed_area,
)
from polycenter.reconstruction import convex_distances, reconstruct, validate
from polycenter.sampling import random_convex_polygon, random_polygon


def matrix(rows):
    return DistanceMatrix(tuple(tuple(float(x) for x in r) for r in rows))


def test_equilateral_side_two():
    D = matrix([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
    got = reconstruct(D)
    v1, v2, v3 = got.polygon.vertices
    assert v1.as_tuple() == (0.0, 0.0)
    assert v2.as_tuple() == (2.0, 0.0)
    assert v3.x == pytest.approx(1.0)
    assert v3.y == pytest.approx(-math.sqrt(3.0))
    assert got.max_residual < 1e-12


def test_unit_square_round_trip():
    s = math.sqrt(2.0)
    D = matrix([[0, 1, s, 1], [1, 0, 1, s], [s, 1, 0, 1], [1, s, 1, 0]])
    got = reconstruct(D)
    back = distance_matrix(got.polygon)
    for i in range(4):
        for j in range(4):
            assert back.d[i][j] == pytest.approx(D.d[i][j], abs=1e-9)
    assert signed_area(got.polygon) < 0.0


def test_triangle_inequality_violation():
    D = matrix([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    with pytest.raises(InfeasibleDistances):
        reconstruct(D)


def test_zero_base_edge_is_infeasible():
    D = matrix([[0, 0, 1], [0, 0, 1], [1, 1, 0]])
    with pytest.raises(InfeasibleDistances):
        reconstruct(D)


def test_round_trip_random_polygons():
    rng = random.Random(6)
    for _ in range(100):
        p = random_polygon(rng, rng.randrange(3, 10))
        D = distance_matrix(p)
        got = reconstruct(D)
        back = distance_matrix(got.polygon)
        n = D.n
        worst = max(
            abs(back.d[i][j] - D.d[i][j]) for i in range(n) for j in range(n)
        )
        assert worst <= 1e-9
        assert signed_area(got.polygon) < 0.0
        assert got.polygon.vertices[0].as_tuple() == (0.0, 0.0)
        assert got.polygon.vertices[1].y == 0.0


def test_collinear_points_reconstruct_flat():
    p = Polygon.from_pairs([(0, 0), (1, 0), (3, 0)])
    got = reconstruct(distance_matrix(p))
    assert all(v.y == 0.0 for v in got.polygon.vertices)
    assert got.max_residual <= 1e-9


def test_validate_measured_matrices_are_feasible():
    rng = random.Random(7)
    for _ in range(50):
        p = random_polygon(rng, rng.randrange(4, 9))
        report = validate(distance_matrix(p))
        assert report.feasible
        assert report.max_residual <= 1e-9
        assert len(report.cm_checks) == (p.n - 2) * (p.n - 3) // 2
        assert all(abs(c) <= 1e-9 for c in report.cm_checks)


def test_validate_rejects_regular_tetrahedron():
    D = matrix([[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]])
    report = validate(D)
    assert not report.feasible
    assert report.max_residual == math.inf
    assert report.cm_checks == (pytest.approx(4.0),)
    with pytest.raises(InfeasibleDistances):
        reconstruct(D)


def test_validate_rejects_perturbed_square_diagonal():
    s = math.sqrt(2.0)
    bad = s + 0.1
    D = matrix([[0, 1, bad, 1], [1, 0, 1, s], [bad, 1, 0, 1], [1, s, 1, 0]])
    report = validate(D)
    assert not report.feasible


def test_convex_distances_tracks_shape():
    rng = random.Random(8)
    hits = {True: 0, False: 0}
    for _ in range(40):
        p = random_convex_polygon(rng, 6)
        assert convex_distances(distance_matrix(p))
        hits[True] += 1
    for _ in range(80):
        p = random_polygon(rng, 6)
        from polycenter.geometry import is_convex

        if is_convex(p):
            continue
        assert not convex_distances(distance_matrix(p))
        hits[False] += 1
    assert hits[False] > 20


def test_convex_distances_false_on_infeasible():
    D = matrix([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert not convex_distances(D)
