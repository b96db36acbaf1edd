"""Centers defined by optimization rather than by coordinate maps.

* geometric_median: the point minimizing the sum of distances to the
  vertices, by damped fixed-point iteration with an explicit vertex rule —
  when an iterate lands on a vertex, the subgradient test decides whether
  that vertex is the minimizer or the iteration should step off it.
* chebyshev_center: the center of the smallest circle enclosing the
  vertices, by randomized incremental construction (exact, not iterative).
* check_minimal_center: operational equivariance check that re-solves the
  problem on transformed copies and measures how far the transformed
  candidate misses the re-solved answer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .errors import DomainViolation, NoConvergence
from .geometry import Point2, Polygon, relabel, require_nondegenerate
from .sampling import random_rigid_motion
from .geometry import DihedralElement, Similarity

# Multiplicative slack when testing circle membership.
_IN_CIRCLE_SLACK = 1 + 1e-14
# An iterate closer than this (scaled by the polygon diameter) to a vertex
# triggers the subgradient rule.
_VERTEX_SNAP = 1e-12


@dataclass(frozen=True)
class MedianResult:
    point: Point2
    iterations: int
    residual: float
    at_vertex: Optional[int]  # 0-based vertex index, when captured


@dataclass(frozen=True)
class EnclosingCircle:
    center: Point2
    radius: float
    support: tuple[int, ...]  # 0-based vertex indices on the boundary


# ------------------------------------------------------------ geometric median


def _distance_sum_gradient(p: Polygon, x: Point2) -> tuple[Point2, float]:
    """Sum of unit vectors from x toward each vertex, and its norm."""
    gx = gy = 0.0
    for v in p.vertices:
        d = x.distance_to(v)
        gx += (v.x - x.x) / d
        gy += (v.y - x.y) / d
    return Point2(gx, gy), math.hypot(gx, gy)


def _vertex_pull(p: Polygon, k: int) -> tuple[Point2, float, float]:
    """Unit-vector sum at vertex k over the other vertices, its norm, and
    the sum of reciprocal distances (the local curvature scale)."""
    gx = gy = 0.0
    recip = 0.0
    vk = p.vertices[k]
    for j, v in enumerate(p.vertices):
        if j == k:
            continue
        d = vk.distance_to(v)
        gx += (v.x - vk.x) / d
        gy += (v.y - vk.y) / d
        recip += 1.0 / d
    return Point2(gx, gy), math.hypot(gx, gy), recip


def geometric_median(
    p: Polygon, tol: float = 1e-12, max_iter: int = 10000
) -> MedianResult:
    """Minimize the total distance to the vertices.

    Starts from the vertex mean. Convergence is declared when the norm of
    the unit-vector sum (the stationarity residual) times the diameter
    drops to tol, which bounds the objective gap. Raises NoConvergence
    with the best iterate attached when the budget runs out.
    """
    require_nondegenerate(p)
    diam = p.diameter()
    snap = _VERTEX_SNAP * max(1.0, diam)
    target = max(tol / max(diam, 1e-30), 1e-13)

    x = p.vertex_mean()
    best: Optional[MedianResult] = None
    for it in range(1, max_iter + 1):
        near = next(
            (k for k, v in enumerate(p.vertices) if x.distance_to(v) <= snap), None
        )
        if near is not None:
            pull, pull_norm, recip = _vertex_pull(p, near)
            if pull_norm <= 1.0:
                # the vertex itself is the minimizer
                return MedianResult(
                    p.vertices[near], it, max(pull_norm - 1.0, 0.0), near
                )
            step = (pull_norm - 1.0) / recip
            x = Point2(
                p.vertices[near].x + step * pull.x / pull_norm,
                p.vertices[near].y + step * pull.y / pull_norm,
            )
            continue
        grad, residual = _distance_sum_gradient(p, x)
        best = MedianResult(x, it, residual, None)
        if residual <= target:
            return best
        # fixed-point step: distance-weighted vertex mean
        wx = wy = wsum = 0.0
        for v in p.vertices:
            w = 1.0 / x.distance_to(v)
            wx += w * v.x
            wy += w * v.y
            wsum += w
        x = Point2(wx / wsum, wy / wsum)
    raise NoConvergence(
        f"median iteration did not reach residual {target:.2e} in {max_iter} steps",
        best,
    )


# -------------------------------------------------------- enclosing circle


def _circle_from_two(a: Point2, b: Point2) -> tuple[Point2, float]:
    c = Point2((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    return c, max(c.distance_to(a), c.distance_to(b))


def _circle_from_three(a: Point2, b: Point2, c: Point2) -> Optional[tuple[Point2, float]]:
    ox = (min(a.x, b.x, c.x) + max(a.x, b.x, c.x)) / 2.0
    oy = (min(a.y, b.y, c.y) + max(a.y, b.y, c.y)) / 2.0
    ax, ay = a.x - ox, a.y - oy
    bx, by = b.x - ox, b.y - oy
    cx, cy = c.x - ox, c.y - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    x = ox + (
        (ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by)
    ) / d
    y = oy + (
        (ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax)
    ) / d
    center = Point2(x, y)
    radius = max(center.distance_to(q) for q in (a, b, c))
    return center, radius


def _in_circle(center: Point2, radius: float, q: Point2) -> bool:
    return center.distance_to(q) <= radius * _IN_CIRCLE_SLACK


def chebyshev_center(p: Polygon, seed: int = 0) -> EnclosingCircle:
    """Smallest circle enclosing the vertex set.

    Randomized incremental (move-to-front) construction over a seeded
    shuffle of the vertices; exact up to floating point, deterministic for
    a fixed seed. The support holds 2 or 3 vertex indices on the boundary.
    """
    require_nondegenerate(p)
    order = list(range(p.n))
    random.Random(seed).shuffle(order)
    pts = p.vertices

    center: Optional[Point2] = None
    radius = 0.0
    support: tuple[int, ...] = ()

    for i, pi in enumerate(order):
        if center is not None and _in_circle(center, radius, pts[pi]):
            continue
        # circle through pts[pi] and the prefix
        center, radius, support = pts[pi], 0.0, (pi,)
        for j in range(i):
            pj = order[j]
            if _in_circle(center, radius, pts[pj]):
                continue
            # circle through pts[pi], pts[pj]
            center, radius = _circle_from_two(pts[pi], pts[pj])
            support = (pi, pj)
            for k in range(j):
                pk = order[k]
                if _in_circle(center, radius, pts[pk]):
                    continue
                cand = _circle_from_three(pts[pi], pts[pj], pts[pk])
                if cand is None:
                    continue
                center, radius = cand
                support = (pi, pj, pk)
    assert center is not None
    return EnclosingCircle(center, radius, tuple(sorted(support)))


# --------------------------------------------------------- equivariance check


def _solve(kind: str, p: Polygon) -> Point2:
    if kind == "median":
        return geometric_median(p, tol=1e-13, max_iter=200000).point
    if kind == "chebyshev":
        return chebyshev_center(p).center
    raise DomainViolation(f"unknown minimal-center kind {kind!r}")


def check_minimal_center(
    kind: str,
    p: Polygon,
    candidate: Point2,
    trials: int = 8,
    seed: int = 0,
) -> float:
    """Max distance between re-solved centers of transformed copies and the
    transformed candidate, over random relabelings, rigid motions, and
    scalings. Near zero exactly when the candidate is the true center."""
    rng = random.Random(seed)
    score = 0.0
    for _ in range(trials):
        sim = Similarity(
            math.exp(rng.uniform(math.log(0.5), math.log(2.0))),
            random_rigid_motion(rng),
        )
        alpha = DihedralElement(
            p.n, rng.randrange(p.n), rng.random() < 0.5
        )
        moved = Polygon(tuple(sim.apply(v) for v in p.vertices))
        moved = relabel(alpha, moved)
        resolved = _solve(kind, moved)
        expected = sim.apply(candidate)
        score = max(score, resolved.distance_to(expected))
    return score
