"""Coincidence tests: which polygons make a center function constant.

Three probe functions drive the classification:

* the cosine of the angle at vertex 1 (equal across shifts on convex
  polygons exactly when the polygon is equiangular);
* for odd n, the side length between the two middle vertices of the cycle
  (equal across shifts exactly when the polygon is equilateral);
* for even n, the skip-one diagonal from vertex n/2 (equal across shifts
  on the rectangle-like family).

Direct angle/side measurement provides the independent oracle the probe
results are compared against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateVertex, ParityMismatch
from .framework import CenterFunction, VertexCenterFunction
from .geometry import Polygon, distance_matrix, is_convex, is_nondegenerate, signed_area

# Cyclic values within this band (relative, floored at unit scale) coincide.
COINCIDENCE_TOL = 1e-9
# Angle/side oracles run looser than the algebraic probes.
ORACLE_TOL = 1e-7


@dataclass(frozen=True)
class CoincidenceReport:
    values: tuple[float, ...]
    coincident: bool
    spread: float


@dataclass(frozen=True)
class CharacterizationReport:
    n: int
    convex: bool
    equiangular: bool
    equilateral: bool
    regular: bool
    f1_coincident: bool
    f2_coincident: Optional[bool]  # odd n only
    f3_coincident: Optional[bool]  # even n only
    consistent_with_theorems: bool


# ------------------------------------------------------------------- probes


def f1_cosine(p: Polygon) -> float:
    """Cosine of the angle at vertex 1 between the edges to vertices 2 and n."""
    u = p.vertices[1] - p.vertices[0]
    w = p.vertices[-1] - p.vertices[0]
    nu, nw = u.norm(), w.norm()
    if nu == 0.0 or nw == 0.0:
        raise DegenerateVertex("vertex 1 coincides with a neighbour")
    return u.dot(w) / (nu * nw)


def f2_odd(p: Polygon) -> float:
    """Length of the side between the two middle vertices; odd n only."""
    if p.n % 2 == 0:
        raise ParityMismatch(f"needs odd vertex count, got {p.n}")
    mid = (p.n + 1) // 2  # 1-based middle vertex
    return p.vertices[mid - 1].distance_to(p.vertices[mid])


def f3_even(p: Polygon) -> float:
    """Length of the diagonal from vertex n/2 to vertex n/2 + 2; even n only."""
    if p.n % 2 == 1:
        raise ParityMismatch(f"needs even vertex count, got {p.n}")
    half = p.n // 2  # 1-based
    return p.vertices[half - 1].distance_to(p.vertex(half + 1))


F1 = VertexCenterFunction("angle-cosine", f1_cosine)
F2_ODD = VertexCenterFunction("middle-side", f2_odd)
F3_EVEN = VertexCenterFunction("half-skip-diagonal", f3_even)


def coincidence(
    fg: CenterFunction, p: Polygon, tol: float = COINCIDENCE_TOL
) -> CoincidenceReport:
    """Evaluate the cyclic coordinates and test whether they all agree.

    The spread is (max - min) relative to the largest magnitude, floored at
    unit scale so value sets hovering at zero (e.g. right-angle cosines)
    compare absolutely instead of blowing up.
    """
    if isinstance(fg, VertexCenterFunction):
        values = tuple(fg.evaluate(p.shifted(k)) for k in range(p.n))
    else:
        D = distance_matrix(p)
        values = tuple(fg.evaluate(D.rotated(k)) for k in range(D.n))
    largest = max(abs(v) for v in values)
    spread = (max(values) - min(values)) / max(1.0, largest)
    return CoincidenceReport(values, spread <= tol, spread)


# ------------------------------------------------------------------ oracles


def interior_angles(p: Polygon) -> tuple[float, ...]:
    """Turn-based interior angles; reflex vertices read above pi.

    The traversal orientation (sign of the shoelace area, counterclockwise
    positive) converts each signed turn into an interior angle, so a valley
    vertex of a non-convex outline is reported as its reflex angle rather
    than its unsigned opening.
    """
    orient = 1.0 if signed_area(p) >= 0.0 else -1.0
    out = []
    for i in range(p.n):
        e_in = p.vertices[i] - p.vertex(i - 1)
        e_out = p.vertex(i + 1) - p.vertices[i]
        turn = math.atan2(e_in.cross(e_out), e_in.dot(e_out))
        angle = math.pi - orient * turn
        out.append(angle)
    return tuple(out)


def side_lengths(p: Polygon) -> tuple[float, ...]:
    return tuple(p.vertices[i].distance_to(p.vertex(i + 1)) for i in range(p.n))


def _relative_spread(values: tuple[float, ...]) -> float:
    largest = max(abs(v) for v in values)
    if largest == 0.0:
        return 0.0
    return (max(values) - min(values)) / largest


def predicates(p: Polygon, tol: float = ORACLE_TOL) -> dict[str, bool]:
    """Directly measured equiangular / equilateral / regular flags."""
    equiangular = _relative_spread(interior_angles(p)) <= tol
    equilateral = _relative_spread(side_lengths(p)) <= tol
    return {
        "equiangular": equiangular,
        "equilateral": equilateral,
        "regular": equiangular and equilateral,
    }


# ------------------------------------------------------------ full report


def characterize(
    p: Polygon,
    tol: float = COINCIDENCE_TOL,
    oracle_tol: float = ORACLE_TOL,
) -> CharacterizationReport:
    """Probe coincidences next to measured shape predicates.

    Consistency cross-checks, each skipped where it does not apply:

    * convex and non-degenerate: angle-cosine coincidence iff equiangular;
    * odd n: middle-side coincidence iff equilateral;
    * equiangular quadrilaterals: the half-skip diagonal must coincide.
    """
    if not is_nondegenerate(p):
        raise DegenerateVertex("characterization needs pairwise distinct vertices")
    flags = predicates(p, oracle_tol)
    convex = is_convex(p)
    f1 = coincidence(F1, p, tol).coincident
    f2 = coincidence(F2_ODD, p, tol).coincident if p.n % 2 == 1 else None
    f3 = coincidence(F3_EVEN, p, tol).coincident if p.n % 2 == 0 else None

    consistent = True
    if convex:
        consistent &= f1 == flags["equiangular"]
    if p.n % 2 == 1:
        consistent &= f2 == flags["equilateral"]
    if p.n == 4 and flags["equiangular"]:
        consistent &= bool(f3)

    return CharacterizationReport(
        n=p.n,
        convex=convex,
        equiangular=flags["equiangular"],
        equilateral=flags["equilateral"],
        regular=flags["regular"],
        f1_coincident=f1,
        f2_coincident=f2,
        f3_coincident=f3,
        consistent_with_theorems=consistent,
    )
