"""Planar primitives: points, polygons, motions, relabelings, distances.

Conventions used throughout the package:

* vertices are numbered 1..n in prose and command-line output, 0..n-1 in code;
* the cyclic successor map is rho(i) = i+1 (mod n), the reversal fixing
  vertex 1 is sigma(i) = 2+n-i (mod n), both with representatives in 1..n;
* signed area is positive for counterclockwise vertex order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainViolation

# Cross products smaller than this (relative to the operand magnitudes) are
# treated as zero when classifying collinearity and edge crossings.
COLLINEAR_EPS = 1e-12


def _require_finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class Point2:
    """A point (or displacement) in the plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _require_finite(self.x, "x")
        _require_finite(self.y, "y")

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, t: float) -> "Point2":
        return Point2(t * self.x, t * self.y)

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Polygon:
    """An ordered tuple of at least three vertices, indices taken cyclically."""

    vertices: tuple[Point2, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValueError("a polygon needs at least 3 vertices")

    @staticmethod
    def from_pairs(pairs) -> "Polygon":
        return Polygon(tuple(Point2(float(x), float(y)) for x, y in pairs))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point2:
        """Vertex by cyclic 0-based index."""
        return self.vertices[i % self.n]

    def shifted(self, k: int) -> "Polygon":
        """The same vertex cycle read starting from vertex k (0-based)."""
        k %= self.n
        return Polygon(self.vertices[k:] + self.vertices[:k])

    def perimeter(self) -> float:
        return sum(
            self.vertices[i].distance_to(self.vertex(i + 1)) for i in range(self.n)
        )

    def diameter(self) -> float:
        vs = self.vertices
        return max(
            vs[i].distance_to(vs[j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def vertex_mean(self) -> Point2:
        sx = sum(v.x for v in self.vertices)
        sy = sum(v.y for v in self.vertices)
        return Point2(sx / self.n, sy / self.n)


# --------------------------------------------------------------- relabeling


@dataclass(frozen=True)
class DihedralElement:
    """An element rho^a sigma^flip of the dihedral group acting on 1..n.

    Realized as the permutation i -> rho^a(sigma^flip(i)).
    """

    n: int
    exponent_a: int
    flip: bool

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("dihedral group needs n >= 3")
        object.__setattr__(self, "exponent_a", self.exponent_a % self.n)

    @staticmethod
    def identity(n: int) -> "DihedralElement":
        return DihedralElement(n, 0, False)

    @staticmethod
    def rho(n: int, power: int = 1) -> "DihedralElement":
        return DihedralElement(n, power, False)

    @staticmethod
    def sigma(n: int) -> "DihedralElement":
        return DihedralElement(n, 0, True)

    def apply(self, i: int) -> int:
        """Image of a 0-based index."""
        j = (-i) % self.n if self.flip else i
        return (j + self.exponent_a) % self.n

    def permutation(self) -> tuple[int, ...]:
        """The realized permutation as a tuple of 0-based images."""
        return tuple(self.apply(i) for i in range(self.n))

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("cannot compose elements of different groups")
        a = self.exponent_a + (-other.exponent_a if self.flip else other.exponent_a)
        return DihedralElement(self.n, a, self.flip ^ other.flip)

    def inverse(self) -> "DihedralElement":
        if self.flip:
            return self
        return DihedralElement(self.n, -self.exponent_a, False)


def relabel(alpha: DihedralElement, p: Polygon) -> Polygon:
    """Reindex vertices: vertex i of the result is vertex alpha(i) of the input."""
    if alpha.n != p.n:
        raise ValueError(f"relabeling acts on {alpha.n} indices, polygon has {p.n}")
    return Polygon(tuple(p.vertices[alpha.apply(i)] for i in range(p.n)))


def sigma_of(i: int, n: int) -> int:
    """The reversal fixing vertex 1, on 0-based indices: i -> (n - i) mod n."""
    return (-i) % n


# ------------------------------------------------------------------ motions


@dataclass(frozen=True)
class RigidMotion:
    """Rotation by `angle` about the origin followed by a translation.

    Orientation-preserving by construction; reflections are deliberately
    not representable here.
    """

    angle: float
    translation: Point2 = Point2(0.0, 0.0)

    def apply(self, v: Point2) -> Point2:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return Point2(
            c * v.x - s * v.y + self.translation.x,
            s * v.x + c * v.y + self.translation.y,
        )

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """self after other."""
        return RigidMotion(self.angle + other.angle, self.apply(other.translation))


@dataclass(frozen=True)
class Similarity:
    """Positive scaling about the origin followed by a rigid motion."""

    scale: float
    motion: RigidMotion

    def __post_init__(self) -> None:
        if not (self.scale > 0.0 and math.isfinite(self.scale)):
            raise ValueError("similarity scale must be positive and finite")

    def apply(self, v: Point2) -> Point2:
        return self.motion.apply(v.scaled(self.scale))


def apply_motion(m: RigidMotion | Similarity, p: Polygon) -> Polygon:
    return Polygon(tuple(m.apply(v) for v in p.vertices))


# -------------------------------------------------------------- distances


@dataclass(frozen=True)
class DistanceMatrix:
    """A symmetric matrix of pairwise distances with zero diagonal."""

    d: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.d)
        if n < 3:
            raise ValueError("distance matrix needs at least 3 points")
        for i, row in enumerate(self.d):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                _require_finite(v, f"d[{i}][{j}]")
                if v < 0.0:
                    raise ValueError(f"d[{i}][{j}] is negative")
            if row[i] != 0.0:
                raise ValueError(f"d[{i}][{i}] must be zero")
        for i in range(n):
            for j in range(i + 1, n):
                if self.d[i][j] != self.d[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")

    @staticmethod
    def from_rows(rows) -> "DistanceMatrix":
        return DistanceMatrix(tuple(tuple(float(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.d)

    def entry(self, i: int, j: int) -> float:
        """Distance by cyclic 0-based indices."""
        return self.d[i % self.n][j % self.n]

    def rotated(self, k: int) -> "DistanceMatrix":
        """Entry (i,j) of the result is entry (i+k, j+k) of the input."""
        n = self.n
        k %= n
        return DistanceMatrix(
            tuple(
                tuple(self.d[(i + k) % n][(j + k) % n] for j in range(n))
                for i in range(n)
            )
        )

    def permuted(self, perm: tuple[int, ...]) -> "DistanceMatrix":
        """Entry (i,j) of the result is entry (perm[i], perm[j]) of the input."""
        n = self.n
        return DistanceMatrix(
            tuple(tuple(self.d[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        )

    def max_entry(self) -> float:
        return max(max(row) for row in self.d)

    def scaled(self, t: float) -> "DistanceMatrix":
        return DistanceMatrix(tuple(tuple(t * v for v in row) for row in self.d))


def distance_matrix(p: Polygon) -> DistanceMatrix:
    n = p.n
    rows = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            dij = p.vertices[i].distance_to(p.vertices[j])
            rows[i][j] = dij
            rows[j][i] = dij
    return DistanceMatrix.from_rows(rows)


def _det(mat: list[list[float]]) -> float:
    """Determinant by minor expansion; exact-shape small matrices only."""
    m = len(mat)
    if m == 1:
        return mat[0][0]
    if m == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = 0.0
    for col in range(m):
        a = mat[0][col]
        if a == 0.0:
            continue
        minor = [row[:col] + row[col + 1 :] for row in mat[1:]]
        total += (-1.0) ** col * a * _det(minor)
    return total


def cayley_menger_quad(
    e12: float, e23: float, e34: float, e41: float, d13: float, d24: float
) -> float:
    """Bordered determinant of squared lengths for four labeled points.

    Arguments are the four consecutive side lengths and the two diagonals of
    a labeled quadrilateral. The determinant vanishes exactly when some
    planar placement realizes all six lengths; it scales as t**8 under
    scaling every length by t.
    """
    for name, v in (("e12", e12), ("e23", e23), ("e34", e34), ("e41", e41),
                    ("d13", d13), ("d24", d24)):
        _require_finite(v, name)
        if v < 0.0:
            raise ValueError(f"{name} is negative")
    q12, q23, q34, q41 = e12 * e12, e23 * e23, e34 * e34, e41 * e41
    q13, q24 = d13 * d13, d24 * d24
    mat = [
        [0.0, 1.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, q12, q13, q41],
        [1.0, q12, 0.0, q23, q24],
        [1.0, q13, q23, 0.0, q34],
        [1.0, q41, q24, q34, 0.0],
    ]
    return _det(mat)


# ------------------------------------------------------------ classification


@dataclass(frozen=True)
class PolygonShape:
    """Shape summary: degeneracy, simplicity, convexity, signed area."""

    nondegenerate: bool
    simple: bool
    convex: bool
    signed_area: float


def signed_area(p: Polygon) -> float:
    """Shoelace area; positive for counterclockwise vertex order."""
    total = 0.0
    for i in range(p.n):
        a = p.vertices[i]
        b = p.vertex(i + 1)
        total += a.x * b.y - b.x * a.y
    return 0.5 * total


def _orient(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the turn a->b->c with a relative collinearity threshold."""
    u = b - a
    v = c - a
    cr = u.cross(v)
    if abs(cr) <= COLLINEAR_EPS * u.norm() * v.norm():
        return 0
    return 1 if cr > 0.0 else -1


def _on_segment(a: Point2, b: Point2, q: Point2) -> bool:
    """Whether q (already collinear with a,b) lies within the segment box."""
    return (
        min(a.x, b.x) - COLLINEAR_EPS <= q.x <= max(a.x, b.x) + COLLINEAR_EPS
        and min(a.y, b.y) - COLLINEAR_EPS <= q.y <= max(a.y, b.y) + COLLINEAR_EPS
    )


def _segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def is_nondegenerate(p: Polygon) -> bool:
    vs = p.vertices
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if vs[i].distance_to(vs[j]) == 0.0:
                return False
    return True


def is_simple(p: Polygon) -> bool:
    """Whether no two non-adjacent edges intersect.

    Adjacent edges share an endpoint by construction; that contact does not
    count. Edge pairs are adjacent when their indices differ by 1 mod n.
    """
    n = p.n
    for i in range(n):
        a, b = p.vertices[i], p.vertex(i + 1)
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            c, dd = p.vertices[j], p.vertex(j + 1)
            if _segments_intersect(a, b, c, dd):
                return False
    return True


def is_convex(p: Polygon) -> bool:
    """Same-side test: for each edge, all other vertices strictly on one side."""
    n = p.n
    for i in range(n):
        a, b = p.vertices[i], p.vertex(i + 1)
        side = 0
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            o = _orient(a, b, p.vertices[j])
            if o == 0:
                return False
            if side == 0:
                side = o
            elif o != side:
                return False
    return True


def classify(p: Polygon) -> PolygonShape:
    nondeg = is_nondegenerate(p)
    simple = is_simple(p) if nondeg else False
    convex = is_convex(p) if nondeg else False
    return PolygonShape(nondeg, simple, convex, signed_area(p))


def require_nondegenerate(p: Polygon, what: str = "polygon") -> None:
    if not is_nondegenerate(p):
        raise DomainViolation(f"{what} has coincident vertices")
