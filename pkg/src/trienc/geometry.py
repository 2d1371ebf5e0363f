"""Scale-normalized 2D primitives shared by the fitters, the solver and the oracle.

Conventions
-----------
* Polygons are counter-clockwise; a directed line keeps the polygon on its left.
* ``signed_point_line_distance(A, B, X)`` is positive when ``X`` lies to the
  right of ``A -> B``, i.e. on the outer side of a CCW supporting line.
* Parallelism and convexity tests compare the *sine* of the angle between two
  directions against ``tol_cross`` so the test does not depend on edge length.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateLine, InvalidPolygon, ParallelLines


@dataclass(frozen=True)
class Tolerances:
    tol_len: float = 1e-12
    tol_cross: float = 1e-12
    tol_residual: float = 1e-9
    tol_improve: float = 1e-12

    def __post_init__(self):
        for name in ("tol_len", "tol_cross", "tol_residual", "tol_improve"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")

    @classmethod
    def from_env(cls, base: "Tolerances | None" = None) -> "Tolerances":
        """Apply the ``TRIENC_TOL_RESIDUAL`` override, if set."""
        base = base or cls()
        raw = os.environ.get("TRIENC_TOL_RESIDUAL")
        if raw is None or raw.strip() == "":
            return base
        return replace(base, tol_residual=float(raw))


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x!r}, {self.y!r})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, other):
        return Point2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point2(self.x - other[0], self.y - other[1])

    def __mul__(self, k: float):
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float):
        return Point2(self.x / k, self.y / k)

    def __neg__(self):
        return Point2(-self.x, -self.y)

    def __getitem__(self, i):
        return (self.x, self.y)[i]

    def __len__(self):
        return 2

    def dot(self, other) -> float:
        return self.x * other[0] + self.y * other[1]

    def cross(self, other) -> float:
        return self.x * other[1] - self.y * other[0]

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


def P(x, y=None) -> Point2:
    """Shorthand constructor; accepts ``P(x, y)`` or ``P((x, y))``."""
    if y is None:
        x, y = x
    return Point2(float(x), float(y))


def cross2(u, v) -> float:
    """Signed area spanned by ``u`` and ``v``."""
    return u[0] * v[1] - u[1] * v[0]


def dot2(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1]


def sin_between(u, v) -> float:
    """Sine of the angle from ``u`` to ``v``; 0 when either is a zero vector."""
    nu = math.hypot(u[0], u[1])
    nv = math.hypot(v[0], v[1])
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return cross2(u, v) / (nu * nv)


@dataclass(frozen=True, slots=True)
class ParamLine:
    """Directed line ``l(t) = (through - origin) t + origin``."""

    origin: Point2
    through: Point2

    def __post_init__(self):
        if math.hypot(self.through.x - self.origin.x, self.through.y - self.origin.y) < DEFAULT_TOL.tol_len:
            raise DegenerateLine("line through coincident points", origin=self.origin)

    @classmethod
    def from_direction(cls, origin, direction) -> "ParamLine":
        o = P(origin)
        return cls(o, Point2(o.x + direction[0], o.y + direction[1]))

    @property
    def direction(self) -> Point2:
        return self.through - self.origin

    def __call__(self, t: float) -> Point2:
        return line_eval(self, t)

    def parameter_of(self, X) -> float:
        """Parameter of the orthogonal projection of ``X`` onto the line."""
        d = self.direction
        return dot2((X[0] - self.origin.x, X[1] - self.origin.y), d) / d.dot(d)

    def signed_distance(self, X) -> float:
        return signed_point_line_distance(self.origin, self.through, X)

    def reversed(self) -> "ParamLine":
        return ParamLine(self.through, self.origin)


def line_eval(l: ParamLine, t: float) -> Point2:
    o, q = l.origin, l.through
    return Point2((q.x - o.x) * t + o.x, (q.y - o.y) * t + o.y)


@dataclass(frozen=True, slots=True)
class Wedge:
    """Pair of directed arms ``S0 -> E0`` and ``S1 -> E1``."""

    s0: Point2
    e0: Point2
    s1: Point2
    e1: Point2
    tol: Tolerances = field(default=DEFAULT_TOL, compare=False, repr=False)

    def __post_init__(self):
        for a, b in ((self.s0, self.e0), (self.s1, self.e1)):
            if math.hypot(b.x - a.x, b.y - a.y) < self.tol.tol_len:
                raise DegenerateLine("wedge arm of zero length")

    @classmethod
    def from_apex(cls, C, A, B, tol: Tolerances = DEFAULT_TOL) -> "Wedge":
        """Wedge ``w(CA, CB)`` with apex ``C``."""
        C, A, B = P(C), P(A), P(B)
        return cls(C, A, C, B, tol)

    @property
    def arm0(self) -> ParamLine:
        return ParamLine(self.s0, self.e0)

    @property
    def arm1(self) -> ParamLine:
        return ParamLine(self.s1, self.e1)

    @property
    def degenerate(self) -> bool:
        return abs(sin_between(self.e0 - self.s0, self.e1 - self.s1)) <= self.tol.tol_cross

    @property
    def apex(self) -> Point2:
        if self.degenerate:
            raise ParallelLines("degenerate wedge has no apex")
        return intersect_lines(self.arm0, self.arm1, self.tol)

    def apex_form(self) -> tuple[Point2, Point2, Point2]:
        """``(C, A, B)``: apex and one point on each arm, beyond the apex.

        The arm points are the arm end points ``E0`` and ``E1``; the arms are
        taken to run from the apex towards them.
        """
        C = self.apex
        A, B = self.e0, self.e1
        if (A - C).norm() < self.tol.tol_len:
            A = C + (self.e0 - self.s0)
        if (B - C).norm() < self.tol.tol_len:
            B = C + (self.e1 - self.s1)
        return C, A, B


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (self.radius > DEFAULT_TOL.tol_len and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class Triangle:
    vA: Point2
    vB: Point2
    vC: Point2

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        return (self.vA, self.vB, self.vC)

    @property
    def a(self) -> float:
        return (self.vC - self.vB).norm()

    @property
    def b(self) -> float:
        return (self.vA - self.vC).norm()

    @property
    def c(self) -> float:
        return (self.vB - self.vA).norm()

    @property
    def s(self) -> float:
        return 0.5 * (self.a + self.b + self.c)

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    @property
    def signed_area(self) -> float:
        return 0.5 * cross2(self.vB - self.vA, self.vC - self.vA)

    def is_nondegenerate(self, tol: Tolerances = DEFAULT_TOL) -> bool:
        a, b, c = self.a, self.b, self.c
        return min(a, b, c) > tol.tol_len and self.s > max(a, b, c)

    def side_lines(self) -> tuple[ParamLine, ParamLine, ParamLine]:
        """Sides as directed lines keeping the interior on their left."""
        A, B, C = self.vertices
        if self.signed_area < 0:
            A, C = C, A
        return (ParamLine(A, B), ParamLine(B, C), ParamLine(C, A))

    def mapped(self, fn) -> "Triangle":
        return Triangle(*(P(fn(v)) for v in self.vertices))


def _turn_sines(xs: Sequence[float], ys: Sequence[float]) -> list[float]:
    n = len(xs)
    out = []
    for i in range(n):
        j, k = (i + 1) % n, (i + 2) % n
        u = (xs[j] - xs[i], ys[j] - ys[i])
        v = (xs[k] - xs[j], ys[k] - ys[j])
        out.append(sin_between(u, v))
    return out


def winding_turns(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Total exterior turning angle divided by 2 pi."""
    n = len(xs)
    total = 0.0
    for i in range(n):
        j, k = (i + 1) % n, (i + 2) % n
        u = (xs[j] - xs[i], ys[j] - ys[i])
        v = (xs[k] - xs[j], ys[k] - ys[j])
        total += math.atan2(cross2(u, v), dot2(u, v))
    return total / (2 * math.pi)


class ConvexPolygon:
    """Counter-clockwise, strictly convex vertex ring.

    Construction only checks; use :func:`trienc.polygon_io.validate_normalize`
    to repair orientation and merge colinear neighbours.
    """

    __slots__ = ("vertices", "xs", "ys", "array", "n")

    def __init__(self, vertices: Iterable, tol: Tolerances = DEFAULT_TOL):
        verts = tuple(P(v) for v in vertices)
        if len(verts) < 3:
            raise InvalidPolygon("polygon needs at least 3 vertices")
        xs = tuple(v.x for v in verts)
        ys = tuple(v.y for v in verts)
        sines = _turn_sines(xs, ys)
        if min(sines) <= tol.tol_cross:
            raise InvalidPolygon("ring is not strictly convex and counter-clockwise",
                                 worst_turn=min(sines))
        if abs(winding_turns(xs, ys) - 1.0) > 1e-6:
            raise InvalidPolygon("ring winds more than once")
        self.vertices = verts
        self.xs = xs
        self.ys = ys
        self.array = np.array([xs, ys]).T
        self.n = len(verts)

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i) -> Point2:
        return self.vertices[i % self.n]

    def __eq__(self, other):
        return isinstance(other, ConvexPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"ConvexPolygon(n={self.n})"

    def edge(self, i: int) -> ParamLine:
        return ParamLine(self[i], self[i + 1])

    def edge_normal_angle(self, i: int) -> float:
        """Angle of the outward normal of edge ``i``."""
        a, b = self[i], self[i + 1]
        return math.atan2(-(b.x - a.x), b.y - a.y)

    @property
    def perimeter(self) -> float:
        return sum((self[i + 1] - self[i]).norm() for i in range(self.n))

    @property
    def area(self) -> float:
        return 0.5 * sum(cross2(self[i], self[i + 1]) for i in range(self.n))

    def centroid(self) -> Point2:
        a = cx = cy = 0.0
        for i in range(self.n):
            p, q = self[i], self[i + 1]
            w = cross2(p, q)
            a += w
            cx += (p.x + q.x) * w
            cy += (p.y + q.y) * w
        return Point2(cx / (3 * a), cy / (3 * a))

    def transformed(self, fn) -> "ConvexPolygon":
        return ConvexPolygon([fn(v) for v in self.vertices])


def signed_point_line_distance(A, B, X) -> float:
    """``(B - A) x (A - X) / |B - A|``; positive on the right of ``A -> B``."""
    bx, by = B[0] - A[0], B[1] - A[1]
    length = math.hypot(bx, by)
    if length <= DEFAULT_TOL.tol_len:
        raise DegenerateLine("distance to a line through coincident points")
    return (bx * (A[1] - X[1]) - by * (A[0] - X[0])) / length


def intersect_lines(l1: ParamLine, l2: ParamLine, tol: Tolerances = DEFAULT_TOL) -> Point2:
    d1, d2 = l1.direction, l2.direction
    if abs(sin_between(d1, d2)) <= tol.tol_cross:
        raise ParallelLines("lines are parallel")
    w = l2.origin - l1.origin
    t = cross2(w, d2) / cross2(d1, d2)
    return line_eval(l1, t)


def supporting_line(poly: ConvexPolygon, normal_angle: float) -> ParamLine:
    """Supporting line whose outward normal points at ``normal_angle``."""
    nx, ny = math.cos(normal_angle), math.sin(normal_angle)
    best, best_h = 0, -math.inf
    for i, (x, y) in enumerate(zip(poly.xs, poly.ys)):
        h = x * nx + y * ny
        if h > best_h:
            best, best_h = i, h
    return ParamLine.from_direction(poly[best], (-ny, nx))


def is_tangent_to_polygon(l: ParamLine, poly: ConvexPolygon, tol: Tolerances = DEFAULT_TOL) -> bool:
    d = l.direction
    length = d.norm()
    o = l.origin
    dist = (d.x * (o.y - poly.array[:, 1]) - d.y * (o.x - poly.array[:, 0])) / length
    eps = tol.tol_residual
    touching = bool(np.any(np.abs(dist) <= eps))
    one_side = bool(np.all(dist <= eps)) or bool(np.all(dist >= -eps))
    return touching and one_side


def antipodal_vertex(poly: ConvexPolygon, edge_index: int) -> int:
    """Vertex farthest from the line of edge ``edge_index`` (smallest index on ties)."""
    a, b = poly[edge_index], poly[edge_index + 1]
    best, best_d = 0, -math.inf
    length = (b - a).norm()
    for i, v in enumerate(poly.vertices):
        d = cross2(b - a, v - a) / length
        if d > best_d * (1 + 1e-12) + 1e-15:
            best, best_d = i, d
    return best


@dataclass(frozen=True)
class Similarity:
    """``x -> (x - center) / scale``; maps a polygon to unit bounding-box diagonal."""

    cx: float
    cy: float
    scale: float

    @classmethod
    def normalizing(cls, points) -> "Similarity":
        pts = [P(p) for p in points]
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        if diag <= 0:
            raise InvalidPolygon("polygon has zero extent")
        area = cx = cy = 0.0
        n = len(pts)
        for i in range(n):
            p, q = pts[i], pts[(i + 1) % n]
            w = cross2(p, q)
            area += w
            cx += (p.x + q.x) * w
            cy += (p.y + q.y) * w
        if abs(area) > 1e-300:
            cx, cy = cx / (3 * area), cy / (3 * area)
        else:
            cx, cy = sum(xs) / n, sum(ys) / n
        return cls(cx, cy, diag)

    def forward(self, p) -> Point2:
        return Point2((p[0] - self.cx) / self.scale, (p[1] - self.cy) / self.scale)

    def inverse(self, p) -> Point2:
        return Point2(p[0] * self.scale + self.cx, p[1] * self.scale + self.cy)
