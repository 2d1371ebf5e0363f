"""Minimum-perimeter triangle enclosing a convex polygon.

Every edge is tried as a flush side.  For a given flush (base) edge the second
side is bootstrapped from the parallel strip spanned by the base line and the
antipodal vertex; then the wedge formed by the base and the newest side is
closed optimally, and the older non-base side is replaced, until the perimeter
stops decreasing.

Closing a wedge looks along the polygon chain facing away from the apex for
the contact element:

* an edge is the contact when the excircle of the triangle it cuts from the
  wedge touches the edge itself rather than its extension;
* a vertex is the contact when the tangent at the vertex to the larger circle
  inscribed in the wedge through it supports the polygon.

In ``linear`` mode the chain is walked from a remembered position, using only
the two neighbours of a vertex to decide the walking direction; positions
carry over from one base edge to the next.  ``quadratic_safe`` mode rescans
the whole chain for every closing with the public fitters and a global
tangency test, and keeps the smallest-perimeter acceptance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .circle_fit import (
    _degenerate_frame,
    _degenerate_point_params,
    _wedge_bisector,
    _wedge_point_roots,
    fit_degenerate_wedge_line,
    fit_degenerate_wedge_point,
    fit_wedge_line_excircle,
    fit_wedge_point_incircle,
    tangent_point,
)
from .errors import GeometryError, InvalidPolygon, NoClosingSide
from .geometry import (
    DEFAULT_TOL,
    Circle,
    ConvexPolygon,
    ParamLine,
    Point2,
    Similarity,
    Tolerances,
    Triangle,
    Wedge,
    is_tangent_to_polygon,
)

LINEAR = "linear"
QUADRATIC_SAFE = "quadratic_safe"
MODES = (LINEAR, QUADRATIC_SAFE)
MAX_FLIPS = 64

FLUSH = "flush"
VERTEX = "vertex"

TWO_PI = 2.0 * math.pi
ANGLE_EPS = 1e-12


@dataclass(frozen=True)
class ClosingSide:
    """A triangle side touching the polygon along an edge or at a vertex.

    ``line`` keeps the polygon on its left.  ``witness`` is the circle that
    certifies the contact: the excircle for a flush edge (when computed), the
    larger wedge circle through the vertex for a vertex tangent.
    """

    kind: str
    index: int
    line: ParamLine
    witness: Optional[Circle] = None


@dataclass
class SolveReport:
    """Result of :func:`solve`.

    ``best``, ``perimeter``, ``per_edge_perimeters`` and ``sides`` are in input
    coordinates; ``normalized_perimeter`` and ``flip_traces`` are in the
    normalized frame given by ``transform``.
    """

    best: Triangle
    perimeter: float
    flush_edge: int
    per_edge_perimeters: list
    flip_counts: list
    advance_steps: int
    mode: str
    normalized_perimeter: float = math.nan
    flip_traces: list = field(default_factory=list, repr=False)
    max_flips_hit: list = field(default_factory=list)
    sides: tuple = ()
    transform: Optional[Similarity] = None


class _Side:
    __slots__ = ("kind", "index", "px", "py", "dx", "dy", "circle")

    def __init__(self, kind, index, px, py, dx, dy, circle=None):
        self.kind = kind
        self.index = index
        self.px = px
        self.py = py
        self.dx = dx
        self.dy = dy
        self.circle = circle

    def first(self, n):
        return self.index

    def last(self, n):
        return (self.index + 1) % n if self.kind == FLUSH else self.index

    def same_as(self, other):
        return other is not None and self.kind == other.kind and self.index == other.index \
            and self.dx == other.dx and self.dy == other.dy

    def public(self) -> ClosingSide:
        line = ParamLine(Point2(self.px, self.py), Point2(self.px + self.dx, self.py + self.dy))
        wit = None
        if self.circle is not None:
            wit = Circle(Point2(self.circle[0], self.circle[1]), self.circle[2])
        return ClosingSide(self.kind, self.index, line, wit)


def _meet(s, t):
    den = s.dx * t.dy - s.dy * t.dx
    k = ((t.px - s.px) * t.dy - (t.py - s.py) * t.dx) / den
    return s.px + s.dx * k, s.py + s.dy * k


def _unit(x, y):
    h = math.hypot(x, y)
    return x / h, y / h


class _Sweep:
    """Per-polygon solver state (normalized coordinates)."""

    def __init__(self, poly: ConvexPolygon, mode: str, tol: Tolerances, max_flips: int):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.poly = poly
        self.xs = poly.xs
        self.ys = poly.ys
        self.n = poly.n
        self.mode = mode
        self.tol = tol
        self.max_flips = max_flips
        self.steps = 0
        self.anti = None
        self.hints = {}
        self.normal_angles = [poly.edge_normal_angle(i) % TWO_PI for i in range(self.n)]

    # -- small helpers ---------------------------------------------------

    def base_side(self, i):
        n, xs, ys = self.n, self.xs, self.ys
        j = (i + 1) % n
        return _Side(FLUSH, i, xs[i], ys[i], xs[j] - xs[i], ys[j] - ys[i])

    def edge_side(self, k, circle=None):
        side = self.base_side(k % self.n)
        side.circle = circle
        return side

    def vertex_side(self, k, cx, cy, r):
        vx, vy = self.xs[k], self.ys[k]
        # outward normal points from the vertex to the circle centre
        nx, ny = cx - vx, cy - vy
        dx, dy = _unit(-ny, nx)
        return _Side(VERTEX, k, vx, vy, dx, dy, (cx, cy, r))

    def perimeter(self, base, f, b):
        x0, y0 = _meet(base, b)
        x1, y1 = _meet(base, f)
        x2, y2 = _meet(f, b)
        return math.hypot(x1 - x0, y1 - y0) + math.hypot(x2 - x1, y2 - y1) + math.hypot(x0 - x2, y0 - y2)

    def triangle(self, base, f, b):
        return (_meet(base, b), _meet(base, f), _meet(f, b))

    def neighbour_status(self, k, nx, ny):
        """+1: next vertex is beyond the tangent, -1: previous is, 0: neither."""
        n, xs, ys = self.n, self.xs, self.ys
        vx, vy = xs[k], ys[k]
        j = (k + 1) % n
        h = k - 1
        fwd = (xs[j] - vx) * nx + (ys[j] - vy) * ny
        bwd = (xs[h] - vx) * nx + (ys[h] - vy) * ny
        if fwd > 0.0 and fwd >= bwd:
            return 1
        if bwd > 0.0:
            return -1
        return 0

    # -- wedge geometry --------------------------------------------------

    @staticmethod
    def wedge_frame(base, other):
        """Apex, unit arm directions (towards the polygon) and bisector data."""
        cx, cy = _meet(base, other)
        # outward normal of a side with direction (dx, dy) is (dy, -dx)
        ub = _unit(base.dx, base.dy)
        if other.dy * ub[0] - other.dx * ub[1] > 0:
            ub = (-ub[0], -ub[1])
        uo = _unit(other.dx, other.dy)
        if base.dy * uo[0] - base.dx * uo[1] > 0:
            uo = (-uo[0], -uo[1])
        C = (cx, cy)
        _, dc, k, qa = _wedge_bisector(C, (cx + ub[0], cy + ub[1]), (cx + uo[0], cy + uo[1]))
        return C, ub, uo, dc, k, qa

    def wedge_vertex(self, k, frame):
        C, _, _, dc, rk, qa = frame
        vx, vy = self.xs[k], self.ys[k]
        _, big, _ = _wedge_point_roots(C, dc, qa, (vx, vy))
        ix = C[0] + dc[0] * big
        iy = C[1] + dc[1] * big
        return self.neighbour_status(k, ix - vx, iy - vy), (ix, iy, rk * big)

    def strip_vertex(self, k, frame):
        I, d, r, side = frame
        t_lo, t_hi = _degenerate_point_params(I, d, r, (self.xs[k], self.ys[k]))
        t = t_hi if side > 0 else t_lo
        ix, iy = I[0] + d[0] * t, I[1] + d[1] * t
        return self.neighbour_status(k, ix - self.xs[k], iy - self.ys[k]), (ix, iy, r)

    # -- chain walk (linear mode) ----------------------------------------

    def walk(self, p, q, key, probe, frame):
        """Contact element on the chain ``p -> q`` (CCW), starting near a hint."""
        n = self.n
        m = (q - p) % n - 1
        if m <= 0:
            self.steps += 1
            return self.edge_side(p)
        hint = self.hints.get(key)
        j = 1 if hint is None else (hint - p) % n
        if j < 1 or j > m:
            j = m if 0 < j - m < n - j + 1 else 1
        k = (p + j) % n
        self.steps += 1
        st, circ = probe(k, frame)
        if st == 0:
            return self.vertex_side(k, *circ)
        if st > 0:
            while True:
                if j == m:
                    return self.edge_side(p + j)
                j += 1
                k = (p + j) % n
                self.steps += 1
                st, circ = probe(k, frame)
                if st == 0:
                    return self.vertex_side(k, *circ)
                if st < 0:
                    return self.edge_side(p + j - 1)
        while True:
            if j == 1:
                return self.edge_side(p)
            j -= 1
            k = (p + j) % n
            self.steps += 1
            st, circ = probe(k, frame)
            if st == 0:
                return self.vertex_side(k, *circ)
            if st > 0:
                return self.edge_side(p + j)

    # -- chain scan (quadratic_safe mode) --------------------------------

    def arc_chain(self, a_from, a_to):
        """Edges whose outward normal lies strictly inside the CCW arc, and
        vertices between two such edges, in chain order."""
        span = (a_to - a_from) % TWO_PI
        inside = [ANGLE_EPS < (a - a_from) % TWO_PI < span - ANGLE_EPS for a in self.normal_angles]
        n = self.n
        start = next((k for k in range(n) if inside[k] and not inside[k - 1]), None)
        if start is None:
            return [], []
        edges = []
        k = start
        while inside[k % n] and len(edges) < n:
            edges.append(k % n)
            k += 1
        verts = [(e + 1) % n for e in edges[:-1]]
        return edges, verts

    def scan(self, edges, verts, accept_edge, accept_vertex, cost):
        """All accepted candidates along the chain, smallest cost first."""
        found = []
        order = []
        for pos, e in enumerate(edges):
            order.append((2 * pos, FLUSH, e))
            if pos < len(verts):
                order.append((2 * pos + 1, VERTEX, verts[pos]))
        for pos, kind, k in order:
            self.steps += 1
            side = accept_edge(k) if kind == FLUSH else accept_vertex(k)
            if side is not None:
                found.append((cost(side), pos, side))
        if not found:
            raise NoClosingSide("no chain element satisfies the closing conditions")
        found.sort(key=lambda item: (item[0], item[1]))
        return found[0][2]

    def supports_outside(self, side):
        """Global tangency of a vertex-tangent side with its circle outside."""
        line = ParamLine(Point2(side.px, side.py), Point2(side.px + side.dx, side.py + side.dy))
        if not is_tangent_to_polygon(line, self.poly, self.tol):
            return False
        cx, cy, _ = side.circle
        outer = side.dy * (cx - side.px) - side.dx * (cy - side.py)
        return outer > 0

    def in_segment(self, k, circle: Circle):
        n = self.n
        a = (self.xs[k], self.ys[k])
        b = (self.xs[(k + 1) % n], self.ys[(k + 1) % n])
        foot = tangent_point(circle, a, b)
        ab = (b[0] - a[0], b[1] - a[1])
        u = ((foot.x - a[0]) * ab[0] + (foot.y - a[1]) * ab[1]) / (ab[0] ** 2 + ab[1] ** 2)
        eps = self.tol.tol_residual
        return -eps <= u <= 1 + eps

    # -- closing a wedge -------------------------------------------------

    def close(self, base, other, role, stage=0):
        """Optimal third side for the wedge (base, other).

        ``role`` is ``"F"`` when looking for the forward side (other is the
        backward one) and ``"B"`` otherwise.  ``stage`` names the step of the
        per-edge run; each stage keeps its own walk position, which moves
        monotonically as the base edge advances.
        """
        n = self.n
        i = base.index
        frame = self.wedge_frame(base, other)
        if self.mode == LINEAR:
            if role == "F":
                p, q = (i + 1) % n, other.first(n)
            else:
                p, q = other.last(n), i
            key = (role, stage)
            side = self.walk(p, q, key, self.wedge_vertex, frame)
            self.hints[key] = side.index
            return side
        n_other = math.atan2(-other.dx, other.dy) % TWO_PI
        n_base = self.normal_angles[i]
        if role == "F":
            edges, verts = self.arc_chain(n_base, n_other)
        else:
            edges, verts = self.arc_chain(n_other, n_base)
        return self.scan_wedge(frame, edges, verts, lambda side: self.perimeter(base, other, side))

    def scan_wedge(self, frame, edges, verts, cost):
        C, u1, u2 = frame[:3]
        wedge = Wedge.from_apex(C, (C[0] + u1[0], C[1] + u1[1]), (C[0] + u2[0], C[1] + u2[1]), self.tol)
        arm1 = _Side(FLUSH, -1, C[0], C[1], u1[0], u1[1])
        arm2 = _Side(FLUSH, -1, C[0], C[1], u2[0], u2[1])

        def accept_vertex(k):
            v = (self.xs[k], self.ys[k])
            # cheap local screen before the global tangency test
            if self.neighbour_status(k, *_radial(self.wedge_vertex(k, frame)[1], v)) != 0:
                return None
            try:
                fit = fit_wedge_point_incircle(wedge, v, self.tol)
            except GeometryError:
                return None
            c = fit.selected
            side = self.vertex_side(k, c.center.x, c.center.y, c.radius)
            return side if self.supports_outside(side) else None

        def accept_edge(k):
            e = self.edge_side(k)
            try:
                A = _meet(e, arm1)
                B = _meet(e, arm2)
                w = Wedge.from_apex(C, A, B, self.tol)
                fit = fit_wedge_line_excircle(w, A, B, self.tol)
            except (GeometryError, ZeroDivisionError):
                return None
            if not self.in_segment(k, fit.selected):
                return None
            e.circle = (fit.selected.center.x, fit.selected.center.y, fit.selected.radius)
            return e

        return self.scan(edges, verts, accept_edge, accept_vertex, cost)

    # -- bootstrap ---------------------------------------------------------

    def antipodal_range(self, i):
        """First and last vertex (CCW from ``i + 1``) farthest from edge ``i``."""
        n, xs, ys = self.n, self.xs, self.ys
        j = (i + 1) % n
        ex, ey = xs[j] - xs[i], ys[j] - ys[i]
        scale = math.hypot(ex, ey)

        def height(k):
            k %= n
            return (ex * (ys[k] - ys[i]) - ey * (xs[k] - xs[i])) / scale

        eps = self.tol.tol_residual
        if self.mode == LINEAR:
            a = self.anti
            if a is None or (a - j) % n == n - 1:
                a = j
            a %= n
            while height(a + 1) > height(a) + eps:
                a = (a + 1) % n
                self.steps += 1
            self.anti = a
        else:
            hs = [height(k) for k in range(n)]
            top = max(hs)
            a = j
            while hs[a] < top - eps:
                a = (a + 1) % n
                self.steps += 1
        last = a
        while height(last + 1) >= height(a) - eps and (last + 1) % n != i:
            last = (last + 1) % n
        return a, last, height(a)

    def close_strip(self, base, top_first, top_last, side_sign):
        """Closing side of the parallel strip on the forward (+1) or backward (-1) chain."""
        n, xs, ys = self.n, self.xs, self.ys
        i = base.index
        s0 = (xs[i], ys[i])
        e0 = (xs[(i + 1) % n], ys[(i + 1) % n])
        s1 = (xs[top_first], ys[top_first])
        e1 = (s1[0] + base.dx, s1[1] + base.dy)
        I, d, r = _degenerate_frame(s0, e0, s1, e1)
        frame = (I, d, r, side_sign)
        if self.mode == LINEAR:
            if side_sign > 0:
                p, q, key = (i + 1) % n, top_first, "sF"
            else:
                p, q, key = top_last, i, "sB"
            side = self.walk(p, q, key, self.strip_vertex, frame)
            self.hints[key] = side.index
            return side
        na = self.normal_angles[i]
        if side_sign > 0:
            edges, verts = self.arc_chain(na, na + math.pi)
        else:
            edges, verts = self.arc_chain(na + math.pi, na)
        wedge = Wedge(Point2(*s0), Point2(*e0), Point2(*s1), Point2(*e1), self.tol)

        def accept_vertex(k):
            v = (xs[k], ys[k])
            if self.neighbour_status(k, *_radial(self.strip_vertex(k, frame)[1], v)) != 0:
                return None
            try:
                fit = fit_degenerate_wedge_point(wedge, v, side_sign, self.tol)
            except GeometryError:
                return None
            c = fit.selected
            side = self.vertex_side(k, c.center.x, c.center.y, c.radius)
            return side if self.supports_outside(side) else None

        def accept_edge(k):
            e = self.edge_side(k)
            a = (xs[k], ys[k])
            b = (xs[(k + 1) % n], ys[(k + 1) % n])
            try:
                fit = fit_degenerate_wedge_line(wedge, a, b, side_sign, self.tol)
            except GeometryError:
                return None
            if not self.in_segment(k, fit.selected):
                return None
            e.circle = (fit.selected.center.x, fit.selected.center.y, fit.selected.radius)
            return e

        # the strip has no finite perimeter; the first acceptance in chain order wins
        return self.scan(edges, verts, accept_edge, accept_vertex, lambda side: 0.0)

    def bootstrap(self, i):
        """Initial (forward, backward, newest) sides for base edge ``i``."""
        base = self.base_side(i)
        top_first, top_last, _ = self.antipodal_range(i)
        options = []
        f0 = self.close_strip(base, top_first, top_last, +1)
        b0 = self.close(base, f0, "B", "boot")
        options.append((self.perimeter(base, f0, b0), 0, f0, b0, "B"))
        b1 = self.close_strip(base, top_first, top_last, -1)
        f1 = self.close(base, b1, "F", "boot")
        options.append((self.perimeter(base, f1, b1), 1, f1, b1, "F"))
        options.sort(key=lambda o: (o[0], o[1]))
        perim, _, f, b, newest = options[0]
        return base, f, b, newest, perim

    # -- per-edge run ----------------------------------------------------

    def run_edge(self, i):
        base, f, b, newest, perim = self.bootstrap(i)
        trace = [perim]
        flips = 0
        hit_cap = False
        while True:
            if flips >= self.max_flips:
                hit_cap = True
                break
            if newest == "B":
                cand_f, cand_b = self.close(base, b, "F", flips), b
            else:
                cand_f, cand_b = f, self.close(base, f, "B", flips)
            p = self.perimeter(base, cand_f, cand_b)
            trace.append(p)
            if p < perim:
                f, b = cand_f, cand_b
                newest = "F" if newest == "B" else "B"
            if p >= perim - self.tol.tol_improve:
                perim = min(p, perim)
                break
            perim = p
            flips += 1
        return (base, f, b), perim, flips, trace, hit_cap


def _radial(circle, v):
    return circle[0] - v[0], circle[1] - v[1]


def _prepare(poly: ConvexPolygon):
    sim = Similarity.normalizing(poly.vertices)
    return sim, poly.transformed(sim.forward)


def _denormalized(side: ClosingSide, sim: Similarity) -> ClosingSide:
    line = ParamLine(sim.inverse(side.line.origin), sim.inverse(side.line.through))
    wit = side.witness
    if wit is not None:
        wit = Circle(sim.inverse(wit.center), wit.radius * sim.scale)
    return ClosingSide(side.kind, side.index, line, wit)


def _triangle_of(points, sim: Similarity) -> Triangle:
    return Triangle(*(sim.inverse(p) for p in points))


def solve(poly: ConvexPolygon, mode: str = LINEAR, tol: Tolerances = DEFAULT_TOL,
          max_flips: int = MAX_FLIPS) -> SolveReport:
    """Minimum-perimeter enclosing triangle of ``poly`` with an audit trail."""
    if not isinstance(poly, ConvexPolygon):
        raise InvalidPolygon("solve expects a validated ConvexPolygon")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    sim, npoly = _prepare(poly)
    if poly.n == 3:
        tri = Triangle(*poly.vertices)
        return SolveReport(tri, tri.perimeter, 0, [tri.perimeter] * 3, [0, 0, 0], 0, mode,
                           normalized_perimeter=tri.perimeter / sim.scale,
                           flip_traces=[[tri.perimeter / sim.scale]] * 3, transform=sim)
    sweep = _Sweep(npoly, mode, tol, max_flips)
    best = None
    per_edge, flip_counts, traces, capped = [], [], [], []
    for i in range(npoly.n):
        sides, perim, flips, trace, hit_cap = sweep.run_edge(i)
        per_edge.append(perim * sim.scale)
        flip_counts.append(flips)
        traces.append(trace)
        if hit_cap:
            capped.append(i)
        if best is None or perim < best[0]:
            best = (perim, i, sides)
    perim, edge, (base, f, b) = best
    tri = _triangle_of(sweep.triangle(base, f, b), sim)
    public = tuple(_denormalized(s.public(), sim) for s in (base, f, b))
    return SolveReport(tri, tri.perimeter, edge, per_edge, flip_counts, sweep.steps, mode,
                       normalized_perimeter=perim, flip_traces=traces, max_flips_hit=capped,
                       sides=public, transform=sim)


def solve_for_edge(poly: ConvexPolygon, edge_index: int, mode: str = QUADRATIC_SAFE,
                   tol: Tolerances = DEFAULT_TOL, max_flips: int = MAX_FLIPS):
    """Best triangle with edge ``edge_index`` flush, and the number of improving flips."""
    sim, npoly = _prepare(poly)
    sweep = _Sweep(npoly, mode, tol, max_flips)
    (base, f, b), _, flips, _, _ = sweep.run_edge(edge_index % npoly.n)
    return _triangle_of(sweep.triangle(base, f, b), sim), flips


def bootstrap(poly: ConvexPolygon, edge_index: int, mode: str = QUADRATIC_SAFE,
              tol: Tolerances = DEFAULT_TOL):
    """Bootstrap wedge for a flush edge: ``(Wedge, ClosingSide)``.

    The wedge is formed by the base side and the bootstrapped closing side; its
    arms point from the apex towards the polygon.
    """
    sweep = _Sweep(poly, mode, tol, MAX_FLIPS)
    i = edge_index % poly.n
    base = sweep.base_side(i)
    top_first, top_last, _ = sweep.antipodal_range(i)
    choices = []
    f0 = sweep.close_strip(base, top_first, top_last, +1)
    choices.append((sweep.perimeter(base, f0, sweep.close(base, f0, "B")), 0, f0))
    b1 = sweep.close_strip(base, top_first, top_last, -1)
    choices.append((sweep.perimeter(base, sweep.close(base, b1, "F"), b1), 1, b1))
    choices.sort(key=lambda c: (c[0], c[1]))
    side = choices[0][2]
    C, u1, u2 = sweep.wedge_frame(base, side)[:3]
    wedge = Wedge.from_apex(C, (C[0] + u1[0], C[1] + u1[1]), (C[0] + u2[0], C[1] + u2[1]), tol)
    return wedge, side.public()


def close_wedge(poly: ConvexPolygon, wedge: Wedge, hint: Optional[int] = None,
                mode: str = LINEAR, tol: Tolerances = DEFAULT_TOL) -> ClosingSide:
    """Optimal side closing ``wedge`` around ``poly``.

    The arms of ``wedge`` must support ``poly`` and the polygon must lie
    inside the wedge.  ``hint`` is the vertex index where the linear walk
    starts; ``quadratic_safe`` scans the whole chain instead.
    """
    C, A, B = wedge.apex_form()
    sweep = _Sweep(poly, mode, tol, MAX_FLIPS)
    # orient both arms so the polygon is on their left
    arm0 = _Side(FLUSH, -1, C.x, C.y, A.x - C.x, A.y - C.y)
    arm1 = _Side(FLUSH, -1, C.x, C.y, B.x - C.x, B.y - C.y)
    gx, gy = sum(poly.xs) / poly.n, sum(poly.ys) / poly.n
    for arm in (arm0, arm1):
        if arm.dx * (gy - arm.py) - arm.dy * (gx - arm.px) < 0:
            arm.dx, arm.dy = -arm.dx, -arm.dy
    a0 = math.atan2(-arm0.dx, arm0.dy) % TWO_PI
    a1 = math.atan2(-arm1.dx, arm1.dy) % TWO_PI
    # the chain facing away from the apex owns the normal arc wider than pi
    if (a1 - a0) % TWO_PI < math.pi:
        a0, a1 = a1, a0
    edges, verts = sweep.arc_chain(a0, a1)
    if not edges:
        raise NoClosingSide("wedge arms leave no chain to close")
    frame = sweep.wedge_frame(arm0, arm1)
    if mode == LINEAR:
        if hint is not None:
            sweep.hints["w"] = hint
        p, q = edges[0], (edges[-1] + 1) % poly.n
        side = sweep.walk(p, q, "w", sweep.wedge_vertex, frame).public()
        if side.kind == FLUSH:
            # the walk does not fit excircles; attach the witness here
            a = _meet(arm0, _Side(FLUSH, -1, side.line.origin.x, side.line.origin.y,
                                  *side.line.direction))
            b = _meet(arm1, _Side(FLUSH, -1, side.line.origin.x, side.line.origin.y,
                                  *side.line.direction))
            try:
                fit = fit_wedge_line_excircle(Wedge.from_apex(C, a, b, tol), a, b, tol)
                side = ClosingSide(side.kind, side.index, side.line, fit.selected)
            except GeometryError:
                pass
        return side
    return sweep.scan_wedge(frame, edges, verts,
                            lambda side: sweep.perimeter(arm0, arm1, side)).public()
