"""Circle fitting inside a wedge.

Four problems, all solved on parametric lines so no slope special cases arise:

* degenerate (parallel-arm) wedge + crossing line: circles touching both arms
  and the line;
* degenerate wedge + point between the arms: circles touching both arms and
  passing through the point;
* wedge + crossing line: the excircle of the cut-off triangle that touches the
  crossing line;
* wedge + interior point: circles inscribed in the wedge through the point.

Each public fitter returns every algebraic candidate together with the
geometrically selected one.  The ``_``-prefixed kernels work on plain float
pairs and are shared with the solver's inner loop.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    DegenerateWedge,
    LineParallelToArm,
    LineParallelToArms,
    NoRealRoots,
    NotDegenerate,
    NoTriangle,
    PointOutsideWedge,
    SelectionFailed,
)
from .geometry import DEFAULT_TOL, Circle, Point2, Tolerances, Wedge, cross2, dot2, sin_between


@dataclass(frozen=True)
class FitResult:
    candidates: tuple[Circle, ...]
    selected: Optional[Circle]
    selection_residual: float
    params: tuple[float, ...] = ()


# -- kernels -----------------------------------------------------------------

def _degenerate_frame(s0, e0, s1, e1):
    """Midline point ``I``, arm direction and half-width of a parallel strip.

    ``I`` is the midpoint of ``S1`` and its foot on the arm-0 line.
    """
    ux, uy = e0[0] - s0[0], e0[1] - s0[1]
    t = ((s1[0] - s0[0]) * ux + (s1[1] - s0[1]) * uy) / (ux * ux + uy * uy)
    fx, fy = s0[0] + ux * t, s0[1] + uy * t
    I = (0.5 * (s1[0] + fx), 0.5 * (s1[1] + fy))
    r = 0.5 * math.hypot(s1[0] - fx, s1[1] - fy)
    d = (e1[0] - s1[0], e1[1] - s1[1])
    return I, d, r


def _degenerate_line_params(I, d, r, A, B):
    """Both midline parameters of circles tangent to line ``AB``."""
    ab = (B[0] - A[0], B[1] - A[1])
    den = cross2(ab, d)
    num = cross2(ab, (A[0] - I[0], A[1] - I[1]))
    k = math.hypot(ab[0], ab[1]) * r
    return (num + k) / den, (num - k) / den


def _degenerate_point_params(I, d, r, P):
    """Roots of ``|d|^2 t^2 + 2 (I - P).d t + |I - P|^2 - r^2 = 0``, ascending."""
    ip = (I[0] - P[0], I[1] - P[1])
    qa = dot2(d, d)
    h = dot2(ip, d)
    qc = dot2(ip, ip) - r * r
    disc = h * h - qa * qc
    root = math.sqrt(disc) if disc > 0.0 else 0.0
    # numerically stable pair
    q = -(h + math.copysign(root, h))
    if q == 0.0:
        return 0.0, 0.0
    t1, t2 = q / qa, qc / q
    return (t1, t2) if t1 <= t2 else (t2, t1)


def _wedge_bisector(C, A, B):
    """Bisector point ``D = (A - B) a / (a + b) + B`` and the ``P``-free
    quadratic terms: ``(D, D - C, k, qa)``, where a root ``t`` has radius ``k t``."""
    a = math.hypot(B[0] - C[0], B[1] - C[1])
    b = math.hypot(A[0] - C[0], A[1] - C[1])
    w = a / (a + b)
    D = ((A[0] - B[0]) * w + B[0], (A[1] - B[1]) * w + B[1])
    dc = (D[0] - C[0], D[1] - C[1])
    k = abs((A[0] - C[0]) * dc[1] - (A[1] - C[1]) * dc[0]) / b
    qa = dc[0] * dc[0] + dc[1] * dc[1] - k * k
    return D, dc, k, qa


def _wedge_point_roots(C, dc, qa, P):
    """Roots ``(t_small, t_large, disc)`` of the wedge/point quadratic."""
    cpx, cpy = C[0] - P[0], C[1] - P[1]
    hb = dc[0] * cpx + dc[1] * cpy
    qc = cpx * cpx + cpy * cpy
    disc = hb * hb - qa * qc
    root = math.sqrt(disc) if disc > 0.0 else 0.0
    big = (-hb + root) / qa
    small = qc / (qa * big) if big != 0.0 else 0.0
    return small, big, disc


def _wedge_point_params(C, A, B, P):
    """Bisector point ``D`` and both roots of the wedge/point quadratic.

    Returns ``(D, t_small, t_large, k, disc)``; a root ``t`` gives centre
    ``C + (D - C) t`` and radius ``k t``.
    """
    D, dc, k, qa = _wedge_bisector(C, A, B)
    small, big, disc = _wedge_point_roots(C, dc, qa, P)
    return D, small, big, k, disc


def _excircle_radius(a, b, c):
    s = 0.5 * (a + b + c)
    return math.sqrt(s * (s - a) * (s - b) / (s - c))


def _excircle_candidates(C, A, B, r):
    """Centres at distance ``r`` from lines ``AB`` and ``AC``, all four sign pairs."""
    xab, yab = B[0] - A[0], B[1] - A[1]
    xac, yac = C[0] - A[0], C[1] - A[1]
    c = math.hypot(xab, yab)
    b = math.hypot(xac, yac)
    det = xab * yac - yab * xac
    bxa = cross2(B, A)
    cxa = cross2(C, A)
    out = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            r1 = bxa + s1 * r * c
            r2 = cxa + s2 * r * b
            out.append(((r1 * xac - xab * r2) / det, (yac * r1 - yab * r2) / det))
    return out


def _cb_residual(C, B, I, r):
    """Distance-unit residual of the tangency-to-CB test."""
    cb = (C[0] - B[0], C[1] - B[1])
    a = math.hypot(cb[0], cb[1])
    return abs(abs(cross2(cb, (B[0] - I[0], B[1] - I[1]))) - r * a) / a


def _select_excircle(C, A, B, r, centers, tol):
    """Index of the excircle opposite ``C`` among ``centers`` and its residual.

    Smallest residual wins; among candidates within ``tol`` the one on the far
    side of ``AB`` from ``C`` is preferred (isosceles inputs make two
    candidates tangent to ``CB``).
    """
    ab = (B[0] - A[0], B[1] - A[1])
    c_side = cross2(ab, (C[0] - A[0], C[1] - A[1]))

    def key(i):
        I = centers[i]
        res = _cb_residual(C, B, I, r)
        beyond = cross2(ab, (I[0] - A[0], I[1] - A[1])) * c_side < 0
        return (res > tol, not beyond, res)

    best = min(range(len(centers)), key=key)
    return best, _cb_residual(C, B, centers[best], r)


# -- public fitters ----------------------------------------------------------

def _require_degenerate(w: Wedge):
    if not w.degenerate:
        raise NotDegenerate("wedge arms are not parallel")


def fit_degenerate_wedge_line(w: Wedge, A, B, side: int = 1,
                              tol: Tolerances = DEFAULT_TOL) -> FitResult:
    """Circles between parallel arms touching the line ``AB``.

    ``side`` picks the selected circle: ``+1`` the one further along the arm
    direction ``E1 - S1``, ``-1`` the other.
    """
    _require_degenerate(w)
    I, d, r = _degenerate_frame(w.s0, w.e0, w.s1, w.e1)
    ab = (B[0] - A[0], B[1] - A[1])
    if abs(sin_between(ab, d)) <= tol.tol_cross:
        raise LineParallelToArms("crossing line is parallel to the arms")
    t_plus, t_minus = _degenerate_line_params(I, d, r, A, B)
    params = (t_plus, t_minus)
    circles = tuple(Circle(Point2(I[0] + d[0] * t, I[1] + d[1] * t), r) for t in params)
    pick = max(range(2), key=lambda i: side * params[i])
    sel = circles[pick]
    res = abs(abs(cross2(ab, (A[0] - sel.center.x, A[1] - sel.center.y))) / math.hypot(*ab) - r)
    return FitResult(circles, sel, res, params)


def fit_degenerate_wedge_point(w: Wedge, P, side: int = 1,
                               tol: Tolerances = DEFAULT_TOL) -> FitResult:
    """Circles between parallel arms passing through ``P``.

    A point on an arm gives a double root: the same circle is returned twice.
    """
    _require_degenerate(w)
    I, d, r = _degenerate_frame(w.s0, w.e0, w.s1, w.e1)
    off = abs(cross2(d, (P[0] - I[0], P[1] - I[1]))) / math.hypot(*d)
    if off > r + tol.tol_residual:
        raise PointOutsideWedge("point is not between the arms", offset=off, half_width=r)
    params = _degenerate_point_params(I, d, r, P)
    circles = tuple(Circle(Point2(I[0] + d[0] * t, I[1] + d[1] * t), r) for t in params)
    pick = max(range(2), key=lambda i: side * params[i])
    sel = circles[pick]
    res = abs(math.hypot(P[0] - sel.center.x, P[1] - sel.center.y) - r)
    return FitResult(circles, sel, res, params)


def _apex_points(w: Wedge, tol: Tolerances):
    if w.degenerate:
        raise DegenerateWedge("wedge arms are parallel")
    return w.apex_form()


def fit_wedge_line_excircle(w: Wedge, A, B, tol: Tolerances = DEFAULT_TOL) -> FitResult:
    """Excircle of the triangle cut from ``w`` by line ``AB``, touching ``AB``.

    ``A`` must lie on arm 0 and ``B`` on arm 1, beyond the apex.
    """
    C, _, _ = _apex_points(w, tol)
    d0 = w.e0 - w.s0
    d1 = w.e1 - w.s1
    scale = max(math.hypot(A[0] - C.x, A[1] - C.y), math.hypot(B[0] - C.x, B[1] - C.y), 1.0)
    for X, arm, d in ((A, w.arm0, d0), (B, w.arm1, d1)):
        if abs(arm.signed_distance(X)) > tol.tol_residual * scale:
            raise NoTriangle("crossing point is not on its arm")
        if dot2((X[0] - C.x, X[1] - C.y), d) <= 0:
            raise NoTriangle("crossing point is behind the apex")
    ab = (B[0] - A[0], B[1] - A[1])
    ac = (C.x - A[0], C.y - A[1])
    if abs(sin_between(ab, ac)) <= tol.tol_cross or abs(sin_between(ab, (B[0] - C.x, B[1] - C.y))) <= tol.tol_cross:
        raise LineParallelToArm("crossing line is parallel to an arm")
    a = math.hypot(C.x - B[0], C.y - B[1])
    b = math.hypot(*ac)
    c = math.hypot(*ab)
    s = 0.5 * (a + b + c)
    if min(a, b, c) <= tol.tol_len or s - c <= tol.tol_len:
        raise NoTriangle("cut-off triangle is degenerate")
    r = _excircle_radius(a, b, c)
    centers = _excircle_candidates(C, A, B, r)
    best, res = _select_excircle(C, A, B, r, centers, tol.tol_residual * scale)
    circles = tuple(Circle(Point2(*I), r) for I in centers)
    if res > tol.tol_residual * scale:
        raise SelectionFailed("no candidate touches the third side", residual=res)
    return FitResult(circles, circles[best], res)


def fit_wedge_point_incircle(w: Wedge, P, tol: Tolerances = DEFAULT_TOL) -> FitResult:
    """The two circles inscribed in ``w`` through ``P``; the larger is selected."""
    C, A, B = _apex_points(w, tol)
    ca = (A.x - C.x, A.y - C.y)
    cb = (B.x - C.x, B.y - C.y)
    cp = (P[0] - C.x, P[1] - C.y)
    det = cross2(ca, cb)
    alpha = cross2(cp, cb) / det
    beta = cross2(ca, cp) / det
    # alpha, beta: cone coordinates of P; both must be non-negative
    lim = -tol.tol_residual / max(math.hypot(*ca), math.hypot(*cb))
    if alpha < lim or beta < lim:
        raise PointOutsideWedge("point is not inside the wedge", alpha=alpha, beta=beta)
    D, small, big, k, disc = _wedge_point_params(C, A, B, P)
    if disc < 0:
        hb2 = dot2(cp, cp) * dot2((D[0] - C.x, D[1] - C.y), (D[0] - C.x, D[1] - C.y))
        if disc < -tol.tol_residual * hb2:
            raise NoRealRoots("wedge/point quadratic has no real roots", disc=disc)
    circles = tuple(Circle(Point2(C.x + (D[0] - C.x) * t, C.y + (D[1] - C.y) * t), k * t)
                    for t in (small, big))
    sel = circles[1]
    res = abs(math.hypot(P[0] - sel.center.x, P[1] - sel.center.y) - sel.radius)
    return FitResult(circles, sel, res, (small, big))


def tangent_point(circle: Circle, A, B) -> Point2:
    """Foot of the circle centre on line ``AB``."""
    ab = (B[0] - A[0], B[1] - A[1])
    t = dot2((circle.center.x - A[0], circle.center.y - A[1]), ab) / dot2(ab, ab)
    return Point2(A[0] + ab[0] * t, A[1] + ab[1] * t)
