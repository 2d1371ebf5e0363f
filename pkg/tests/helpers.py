"""Random instance generators and residual checks shared by the test modules."""
import math

import numpy as np

from trienc.geometry import P, Wedge


def line_distance(a, b, x):
    """Unsigned distance from ``x`` to the line through ``a`` and ``b``."""
    abx, aby = b[0] - a[0], b[1] - a[1]
    return abs(abx * (x[1] - a[1]) - aby * (x[0] - a[0])) / math.hypot(abx, aby)


def unit(angle):
    return math.cos(angle), math.sin(angle)


def rigid(rng):
    """Random rotation + translation as a function on pairs."""
    phi = rng.uniform(0, 2 * math.pi)
    tx, ty = rng.uniform(-1, 1, size=2)
    c, s = math.cos(phi), math.sin(phi)
    return lambda p: (c * p[0] - s * p[1] + tx, s * p[0] + c * p[1] + ty)


def strip_line_instance(rng):
    """Parallel strip of random width and direction plus a crossing line."""
    phi = rng.uniform(0, 2 * math.pi)
    d = unit(phi)
    nrm = (-d[1], d[0])
    half = rng.uniform(0.05, 0.5)
    o = rng.uniform(-0.5, 0.5, size=2)
    s0 = (o[0], o[1])
    e0 = (s0[0] + d[0], s0[1] + d[1])
    shift = rng.uniform(-0.5, 0.5)
    s1 = (o[0] + 2 * half * nrm[0] + shift * d[0], o[1] + 2 * half * nrm[1] + shift * d[1])
    k = rng.uniform(0.2, 2)
    e1 = (s1[0] + d[0] * k, s1[1] + d[1] * k)
    # crossing line: an angle bounded away from the arm direction
    cross_angle = phi + rng.choice([-1, 1]) * rng.uniform(0.2, math.pi - 0.2)
    a = (o[0] + rng.uniform(-0.5, 0.5) * d[0], o[1] + rng.uniform(-0.5, 0.5) * d[1])
    u = unit(cross_angle)
    k = rng.uniform(0.2, 1.0)
    b = (a[0] + u[0] * k, a[1] + u[1] * k)
    return (s0, e0, s1, e1), a, b


def strip_point_instance(rng):
    """Parallel strip plus a point strictly between the arms."""
    arms, _, _ = strip_line_instance(rng)
    s0, e0, s1, e1 = arms
    dx, dy = e0[0] - s0[0], e0[1] - s0[1]
    t = ((s1[0] - s0[0]) * dx + (s1[1] - s0[1]) * dy) / (dx * dx + dy * dy)
    foot = (s0[0] + dx * t, s0[1] + dy * t)
    lam = rng.uniform(0.001, 0.999)
    along = rng.uniform(-1, 1)
    p = (foot[0] + lam * (s1[0] - foot[0]) + along * dx, foot[1] + lam * (s1[1] - foot[1]) + along * dy)
    return arms, p


def triangle_instance(rng, min_angle=0.05):
    """Random non-degenerate triangle (C, A, B) with every angle above ``min_angle``."""
    while True:
        pts = rng.uniform(-1, 1, size=(3, 2))
        C, A, B = (tuple(map(float, p)) for p in pts)
        angles = []
        for X, Y, Z in ((C, A, B), (A, B, C), (B, C, A)):
            u = (Y[0] - X[0], Y[1] - X[1])
            v = (Z[0] - X[0], Z[1] - X[1])
            angles.append(abs(math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])))
        if min(angles) > min_angle and min(math.dist(C, A), math.dist(C, B), math.dist(A, B)) > 0.05:
            return C, A, B


def wedge_point_instance(rng):
    """Wedge (C, A, B) with opening in (0.1, pi - 0.1) and a strictly interior point."""
    C = tuple(map(float, rng.uniform(-0.5, 0.5, size=2)))
    phi = rng.uniform(0, 2 * math.pi)
    opening = rng.uniform(0.1, math.pi - 0.1)
    u1, u2 = unit(phi), unit(phi + opening)
    la, lb = rng.uniform(0.2, 1.0, size=2)
    A = (C[0] + la * u1[0], C[1] + la * u1[1])
    B = (C[0] + lb * u2[0], C[1] + lb * u2[1])
    alpha, beta = rng.uniform(0.01, 1.0, size=2)
    Pp = (C[0] + alpha * u1[0] + beta * u2[0], C[1] + alpha * u1[1] + beta * u2[1])
    return C, A, B, Pp


def strip_wedge(arms):
    return Wedge(*(P(p) for p in arms))


def apex_wedge(C, A, B):
    return Wedge.from_apex(P(C), P(A), P(B))


def rng(seed):
    return np.random.default_rng(seed)


def report_violations(poly, rep, tol=1e-9):
    """Names of the solver invariants that ``rep`` breaks for ``poly``.

    Distances are compared in the solver's normalized frame (unit bounding-box
    diagonal), so ``tol`` is scale free.
    """
    scale = rep.transform.scale if rep.transform is not None else 1.0
    out = []
    verts = poly.vertices
    A, B, C = rep.best.vertices
    if (B - A).cross(C - A) < 0:
        A, C = C, A
    sides = ((A, B), (B, C), (C, A))
    # containment: every vertex left of (or on) every directed side
    for a, b in sides:
        d = b - a
        worst = max(d.cross(a - v) / d.norm() for v in verts)
        if worst > tol * scale:
            out.append("containment")
            break
    # tangency: each side touches the polygon
    for a, b in sides:
        d = b - a
        gap = min(abs(d.cross(a - v)) / d.norm() for v in verts)
        if gap > tol * scale:
            out.append("tangency")
            break
    # flush: the flush edge lies on one side of the triangle
    if poly.n > 3 or rep.flush_edge >= 0:
        e0, e1 = verts[rep.flush_edge], verts[(rep.flush_edge + 1) % poly.n]
        if not any(max(abs((b - a).cross(a - e)) / (b - a).norm() for e in (e0, e1)) <= tol * scale
                   for a, b in sides):
            out.append("flush")
    # monotone flips: perimeter traces never increase
    for trace in rep.flip_traces:
        if any(later > earlier + 1e-12 for earlier, later in zip(trace, trace[1:])):
            out.append("monotone")
            break
    if abs(rep.perimeter - rep.best.perimeter) > 1e-12 * rep.perimeter:
        out.append("perimeter")
    return out
