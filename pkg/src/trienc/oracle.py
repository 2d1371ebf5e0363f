"""Brute-force reference for the minimum-perimeter enclosing triangle.

A triangle enclosing a convex polygon with every side touching it is fixed by
the outward-normal angles of its three sides: side ``i`` is the supporting
line ``n(theta_i) . x = h(theta_i)`` with ``h`` the polygon's support function.
The oracle grid-searches these angles (the first one restricted to edge
normals unless ``flush=False``) and polishes the best cell by coordinate
descent.  It shares no code with the circle-fitting solver beyond the polygon
type.

Also home to the random convex polygon generator used by the tests and the
corpus.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateConfiguration, GenerationFailed, InvalidPolygon
from .geometry import DEFAULT_TOL, ConvexPolygon, Point2, Similarity, Triangle

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class OracleResult:
    """``triangle`` and ``perimeter`` are in input units; ``angles``,
    ``normalized_perimeter`` and ``coarse_perimeter`` refer to the normalized
    frame (centroid at the origin, unit bounding-box diagonal)."""

    triangle: Triangle
    perimeter: float
    angles: tuple[float, float, float]
    grid_resolution: int
    refined: bool
    normalized_perimeter: float = math.nan
    coarse_perimeter: float = math.nan
    flush_edge: int = -1


def _support(arr: np.ndarray, angles) -> np.ndarray:
    angles = np.atleast_1d(np.asarray(angles, dtype=float))
    return np.max(arr[:, 0:1] * np.cos(angles) + arr[:, 1:2] * np.sin(angles), axis=0)


def _meet(t1, h1, t2, h2):
    """Intersection of ``n(t1).x = h1`` and ``n(t2).x = h2`` (broadcasting)."""
    det = np.sin(t2 - t1)
    x = (h1 * np.sin(t2) - h2 * np.sin(t1)) / det
    y = (h2 * np.cos(t1) - h1 * np.cos(t2)) / det
    return x, y


def _spans(thetas) -> bool:
    t = sorted(a % TWO_PI for a in thetas)
    gaps = (t[1] - t[0], t[2] - t[1], t[0] + TWO_PI - t[2])
    return all(1e-12 < g < math.pi - 1e-12 for g in gaps)


def _perimeter(arr, thetas) -> float:
    if not _spans(thetas):
        return math.inf
    h = _support(arr, thetas)
    pts = [_meet(thetas[i], h[i], thetas[j], h[j]) for i, j in ((0, 1), (1, 2), (2, 0))]
    return sum(math.hypot(pts[k][0] - pts[k - 1][0], pts[k][1] - pts[k - 1][1]) for k in range(3))


def triangle_from_angles(poly: ConvexPolygon, theta1: float, theta2: float, theta3: float) -> Triangle:
    """Triangle bounded by the supporting lines with the given outward normals."""
    thetas = (theta1, theta2, theta3)
    if not _spans(thetas):
        raise DegenerateConfiguration("normals do not positively span the plane", angles=thetas)
    h = _support(poly.array, thetas)
    pts = [_meet(thetas[i], h[i], thetas[j], h[j]) for i, j in ((2, 0), (0, 1), (1, 2))]
    return Triangle(*(Point2(float(x), float(y)) for x, y in pts))


def _coordinate_descent(fn, x0, step, min_step=1e-10, free=None):
    x = list(x0)
    fx = fn(x)
    free = range(len(x)) if free is None else free
    while step >= min_step:
        improved = False
        for i in free:
            for sgn in (1.0, -1.0):
                trial = list(x)
                trial[i] += sgn * step
                ft = fn(trial)
                if ft < fx:
                    x, fx = trial, ft
                    improved = True
                    break
        if not improved:
            step *= 0.5
    return x, fx


def _flush_grid(arr, theta1, steps):
    """Best (theta2, theta3, perimeter) on the grid with side 1 at ``theta1``."""
    k = np.arange(steps)
    alpha = (k + 0.5) * math.pi / steps
    m = np.arange(1, 2 * steps)
    gamma = m * math.pi / steps  # alpha + beta for beta = (l + 0.5) pi / steps
    h1 = float(_support(arr, [theta1])[0])
    h2 = _support(arr, theta1 + alpha)
    h3 = _support(arr, theta1 + gamma)
    x12, y12 = _meet(theta1, h1, theta1 + alpha, h2)
    x13, y13 = _meet(theta1, h1, theta1 + gamma, h3)
    kk, ll = np.meshgrid(k, k, indexing="ij")
    mm = kk + ll + 1
    valid = mm > steps
    mi = np.clip(mm - 1, 0, 2 * steps - 2)
    t2 = theta1 + alpha[kk]
    t3 = theta1 + gamma[mi]
    with np.errstate(divide="ignore", invalid="ignore"):
        x23, y23 = _meet(t2, h2[kk], t3, h3[mi])
        per = (np.hypot(x12[kk] - x13[mi], y12[kk] - y13[mi])
               + np.hypot(x12[kk] - x23, y12[kk] - y23)
               + np.hypot(x13[mi] - x23, y13[mi] - y23))
    per = np.where(valid & np.isfinite(per), per, np.inf)
    flat = int(np.argmin(per))
    a, b = divmod(flat, steps)
    return float(t2[a, b]), float(t3[a, b]), float(per[a, b])


def oracle_min_perimeter(poly: ConvexPolygon, coarse_steps: int = 720, flush: bool = True,
                         refine: bool = True) -> OracleResult:
    """Grid search plus coordinate-descent polish over supporting-line angles.

    With ``flush=True`` the first side runs over the edge normals only.  With
    ``flush=False`` all three angles are searched on a ``coarse_steps`` grid
    (cubic cost; keep the grid small).
    """
    if coarse_steps < 2:
        raise ValueError("coarse_steps must be at least 2")
    sim = Similarity.normalizing(poly.vertices)
    arr = (poly.array - np.array([sim.cx, sim.cy])) / sim.scale
    n = poly.n
    step = math.pi / coarse_steps
    best = None
    if flush:
        starts = []
        for i in range(n):
            a, b = arr[i], arr[(i + 1) % n]
            theta1 = math.atan2(-(b[0] - a[0]), b[1] - a[1])
            t2, t3, per = _flush_grid(arr, theta1, coarse_steps)
            starts.append((per, i, [theta1, t2, t3]))
        for coarse, i, x0 in starts:
            x, fx = (x0, coarse)
            if refine:
                x, fx = _coordinate_descent(lambda th: _perimeter(arr, th), x0, step, free=(1, 2))
            if best is None or fx < best[0]:
                best = (fx, i, x, coarse)
    else:
        grid = np.arange(coarse_steps) * (TWO_PI / coarse_steps)
        for t1 in grid:
            for t2 in grid:
                for t3 in grid:
                    per = _perimeter(arr, (t1, t2, t3))
                    if best is None or per < best[3]:
                        best = (per, -1, [t1, t2, t3], per)
        if refine:
            x, fx = _coordinate_descent(lambda th: _perimeter(arr, th), best[2], TWO_PI / coarse_steps)
            best = (fx, -1, x, best[3])
    per, edge, angles, coarse = best
    tri_n = triangle_from_angles(ConvexPolygon(arr, DEFAULT_TOL), *angles)
    tri = tri_n.mapped(sim.inverse)
    return OracleResult(tri, per * sim.scale, tuple(float(a) for a in angles), coarse_steps, refine,
                        normalized_perimeter=per, coarse_perimeter=coarse, flush_edge=edge)


# -- random polygons ---------------------------------------------------------

def _valtr(n: int, rng: np.random.Generator) -> np.ndarray:
    """Valtr's construction of a random convex polygon with ``n`` vertices."""

    def chain_vectors(values):
        values = np.sort(values)
        lo, hi = values[0], values[-1]
        inner = values[1:-1]
        side = rng.random(inner.size) < 0.5
        up = np.concatenate(([lo], inner[side], [hi]))
        down = np.concatenate(([lo], inner[~side], [hi]))
        return np.concatenate((np.diff(up), -np.diff(down)))

    xv = chain_vectors(rng.random(n))
    yv = chain_vectors(rng.random(n))
    rng.shuffle(yv)
    order = np.argsort(np.arctan2(yv, xv))
    vec = np.stack((xv[order], yv[order]), axis=1)
    pts = np.cumsum(vec, axis=0)
    return pts - pts.mean(axis=0)


def random_convex_polygon(n: int, seed: int, max_tries: int = 100) -> ConvexPolygon:
    """Deterministic random strictly convex CCW polygon with exactly ``n`` vertices."""
    if n < 3:
        raise ValueError("n must be at least 3")
    from .polygon_io import normalize_ring

    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        pts = _valtr(n, rng)
        try:
            ring, _merged = normalize_ring([tuple(map(float, p)) for p in pts])
        except InvalidPolygon:
            continue
        if len(ring) == n:
            return ConvexPolygon(ring)
    raise GenerationFailed(f"no strictly convex {n}-gon after {max_tries} tries", n=n, seed=seed)
