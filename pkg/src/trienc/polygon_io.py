"""Polygon ingestion, validation and SVG rendering.

Input formats
-------------
JSON
    A top-level array of ``[x, y]`` number pairs, e.g. ``[[0, 0], [1, 0], [0, 1]]``.
CSV
    One ``x,y`` pair per line.  Blank lines and anything after ``#`` are
    ignored.  Numbers use a decimal point; exponents are allowed.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DegenerateAfterMerge, DuplicateVertex, NonConvex, ParseError, TooFewVertices
from .geometry import DEFAULT_TOL, Circle, ConvexPolygon, ParamLine, Tolerances, Triangle, Wedge, cross2, dot2, sin_between

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class PolygonDocument:
    vertices: tuple[tuple[float, float], ...]
    source: str = "<memory>"
    normalized: bool = False


def _number(text: str, line: int, offset: int) -> float:
    text = text.strip()
    if not _NUMBER.match(text):
        raise ParseError(f"not a number: {text!r}", line=line, offset=offset)
    value = float(text)
    if not math.isfinite(value):
        raise ParseError(f"non-finite number: {text!r}", line=line, offset=offset)
    return value


def _parse_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, offset=exc.colno) from None
    if not isinstance(data, list):
        raise ParseError("expected a top-level array of [x, y] pairs", line=1, offset=1)
    out = []
    for i, item in enumerate(data):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)):
            raise ParseError(f"item {i} is not an [x, y] number pair", offset=i)
        x, y = float(item[0]), float(item[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError(f"item {i} is not finite", offset=i)
        out.append((x, y))
    return out


def _parse_csv(text: str):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError("expected 'x,y'", line=lineno, offset=1)
        x = _number(parts[0], lineno, 1)
        y = _number(parts[1], lineno, len(parts[0]) + 2)
        out.append((x, y))
    return out


def parse_polygon(data, format: str = "json", source: str = "<memory>") -> PolygonDocument:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("input is not UTF-8", offset=exc.start) from None
    if format == "json":
        pts = _parse_json(data)
    elif format == "csv":
        pts = _parse_csv(data)
    else:
        raise ValueError(f"unknown format {format!r}")
    if len(pts) < 3:
        raise TooFewVertices(f"polygon has {len(pts)} vertices, need at least 3")
    return PolygonDocument(tuple(pts), source)


def format_for_path(path: str) -> str:
    return "csv" if str(path).lower().endswith((".csv", ".txt")) else "json"


def serialize_polygon(points: Iterable, format: str = "json") -> str:
    pts = [(float(p[0]), float(p[1])) for p in points]
    if format == "json":
        return json.dumps([[x, y] for x, y in pts]) + "\n"
    if format == "csv":
        return "".join(f"{x!r},{y!r}\n" for x, y in pts)
    raise ValueError(f"unknown format {format!r}")


def normalize_ring(points: Sequence, tol: Tolerances = DEFAULT_TOL):
    """CCW, strictly convex ring with colinear neighbours merged.

    Returns ``(ring, merged_count)``.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    if len(pts) < 3:
        raise TooFewVertices("need at least 3 vertices")
    scale = max(max(abs(c) for p in pts for c in p), 1e-300)
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if math.hypot(b[0] - a[0], b[1] - a[1]) <= tol.tol_len * scale:
            raise DuplicateVertex(f"vertices {i} and {(i + 1) % n} coincide", index=i)
    area = sum(cross2(pts[i], pts[(i + 1) % n]) for i in range(n))
    far = max(pts, key=lambda p: math.hypot(p[0] - pts[0][0], p[1] - pts[0][1]))
    axis = (far[0] - pts[0][0], far[1] - pts[0][1])
    length = math.hypot(*axis)
    spread = max(abs(cross2(axis, (p[0] - pts[0][0], p[1] - pts[0][1]))) for p in pts) / length
    if spread <= tol.tol_cross * length:
        raise DegenerateAfterMerge("all vertices are colinear")
    if area < 0:
        pts.reverse()
    merged = 0
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            u = (b[0] - a[0], b[1] - a[1])
            v = (c[0] - b[0], c[1] - b[1])
            if abs(sin_between(u, v)) <= tol.tol_cross:
                if dot2(u, v) < 0:
                    raise NonConvex("ring doubles back on itself", index=i)
                del pts[i]
                merged += 1
                changed = True
                break
    if len(pts) < 3:
        raise DegenerateAfterMerge("fewer than 3 vertices remain after merging colinear ones")
    n = len(pts)
    turns = 0.0
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        u = (b[0] - a[0], b[1] - a[1])
        v = (c[0] - b[0], c[1] - b[1])
        if sin_between(u, v) <= tol.tol_cross:
            raise NonConvex("ring has a reflex vertex", index=i)
        turns += math.atan2(cross2(u, v), dot2(u, v))
    if abs(turns - 2 * math.pi) > 1e-6:
        raise NonConvex("ring winds more than once")
    return pts, merged


def validate_normalize(doc: PolygonDocument, tol: Tolerances = DEFAULT_TOL) -> ConvexPolygon:
    ring, _ = normalize_ring(doc.vertices, tol)
    return ConvexPolygon(ring, tol)


# -- SVG ---------------------------------------------------------------------

@dataclass
class Scene:
    polygon: Sequence
    triangle: Optional[Triangle] = None
    wedges: list = field(default_factory=list)
    circles: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    points: list = field(default_factory=list)


def _fmt(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip_line(origin, direction, box):
    """Segment of an infinite line inside ``box`` (Liang-Barsky)."""
    x0, y0, x1, y1 = box
    t_lo, t_hi = -math.inf, math.inf
    for p, d, lo, hi in ((origin[0], direction[0], x0, x1), (origin[1], direction[1], y0, y1)):
        if abs(d) < 1e-300:
            if p < lo or p > hi:
                return None
            continue
        a, b = (lo - p) / d, (hi - p) / d
        t_lo, t_hi = max(t_lo, min(a, b)), min(t_hi, max(a, b))
    if t_lo > t_hi:
        return None
    return ((origin[0] + direction[0] * t_lo, origin[1] + direction[1] * t_lo),
            (origin[0] + direction[0] * t_hi, origin[1] + direction[1] * t_hi))


def render_svg(scene: Scene) -> bytes:
    """Deterministic SVG 1.1 drawing; y points up as in the usual math axes."""
    poly = [(float(p[0]), float(p[1])) for p in scene.polygon]
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    if scene.triangle is not None:
        for v in scene.triangle.vertices:
            xs.append(v.x)
            ys.append(v.y)
    for c in scene.circles:
        xs += [c.center.x - c.radius, c.center.x + c.radius]
        ys += [c.center.y - c.radius, c.center.y + c.radius]
    for p in scene.points:
        xs.append(float(p[0]))
        ys.append(float(p[1]))
    w = max(max(xs) - min(xs), 1e-9)
    h = max(max(ys) - min(ys), 1e-9)
    mx, my = 0.1 * w, 0.1 * h
    box = (min(xs) - mx, min(ys) - my, max(xs) + mx, max(ys) + my)
    vb_w, vb_h = box[2] - box[0], box[3] - box[1]
    stroke = _fmt(0.004 * max(vb_w, vb_h))

    def pt(x, y):
        # flip y so the picture is not mirrored
        return f"{_fmt(x)},{_fmt(box[1] + box[3] - y)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(box[0])} {_fmt(box[1])} {_fmt(vb_w)} {_fmt(vb_h)}">',
    ]
    d = "M " + " L ".join(pt(x, y) for x, y in poly) + " Z"
    out.append(f'<path d="{d}" fill="#9ecae1" stroke="#08519c" stroke-width="{stroke}"/>')
    if scene.triangle is not None:
        tri = " ".join(pt(v.x, v.y) for v in scene.triangle.vertices)
        out.append(f'<polygon points="{tri}" fill="none" stroke="#a50f15" stroke-width="{stroke}"/>')
    segments = []
    for w_ in scene.wedges:
        segments += [(w_.s0, w_.e0 - w_.s0), (w_.s1, w_.e1 - w_.s1)]
    for line in scene.lines:
        segments.append((line.origin, line.direction))
    for origin, direction in segments:
        seg = _clip_line(tuple(origin), tuple(direction), box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        a, b = pt(ax, ay).split(","), pt(bx, by).split(",")
        out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                   f'stroke="#525252" stroke-dasharray="{stroke} {stroke}" stroke-width="{stroke}"/>')
    for c in scene.circles:
        cx, cy = pt(c.center.x, c.center.y).split(",")
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(c.radius)}" fill="none" '
                   f'stroke="#31a354" stroke-width="{stroke}"/>')
    for p in scene.points:
        px, py = pt(float(p[0]), float(p[1])).split(",")
        out.append(f'<rect x="{px}" y="{py}" width="{stroke}" height="{stroke}" fill="#000000"/>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
