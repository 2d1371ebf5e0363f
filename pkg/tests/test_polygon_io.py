import json
import math
import os
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trienc.circle_fit import fit_wedge_line_excircle
from trienc.errors import (DegenerateAfterMerge, DuplicateVertex, InvalidPolygon, NonConvex,
                           ParseError, TooFewVertices)
from trienc.geometry import P, Triangle
from trienc.oracle import random_convex_polygon
from trienc.polygon_io import (PolygonDocument, Scene, normalize_ring, parse_polygon, render_svg,
                               serialize_polygon, validate_normalize)
from trienc.scenes import WEDGE_LINE

SVG = "{http://www.w3.org/2000/svg}"
CORPUS = os.path.join(os.path.dirname(__file__), "..", "corpus")


def test_parse_json_and_csv_agree():
    a = parse_polygon("[[0,0],[1,0],[1,1],[0,1]]", "json")
    b = parse_polygon("0,0\n1,0\n1,1\n0,1\n", "csv")
    assert a.vertices == b.vertices
    assert len(a.vertices) == 4


def test_parse_csv_comments_and_exponents():
    doc = parse_polygon(b"# header\n0,0\n\n1e0, 0  # right\n-.5e+0,2.5\n", "csv")
    assert doc.vertices == ((0, 0), (1, 0), (-0.5, 2.5))


def test_parse_too_few():
    with pytest.raises(TooFewVertices):
        parse_polygon("[[0,0],[1,0]]")


@pytest.mark.parametrize("text,fmt,line", [
    ("[[0,0],[1,0]", "json", 1),
    ('{"a": 1}', "json", 1),
    ("[[0,0],[1,0],[1,true]]", "json", None),
    ("0,0\n1;0\n", "csv", 2),
    ("0,0\n1,0\n1,0x1\n", "csv", 3),
    ("0,0\n1,0\n1,1,1\n", "csv", 3),
    ("0,0\n1,0\nnan,1\n", "csv", 3),
])
def test_parse_errors_carry_position(text, fmt, line):
    with pytest.raises(ParseError) as info:
        parse_polygon(text, fmt)
    if line is not None:
        assert info.value.line == line
    assert info.value.reason == "ParseError"


def test_validate_reverses_clockwise():
    poly = validate_normalize(parse_polygon("[[0,0],[0,1],[1,1],[1,0]]"))
    assert poly.area == pytest.approx(1.0)
    assert [tuple(v) for v in poly.vertices] == [(1, 0), (1, 1), (0, 1), (0, 0)]


def test_validate_merges_colinear():
    ring, merged = normalize_ring([(0, 0), (0.5, 0), (1, 0), (1, 1), (0, 1)])
    assert merged == 1 and len(ring) == 4
    assert (0.5, 0) not in ring


def test_validate_errors():
    with pytest.raises(NonConvex) as info:
        validate_normalize(parse_polygon("[[0,0],[1,1],[1,0],[0,1]]"))
    assert info.value.reason == "NonConvex"
    with pytest.raises(NonConvex):
        normalize_ring([(0, 0), (2, 0), (1, 0.2), (2, 2), (0, 2)])
    with pytest.raises(DuplicateVertex):
        normalize_ring([(0, 0), (1, 0), (1, 0), (0, 1)])
    with pytest.raises(DegenerateAfterMerge):
        normalize_ring([(0, 0), (1, 0), (2, 0), (3, 0)])
    # every rejection is an InvalidPolygon with a reason code
    for exc in (NonConvex, DuplicateVertex, DegenerateAfterMerge, TooFewVertices):
        assert issubclass(exc, InvalidPolygon) and exc.reason == exc.__name__


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 80), st.integers(0, 10**6), st.sampled_from(["json", "csv"]))
def test_round_trip(n, seed, fmt):
    poly = random_convex_polygon(n, seed)
    text = serialize_polygon(poly.vertices, fmt)
    doc = parse_polygon(text, fmt)
    for (x, y), v in zip(doc.vertices, poly.vertices):
        assert x == pytest.approx(v.x, rel=1e-15, abs=1e-300)
        assert y == pytest.approx(v.y, rel=1e-15, abs=1e-300)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 60), st.integers(0, 10**6))
def test_normalize_idempotent(n, seed):
    pts = [tuple(v) for v in random_convex_polygon(n, seed).vertices]
    once, _ = normalize_ring(pts[::-1])
    twice, merged = normalize_ring(once)
    assert once == twice and merged == 0


def test_corpus_is_valid():
    with open(os.path.join(CORPUS, "manifest.json")) as fh:
        manifest = json.load(fh)["polygons"]
    assert len(manifest) == 100
    for entry in manifest:
        with open(os.path.join(CORPUS, entry["file"]), "rb") as fh:
            poly = validate_normalize(parse_polygon(fh.read()))
        assert poly.n == entry["n"]
        assert poly.vertices == random_convex_polygon(entry["n"], entry["seed"]).vertices


def _elements(svg_bytes):
    root = ET.fromstring(svg_bytes)
    return [el.tag.replace(SVG, "") for el in root]


def test_svg_square_alone():
    svg = render_svg(Scene([(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert _elements(svg) == ["path"]
    root = ET.fromstring(svg)
    x, y, w, h = map(float, root.get("viewBox").split())
    assert (x, y, w, h) == pytest.approx((-0.1, -0.1, 1.2, 1.2))


def test_svg_reference_scene_has_four_circles():
    s = WEDGE_LINE
    A, B, C = s.inputs["A"], s.inputs["B"], s.inputs["C"]
    fit = fit_wedge_line_excircle(s.wedge, A, B)
    scene = Scene([C, B, A], triangle=Triangle(P(A), P(B), P(C)), circles=list(fit.candidates))
    svg = render_svg(scene)
    tags = _elements(svg)
    assert tags.count("circle") == 4 and tags.count("polygon") == 1
    assert render_svg(scene) == svg


def test_svg_deterministic_with_points_and_lines():
    from trienc.geometry import ParamLine
    scene = Scene([(0, 0), (2, 0), (1, 1)], lines=[ParamLine(P(0, 0), P(1, 1))], points=[(1, 0.5)])
    a, b = render_svg(scene), render_svg(scene)
    assert a == b
    assert _elements(a) == ["path", "line", "rect"]


def test_document_defaults():
    doc = PolygonDocument(((0, 0), (1, 0), (0, 1)))
    assert doc.source == "<memory>" and not doc.normalized
