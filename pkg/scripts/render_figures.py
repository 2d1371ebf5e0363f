"""Draw the four reference circle-fitting scenes as SVG files.

    python3 scripts/render_figures.py [--out figures]
"""
import argparse
import os

from trienc.circle_fit import (fit_degenerate_wedge_line, fit_degenerate_wedge_point,
                               fit_wedge_line_excircle, fit_wedge_point_incircle)
from trienc.geometry import ParamLine, Triangle, P
from trienc.polygon_io import Scene, render_svg
from trienc.scenes import STRIP_LINE, STRIP_POINT, WEDGE_LINE, WEDGE_POINT


def scenes():
    s = STRIP_LINE
    A, B = s.inputs["A"], s.inputs["B"]
    fit = fit_degenerate_wedge_line(s.wedge, A, B)
    yield s.name, Scene([s.wedge.s0, s.wedge.e0, s.wedge.e1, s.wedge.s1], wedges=[s.wedge],
                        circles=list(fit.candidates), lines=[ParamLine(P(A), P(B))])

    s = STRIP_POINT
    fit = fit_degenerate_wedge_point(s.wedge, s.inputs["P"])
    yield s.name, Scene([s.wedge.s0, s.wedge.e0, s.wedge.e1, s.wedge.s1], wedges=[s.wedge],
                        circles=list(fit.candidates), points=[s.inputs["P"]])

    s = WEDGE_LINE
    A, B, C = s.inputs["A"], s.inputs["B"], s.inputs["C"]
    fit = fit_wedge_line_excircle(s.wedge, A, B)
    yield s.name, Scene([C, B, A], triangle=Triangle(P(A), P(B), P(C)), wedges=[s.wedge],
                        circles=list(fit.candidates), lines=[ParamLine(P(A), P(B))])

    s = WEDGE_POINT
    A, B, C = s.inputs["A"], s.inputs["B"], s.inputs["C"]
    fit = fit_wedge_point_incircle(s.wedge, s.inputs["P"])
    yield s.name, Scene([C, B, A], wedges=[s.wedge], circles=list(fit.candidates),
                        points=[s.inputs["P"]])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, scene in scenes():
        path = os.path.join(args.out, f"{name}.svg")
        with open(path, "wb") as fh:
            fh.write(render_svg(scene))
        print(path)


if __name__ == "__main__":
    main()
