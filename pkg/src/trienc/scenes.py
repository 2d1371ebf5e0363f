"""Four small reference configurations for the circle fitters, with the
circle centres/radii they are known to produce (six printed digits or better).
Used by the golden tests and by ``scripts/render_figures.py``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import P, Wedge


@dataclass(frozen=True)
class ReferenceScene:
    name: str
    wedge: Wedge
    inputs: dict
    expected_centers: tuple
    expected_radii: tuple
    expected_selected: tuple = ()
    notes: str = field(default="", compare=False)


# parallel strip x in [0, 4], crossing line A-B
STRIP_LINE = ReferenceScene(
    "strip_line",
    Wedge(P(0, 2), P(0, 7), P(4, 4), P(4, 10)),
    {"A": (0.0, 16 / 3), "B": (4.0, 8.0)},
    ((2.0, 4.26296581635734), (2.0, 9.070367516975992)),
    (2.0, 2.0),
)

# same strip, point between the arms
STRIP_POINT = ReferenceScene(
    "strip_point",
    Wedge(P(0, 2), P(0, 7), P(4, 4), P(4, 10)),
    {"P": (2.75, 6.1)},
    ((2.0, 7.954049621773915), (2.0, 4.245950378226084)),
    (2.0, 2.0),
)

# wedge w(CA, CB) cut by line AB; the excircle opposite C is wanted
WEDGE_LINE = ReferenceScene(
    "wedge_line",
    Wedge.from_apex((0.0, -1.57143), (0.909091, -2.09091), (0.0, -3.0)),
    {"A": (0.909091, -2.09091), "B": (0.0, -3.0), "C": (0.0, -1.57143)},
    ((1.09137, -3.45206), (2.69118, -1.85226), (-0.872999, -2.32956), (0.726808, -0.729756)),
    (1.09137,) * 4,
    ((1.09137, -3.45206), 1.09137),
)

# wedge w(CA, CB) and an interior point; the larger inscribed circle is wanted
WEDGE_POINT = ReferenceScene(
    "wedge_point",
    Wedge.from_apex((1.0, 2.5), (1.7, 1.8), (1.0, 1.6)),
    {"A": (1.7, 1.8), "B": (1.0, 1.6), "C": (1.0, 2.5), "P": (1.5, 1.6)},
    ((1.28998, 1.79994), (1.62718, 0.985848)),
    (0.289975, 0.627182),
    ((1.62718, 0.985848), 0.627182),
)

ALL = (STRIP_LINE, STRIP_POINT, WEDGE_LINE, WEDGE_POINT)
