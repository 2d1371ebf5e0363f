"""Minimum-perimeter triangle enclosing a convex polygon."""
from .circle_fit import (FitResult, fit_degenerate_wedge_line, fit_degenerate_wedge_point,
                         fit_wedge_line_excircle, fit_wedge_point_incircle, tangent_point)
from .enclosing import (LINEAR, QUADRATIC_SAFE, ClosingSide, SolveReport, bootstrap, close_wedge,
                        solve, solve_for_edge)
from .errors import GeometryError, ParseError
from .geometry import (DEFAULT_TOL, Circle, ConvexPolygon, ParamLine, Point2, Tolerances, Triangle,
                       Wedge, antipodal_vertex, cross2, intersect_lines, is_tangent_to_polygon,
                       line_eval, signed_point_line_distance, supporting_line)
from .oracle import OracleResult, oracle_min_perimeter, random_convex_polygon, triangle_from_angles
from .polygon_io import (PolygonDocument, Scene, parse_polygon, render_svg, serialize_polygon,
                         validate_normalize)

__version__ = "0.1.0"
