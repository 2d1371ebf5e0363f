"""Command-line interface.

    trienc solve POLY [-o OUT] [--mode linear|quadratic-safe]
    trienc oracle POLY [--coarse-steps N] [--compare] [--gap-tol X]
    trienc check POLY
    trienc gen --n N --seed S [-o OUT]
    trienc render POLY [-o OUT.svg] [--no-triangle] [--witness]

Exit codes: 0 ok, 1 I/O failure, 2 bad input, 3 solver failure, 4 oracle gate.

The solve result is a JSON object::

    {"schema": 1, "source": str, "n": int, "mode": "linear" | "quadratic_safe",
     "triangle": [[x, y], [x, y], [x, y]], "perimeter": float,
     "normalized_perimeter": float, "flush_edge": int, "flip_counts": [int],
     "advance_steps": int, "max_flips_hit": [int]}

``flush_edge`` and ``flip_counts`` index the normalized (CCW, merged) ring.
``solve`` on a directory processes every ``*.json``/``*.csv`` inside and
writes a JSON array of such objects (failed files carry ``"error"`` instead).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .enclosing import LINEAR, QUADRATIC_SAFE, solve
from .errors import GeometryError
from .geometry import ConvexPolygon, Tolerances
from .oracle import oracle_min_perimeter, random_convex_polygon
from .polygon_io import (Scene, format_for_path, normalize_ring, parse_polygon, render_svg,
                         serialize_polygon)

SCHEMA = 1
EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_SOLVER, EXIT_GATE = 0, 1, 2, 3, 4
_MODES = {"linear": LINEAR, "quadratic-safe": QUADRATIC_SAFE}


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    format: Optional[str] = None
    mode: str = LINEAR
    seed: int = 0
    n: int = 25
    coarse_steps: int = 720
    compare: bool = False
    gap_tol: float = 1e-4
    triangle: bool = True
    witness: bool = False
    tol: Tolerances = dataclasses.field(default_factory=Tolerances)


# -- helpers -----------------------------------------------------------------

def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliFailure(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path: Optional[str], data) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliFailure(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def _input_error(exc: GeometryError) -> CliFailure:
    return CliFailure(EXIT_INPUT, f"{exc.reason}: {exc}")


def _load(cfg: CliConfig, path: str):
    """Parsed, normalized polygon plus the number of merged vertices."""
    fmt = cfg.format or format_for_path(path)
    try:
        doc = parse_polygon(_read(path), fmt, source=path)
        ring, merged = normalize_ring(doc.vertices, cfg.tol)
        return ConvexPolygon(ring, cfg.tol), merged
    except GeometryError as exc:
        raise _input_error(exc) from None


def _solve(cfg: CliConfig, poly: ConvexPolygon):
    try:
        return solve(poly, mode=cfg.mode, tol=cfg.tol)
    except GeometryError as exc:
        raise CliFailure(EXIT_SOLVER, f"{exc.reason}: {exc}") from None


def _tri_json(tri):
    return [[v.x, v.y] for v in tri.vertices]


def _result_doc(source: str, poly: ConvexPolygon, rep) -> dict:
    return {
        "schema": SCHEMA,
        "source": source,
        "n": poly.n,
        "mode": rep.mode,
        "triangle": _tri_json(rep.best),
        "perimeter": rep.perimeter,
        "normalized_perimeter": rep.normalized_perimeter,
        "flush_edge": rep.flush_edge,
        "flip_counts": list(rep.flip_counts),
        "advance_steps": rep.advance_steps,
        "max_flips_hit": list(rep.max_flips_hit),
    }


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_solve(cfg: CliConfig) -> int:
    path = cfg.input_path
    if os.path.isdir(path):
        return _solve_batch(cfg, path)
    poly, _ = _load(cfg, path)
    rep = _solve(cfg, poly)
    _write(cfg.output_path, _dump(_result_doc(path, poly, rep)))
    return EXIT_OK


def _solve_batch(cfg: CliConfig, directory: str) -> int:
    names = sorted(f for f in os.listdir(directory) if f.lower().endswith((".json", ".csv")))
    docs, worst = [], EXIT_OK
    for name in names:
        path = os.path.join(directory, name)
        try:
            poly, _ = _load(cfg, path)
            docs.append(_result_doc(path, poly, _solve(cfg, poly)))
        except CliFailure as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            docs.append({"schema": SCHEMA, "source": path, "error": str(exc), "exit": exc.code})
            worst = max(worst, exc.code)
    _write(cfg.output_path, _dump(docs))
    return worst


def cmd_oracle(cfg: CliConfig) -> int:
    poly, _ = _load(cfg, cfg.input_path)
    try:
        orc = oracle_min_perimeter(poly, coarse_steps=cfg.coarse_steps)
    except GeometryError as exc:
        raise CliFailure(EXIT_SOLVER, f"{exc.reason}: {exc}") from None
    doc = {
        "schema": SCHEMA,
        "source": cfg.input_path,
        "oracle_perimeter": orc.perimeter,
        "oracle_normalized_perimeter": orc.normalized_perimeter,
        "oracle_triangle": _tri_json(orc.triangle),
        "coarse_steps": orc.grid_resolution,
        "refined": orc.refined,
        "angles": list(orc.angles),
    }
    code = EXIT_OK
    if cfg.compare:
        rep = _solve(cfg, poly)
        gap = (rep.normalized_perimeter - orc.normalized_perimeter) / orc.normalized_perimeter
        ok = abs(gap) <= cfg.gap_tol
        doc.update(solver_perimeter=rep.perimeter, solver_normalized_perimeter=rep.normalized_perimeter,
                   gap=gap, gap_tol=cfg.gap_tol, passed=ok)
        if not ok:
            print(f"gate failed: relative gap {gap:.3e} exceeds {cfg.gap_tol:g}", file=sys.stderr)
            code = EXIT_GATE
    _write(cfg.output_path, _dump(doc))
    return code


def cmd_check(cfg: CliConfig) -> int:
    poly, merged = _load(cfg, cfg.input_path)
    _write(cfg.output_path, f"ok: {poly.n} vertices, convex, CCW\nmerged: {merged}\n")
    return EXIT_OK


def cmd_gen(cfg: CliConfig) -> int:
    try:
        poly = random_convex_polygon(cfg.n, cfg.seed)
    except (ValueError, GeometryError) as exc:
        raise CliFailure(EXIT_INPUT, str(exc)) from None
    fmt = cfg.format or (format_for_path(cfg.output_path) if cfg.output_path else "json")
    _write(cfg.output_path, serialize_polygon(poly.vertices, fmt))
    return EXIT_OK


def cmd_render(cfg: CliConfig) -> int:
    poly, _ = _load(cfg, cfg.input_path)
    scene = Scene(polygon=[(v.x, v.y) for v in poly.vertices])
    if cfg.triangle or cfg.witness:
        rep = _solve(cfg, poly)
        if cfg.triangle:
            scene.triangle = rep.best
        if cfg.witness:
            scene.circles = [s.witness for s in rep.sides if s.witness is not None]
    _write(cfg.output_path, render_svg(scene))
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "oracle": cmd_oracle, "check": cmd_check,
            "gen": cmd_gen, "render": cmd_render}


# -- argument parsing --------------------------------------------------------

def _positive_float(text: str) -> float:
    value = float(text)
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trienc",
                                     description="Minimum-perimeter triangle enclosing a convex polygon.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="polygon file (.json or .csv)")
        p.add_argument("-o", "--output", help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "csv"), help="polygon format (default: by extension)")
        p.add_argument("--tol-len", type=_positive_float)
        p.add_argument("--tol-cross", type=_positive_float)
        p.add_argument("--tol-residual", type=_positive_float)
        p.add_argument("--tol-improve", type=_positive_float)

    def mode(p):
        p.add_argument("--mode", choices=tuple(_MODES), default="linear")

    p = sub.add_parser("solve", help="compute the minimum-perimeter enclosing triangle")
    common(p)
    mode(p)
    p = sub.add_parser("oracle", help="brute-force reference, optionally compared with the solver")
    common(p)
    mode(p)
    p.add_argument("--coarse-steps", type=int, default=720)
    p.add_argument("--compare", action="store_true", help="also run the solver and gate on the gap")
    p.add_argument("--gap-tol", type=_positive_float, default=1e-4, help="relative gap allowed")
    p = sub.add_parser("check", help="validate and normalize a polygon")
    common(p)
    p = sub.add_parser("gen", help="write a random convex polygon")
    common(p, needs_input=False)
    p.add_argument("--n", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("render", help="draw the polygon and its triangle as SVG")
    common(p)
    mode(p)
    p.add_argument("--triangle", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--witness", action="store_true", help="draw the tangency circles of the sides")
    return parser


def config_from_args(ns: argparse.Namespace) -> CliConfig:
    tol = Tolerances.from_env()
    overrides = {k: getattr(ns, k) for k in ("tol_len", "tol_cross", "tol_residual", "tol_improve")
                 if getattr(ns, k, None) is not None}
    tol = dataclasses.replace(tol, **overrides)
    return CliConfig(
        command=ns.command,
        input_path=getattr(ns, "input", None),
        output_path=ns.output,
        format=ns.format,
        mode=_MODES[getattr(ns, "mode", "linear")],
        seed=getattr(ns, "seed", 0),
        n=getattr(ns, "n", 25),
        coarse_steps=getattr(ns, "coarse_steps", 720),
        compare=getattr(ns, "compare", False),
        gap_tol=getattr(ns, "gap_tol", 1e-4),
        triangle=getattr(ns, "triangle", True),
        witness=getattr(ns, "witness", False),
        tol=tol,
    )


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except ValueError as exc:
        print(f"error: bad tolerance: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[cfg.command](cfg)
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
