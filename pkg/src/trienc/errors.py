"""Exception hierarchy.

Every error carries a ``reason`` code so that callers (the CLI in particular)
can report failures in a machine-readable way.
"""


class GeometryError(ValueError):
    reason = "GeometryError"

    def __init__(self, message="", **details):
        super().__init__(message or self.reason)
        self.details = details


# primitives
class DegenerateLine(GeometryError):
    reason = "DegenerateLine"


class ParallelLines(GeometryError):
    reason = "ParallelLines"


class InvalidPolygon(GeometryError):
    reason = "InvalidPolygon"


# circle fitting
class NotDegenerate(GeometryError):
    reason = "NotDegenerate"


class DegenerateWedge(GeometryError):
    reason = "DegenerateWedge"


class LineParallelToArms(GeometryError):
    reason = "LineParallelToArms"


class LineParallelToArm(LineParallelToArms):
    reason = "LineParallelToArm"


class PointOutsideWedge(GeometryError):
    reason = "PointOutsideWedge"


class NoTriangle(GeometryError):
    reason = "NoTriangle"


class SelectionFailed(GeometryError):
    reason = "SelectionFailed"


class NoRealRoots(GeometryError):
    reason = "NoRealRoots"


# solver
class NoClosingSide(GeometryError):
    reason = "NoClosingSide"


# oracle
class DegenerateConfiguration(GeometryError):
    reason = "DegenerateConfiguration"


class GenerationFailed(GeometryError):
    reason = "GenerationFailed"


# polygon input
class ParseError(GeometryError):
    reason = "ParseError"

    def __init__(self, message="", line=None, offset=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message, line=line, offset=offset)
        self.line = line
        self.offset = offset


class TooFewVertices(InvalidPolygon):
    reason = "TooFewVertices"


class NonConvex(InvalidPolygon):
    reason = "NonConvex"


class DegenerateAfterMerge(InvalidPolygon):
    reason = "DegenerateAfterMerge"


class DuplicateVertex(InvalidPolygon):
    reason = "DuplicateVertex"
