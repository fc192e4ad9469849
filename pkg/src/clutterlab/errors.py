"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`ClutterLabError`
so callers (and the CLI) can separate them from programming errors.
"""


class ClutterLabError(Exception):
    """Base class for all library errors."""


class ParseError(ClutterLabError, ValueError):
    """Malformed clutter, matrix or polyhedron document."""


class SpernerViolation(ParseError):
    def __init__(self, small, large):
        self.small = tuple(small)
        self.large = tuple(large)
        super().__init__(f"edge {list(self.small)} is contained in edge {list(self.large)}")


class IsolatedVertex(ParseError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} lies in no edge")


class OutOfRange(ParseError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} outside 1..{n}")


class EmptyEdge(ParseError):
    pass


class NonBinaryEntry(ParseError):
    pass


class EmptyMinor(ClutterLabError):
    """A minor whose ideal is (0) (no edge survives) or (1) (an edge became empty)."""


class NotAGraph(ClutterLabError):
    pass


class BoundExceeded(ClutterLabError):
    """An exhaustive computation would exceed its configured size bound."""

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class HypothesisFailed(ClutterLabError):
    pass


class InternalContradiction(ClutterLabError):
    """A proven statement failed on a concrete instance; this is an implementation bug."""


class ZeroMatrix(ClutterLabError):
    pass


class RankMismatch(ClutterLabError):
    pass


class DimensionMismatch(ClutterLabError):
    pass


class EmptyPolyhedron(ClutterLabError):
    pass


class DegenerateLift(ClutterLabError):
    pass
