"""Exception taxonomy shared across the package.

Every error raised by library code derives from SegforgeError and carries a
stable machine-readable ``code`` so the CLI can report failures uniformly.
"""


class SegforgeError(Exception):
    code = "error"


# --- geometry ---------------------------------------------------------------

class DimensionMismatch(SegforgeError):
    code = "dimension-mismatch"


class DegenerateSegment(SegforgeError):
    code = "degenerate-segment"


class DegenerateLine(SegforgeError):
    code = "degenerate-line"


class InvalidInput(SegforgeError):
    code = "invalid-input"


# --- graphs -----------------------------------------------------------------

class GraphFormatError(SegforgeError):
    code = "graph-format"

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class NotBiconnected(SegforgeError):
    code = "not-biconnected"


class NotAnEdge(SegforgeError):
    code = "not-an-edge"


class NotCubic(SegforgeError):
    code = "not-cubic"


class InvalidOrdering(SegforgeError):
    code = "invalid-ordering"


# --- drawings ---------------------------------------------------------------

class DrawingError(SegforgeError):
    code = "drawing"


class DrawingFormatError(SegforgeError):
    code = "drawing-format"


class StructureMismatch(SegforgeError):
    code = "structure-mismatch"


class OverlapPresent(SegforgeError):
    code = "overlap-present"


# --- constructions ----------------------------------------------------------

class NotBiconnectedCubic(SegforgeError):
    code = "not-biconnected-cubic"


class NotPlanar(SegforgeError):
    code = "not-planar"


class BendBudgetExceeded(SegforgeError):
    code = "bend-budget-exceeded"


class OddFan(SegforgeError):
    code = "odd-fan"


# --- families ---------------------------------------------------------------

class UnknownFamily(SegforgeError):
    code = "unknown-family"


class BadParameter(SegforgeError):
    code = "bad-parameter"


class NotArrangementShaped(SegforgeError):
    code = "not-arrangement-shaped"


class NotSimpleArrangement(SegforgeError):
    code = "not-simple-arrangement"


# --- encoder ----------------------------------------------------------------

class IrrationalModel(SegforgeError):
    code = "irrational-model"


class InvalidWitness(SegforgeError):
    code = "invalid-witness"
