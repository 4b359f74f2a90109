"""Exception hierarchy shared by all modules."""


class MajicolorError(Exception):
    pass


class MalformedInput(MajicolorError):
    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class OutOfRangeVertex(MalformedInput):
    pass


class InvalidFamilyParameters(MajicolorError):
    pass


class NotASubgraph(MajicolorError):
    pass


class BudgetExhausted(MajicolorError):
    """A bounded search ran out of budget before reaching a verdict."""


class NoCycleExists(MajicolorError):
    """Exhaustive search proved there is no cycle of the requested length."""


class NotFoundWithinBudget(MajicolorError):
    def __init__(self, message, exhaustive=False):
        super().__init__(message)
        # True when the search covered every candidate, i.e. nonexistence is proven.
        self.exhaustive = exhaustive


class IncompleteColoring(MajicolorError):
    pass


class InfeasibleUpToKMax(MajicolorError):
    pass


class PreconditionError(MajicolorError):
    """Input violates a documented precondition of a construction."""


class EmptyGraph(PreconditionError):
    pass


class MinDegreeTooSmall(PreconditionError):
    pass


class NotBipartite(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class NotTwoConnected(PreconditionError):
    pass


class NotConnectivity1(PreconditionError):
    pass


class PendantEdgePresent(PreconditionError):
    pass


class PathNotSpanning(PreconditionError):
    pass


class NotEulerian(PreconditionError):
    pass


class OddEdgeCount(PreconditionError):
    pass


class CycleTooShort(PreconditionError):
    pass


class BadColors(PreconditionError):
    pass


class PaletteTooSmall(PreconditionError):
    pass


class PaletteOverlap(PreconditionError):
    pass


class PreconditionGeodesicFailed(PreconditionError):
    pass


class NoAsymmetricSubgraphFound(PreconditionError):
    pass


class HypothesisViolated(PreconditionError):
    def __init__(self, vertex, color, message=None):
        super().__init__(message or f"hypothesis violated at vertex {vertex}, color {color!r}")
        self.vertex = vertex
        self.color = color


class EnumerationExhausted(MajicolorError):
    pass


class VerifierRejected(MajicolorError):
    """A construction produced a coloring its certifier did not accept."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
