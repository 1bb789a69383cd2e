"""Exception types raised across the package."""


class DomipolyError(Exception):
    """Base class for all package errors."""


class RemainderNonZero(DomipolyError, ArithmeticError):
    pass


class NonUnitConstantTerm(DomipolyError, ArithmeticError):
    pass


class DivisionByMonomialFailed(DomipolyError, ArithmeticError):
    pass


class NegativePowerEncountered(DomipolyError, ArithmeticError):
    pass


class PolynomialParseError(DomipolyError, ValueError):
    pass


class GraphTooLarge(DomipolyError):
    pass


class MalformedGraph6(DomipolyError, ValueError):
    pass


class MalformedEdgeList(DomipolyError, ValueError):
    pass


class PreconditionFailed(DomipolyError, ValueError):
    pass


class NotACutVertex(PreconditionFailed):
    pass


class NotACutEdge(PreconditionFailed):
    pass


class VerticesAdjacent(PreconditionFailed):
    pass
