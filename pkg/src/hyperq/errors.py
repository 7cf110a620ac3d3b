"""Exception hierarchy.

Every error raised deliberately by the library derives from
:class:`HypergraphError`, so callers can catch one type.
"""


class HypergraphError(Exception):
    pass


class NonUniformEdge(HypergraphError, ValueError):
    pass


class DuplicateEdge(HypergraphError, ValueError):
    pass


class EmptyEdgeList(HypergraphError, ValueError):
    pass


class UnknownVertex(HypergraphError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UniformityMismatch(HypergraphError, ValueError):
    pass


class DimensionMismatch(HypergraphError, ValueError):
    pass


class ZeroVector(HypergraphError, ValueError):
    pass


class NotASubgraph(HypergraphError, ValueError):
    pass


class NotBalanced(HypergraphError, ValueError):
    pass


class BadParams(HypergraphError, ValueError):
    pass


class OrderLimitExceeded(HypergraphError, ValueError):
    pass


class TooManyEdges(HypergraphError, ValueError):
    pass


class TooFewEdges(HypergraphError, ValueError):
    pass


class DegenerateSpectrum(HypergraphError, ValueError):
    pass


class Disconnected(HypergraphError, ValueError):
    pass


class NotNearInteger(HypergraphError, ArithmeticError):
    pass


class NonPositiveEigenvalue(HypergraphError, ValueError):
    pass


class InternalConsistency(HypergraphError, AssertionError):
    """An identity that must hold by construction was violated."""


class NoConvergence(HypergraphError, RuntimeError):
    """Rotation sweeps hit the cap before the off-diagonal mass vanished.

    The partially diagonalised matrix and accumulated rotations are kept on
    the exception for inspection.
    """

    def __init__(self, message, sweeps=None, off_norm=None, matrix=None, vectors=None):
        super().__init__(message)
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.matrix = matrix
        self.vectors = vectors


class ParseError(HypergraphError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
