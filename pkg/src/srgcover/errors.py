"""Exception hierarchy shared by every module of the package."""


class SrgCoverError(Exception):
    """Base class for all package errors."""


# graph construction and metrics
class OutOfRange(SrgCoverError, ValueError):
    pass


class SelfLoop(SrgCoverError, ValueError):
    pass


class Disconnected(SrgCoverError):
    """Some pair of vertices is unreachable, so distances are undefined."""


# constructions
class BadParams(SrgCoverError, ValueError):
    pass


class ConstructionInvalid(SrgCoverError):
    pass


class UnknownEntry(SrgCoverError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown entry"


# exact algebra
class DeltaMismatch(SrgCoverError, ValueError):
    pass


class OrderMismatch(SrgCoverError, ValueError):
    pass


class NonIntegerFactor(SrgCoverError, ValueError):
    pass


class NonIntegralSolution(SrgCoverError, ValueError):
    pass


# closed forms
class InfeasibleParams(SrgCoverError, ValueError):
    pass


class NotSrg(SrgCoverError, ValueError):
    pass


class InconsistentInput(SrgCoverError, ValueError):
    pass


class NotAdjacency(SrgCoverError, ValueError):
    pass


class HypothesisViolated(SrgCoverError, ValueError):
    pass


class BadCase(SrgCoverError, ValueError):
    pass


class DisconnectedCover(SrgCoverError):
    """The double cover of a bipartite graph is disconnected (K_{m,m} case)."""


class IrrationalEigenvalue(SrgCoverError, ValueError):
    pass


# io
class ParseError(SrgCoverError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OutOfHypothesisWarning(UserWarning):
    """A closed form was applied outside the degree range it is stated for."""
