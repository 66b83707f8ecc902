"""Exception hierarchy."""


class QTDoubleError(Exception):
    """Base class for every error raised by this package."""


class TagMismatchError(QTDoubleError, ValueError):
    """Operands live in differently tagged ambient spaces."""


class UnsolvableError(QTDoubleError, ValueError):
    """A linear system has no solution."""


class DomainError(QTDoubleError, ValueError):
    """An argument lies outside the subspace an operation is defined on."""


class NotALieAlgebraError(QTDoubleError, ValueError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


class CYBEError(QTDoubleError, ValueError):
    """The r-matrix does not satisfy the classical Yang-Baxter equation."""

    def __init__(self, message, entry=None):
        super().__init__(message)
        self.entry = entry


class NotBialgebraError(QTDoubleError, ValueError):
    """r solves CYBE but its cobracket is not skew (Omega not ad-invariant)."""


class InconsistencyError(QTDoubleError, RuntimeError):
    """An identity that must hold by construction failed.

    Signals a sign-convention or implementation bug, not bad input.
    """


class ExtensionError(QTDoubleError, ValueError):
    """Representation or cocycle check failed while building an extension."""


class PreconditionError(QTDoubleError, ValueError):
    """A special-case check was called on input of the wrong kind."""


class ParseError(QTDoubleError, ValueError):
    """Malformed bialgebra file."""

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
