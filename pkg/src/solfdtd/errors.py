"""Exception hierarchy shared by the solver, the oracle and the CLI."""


class SolFDTDError(Exception):
    """Base class for all package errors."""


class DomainError(SolFDTDError, ValueError):
    """An argument violates a documented precondition."""


class NumericsError(SolFDTDError, ArithmeticError):
    """A computation produced non-finite values or tripped the divergence guard."""

    def __init__(self, message, step=None, max_abs=None):
        super().__init__(message)
        self.step = step
        self.max_abs = max_abs


class ParseError(SolFDTDError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(SolFDTDError, ValueError):
    """A parsed configuration violates an invariant of a downstream type."""


class IoError(SolFDTDError, OSError):
    pass
