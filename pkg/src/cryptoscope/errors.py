"""Exception hierarchy shared across the pipeline."""


class CryptoscopeError(Exception):
    """Base class for all errors raised by this package."""


class UnknownMnemonic(CryptoscopeError):
    """A mnemonic is not present in the instruction taxonomy."""


class ParseError(CryptoscopeError):
    """A trace line could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class FormatError(CryptoscopeError):
    """A trace parses but violates a structural invariant."""


class EmptyTrace(CryptoscopeError):
    """A trace contains a header but no events."""


class TraceTooLong(CryptoscopeError):
    """Generation exceeded the hard event cap."""


class FitError(CryptoscopeError):
    """A feature space could not be fit."""


class ExtractError(CryptoscopeError):
    """Feature extraction failed for a trace."""


class TrainError(CryptoscopeError):
    """A model could not be trained on the given data."""


class DimError(CryptoscopeError):
    """Vector dimensions do not match."""


class DomainError(CryptoscopeError):
    """An input value is outside the operation's domain."""


class EvalError(CryptoscopeError):
    """An evaluation request is malformed or infeasible."""
