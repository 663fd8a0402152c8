"""Exception hierarchy.

The CLI maps these to exit codes: hypothesis violations exit 1, parse
errors exit 2, internal invariant failures exit 3.
"""


class NspecError(Exception):
    """Base class for all package errors."""


class ParseError(NspecError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class HypothesisError(NspecError):
    """An input does not satisfy a hypothesis required by a formula."""


class NotSimplicialError(HypothesisError):
    pass


class NotConvenientError(HypothesisError):
    pass


class InvariantError(NspecError):
    """Two routes that must agree did not; indicates a bug or a counterexample."""


class ConjectureFinding(InvariantError):
    """A conjectural identity failed on a concrete input.

    ``details`` holds a machine-readable description of the violation.
    """

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}
