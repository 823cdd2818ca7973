"""Exception hierarchy shared by every subpackage.

Input problems are ``ValueError`` subclasses so callers that only know the
builtin still catch them; numeric breakdowns are ``RuntimeError`` subclasses.
"""


class InputError(ValueError):
    """The user supplied something the pipeline cannot accept."""


class DslSyntaxError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EpsilonError(InputError):
    def __init__(self, message: str, relator: str | None = None):
        super().__init__(message)
        self.relator = relator


class UnknownGeneratorError(InputError):
    pass


class NotInKernelError(InputError):
    pass


class NotNormalizedError(InputError):
    pass


class RepresentationError(InputError):
    pass


class VanishingPolynomialError(InputError):
    pass


class ComputationError(RuntimeError):
    pass


class RootFindingError(ComputationError):
    def __init__(self, message: str, residuals: list[float] | None = None):
        super().__init__(message)
        self.residuals = residuals or []


class InterpolationError(ComputationError):
    pass
