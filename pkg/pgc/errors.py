"""Exception hierarchy for the engine. Everything raised on purpose derives from PgcError."""


class PgcError(Exception):
    """Base class for engine errors."""


class FieldError(PgcError):
    """Bad modulus or degenerate input to F_p arithmetic."""


class PresentationSyntaxError(PgcError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PresentationError(PgcError):
    """Structurally invalid presentation (weight violation, malformed tail)."""


class MixedPresentationError(PgcError):
    pass


class ConsistencyError(PgcError):
    def __init__(self, report):
        super().__init__(f"inconsistent presentation: {report.describe()}")
        self.report = report


class NotCentralError(PgcError):
    pass


class NotInSocleError(PgcError):
    pass


class AmalgamationError(PgcError):
    pass


class NotInDerivedSubgroupError(PgcError):
    pass


class PreconditionError(PgcError):
    pass


class HypothesisError(PgcError):
    def __init__(self, message: str, record=None):
        super().__init__(message)
        self.record = record


class DimensionError(PgcError):
    pass


class BudgetExceededError(PgcError):
    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what} needs {required} steps, budget is {budget}")
        self.required = required
        self.budget = budget


class CatalogError(PgcError):
    """Unknown catalog entry or parameter constraint violation."""


class InvariantViolation(PgcError):
    """A cross-check that holds for every consistent input failed."""
