class CarpetError(ValueError):
    """Base class for every domain error raised by carpetlab"""

    kind = "carpet_error"


class MalformedCarpet(CarpetError):
    kind = "malformed_carpet"


class GridViolation(CarpetError):
    kind = "grid_violation"


class DuplicateDigit(CarpetError):
    kind = "duplicate_digit"


class EmptyDigitSet(CarpetError):
    kind = "empty_digit_set"


class BadShape(CarpetError):
    kind = "bad_shape"


class ShapeMismatch(CarpetError):
    kind = "shape_mismatch"


class ClassViolation(CarpetError):
    kind = "class_violation"


class ZeroValuation(CarpetError):
    kind = "zero_valuation"


class NotPrime(CarpetError):
    kind = "not_prime"


class AlphaOutOfRange(CarpetError):
    kind = "alpha_out_of_range"


class RegularDegenerate(AlphaOutOfRange):
    kind = "regular_degenerate"


class ConfigError(CarpetError):
    kind = "config_error"


class BudgetExceeded(CarpetError):
    kind = "budget_exceeded"

    def __init__(self, requested: int, budget: int, what: str = "pieces"):
        super().__init__(f"Enumeration of {requested} {what} exceeds budget {budget}")
        self.requested = requested
        self.budget = budget


class SolverFailure(CarpetError):
    kind = "solver_failure"
