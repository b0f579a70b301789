"""Exception hierarchy shared across the package.

Everything raised on purpose derives from LiecertError so the command-line
front end can map failures onto its exit-code contract.
"""


class LiecertError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(LiecertError):
    """Bad arguments to an operation (wrong sizes, missing data)."""


class InputFormatError(LiecertError):
    """Malformed algebra file or non-canonical scalar text."""


class NonCanonicalScalar(InputFormatError):
    def __init__(self, token, reason="not in canonical form"):
        super().__init__(f"scalar {token!r}: {reason}")
        self.token = token


class BadScalar(InputFormatError):
    """A coefficient that cannot be coerced into the requested field."""


class IndexOutOfRange(InputFormatError):
    """A basis index outside [0, dim) in a bracket table."""


class JacobiViolation(LiecertError):
    """The bracket table fails the Jacobi identity.

    ``violations`` is a list of (i, j, k, residual) with i < j < k and the
    residual the nonzero coordinate vector of the Jacobiator on that triple.
    """

    def __init__(self, violations):
        self.violations = violations
        triples = ", ".join(f"({i},{j},{k})" for i, j, k, _ in violations[:8])
        more = "" if len(violations) <= 8 else f" and {len(violations) - 8} more"
        super().__init__(f"Jacobi identity fails on triples {triples}{more}")


class NotAnIdeal(LiecertError):
    pass


class NotARepresentation(LiecertError):
    def __init__(self, bad_pairs):
        self.bad_pairs = bad_pairs
        super().__init__(
            "bracket compatibility fails on basis pairs "
            + ", ".join(f"({i},{j})" for i, j in bad_pairs)
        )


class NotSolvable(LiecertError):
    pass


class NotRegular(LiecertError):
    pass


class CentralInput(LiecertError):
    """A quaternion operation that needs a noncentral element got a central one."""


class BadTrace(LiecertError):
    pass


class PreconditionNotCertified(LiecertError):
    """A family constructor whose hypothesis could not be certified."""


class NonCommutingAction(LiecertError):
    pass


class PositiveCharacteristic(LiecertError):
    """Operation only available over the rationals."""


class RadicalUnavailableInPositiveCharacteristic(LiecertError):
    pass


class BadDenominator(LiecertError):
    def __init__(self, p, where=""):
        self.p = p
        super().__init__(f"structure constant denominator divisible by {p}{where}")


class DimensionBudgetExceeded(LiecertError):
    pass


class BudgetGuardExceeded(LiecertError):
    def __init__(self, estimate, guard):
        self.estimate = estimate
        self.guard = guard
        super().__init__(f"estimated work {estimate} exceeds guard {guard}")
