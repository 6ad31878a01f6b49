"""Exception hierarchy.

Every error carries a short kebab-case ``code`` so the CLI can report it
verbatim.
"""


class SrgBorsukError(Exception):
    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details


class InfeasibleParameters(SrgBorsukError, ValueError):
    code = "infeasible-parameters"


class IrrationalEigenvalue(SrgBorsukError, ValueError):
    code = "irrational-eigenvalue"


class DegenerateDenominator(SrgBorsukError, ZeroDivisionError):
    code = "degenerate-denominator"


class ParameterMismatch(SrgBorsukError, ValueError):
    code = "parameter-mismatch"


class SizeBudgetExceeded(SrgBorsukError, ValueError):
    code = "size-budget-exceeded"


class IdentityViolated(SrgBorsukError, AssertionError):
    code = "identity-violated"


class RealizationError(SrgBorsukError, ArithmeticError):
    code = "eigendecomposition-failure"


class EqualInnerProducts(SrgBorsukError, ValueError):
    code = "equal-inner-products"


class VertexOutOfRange(SrgBorsukError, IndexError):
    code = "vertex-out-of-range"


class InvalidGeneratorArgument(SrgBorsukError, ValueError):
    code = "invalid-generator-argument"


class Graph6Error(SrgBorsukError, ValueError):
    code = "graph6-error"


class MalformedHeader(Graph6Error):
    code = "malformed-header"


class TruncatedBitSection(Graph6Error):
    code = "truncated-bit-section"


class TrailingGarbage(Graph6Error):
    code = "trailing-garbage"


class DataVerificationError(SrgBorsukError, ValueError):
    code = "data-verification-failed"


class BudgetExceeded(SrgBorsukError, RuntimeError):
    code = "budget-exceeded"


class NonnegativeQ(SrgBorsukError, ValueError):
    code = "nonnegative-q"


class ChainMismatch(SrgBorsukError, AssertionError):
    code = "chain-mismatch"


class MalformedBase(SrgBorsukError, ValueError):
    code = "malformed-base"


class CircumradiusTooLarge(SrgBorsukError, ValueError):
    code = "circumradius-too-large"


class NotTwoDistance(SrgBorsukError, ValueError):
    code = "not-two-distance"
