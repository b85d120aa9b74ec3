"""
Exception hierarchy for the minimal Lorentz surfaces toolkit.

All library failures derive from ``LorentzError`` so the command router can map
them to a single exit code.
"""


class LorentzError(Exception):
    """Base class for every error raised by the toolkit"""


class ExpressionError(LorentzError):
    """Raised for problems with generating-function expressions"""


class ExpressionSyntaxError(ExpressionError):
    """Syntax error at a byte offset of the expression source"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownIdentifierError(ExpressionError):
    """Identifier that is neither the variable, a constant nor a function"""

    def __init__(self, name: str, offset: int):
        super().__init__(f"Unknown identifier '{name}' (at offset {offset})")
        self.name = name
        self.offset = offset


class ArityError(ExpressionError):
    """Function called with the wrong number of arguments"""

    def __init__(self, name: str, expected: int, got: int, offset: int):
        super().__init__(f"Function '{name}' takes {expected} argument(s), got {got} (at offset {offset})")
        self.name = name
        self.offset = offset


class DomainError(ExpressionError):
    """Evaluation left the real domain of a subexpression"""

    def __init__(
        self,
        reason: str,
        subexpression: str | None = None,
        t: float | None = None,
        index: int | None = None,
    ):
        self.reason = reason
        self.subexpression = subexpression
        self.t = t
        self.index = index
        details = reason
        if subexpression is not None:
            details += f" in '{subexpression}'"
        if t is not None:
            details += f" at t={t!r}"
        super().__init__(details)


class GeometryError(LorentzError):
    """Raised when geometric preconditions or computations fail"""


class DegenerateCurveError(GeometryError):
    """A factor that must not vanish does vanish (or changes sign)"""

    def __init__(self, message: str, witness: float | None = None):
        super().__init__(message if witness is None else f"{message} (witness t={witness!r})")
        self.witness = witness


class PreconditionError(GeometryError):
    """A pointwise or product-grid condition fails; ``witness`` is the offending point"""

    def __init__(self, message: str, witness: tuple[float, ...] | float | None = None):
        super().__init__(message if witness is None else f"{message} (witness {witness!r})")
        self.witness = witness


class CrossConditionError(PreconditionError):
    """g1(t1) = g2(t2) or h1(t1) = h2(t2) somewhere on the product domain"""


class ConventionError(GeometryError):
    """Canonical curvature formulas require F < 0"""


class SpaceMismatchError(GeometryError):
    """Objects living in different ambient spaces were combined"""


class MotionError(GeometryError):
    """Matrix is not an isometry (or anti-isometry) of the ambient space"""


class IntegrationError(GeometryError):
    """Adaptive quadrature did not converge"""


class RootFindingError(GeometryError):
    """Inverse of a monotone map could not be computed"""
