"""Exception hierarchy shared by every dualcurves module."""


class DualCurvesError(Exception):
    """Base class for all errors raised by this package."""


class NonFiniteError(DualCurvesError):
    """A NaN or infinity reached a public boundary."""


class PureDualDivisor(DualCurvesError):
    """Division by a dual number whose real part is (numerically) zero."""


class DomainError(DualCurvesError):
    """Real part of an argument lies outside an analytic function's domain."""


class PureDualVector(DualCurvesError):
    """Norm or normalization of a vector whose real part vanishes."""


class NotUnit(DualCurvesError):
    """An argument that must have dual norm 1 + eps*0 does not."""


class DegenerateAngle(DualCurvesError):
    """Dual angle requested between (anti)parallel directions."""


class OutOfDomain(DualCurvesError):
    """Curve evaluated outside its parameter interval."""


class IrregularCurve(DualCurvesError):
    """Curve speed (real part) vanishes where regularity is required."""


class CuspPoint(IrregularCurve):
    """Evaluation at or beyond an involute cusp (offset distance <= 0)."""


class QuadratureFailure(DualCurvesError):
    """Adaptive quadrature or root refinement failed to converge."""


class PureDualCurvature(DualCurvesError):
    """Curvature has vanishing real part; the Frenet frame is undefined."""


class Underdetermined(DualCurvesError):
    """Least-squares system is rank deficient."""


class DegenerateDenominator(DualCurvesError):
    """A closed-form denominator is (numerically) zero."""


class NotPlanar(DualCurvesError):
    """A check requiring a plane curve received a curve with torsion."""


class ZeroDirection(DualCurvesError):
    """Line construction from a (numerically) zero direction vector."""


class NotDualUnit(DualCurvesError):
    """Dual vector that should encode a line is not a dual unit vector."""


class ParseError(DualCurvesError):
    """Curve expression source text could not be parsed.

    Carries the byte offset, 1-based line and column, and the set of
    token descriptions that would have been accepted at that point.
    """

    def __init__(self, message, offset, line, column, expected=()):
        self.message = message
        self.offset = offset
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        super().__init__(str(self))

    def __str__(self):
        text = f"{self.message} (line {self.line}, column {self.column})"
        if self.expected and not self.message.startswith("expected"):
            text += "; expected " + ", ".join(sorted(self.expected))
        return text


class EvalDomainError(DomainError):
    """Evaluation of a curve expression hit a domain error.

    Points back at the offending subexpression via its source offset.
    """

    def __init__(self, message, offset):
        self.message = message
        self.offset = offset
        super().__init__(f"{message} (source offset {offset})")
