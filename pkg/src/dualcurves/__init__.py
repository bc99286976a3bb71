"""Dual-number curve geometry.

Scalars a + eps*a* with eps^2 = 0, dual 3-vectors, jets of dual
coefficients, dual space curves with their Frenet apparatus, Bertrand
offsets and involutes with numeric pair checks, a small expression DSL,
and the correspondence between oriented lines and dual unit vectors.
"""

from .bertrand import (BertrandReport, CriterionResult, InvoluteCurve,
                       OffsetCurve, RelationFit, check_angle_constant,
                       check_bertrand_pair, check_distance_constant,
                       check_involute_pair, ensure_unit_speed,
                       fit_linear_relation, identity_pairing, involute,
                       involute_torsion, nearest_point_pairing, offset_curve,
                       offset_tangent_residual)
from .curves import (ArcLengthTable, CurvePoint, DualCurve, ReparamCurve,
                     arc_length, reparam_by_arclength)
from .dsl import (ExprCurve, compile_curve, evaluate_scalar, format_expr,
                  parse, parse_scalar, render_caret)
from .dual import (ANALYTIC_FUNCTIONS, PURE_DUAL_TOL, DualScalar,
                   apply_analytic, as_dual, derivative_table, div, dual_abs,
                   is_pure_dual)
from .errors import (CuspPoint, DegenerateAngle, DegenerateDenominator,
                     DomainError, DualCurvesError, EvalDomainError,
                     IrregularCurve, NonFiniteError, NotDualUnit, NotPlanar,
                     NotUnit, OutOfDomain, ParseError, PureDualCurvature,
                     PureDualDivisor, PureDualVector, QuadratureFailure,
                     Underdetermined, ZeroDirection)
from .frenet import FrenetData, frenet_at, frenet_ode_residual
from .jets import Jet, compose, shift_dual
from .linalg import (DualAngle, DualVec3, cross, det3, dot, dual_angle, norm,
                     normalize)
from .lines import (OrientedLine, from_dual_unit, line_dual_angle,
                    line_from_point_dir, to_dual_unit)

__version__ = "0.1.0"

__all__ = [
    "ANALYTIC_FUNCTIONS", "ArcLengthTable", "BertrandReport",
    "CriterionResult", "CurvePoint", "CuspPoint", "DegenerateAngle",
    "DegenerateDenominator", "DomainError", "DualAngle", "DualCurve",
    "DualCurvesError", "DualScalar", "DualVec3", "EvalDomainError",
    "ExprCurve", "FrenetData", "InvoluteCurve", "IrregularCurve", "Jet",
    "NonFiniteError", "NotDualUnit", "NotPlanar", "NotUnit", "OffsetCurve",
    "OrientedLine", "OutOfDomain", "PURE_DUAL_TOL", "ParseError",
    "PureDualCurvature", "PureDualDivisor", "PureDualVector",
    "QuadratureFailure", "RelationFit", "ReparamCurve", "Underdetermined",
    "ZeroDirection", "apply_analytic", "arc_length", "as_dual",
    "check_angle_constant", "check_bertrand_pair", "check_distance_constant",
    "check_involute_pair", "compile_curve", "compose", "cross",
    "derivative_table", "det3", "div", "dot", "dual_abs", "dual_angle",
    "ensure_unit_speed", "evaluate_scalar", "fit_linear_relation",
    "format_expr", "frenet_at", "frenet_ode_residual", "from_dual_unit",
    "identity_pairing", "involute", "involute_torsion", "is_pure_dual",
    "line_dual_angle", "line_from_point_dir", "nearest_point_pairing",
    "norm", "normalize", "offset_curve", "offset_tangent_residual", "parse",
    "parse_scalar", "render_caret", "reparam_by_arclength", "shift_dual",
    "to_dual_unit",
]
