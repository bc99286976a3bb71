"""
Involutes of a plane curve
==========================

Unwinding a taut string of length c from a curve traces its involute
beta(s) = alpha(s) + (c - s)*T(s), with s the arc length.  Involutes of
a plane curve are themselves plane curves (torsion zero), any two of
them form a Bertrand pair a constant distance apart, and the string
runs perpendicular to the involute it traces.
"""

import math

from dualcurves import (CuspPoint, check_involute_pair, compile_curve,
                        dot, frenet_at, involute, involute_torsion)

circle = compile_curve("[(1 + eps)*cos(t), (1 + eps)*sin(t), 0]",
                       (0.0, 2.0 * math.pi))

# involute() reparametrizes by arc length automatically; the string
# constant c = 3 gives a cusp at s = 3 where the string runs out.
inv = involute(circle, 3.0)

for s in (0.5, 1.5, 2.5):
    tau = frenet_at(inv, s).tau
    print(f"s = {s}: involute torsion =", tau)

# Same number from the base curve's invariants alone, no involute
# geometry touched.
print("formula route at s = 1.5:", involute_torsion(circle, 3.0, 1.5))

# The string direction is the base tangent; the involute's own tangent
# is perpendicular to it.
base_T = frenet_at(involute(circle, 3.0).base, 1.5).T
inv_T = frenet_at(inv, 1.5).T
print("string . involute_tangent =", dot(base_T, inv_T))

# Walking past the cusp raises instead of producing a fake frame.
try:
    frenet_at(inv, 3.0)
except CuspPoint as exc:
    print("at s = c:", exc)

# Two involutes of the same base: a ready-made Bertrand pair, separated
# by exactly |c2 - c1|.
report = check_involute_pair(circle, 3.0, 5.0, n=24)
print("pair passes:", report.passed)
print("criteria:", ", ".join(sorted(report.criteria)))
