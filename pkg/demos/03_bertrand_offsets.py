"""
Bertrand mates by normal offsetting
===================================

Pushing every point of a curve a constant dual distance lam along the
principal normal produces a mate whose normal line agrees with the
original's.  Such pairs keep a constant separation, keep a constant
tangent angle, and satisfy lam*kappa + mu*tau = 1 for constants
(lam, mu).
"""

import json
import math

from dualcurves import (DualScalar, check_bertrand_pair, compile_curve,
                        frenet_at, norm, offset_curve)

alpha = compile_curve("[2*cos(t), 2*sin(t), t]", (0.0, 4.0 * math.pi))

# A dual offset: real shift 1, first-order shift 2.
lam = DualScalar(1.0, 2.0)
beta = offset_curve(alpha, lam)

# Separation between corresponding points is lam itself, at every t.
for t in (0.4, 2.0, 5.0):
    gap = norm(beta.position(t) - alpha.position(t))
    print(f"t = {t}: |beta - alpha| =", gap)

# The full verdict: four criteria plus a least-squares fit of
# (lam, mu).  A circular helix has constant kappa and tau, so the fit
# is a one-parameter family and is flagged underdetermined rather than
# inventing a unique answer.
report = check_bertrand_pair(alpha, beta, n=40)
print(json.dumps(report.to_dict(), indent=2))

# On a curve whose invariants vary the same fit pins (lam, mu) down.
base = compile_curve(
    "[2/5*(-cos(t) + 4*cos(t/5) - 1/11*cos(11*t/5)),"
    " 2/5*(-sin(t) - 4*sin(t/5) - 1/11*sin(11*t/5)),"
    " -4/15*cos(6*t/5)]", (0.15, 1.2))
print("base invariants at 0.3 and 0.9:")
for t in (0.3, 0.9):
    fr = frenet_at(base, t)
    print("  kappa =", fr.kappa, " tau =", fr.tau)

mate = offset_curve(base, DualScalar(1.0))
fit = check_bertrand_pair(base, mate, n=40).fit
print("fitted lam =", fit.lam, " mu =", fit.mu,
      " underdetermined =", fit.underdetermined)
