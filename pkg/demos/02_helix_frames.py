"""
Frenet frames of a dual helix
=============================

Curves live in D^3: each coordinate is a dual number, so one curve
encodes a base curve plus a first-order family around it.  The helix

    [(1 + eps)*cos(t), (1 + eps)*sin(t), t]

has dual radius 1 + eps and pitch 1.  Substituting r = 1 + eps into the
classical helix formulas r/(r^2+1) and 1/(r^2+1) predicts

    kappa = 1/2 + eps*0        tau = 1/2 - eps/2

and the computed frame reproduces that to machine precision.
"""

import math

from dualcurves import compile_curve, frenet_at

curve = compile_curve("[(1 + eps)*cos(t), (1 + eps)*sin(t), t]",
                      (0.0, 2.0 * math.pi))

for t in (0.5, 1.5, 2.5, 3.5):
    fr = frenet_at(curve, t)
    print(f"t = {t}")
    print("  kappa =", fr.kappa, "  tau =", fr.tau)
    print("  T =", [str(c) for c in fr.T.comps()])

# The frame stays orthonormal in the dual sense: every dot product
# below is a DualScalar and both parts vanish (or equal one).
fr = frenet_at(curve, 1.0)
from dualcurves import dot

print("T.T =", dot(fr.T, fr.T))
print("T.N =", dot(fr.T, fr.N))
print("N.B =", dot(fr.N, fr.B))

# Arc length is dual too: the dual part measures how the family
# stretches lengths to first order.
from dualcurves import arc_length

print("length over one turn:", arc_length(curve, 0.0, 2.0 * math.pi))
