"""
Dual numbers in five minutes
============================

A dual number is a + eps*b where eps*eps = 0.  Arithmetic on them
carries first derivatives along for free: every analytic function f
lifts to f(a + eps*b) = f(a) + eps*b*f'(a).
"""

import math

from dualcurves import DualScalar, dual

# The lifted transcendentals live on the dual submodule so their names
# never shadow the math module's.

# The generator itself squares to zero.
eps = DualScalar(0.0, 1.0)
print("eps        =", eps)
print("eps*eps    =", eps * eps)

# Products mix the two parts like a first-order Taylor expansion.
x = DualScalar(2.0, 3.0)
y = DualScalar(4.0, 5.0)
print("x*y        =", x * y)          # 8 + eps*(2*5 + 3*4)
print("(x*y)/y    =", (x * y) / y)    # division undoes it

# Seeding the dual part with 1 turns any lifted function into an
# evaluator of f and f' at once.
t = DualScalar(1.44, 1.0)
r = dual.sqrt(t)
print("sqrt(1.44) =", r.re, " d/dt sqrt =", r.du, "(exact:", 0.5 / 1.2, ")")

# The lift agrees with calculus identities, not just tables:
# d/dt sin = cos, checked at an arbitrary point.
s = dual.sin(t)
print("sin' vs cos:", s.du, "=", math.cos(1.44))

# Pure-dual values are the nilpotents; they have no inverse, and the
# library refuses to divide by them rather than return garbage.
from dualcurves import PureDualDivisor

try:
    x / eps
except PureDualDivisor as exc:
    print("dividing by eps fails:", exc)

# cos at pi/2 with a dual seed: the value dies, the derivative survives.
q = dual.cos(DualScalar(math.pi / 2.0, 1.0))
print("cos(pi/2 + eps) =", q)
