"""Dual space curves: evaluation, dual arc length, reparametrization.

A DualCurve maps a real parameter to a point of D^3 and can produce
jets of any order, which is what makes derived curves (offsets,
involutes, arc-length reparametrizations) composable without finite
differencing.
"""

from __future__ import annotations

import bisect
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from scipy.interpolate import PchipInterpolator

from .dual import PURE_DUAL_TOL, DualScalar, as_dual
from .errors import IrregularCurve, OutOfDomain, QuadratureFailure
from .jets import Jet, compose, jderiv, jnorm, shift_dual
from .linalg import DualVec3, norm


class CurvePoint(NamedTuple):
    """Position and first three derivative vectors at one parameter value."""

    position: DualVec3
    d1: DualVec3
    d2: DualVec3
    d3: DualVec3


class DualCurve:
    """Base class for dual space curves on a closed parameter interval."""

    def __init__(self, domain):
        a, b = float(domain[0]), float(domain[1])
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"invalid parameter interval ({a!r}, {b!r})")
        self._domain = (a, b)

    @property
    def domain(self) -> tuple[float, float]:
        return self._domain

    def coord_jets(self, t0, order: int) -> tuple[Jet, Jet, Jet]:
        """Jets of the three coordinates at t0 (a real or dual base point)."""
        raise NotImplementedError

    def _check_domain(self, t_re: float) -> None:
        a, b = self._domain
        slack = 1e-9 * (b - a) + 1e-12
        if not (a - slack <= t_re <= b + slack):
            raise OutOfDomain(f"parameter {t_re!r} outside [{a!r}, {b!r}]")

    def eval(self, t: float) -> CurvePoint:
        """Position and exact first three derivatives at t."""
        jets = self.coord_jets(as_dual(t), 3)
        vecs = [DualVec3(*(j.coeffs[k] for j in jets)) for k in range(4)]
        return CurvePoint(*vecs)

    def position(self, t: float) -> DualVec3:
        jets = self.coord_jets(as_dual(t), 0)
        return DualVec3(*(j.coeffs[0] for j in jets))

    def velocity_norm(self, t: float, tol: float = PURE_DUAL_TOL) -> DualScalar:
        """Dual speed ||alpha'(t)||; raises IrregularCurve if its real part
        is below tol."""
        jets = self.coord_jets(as_dual(t), 1)
        d1 = [j.d1 for j in jets]
        speed_re = math.sqrt(sum(c.re * c.re for c in d1))
        if speed_re <= tol:
            raise IrregularCurve(f"curve speed vanishes at t = {t!r}")
        return norm(DualVec3(*d1), tol)


@lru_cache(maxsize=None)
def _gauss_rule(order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return tuple(nodes), tuple(weights)


def _panel(curve, a, b, nodes, weights) -> DualScalar:
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    total = DualScalar(0.0)
    for x, w in zip(nodes, weights):
        total = total + w * curve.velocity_norm(mid + half * x)
    return half * total


def arc_length(curve: DualCurve, t0: float, t1: float, order: int = 16,
               tol: float = 1e-10, max_depth: int = 40) -> DualScalar:
    """Dual arc length of the curve over [t0, t1].

    Adaptive Gauss-Legendre quadrature of the dual speed: a panel is
    accepted when bisecting it changes the real part by at most the
    panel's share of tol.  The dual part is accumulated on the same
    subdivision.  Raises QuadratureFailure when the subdivision depth
    exceeds max_depth and IrregularCurve if the speed's real part
    vanishes at a quadrature node.
    """
    t0, t1 = float(t0), float(t1)
    if t0 > t1:
        raise OutOfDomain(f"arc_length needs t0 <= t1, got ({t0!r}, {t1!r})")
    curve._check_domain(t0)
    curve._check_domain(t1)
    if t0 == t1:
        return DualScalar(0.0)
    nodes, weights = _gauss_rule(order)
    span = t1 - t0
    min_width = span / 2.0**max_depth
    total = DualScalar(0.0)
    stack = [(t0, t1, _panel(curve, t0, t1, nodes, weights))]
    while stack:
        a, b, whole = stack.pop()
        mid = 0.5 * (a + b)
        left = _panel(curve, a, mid, nodes, weights)
        right = _panel(curve, mid, b, nodes, weights)
        refined = left + right
        if abs(refined.re - whole.re) <= max(tol * (b - a) / span, 1e-16):
            total = total + refined
            continue
        if (b - a) <= min_width:
            raise QuadratureFailure(
                f"arc-length quadrature stalled on [{a!r}, {b!r}]")
        stack.append((a, mid, left))
        stack.append((mid, b, right))
    return total


class ArcLengthTable:
    """Cumulative dual arc length sampled at uniform knots.

    Supports evaluating the cumulative length at any parameter (knot
    value plus a quadrature remainder) and inverting the real part by a
    monotone cubic seed refined with Newton iteration.
    """

    def __init__(self, curve: DualCurve, samples: int = 64,
                 order: int = 16, tol: float = 1e-10):
        if samples < 2:
            raise ValueError("need at least two knots")
        a, b = curve.domain
        self.curve = curve
        self.order = order
        self.tol = tol
        self.knots = [a + (b - a) * i / (samples - 1) for i in range(samples)]
        for knot in self.knots:
            curve.velocity_norm(knot)
        cumulative = [DualScalar(0.0)]
        for lo, hi in zip(self.knots, self.knots[1:]):
            cumulative.append(cumulative[-1] + arc_length(curve, lo, hi, order, tol))
        self.cumulative = cumulative
        s_re = [c.re for c in cumulative]
        if any(y >= z for y, z in zip(s_re, s_re[1:])):
            raise IrregularCurve("cumulative arc length is not strictly increasing")
        self._seed = PchipInterpolator(s_re, self.knots)

    @property
    def length(self) -> DualScalar:
        return self.cumulative[-1]

    def s_at(self, t: float) -> DualScalar:
        """Cumulative dual arc length from the domain start to t."""
        self.curve._check_domain(t)
        k = bisect.bisect_right(self.knots, t) - 1
        k = min(max(k, 0), len(self.knots) - 2)
        base, knot = self.cumulative[k], self.knots[k]
        if t == knot:
            return base
        if t < knot:
            return base - arc_length(self.curve, t, knot, self.order, self.tol)
        return base + arc_length(self.curve, knot, t, self.order, self.tol)

    def invert_real(self, s: float, tol: float = 1e-12, max_iter: int = 50) -> float:
        """Parameter t with real arc length s, by monotone seed + Newton."""
        a, b = self.curve.domain
        total = self.cumulative[-1].re
        slack = 1e-9 * total + 1e-12
        if not (-slack <= s <= total + slack):
            raise OutOfDomain(f"arc length {s!r} outside [0, {total!r}]")
        s = min(max(s, 0.0), total)
        t = float(self._seed(s))
        t = min(max(t, a), b)
        goal = tol * max(1.0, total)
        for _ in range(max_iter):
            r = self.s_at(t).re - s
            if abs(r) <= goal:
                return t
            t = t - r / self.curve.velocity_norm(t).re
            t = min(max(t, a), b)
        raise QuadratureFailure(f"arc-length inversion did not converge at s = {s!r}")


class ReparamCurve(DualCurve):
    """A curve re-read in its own dual arc length.

    The parameter map sends s to a dual base point t + eps*t_du chosen so
    the composed curve has dual speed exactly 1 + eps*0: the real part
    inverts the real arc length, and the dual correction cancels the dual
    part of the cumulative length.
    """

    def __init__(self, base: DualCurve, samples: int = 64, tol: float = 1e-10):
        self.base = base
        self.table = ArcLengthTable(base, samples=samples, tol=tol)
        super().__init__((0.0, self.table.length.re))

    def coord_jets(self, t0, order: int):
        u0 = as_dual(t0)
        self._check_domain(u0.re)
        extra = 1 if u0.du != 0.0 else 0
        n = order + extra

        t_re = self.table.invert_real(u0.re)
        s_hat = self.table.s_at(t_re)
        speed_re = self.base.velocity_norm(t_re).re
        that0 = DualScalar(t_re, -s_hat.du / speed_re)

        if n == 0:
            return self.base.coord_jets(that0, 0)

        A = self.base.coord_jets(that0, n)
        inv_speed = Jet.constant(1.0, n - 1) / jnorm(jderiv(A))
        coeffs = [that0, inv_speed.coeffs[0]]
        for k in range(2, n + 1):
            partial = Jet(tuple(coeffs[:k]))
            rate = compose(inv_speed.truncated(k - 1), partial)
            coeffs.append(rate.coeffs[k - 1])
        tjet = Jet(tuple(coeffs))

        out = tuple(compose(c, tjet) for c in A)
        if extra:
            out = shift_dual(out, u0.du)
        return out


def reparam_by_arclength(curve: DualCurve, samples: int = 64,
                         tol: float = 1e-10) -> ReparamCurve:
    """Reparametrize so the dual speed is identically 1 + eps*0."""
    return ReparamCurve(curve, samples=samples, tol=tol)
