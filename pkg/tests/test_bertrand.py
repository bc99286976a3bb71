"""Offset mates, pair criteria, involutes, and the involute-torsion formula."""

import math

import numpy as np
import pytest

from dualcurves import (DualScalar, check_angle_constant, check_bertrand_pair,
                        check_distance_constant, check_involute_pair,
                        compile_curve, dot, fit_linear_relation, frenet_at,
                        identity_pairing, involute, involute_torsion,
                        nearest_point_pairing, offset_curve,
                        offset_tangent_residual, reparam_by_arclength)
from dualcurves.errors import (CuspPoint, IrregularCurve, NotPlanar,
                               PureDualCurvature)
from tests.conftest import (CONST_CURVATURE, CONST_CURVATURE_DOMAIN,
                            CONST_CURVATURE_DUAL, TWO_PI, UNIT_CIRCLE)

LAMBDA_GRID = [DualScalar(1.0), DualScalar(-1.0), DualScalar(1.0, 1.0),
               DualScalar(-1.0, -1.0), DualScalar(0.5, 2.0)]


# ---------------------------------------------------------------------------
# offsets


def test_offset_zero_is_identity(helix_r2):
    beta = offset_curve(helix_r2, DualScalar(0.0))
    for t in (0.5, 3.0, 9.0):
        p, q = helix_r2.position(t), beta.position(t)
        assert np.max(np.abs(p.re - q.re)) <= 1e-15
        assert np.max(np.abs(p.du - q.du)) <= 1e-15


@pytest.mark.parametrize("lam", LAMBDA_GRID, ids=str)
def test_offset_distance_constant_on_grid(helix_r2, lam):
    beta = offset_curve(helix_r2, lam)
    result, samples, mean = check_distance_constant(
        helix_r2, beta, pairing=identity_pairing, n=100, tol=1e-8)
    assert result.passed
    assert result.max_deviation <= 1e-8
    # the constant equals |lambda| because N is a dual unit vector
    assert abs(mean.re - abs(lam.re)) <= 1e-12
    want_du = lam.du if lam.re >= 0 else -lam.du
    assert abs(mean.du - want_du) <= 1e-12


def test_offset_through_circle_center_degenerates():
    circle2 = compile_curve("[2*cos(t), 2*sin(t), 0]", (0.0, TWO_PI))
    beta = offset_curve(circle2, DualScalar(2.0))
    with pytest.raises(PureDualCurvature):
        frenet_at(beta, 1.0)


def test_offset_tangent_combination(helix_r2, const_curvature_dual):
    # the mate tangent, rescaled by the speed ratio, must equal
    # (1 - lam*kappa) T + lam*tau B at every sample
    for curve, lam, ts in (
            (helix_r2, DualScalar(1.0, 1.0), (1.0, 5.0, 11.0)),
            (const_curvature_dual, DualScalar(1.0, 1.0), (0.3, 0.7, 1.1))):
        for t in ts:
            res_re, res_du = offset_tangent_residual(curve, lam, t)
            assert res_re <= 1e-7
            assert res_du <= 1e-7


# ---------------------------------------------------------------------------
# pair checks


def test_helix_offset_pair_passes(helix_r2):
    beta = offset_curve(helix_r2, DualScalar(1.0, 1.0))
    report = check_bertrand_pair(helix_r2, beta, n=60, tol=1e-8)
    assert report.passed
    names = {c.name for c in report.criteria.values()}
    assert names == {"normal_alignment", "distance_constant",
                     "angle_constant", "linear_relation"}
    # helix has constant kappa, tau: the relation fit is underdetermined
    assert report.fit.underdetermined


def test_curve_is_its_own_mate(helix_r2):
    report = check_bertrand_pair(helix_r2, helix_r2, n=40, tol=1e-8,
                                 pairing=identity_pairing)
    assert report.passed
    dist = report.criteria["distance_constant"]
    assert dist.passed and dist.max_deviation <= 1e-12
    # parallel tangents: the angle check falls back to the cosine and the
    # linear relation is reported not applicable
    assert not report.criteria["linear_relation"].applicable


def test_nearest_point_pairing_recovers_identity(helix_r2):
    beta = offset_curve(helix_r2, DualScalar(1.0, 1.0))
    pair = nearest_point_pairing(helix_r2, beta)
    for t in (1.0, 4.0, 10.0):
        assert abs(pair(t) - t) <= 1e-9


def test_degenerate_offset_geometry_pair(const_curvature_dual):
    # lam*kappa = 1 exactly: the real offset passes through the curvature
    # centers, the hardest case for the nearest-point correspondence
    beta = offset_curve(const_curvature_dual, DualScalar(1.0, 1.0))
    report = check_bertrand_pair(const_curvature_dual, beta, n=40, tol=1e-8)
    assert report.passed
    assert not report.fit.underdetermined
    assert abs(report.fit.lam.re - 1.0) <= 1e-7
    assert abs(report.fit.lam.du - 1.0) <= 1e-7
    assert abs(report.fit.mu.re) <= 1e-7
    assert abs(report.fit.mu.du) <= 1e-7


def test_unrelated_helices_fail_normal_alignment(helix_r2):
    other = compile_curve("[cos(t), sin(t), 3*t]", (0.0, 2.0 * TWO_PI))
    report = check_bertrand_pair(helix_r2, other, n=24, tol=1e-8)
    assert not report.passed
    assert not report.criteria["normal_alignment"].passed


def test_tangent_shifted_pairing_fails_distance():
    ellipse_a = compile_curve("[2*cos(t), sin(t), 0]", (0.0, TWO_PI))
    ellipse_b = compile_curve("[2*cos(t), sin(t), 0]", (0.0, TWO_PI + 0.5))
    result, _, _ = check_distance_constant(
        ellipse_a, ellipse_b, pairing=lambda t: t + 0.3, n=50, tol=1e-8)
    assert not result.passed
    assert result.max_deviation > 1e-3


def test_angle_constant_on_offset_pair(helix_r2):
    beta = offset_curve(helix_r2, DualScalar(1.0, 1.0))
    result, angles, cosines = check_angle_constant(
        helix_r2, beta, pairing=identity_pairing, n=60, tol=1e-8)
    assert result.passed and angles is not None
    assert len(cosines) == 60


# ---------------------------------------------------------------------------
# the linear relation fit


def test_fit_constant_invariants_minimum_norm():
    kappas = [DualScalar(0.5)] * 8
    taus = [DualScalar(0.5)] * 8
    fit = fit_linear_relation(kappas, taus)
    assert fit.underdetermined
    assert abs(fit.lam.re - 1.0) <= 1e-12
    assert abs(fit.mu.re - 1.0) <= 1e-12
    assert fit.residual <= 1e-12
    assert fit.family is not None


def test_fit_varying_invariants_rank_two(const_curvature_dual):
    ts = np.linspace(0.2, 1.15, 24)
    kappas = [frenet_at(const_curvature_dual, float(t)).kappa for t in ts]
    taus = [frenet_at(const_curvature_dual, float(t)).tau for t in ts]
    fit = fit_linear_relation(kappas, taus)
    assert not fit.underdetermined
    # the dual-scaled curve satisfies (1+eps)*kappa + 0*tau = 1
    assert abs(fit.lam.re - 1.0) <= 1e-7
    assert abs(fit.lam.du - 1.0) <= 1e-7
    assert abs(fit.mu.re) <= 1e-7
    assert fit.residual <= 1e-7


def test_fit_noise_fails():
    rng = np.random.default_rng(19)
    kappas = [DualScalar(float(v)) for v in rng.uniform(0.2, 2.0, 12)]
    taus = [DualScalar(float(v)) for v in rng.uniform(-1.0, 1.0, 12)]
    fit = fit_linear_relation(kappas, taus)
    assert fit.residual > 1e-3


# ---------------------------------------------------------------------------
# involutes


def test_involute_tangent_perpendicular_to_base(unit_circle):
    c = DualScalar(TWO_PI)
    inv = involute(unit_circle, c)
    base = reparam_by_arclength(unit_circle)
    for s in (0.5, 2.0, 5.0):
        ti = frenet_at(inv, s).T
        tb = frenet_at(base, s).T
        d = dot(ti, tb)
        assert abs(d.re) <= 1e-8 and abs(d.du) <= 1e-8


def test_involute_cusp_at_string_end(unit_circle):
    inv = involute(unit_circle, DualScalar(3.0))
    with pytest.raises(IrregularCurve):
        inv.eval(3.0)
    with pytest.raises(CuspPoint):
        inv.eval(3.2)


def test_involute_of_dual_circle_is_plane(dual_circle):
    inv = involute(dual_circle, DualScalar(3.0))
    for s in (0.2, 1.0, 2.5):
        p = inv.position(s)
        assert abs(p.re[2]) <= 1e-12 and abs(p.du[2]) <= 1e-12
        fd = frenet_at(inv, s)
        assert abs(fd.tau.re) <= 1e-9 and abs(fd.tau.du) <= 1e-9


def test_involute_torsion_plane_base(dual_circle):
    val = involute_torsion(dual_circle, DualScalar(3.0), 1.0)
    assert abs(val.re) <= 1e-12 and abs(val.du) <= 1e-12


def test_involute_torsion_helix_base(unit_helix):
    # constant invariants: the numerator kappa*tau' - kappa'*tau vanishes
    val = involute_torsion(unit_helix, DualScalar(5.0), 1.5)
    assert abs(val.re) <= 1e-10 and abs(val.du) <= 1e-10


def test_involute_torsion_matches_direct_frenet():
    base = compile_curve(CONST_CURVATURE, (0.1, 1.2))
    c = DualScalar(5.0, 0.5)
    inv = involute(base, c)
    # the arc-length domain of this base is about (0, 0.8)
    for s in (0.2, 0.45, 0.7):
        formula = involute_torsion(base, c, s)
        direct = frenet_at(inv, s).tau
        assert abs(formula.re - direct.re) <= 1e-6
        assert abs(formula.du - direct.du) <= 1e-6
        # the value is genuinely nonzero here, so the match is informative
        if s == 0.45:
            assert abs(formula.re) > 1e-3


def test_involute_pair_of_dual_circle(dual_circle):
    report = check_involute_pair(dual_circle, DualScalar(3.0),
                                 DualScalar(5.0), n=24, tol=1e-8)
    assert report.passed
    dist = report.criteria["distance_value"]
    assert dist.applicable and dist.passed
    for label in ("involute1", "involute2"):
        assert report.criteria[f"{label}_torsion_frenet"].passed
        assert report.criteria[f"{label}_torsion_formula"].passed


def test_involute_pair_distance_is_string_difference(dual_circle):
    report = check_involute_pair(dual_circle, DualScalar(3.0),
                                 DualScalar(5.0), n=24, tol=1e-8)
    dist, _ = None, None
    for c in report.criteria.values():
        if c.name == "distance_constant":
            dist = c
    assert dist is not None and dist.passed
    assert "2" in report.criteria["distance_value"].detail


def test_involute_pair_not_planar(unit_helix):
    with pytest.raises(NotPlanar):
        check_involute_pair(unit_helix, DualScalar(3.0), DualScalar(5.0),
                            n=12, tol=1e-8)


def test_involute_pair_equal_strings(dual_circle):
    report = check_involute_pair(dual_circle, DualScalar(3.0),
                                 DualScalar(3.0), n=16, tol=1e-8)
    assert report.passed
    dist = report.criteria["distance_constant"]
    assert dist.max_deviation <= 1e-12


def test_report_serializes(helix_r2):
    beta = offset_curve(helix_r2, DualScalar(1.0))
    report = check_bertrand_pair(helix_r2, beta, n=16, tol=1e-8)
    d = report.to_dict()
    assert d["pass"] is True
    assert {c["name"] for c in d["criteria"]} >= {"normal_alignment",
                                                  "distance_constant"}
    assert "residual" in d["fit"]
