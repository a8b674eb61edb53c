import numpy as np
import pytest

from bkcdf.analysis import (
    MiseTerms,
    NoOptimalBandwidthError,
    PointwiseError,
    asymptotic_pointwise,
    exact_bias,
    exact_integrated_variance,
    exact_mise,
    exact_mse_curve,
    exact_variance,
    mise_terms,
    pointwise_error,
)
from bkcdf.boundary import FAMILY_NAMES, BoundaryKernelFamily
from bkcdf.distributions import BetaMixture, Uniform, solve_params
from bkcdf.estimator import EstimatorConfig
from bkcdf.kernels import BaseKernel

EPAN = BaseKernel("epanechnikov")


def make_cfg(variant, h=0.2, a=0.0, b=1.0):
    family = None if variant is None else BoundaryKernelFamily(variant, EPAN)
    return EstimatorConfig(a, b, h, EPAN, family)


def test_pointwise_error_mse_property():
    rec = PointwiseError(x=0.1, bias=0.02, variance=0.003)
    assert rec.mse == pytest.approx(0.003 + 0.0004, abs=1e-18)


@pytest.mark.parametrize("variant", FAMILY_NAMES)
def test_zero_bias_for_uniform(variant):
    # a linear CDF is reproduced exactly: moment conditions make the
    # smoothing bias vanish at every strip position
    dist = Uniform()
    cfg = make_cfg(variant, h=0.2)
    for alpha in (0.1, 0.4, 0.7, 0.95):
        assert exact_bias(dist, cfg, alpha) == pytest.approx(0.0, abs=1e-10)


def test_variance_scales_inversely_with_n():
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k2", h=0.15)
    v10 = exact_variance(dist, cfg, 0.5, 10)
    v100 = exact_variance(dist, cfg, 0.5, 100)
    assert v100 == pytest.approx(v10 / 10.0, rel=1e-12)
    assert v10 > 0.0


def test_exact_mse_curve_matches_scalar_calls():
    dist = BetaMixture(0.3, 6.0)
    cfg = make_cfg("k3", h=0.2)
    alphas = [0.25, 0.5, 0.75]
    recs = exact_mse_curve(dist, cfg, 50, alphas)
    for alpha, rec in zip(alphas, recs):
        assert rec.x == pytest.approx(alpha * 0.2, abs=1e-15)
        assert rec.bias == pytest.approx(exact_bias(dist, cfg, alpha), abs=1e-14)
        assert rec.variance == pytest.approx(
            exact_variance(dist, cfg, alpha, 50), abs=1e-14
        )


def test_asymptotic_uniform_bias_zero():
    fam = BoundaryKernelFamily("k1", EPAN)
    rec = asymptotic_pointwise(Uniform(), fam, EPAN, 0.1, 0.5, 50)
    assert rec.bias == 0.0
    # n V = F(1-F) - h f nu
    expect = 0.05 * 0.95 - 0.1 * fam.nu_var_coeff(0.5)
    assert rec.variance == pytest.approx(expect / 50.0, abs=1e-14)


def test_asymptotic_bias_quadratic_in_h():
    dist = BetaMixture(0.5, 5.0)
    fam = BoundaryKernelFamily("k2", EPAN)
    b1 = asymptotic_pointwise(dist, fam, EPAN, 0.2, 0.5, 50).bias
    b2 = asymptotic_pointwise(dist, fam, EPAN, 0.1, 0.5, 50).bias
    # halving h quarters the leading bias, up to the change in F'' location
    assert b2 == pytest.approx(
        0.25 * b1 * dist.d2(0.05) / dist.d2(0.1), rel=1e-12
    )


def test_mise_terms_values():
    dist = BetaMixture(0.0, 2.0)  # roughness 12
    terms = mise_terms(dist, EPAN, 50)
    expect_h0 = (45.0 / 7.0) ** (1 / 3) * 12.0 ** (-1 / 3) * 50.0 ** (-1 / 3)
    assert terms.h0 == pytest.approx(expect_h0, abs=1e-12)
    assert terms.v1 == pytest.approx(9.0 / 35.0, abs=1e-14)
    assert terms.b4 == pytest.approx(0.25 * 0.2**2 * 12.0, abs=1e-8)
    # v0 = int F(1-F) / n, and int F(1-F) = 9/70 for B(2,2)
    assert terms.v0 == pytest.approx(9.0 / 70.0 / 50.0, rel=1e-8)
    terms8 = mise_terms(dist, EPAN, 400)
    assert terms8.h0 == pytest.approx(terms.h0 / 2.0, rel=1e-12)


def test_mise_terms_leading_formula():
    terms = MiseTerms(v0=0.01, v1=0.25, b4=1.2, h0=0.2, delta_k=1.8)
    assert terms.leading(0.1, 50) == pytest.approx(
        0.01 - 0.1 * 0.25 / 50 + 1.2 * 0.1**4, abs=1e-16
    )


def test_mise_terms_uniform_raises():
    with pytest.raises(NoOptimalBandwidthError):
        mise_terms(Uniform(), EPAN, 50)


def test_pointwise_dispatch_consistency():
    # exact left-strip machinery agrees with the dedicated strip functions
    dist = solve_params(1.0, 6.0)
    cfg = make_cfg("k1", h=0.2)
    rec = pointwise_error(dist, cfg, 50, 0.1)
    assert rec.bias == pytest.approx(exact_bias(dist, cfg, 0.5), abs=1e-12)
    assert rec.variance == pytest.approx(
        exact_variance(dist, cfg, 0.5, 50), abs=1e-14
    )
    # outside the support the estimator is constant
    assert pointwise_error(dist, cfg, 50, 0.0) == PointwiseError(0.0, 0.0, 0.0)
    assert pointwise_error(dist, cfg, 50, 1.0) == PointwiseError(1.0, 0.0, 0.0)


def test_strip_boundary_continuity():
    # the strip formulas and the interior formulas agree at x = a + h
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k1", h=0.2)
    eps = 1e-9
    left = pointwise_error(dist, cfg, 50, 0.2 - eps)
    mid = pointwise_error(dist, cfg, 50, 0.2 + eps)
    assert left.bias == pytest.approx(mid.bias, abs=1e-6)
    assert left.variance == pytest.approx(mid.variance, abs=1e-6)


def test_right_strip_mirror_symmetry():
    # symmetric distribution: MSE in the right strip mirrors the left strip
    dist = BetaMixture(0.0, 2.0)
    cfg = make_cfg("k3", h=0.2)
    left = pointwise_error(dist, cfg, 50, 0.1)
    right = pointwise_error(dist, cfg, 50, 0.9)
    assert right.bias == pytest.approx(-left.bias, abs=1e-12)
    assert right.variance == pytest.approx(left.variance, abs=1e-12)


def test_exact_mise_additivity():
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k2", h=0.2)
    whole = exact_mise(dist, cfg, 50, (0.0, 1.0))
    parts = exact_mise(dist, cfg, 50, (0.0, 0.2)) + exact_mise(
        dist, cfg, 50, (0.2, 1.0)
    )
    assert whole == pytest.approx(parts, rel=1e-7)


def test_exact_mise_uniform_is_pure_variance():
    dist = Uniform()
    cfg = make_cfg("k1", h=0.2)
    mise = exact_mise(dist, cfg, 50, (0.0, 1.0))
    iv = exact_integrated_variance(dist, cfg, 50, (0.0, 1.0))
    assert mise == pytest.approx(iv, rel=1e-7)
    assert mise > 0.0


def test_region_validation():
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k1", h=0.2)
    with pytest.raises(ValueError):
        exact_mise(dist, cfg, 50, (-0.1, 0.5))
    with pytest.raises(ValueError):
        exact_mise(dist, cfg, 50, (0.5, 0.2))


def test_support_mismatch_rejected():
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k1", a=0.0, b=2.0, h=0.2)
    with pytest.raises(ValueError):
        exact_bias(dist, cfg, 0.5)


def test_n_validation():
    dist = BetaMixture(0.5, 4.0)
    cfg = make_cfg("k1", h=0.2)
    with pytest.raises(ValueError):
        exact_variance(dist, cfg, 0.5, 0)
    with pytest.raises(ValueError):
        exact_mise(dist, cfg, 0, (0.0, 1.0))
