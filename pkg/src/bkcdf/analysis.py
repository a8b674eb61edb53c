"""Exact finite-sample error analysis and leading-term MISE machinery.

Pointwise bias and variance of the boundary-corrected estimator are
computed from the exact integral representations

    E Fhat(a + alpha*h)      = int F(a + (alpha - u)h) KL(u; alpha) du
    n Var Fhat(a + alpha*h)  = int F(a + (alpha - u)h) BL(u; alpha) du
                               - (E Fhat(a + alpha*h))^2

with BL = 2 * KLbar * KL.  The interior analogue uses the base kernel
with the CDF clamped to [0, 1], which keeps the same identities exact
all the way to the support endpoints.  The right strip is handled by
reflecting the distribution and reusing the left-strip formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boundary import BoundaryKernelFamily
from .distributions import Reflected
from .estimator import EstimatorConfig
from .kernels import BaseKernel
from .quadrature import QuadSpec, integrate


class NoOptimalBandwidthError(ValueError):
    """The MISE leading terms have no interior minimum (F'' vanishes)."""


@dataclass(frozen=True)
class PointwiseError:
    """Bias and variance of the estimate at one point."""

    x: float
    bias: float
    variance: float

    @property
    def mse(self) -> float:
        return self.variance + self.bias**2


@dataclass(frozen=True)
class MiseTerms:
    """Leading MISE terms: v0 - h*v1/n + b4*h^4, and the minimiser h0."""

    v0: float
    v1: float
    b4: float
    h0: float
    delta_k: float

    def leading(self, h: float, n: int) -> float:
        return self.v0 - h * self.v1 / n + self.b4 * h**4


def _require_family(cfg: EstimatorConfig) -> BoundaryKernelFamily:
    if cfg.family is None:
        raise ValueError("a boundary kernel family is required")
    return cfg.family


def _check_support(dist, cfg: EstimatorConfig) -> None:
    if dist.support != (cfg.a, cfg.b):
        raise ValueError("distribution support does not match the estimator config")


def _left_moments(dist, fam, a, h, alpha, spec):
    """(E Fhat, E Kbar^2) at the left-strip point a + alpha*h."""
    lo, hi = fam.support(alpha)
    kinks = [p for p in (-alpha, alpha) if lo < p < hi]

    def cdf_at(u):
        return dist.cdf(a + (alpha - np.asarray(u, dtype=float)) * h)

    e1 = integrate(
        lambda u: cdf_at(u) * fam.left_density(u, alpha), lo, hi, spec, points=kinks
    )
    e2 = integrate(
        lambda u: cdf_at(u)
        * 2.0
        * fam.left_antiderivative(u, alpha)
        * fam.left_density(u, alpha),
        lo,
        hi,
        spec,
        points=kinks,
    )
    return e1, e2


def _interior_moments(dist, base, h, x, spec):
    """(E Fhat, E Kbar^2) for the classical estimator at x."""
    a, b = dist.support

    def cdf_at(u):
        return dist.cdf(x - np.asarray(u, dtype=float) * h)

    kinks = [p for p in ((x - b) / h, (x - a) / h) if -1.0 < p < 1.0]
    e1 = integrate(
        lambda u: cdf_at(u) * base.density(u), -1.0, 1.0, spec, points=kinks
    )
    e2 = integrate(
        lambda u: cdf_at(u) * 2.0 * base.antiderivative(u) * base.density(u),
        -1.0,
        1.0,
        spec,
        points=kinks,
    )
    return e1, e2


def exact_bias(dist, cfg: EstimatorConfig, alpha: float, spec: QuadSpec | None = None) -> float:
    """Exact bias at the left-strip point a + alpha*h (n-free)."""
    fam = _require_family(cfg)
    _check_support(dist, cfg)
    alpha = float(alpha)
    e1, _ = _left_moments(dist, fam, cfg.a, cfg.h, alpha, spec)
    return e1 - dist.cdf(cfg.a + alpha * cfg.h)


def exact_variance(
    dist, cfg: EstimatorConfig, alpha: float, n: int, spec: QuadSpec | None = None
) -> float:
    """Exact variance at the left-strip point a + alpha*h for sample size n."""
    if n < 1:
        raise ValueError("need n >= 1")
    fam = _require_family(cfg)
    _check_support(dist, cfg)
    alpha = float(alpha)
    e1, e2 = _left_moments(dist, fam, cfg.a, cfg.h, alpha, spec)
    return max(e2 - e1**2, 0.0) / n


def exact_mse_curve(
    dist, cfg: EstimatorConfig, n: int, alphas, spec: QuadSpec | None = None
) -> list[PointwiseError]:
    """Exact pointwise errors across the left boundary strip."""
    if n < 1:
        raise ValueError("need n >= 1")
    fam = _require_family(cfg)
    _check_support(dist, cfg)
    out = []
    for alpha in np.asarray(alphas, dtype=float):
        e1, e2 = _left_moments(dist, fam, cfg.a, cfg.h, float(alpha), spec)
        x = cfg.a + float(alpha) * cfg.h
        out.append(
            PointwiseError(
                x=x,
                bias=e1 - dist.cdf(x),
                variance=max(e2 - e1**2, 0.0) / n,
            )
        )
    return out


def asymptotic_pointwise(
    dist, fam: BoundaryKernelFamily, base: BaseKernel, h: float, alpha: float, n: int
) -> PointwiseError:
    """Leading-term bias and variance at the left-strip point a + alpha*h."""
    if n < 1:
        raise ValueError("need n >= 1")
    a = dist.support[0]
    x = a + float(alpha) * h
    bias = 0.5 * h**2 * dist.d2(x) * fam.mu_bias_coeff(alpha)
    fx = dist.cdf(x)
    nv = fx * (1.0 - fx) - h * dist.pdf(x) * fam.nu_var_coeff(alpha)
    return PointwiseError(x=x, bias=bias, variance=nv / n)


def mise_terms(dist, base: BaseKernel, n: int, spec: QuadSpec | None = None) -> MiseTerms:
    """Leading MISE terms and the asymptotically optimal bandwidth."""
    if n < 1:
        raise ValueError("need n >= 1")
    a, b = dist.support
    i0 = integrate(lambda x: dist.cdf(x) * (1.0 - dist.cdf(x)), a, b, spec)
    rough = dist.roughness()
    if rough <= 0.0:
        raise NoOptimalBandwidthError(
            "F'' vanishes (uniform distribution); the MISE leading terms "
            "have no optimal bandwidth"
        )
    delta_k = base.delta()
    return MiseTerms(
        v0=i0 / n,
        v1=base.r_constant(),
        b4=0.25 * base.second_moment() ** 2 * rough,
        h0=delta_k * rough ** (-1 / 3) * n ** (-1 / 3),
        delta_k=delta_k,
    )


def _pointwise(dist, cfg: EstimatorConfig, n: int, x: float, spec):
    """(bias, variance) of the configured estimator at x."""
    a, b, h = cfg.a, cfg.b, cfg.h
    if cfg.family is None:
        e1, e2 = _interior_moments(dist, cfg.base, h, x, spec)
        return e1 - dist.cdf(x), max(e2 - e1**2, 0.0) / n
    if x <= a or x >= b:
        return 0.0, 0.0
    if a + h <= x <= b - h:
        e1, e2 = _interior_moments(dist, cfg.base, h, x, spec)
        return e1 - dist.cdf(x), max(e2 - e1**2, 0.0) / n
    if x < a + h:
        e1, e2 = _left_moments(dist, cfg.family, a, h, (x - a) / h, spec)
        return e1 - dist.cdf(x), max(e2 - e1**2, 0.0) / n
    # right strip: the estimate equals 1 minus the left-strip estimate of
    # the reflected distribution at the mirrored point
    refl = Reflected(dist)
    alpha = (b - x) / h
    e1, e2 = _left_moments(refl, cfg.family, a, h, alpha, spec)
    bias = -(e1 - refl.cdf(a + alpha * h))
    return bias, max(e2 - e1**2, 0.0) / n


def pointwise_error(
    dist, cfg: EstimatorConfig, n: int, x: float, spec: QuadSpec | None = None
) -> PointwiseError:
    """Exact pointwise error at any x, dispatching on the strip."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_support(dist, cfg)
    bias, var = _pointwise(dist, cfg, n, float(x), spec)
    return PointwiseError(x=float(x), bias=bias, variance=var)


_OUTER_SPEC = QuadSpec(rel_tol=1e-9, abs_tol=1e-13, max_subdivisions=2**15)


def _region_panels(cfg: EstimatorConfig, lo: float, hi: float):
    return [p for p in (cfg.a + cfg.h, cfg.b - cfg.h) if lo < p < hi]


def _check_region(cfg: EstimatorConfig, region) -> tuple[float, float]:
    lo, hi = float(region[0]), float(region[1])
    if not (cfg.a <= lo <= hi <= cfg.b):
        raise ValueError("region must be contained in [a, b]")
    return lo, hi


def exact_mise(
    dist,
    cfg: EstimatorConfig,
    n: int,
    region,
    spec: QuadSpec | None = None,
    inner_spec: QuadSpec | None = None,
) -> float:
    """Exact MISE over a region, by integrating the pointwise MSE."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_support(dist, cfg)
    lo, hi = _check_region(cfg, region)

    def mse(x):
        bias, var = _pointwise(dist, cfg, n, float(x), inner_spec)
        return var + bias**2

    return integrate(mse, lo, hi, spec or _OUTER_SPEC, points=_region_panels(cfg, lo, hi))


def exact_integrated_variance(
    dist,
    cfg: EstimatorConfig,
    n: int,
    region,
    spec: QuadSpec | None = None,
    inner_spec: QuadSpec | None = None,
) -> float:
    """Exact integrated variance over a region."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_support(dist, cfg)
    lo, hi = _check_region(cfg, region)

    def var(x):
        return _pointwise(dist, cfg, n, float(x), inner_spec)[1]

    return integrate(var, lo, hi, spec or _OUTER_SPEC, points=_region_panels(cfg, lo, hi))
