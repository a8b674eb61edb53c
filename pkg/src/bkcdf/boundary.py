"""Left and right boundary kernel families over a base kernel.

Three families are supported, selected by name:

* ``k1`` -- base kernel truncated to [-alpha, alpha] and renormalised;
* ``k2`` -- base kernel rescaled onto [-alpha, alpha];
* ``k3`` -- base kernel truncated to [-1, alpha] and tilted so that the
  weaker moment condition alpha*(1 - mu0) + mu1 = 0 holds.

Right versions are obtained by reflection: the right density at u is the
left density at -u, and the right cumulative is 1 minus the left
cumulative at -u.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import BaseKernel
from .quadrature import QuadSpec, integrate

FAMILY_NAMES = ("k1", "k2", "k3")


class DegenerateKernelError(ValueError):
    """The k3 normaliser is not positive at the requested cut point."""


@dataclass(frozen=True)
class ConditionCheck:
    """Moment-condition residuals at a single cut point."""

    alpha: float
    c1_residual: float
    c2_residual: float
    c1_ok: bool
    c2_ok: bool


class BoundaryKernelFamily:
    """One boundary kernel family, indexed by the cut point alpha in (0, 1)."""

    def __init__(self, variant: str, base: BaseKernel):
        variant = variant.lower()
        if variant not in FAMILY_NAMES:
            raise ValueError(f"unknown family {variant!r}; choose from {FAMILY_NAMES}")
        self.variant = variant
        self.base = base

    def __repr__(self) -> str:
        return f"BoundaryKernelFamily({self.variant!r}, {self.base!r})"

    @staticmethod
    def _check_alpha(alpha) -> None:
        a = np.asarray(alpha, dtype=float)
        if np.any(a <= 0.0) or np.any(a >= 1.0):
            raise ValueError("alpha must lie strictly inside (0, 1)")

    def support(self, alpha: float) -> tuple[float, float]:
        """Support interval of the left kernel at this cut point."""
        self._check_alpha(alpha)
        if self.variant == "k3":
            return (-1.0, float(alpha))
        return (-float(alpha), float(alpha))

    def _norm_k1(self, alpha):
        return 2.0 * self.base.antiderivative(alpha) - 1.0

    def _norm_k3(self, alpha):
        d = alpha * self.base.partial_moment(0, alpha) - self.base.partial_moment(1, alpha)
        if np.any(np.asarray(d) <= 0.0):
            raise DegenerateKernelError("k3 normaliser must be positive")
        return d

    def left_density(self, u, alpha):
        self._check_alpha(alpha)
        u = np.asarray(u, dtype=float)
        alpha = np.asarray(alpha, dtype=float)
        if self.variant == "k1":
            out = (
                self.base.density(u)
                * ((u >= -alpha) & (u <= alpha))
                / self._norm_k1(alpha)
            )
        elif self.variant == "k2":
            out = self.base.density(u / alpha) / alpha
        else:
            out = alpha * self.base.density(u) * (u <= alpha) / self._norm_k3(alpha)
        return out if np.ndim(out) else float(out)

    def left_antiderivative(self, u, alpha):
        """Cumulative left kernel; constant at mu0(alpha) above the support."""
        self._check_alpha(alpha)
        u = np.asarray(u, dtype=float)
        alpha = np.asarray(alpha, dtype=float)
        kbar = self.base.antiderivative
        if self.variant == "k1":
            out = (kbar(np.clip(u, -alpha, alpha)) - (1.0 - kbar(alpha))) / self._norm_k1(alpha)
        elif self.variant == "k2":
            out = kbar(u / alpha)
        else:
            out = alpha * kbar(np.minimum(u, alpha)) / self._norm_k3(alpha)
        return out if np.ndim(out) else float(out)

    def right_density(self, u, alpha):
        return self.left_density(np.negative(u), alpha)

    def right_antiderivative(self, u, alpha):
        """Cumulative right kernel, normalised to reach 1 above the support."""
        out = 1.0 - self.left_antiderivative(np.negative(u), alpha)
        return out if np.ndim(out) else float(out)

    def moment(self, order: int, alpha):
        """Closed-form moment of u^order against the left kernel."""
        if order not in (0, 1, 2):
            raise ValueError("moments are implemented for orders 0, 1, 2")
        self._check_alpha(alpha)
        a = np.asarray(alpha, dtype=float)
        pm = self.base.partial_moment
        if self.variant == "k1":
            out = (pm(order, a) - pm(order, -a)) / self._norm_k1(a)
        elif self.variant == "k2":
            full = (1.0, 0.0, self.base.second_moment())[order]
            out = a**order * full
        else:
            out = a * pm(order, a) / self._norm_k3(a)
        return out if np.ndim(out) else float(out)

    def mu_bias_coeff(self, alpha):
        """Leading bias coefficient mu2(alpha) - alpha*mu1(alpha)."""
        alpha = np.asarray(alpha, dtype=float)
        out = self.moment(2, alpha) - alpha * self.moment(1, alpha)
        return out if np.ndim(out) else float(out)

    def m1(self, alpha: float, spec: QuadSpec | None = None) -> float:
        """First moment of 2*Kbar*K over the support, by quadrature.

        Cross-checkable against the integration-by-parts identity
        hi * mu0^2 - integral of Kbar^2, with hi the upper support end.
        """
        alpha = float(alpha)
        lo, hi = self.support(alpha)
        kinks = [p for p in (-alpha, alpha) if lo < p < hi]

        def integrand(u):
            return u * 2.0 * self.left_antiderivative(u, alpha) * self.left_density(u, alpha)

        return integrate(integrand, lo, hi, spec, points=kinks)

    def nu_var_coeff(self, alpha: float, spec: QuadSpec | None = None) -> float:
        """Variance correction coefficient m1(alpha) + alpha*(1 - mu0^2)."""
        alpha = float(alpha)
        mu0 = self.moment(0, alpha)
        return self.m1(alpha, spec) + alpha * (1.0 - mu0**2)

    def check_conditions(self, alphas, tol: float) -> list[ConditionCheck]:
        """Evaluate the strong (C1) and weak (C2) moment conditions."""
        out = []
        for alpha in np.asarray(alphas, dtype=float):
            mu0 = self.moment(0, alpha)
            mu1 = self.moment(1, alpha)
            mu2 = self.moment(2, alpha)
            c1 = max(abs(mu0 - 1.0), abs(mu1))
            c2 = abs(alpha * (1.0 - mu0) + mu1)
            out.append(
                ConditionCheck(
                    alpha=float(alpha),
                    c1_residual=c1,
                    c2_residual=c2,
                    c1_ok=bool(c1 <= tol and abs(mu2) > tol),
                    c2_ok=bool(c2 <= tol),
                )
            )
        return out
