"""Symmetric polynomial smoothing kernels on [-1, 1].

All closed forms (antiderivative, partial moments, smoothing constants)
are derived once from the polynomial coefficients of each density.
Quadrature only appears in the tests, as an independent oracle.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import Polynomial

KERNEL_NAMES = ("uniform", "epanechnikov", "biweight", "triweight")

# Ascending coefficients of the density on [-1, 1].
_DENSITY_COEFFS = {
    "uniform": (0.5,),
    "epanechnikov": (0.75, 0.0, -0.75),
    "biweight": (15 / 16, 0.0, -30 / 16, 0.0, 15 / 16),
    "triweight": (35 / 32, 0.0, -105 / 32, 0.0, 105 / 32, 0.0, -35 / 32),
}


class BaseKernel:
    """A symmetric probability density on [-1, 1] with closed forms."""

    def __init__(self, name: str):
        if name not in _DENSITY_COEFFS:
            raise ValueError(f"unknown kernel {name!r}; choose from {KERNEL_NAMES}")
        self.name = name
        self._poly = Polynomial(_DENSITY_COEFFS[name])
        anti = self._poly.integ()
        self._anti = anti - anti(-1.0)
        # antiderivatives of u^k K(u) for the partial moments, k = 0, 1, 2
        self._moment_anti = []
        for k in range(3):
            p = (Polynomial([0.0] * k + [1.0]) * self._poly).integ()
            self._moment_anti.append(p - p(-1.0))

    def __repr__(self) -> str:
        return f"BaseKernel({self.name!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseKernel) and other.name == self.name

    def __hash__(self) -> int:
        return hash((BaseKernel, self.name))

    def density(self, t):
        """K(t), zero outside [-1, 1]."""
        t = np.asarray(t, dtype=float)
        inside = (t >= -1.0) & (t <= 1.0)
        out = np.where(inside, self._poly(np.clip(t, -1.0, 1.0)), 0.0)
        return out if out.ndim else float(out)

    def antiderivative(self, u):
        """Cumulative kernel: 0 below -1, 1 above +1."""
        u = np.asarray(u, dtype=float)
        out = self._anti(np.clip(u, -1.0, 1.0))
        return out if out.ndim else float(out)

    def partial_moment(self, order: int, alpha):
        """Integral of u^order K(u) from -1 up to alpha."""
        if order not in (0, 1, 2):
            raise ValueError("partial moments are implemented for orders 0, 1, 2")
        alpha = np.asarray(alpha, dtype=float)
        if np.any(alpha < -1.0) or np.any(alpha > 1.0):
            raise ValueError("alpha must lie in [-1, 1]")
        out = self._moment_anti[order](alpha)
        return out if out.ndim else float(out)

    def second_moment(self) -> float:
        """Integral of u^2 K(u) over the whole support."""
        return float(self._moment_anti[2](1.0))

    def r_constant(self) -> float:
        """Integral of u * 2 * Kbar(u) * K(u); equals 1 - integral of Kbar^2."""
        sq = (self._anti**2).integ()
        return 1.0 - float(sq(1.0) - sq(-1.0))

    def delta(self) -> float:
        """Bandwidth constant r^(1/3) * (second moment)^(-2/3)."""
        return self.r_constant() ** (1 / 3) * self.second_moment() ** (-2 / 3)
