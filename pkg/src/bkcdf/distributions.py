"""Test distributions: beta mixtures w*B(1,2) + (1-w)*B(2,b) and the uniform.

Each distribution exposes ``cdf``, ``pdf``, ``d2`` (second derivative of
the CDF), a ``support`` tuple, ``roughness`` (integral of d2 squared)
and a ``sample`` method driven by a numpy Generator.
"""

from __future__ import annotations

import numpy as np

from .quadrature import RootSpec, find_root, integrate


def replicate_rng(seed: int, index: int) -> np.random.Generator:
    """Independent generator for one replicate, derived from (seed, index)."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(index)]))


def _arr(x):
    a = np.asarray(x, dtype=float)
    return np.atleast_1d(a), a.ndim == 0


def _pow1m(x: np.ndarray, p: float) -> np.ndarray:
    """(1 - x)^p, stable near x = 1; zero at x >= 1 for positive p."""
    if p == 0.0:
        return np.ones_like(x)
    out = np.zeros_like(x)
    m = x < 1.0
    out[m] = np.exp(p * np.log1p(-x[m]))
    return out


class Uniform:
    """Uniform distribution on [a, b]."""

    def __init__(self, a: float = 0.0, b: float = 1.0):
        if not a < b:
            raise ValueError("need a < b")
        self.support = (float(a), float(b))

    def __repr__(self) -> str:
        return f"Uniform({self.support[0]!r}, {self.support[1]!r})"

    def cdf(self, x):
        a, b = self.support
        x, scalar = _arr(x)
        out = np.clip((x - a) / (b - a), 0.0, 1.0)
        return float(out[0]) if scalar else out

    def pdf(self, x):
        a, b = self.support
        x, scalar = _arr(x)
        out = np.where((x >= a) & (x <= b), 1.0 / (b - a), 0.0)
        return float(out[0]) if scalar else out

    def d2(self, x):
        x, scalar = _arr(x)
        out = np.zeros_like(x)
        return float(out[0]) if scalar else out

    def roughness(self) -> float:
        return 0.0

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if n < 1:
            raise ValueError("need n >= 1")
        a, b = self.support
        return rng.uniform(a, b, n)


class BetaMixture:
    """Mixture w*B(1,2) + (1-w)*B(2,b) on [0, 1] with shape b >= 2.

    The density at 0 is 2w and the second CDF derivative at 0 is
    -2w + (1-w)*b*(b+1), which is how the mixture is tuned to target
    boundary behaviour (see :func:`solve_params`).
    """

    support = (0.0, 1.0)

    def __init__(self, w: float, shape_b: float):
        if not 0.0 <= w <= 1.0:
            raise ValueError("weight w must lie in [0, 1]")
        if shape_b < 2.0:
            raise ValueError("shape parameter must be >= 2")
        self.w = float(w)
        self.shape_b = float(shape_b)

    def __repr__(self) -> str:
        return f"BetaMixture(w={self.w!r}, shape_b={self.shape_b!r})"

    def cdf(self, x):
        x, scalar = _arr(x)
        xc = np.clip(x, 0.0, 1.0)
        b = self.shape_b
        out = self.w * (2.0 * xc - xc**2) + (1.0 - self.w) * (
            1.0 - _pow1m(xc, b) * (1.0 + b * xc)
        )
        out[x <= 0.0] = 0.0
        out[x >= 1.0] = 1.0
        return float(out[0]) if scalar else out

    def pdf(self, x):
        x, scalar = _arr(x)
        b = self.shape_b
        inside = (x >= 0.0) & (x <= 1.0)
        xc = np.clip(x, 0.0, 1.0)
        out = self.w * 2.0 * (1.0 - xc) + (1.0 - self.w) * b * (b + 1.0) * xc * _pow1m(
            xc, b - 1.0
        )
        out[~inside] = 0.0
        return float(out[0]) if scalar else out

    def d2(self, x):
        x, scalar = _arr(x)
        b = self.shape_b
        inside = (x >= 0.0) & (x <= 1.0)
        xc = np.clip(x, 0.0, 1.0)
        out = -2.0 * self.w + (1.0 - self.w) * b * (b + 1.0) * _pow1m(xc, b - 2.0) * (
            (1.0 - xc) - (b - 1.0) * xc
        )
        out[~inside] = 0.0
        return float(out[0]) if scalar else out

    def roughness(self) -> float:
        return integrate(lambda x: self.d2(x) ** 2, 0.0, 1.0)

    def _cdf_b2(self, t: float) -> float:
        # CDF of the B(2, b) component alone
        b = self.shape_b
        if t <= 0.0:
            return 0.0
        if t >= 1.0:
            return 1.0
        return 1.0 - np.exp(b * np.log1p(-t)) * (1.0 + b * t)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw n variates: mixture choice, then per-component inversion."""
        if n < 1:
            raise ValueError("need n >= 1")
        choose_first = rng.random(n) < self.w
        u = rng.random(n)
        out = np.empty(n)
        out[choose_first] = 1.0 - np.sqrt(1.0 - u[choose_first])
        spec = RootSpec(x_tol=1e-13)
        for i in np.flatnonzero(~choose_first):
            ui = u[i]
            out[i] = find_root(lambda t: self._cdf_b2(t) - ui, 0.0, 1.0, spec)
        return out


class Reflected:
    """Distribution of a + b - X for X from an inner distribution.

    Used for right-boundary analysis: the right-strip behaviour of the
    estimator for F matches the left-strip behaviour for the reflected
    distribution.
    """

    def __init__(self, inner):
        self.inner = inner
        self.support = inner.support

    def __repr__(self) -> str:
        return f"Reflected({self.inner!r})"

    def _mirror(self, x):
        a, b = self.support
        return (a + b) - np.asarray(x, dtype=float)

    def cdf(self, x):
        out = 1.0 - self.inner.cdf(self._mirror(x))
        return out if np.ndim(out) else float(out)

    def pdf(self, x):
        return self.inner.pdf(self._mirror(x))

    def d2(self, x):
        out = -self.inner.d2(self._mirror(x))
        return out if np.ndim(out) else float(out)

    def roughness(self) -> float:
        return self.inner.roughness()

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        a, b = self.support
        return (a + b) - self.inner.sample(rng, n)


def solve_params(target_d1: float, target_d2: float) -> BetaMixture:
    """Beta mixture with density target_d1 and second CDF derivative
    target_d2 at the left endpoint.

    The weight is w = target_d1 / 2 and the shape parameter solves
    b*(b+1) = (target_d2 + 2w) / (1 - w).
    """
    if not 0.0 <= target_d1 < 2.0:
        raise ValueError("target density at 0 must lie in [0, 2)")
    if target_d2 <= 0.0:
        raise ValueError("target second derivative at 0 must be positive")
    w = target_d1 / 2.0
    c = (target_d2 + 2.0 * w) / (1.0 - w)
    b = 0.5 * (np.sqrt(1.0 + 4.0 * c) - 1.0)
    if b < 2.0 - 1e-9:
        raise ValueError("targets fall outside the b >= 2 mixture family")
    return BetaMixture(w, max(b, 2.0))
