"""Adaptive Gauss-Legendre quadrature and bracketed root finding.

Everything here is deterministic: identical inputs give bit-identical
results, which the simulation layer relies on for reproducible output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

# 15-point rule per panel; integrands are piecewise polynomial times a
# smooth CDF, so a high-order rule converges fast once panels are split
# at the known kinks.
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


class QuadratureError(RuntimeError):
    """Subdivision budget exhausted; carries the best estimate so far."""

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2**15

    def __post_init__(self):
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class RootSpec:
    x_tol: float = 1e-12
    max_iters: int = 200

    def __post_init__(self):
        if self.x_tol <= 0.0:
            raise ValueError("x_tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")


def _evaluate(f: Callable, x: np.ndarray) -> np.ndarray:
    """Evaluate f on a node array, falling back to scalar calls."""
    try:
        y = np.asarray(f(x), dtype=float)
        if y.shape == x.shape:
            return y
    except Exception:
        pass
    return np.array([float(f(xi)) for xi in x], dtype=float)


def _panel(f: Callable, lo: float, hi: float) -> float:
    half = 0.5 * (hi - lo)
    x = 0.5 * (lo + hi) + half * _NODES
    return half * float(_WEIGHTS @ _evaluate(f, x))


def integrate(
    f: Callable,
    lo: float,
    hi: float,
    spec: QuadSpec | None = None,
    points: Iterable[float] = (),
) -> float:
    """Integrate f over [lo, hi] by adaptive panel bisection.

    ``points`` lists known kink locations (e.g. kernel support
    endpoints); they become initial panel boundaries so each panel sees
    a smooth integrand.
    """
    spec = spec or QuadSpec()
    lo = float(lo)
    hi = float(hi)
    if lo > hi:
        raise ValueError("need lo <= hi")
    if lo == hi:
        return 0.0

    cuts = sorted({lo, hi, *(float(p) for p in points if lo < float(p) < hi)})
    stack = []
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        est = _panel(f, a, b)
        stack.append((a, b, est))
        total += est
    stack.reverse()

    scale = hi - lo
    result = 0.0
    err = 0.0
    splits = 0
    while stack:
        a, b, coarse = stack.pop()
        m = 0.5 * (a + b)
        left = _panel(f, a, m)
        right = _panel(f, m, b)
        fine = left + right
        e = abs(fine - coarse)
        budget = max(spec.abs_tol, spec.rel_tol * abs(total)) * (b - a) / scale
        if e <= budget or (b - a) <= 1e-15 * scale:
            result += fine
            err += e
        else:
            splits += 1
            if splits > spec.max_subdivisions:
                best = result + fine + sum(p[2] for p in stack)
                raise QuadratureError(
                    "quadrature did not converge within the subdivision budget",
                    estimate=best,
                    error_bound=err + e,
                )
            stack.append((m, b, right))
            stack.append((a, m, left))
    return result


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: RootSpec | None = None,
) -> float:
    """Root of f on [lo, hi] by bisection with secant acceleration.

    Requires a sign change over the bracket; the iterate never leaves
    [lo, hi].
    """
    spec = spec or RootSpec()
    lo = float(lo)
    hi = float(hi)
    flo = float(f(lo))
    if flo == 0.0:
        return lo
    fhi = float(f(hi))
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise RootFindingError("no sign change over the bracket")

    for it in range(spec.max_iters):
        if hi - lo <= spec.x_tol:
            return 0.5 * (lo + hi)
        x = 0.5 * (lo + hi)
        if it % 2 == 0 and fhi != flo:
            # secant step, kept only if it lands strictly inside the bracket
            s = (lo * fhi - hi * flo) / (fhi - flo)
            if lo < s < hi:
                x = s
        fx = float(f(x))
        if fx == 0.0:
            return x
        if flo * fx < 0.0:
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
    raise RootFindingError("root finding did not converge")
