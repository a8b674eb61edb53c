import numpy as np
import pytest

from bkcdf.quadrature import (
    QuadSpec,
    QuadratureError,
    RootFindingError,
    RootSpec,
    find_root,
    integrate,
)


def test_constant():
    assert integrate(lambda u: 1.0, 0.0, 1.0) == pytest.approx(1.0, abs=1e-12)


def test_odd_function():
    assert integrate(lambda u: u, -1.0, 1.0) == pytest.approx(0.0, abs=1e-12)


def test_epanechnikov_mass():
    val = integrate(lambda u: 0.75 * (1.0 - u**2), -1.0, 1.0)
    assert val == pytest.approx(1.0, abs=1e-12)


def test_empty_interval():
    assert integrate(lambda u: 1e9, 0.3, 0.3) == 0.0


def test_bad_interval():
    with pytest.raises(ValueError):
        integrate(lambda u: 1.0, 1.0, 0.0)


def test_scalar_only_integrand():
    def f(x):
        if x < 0.5:
            return 1.0
        return 2.0

    assert integrate(f, 0.0, 1.0, points=[0.5]) == pytest.approx(1.5, abs=1e-10)


@pytest.mark.parametrize("a,b", [(2.0, 3.0), (-1.0, 0.5), (0.0, 7.0)])
def test_linearity(a, b):
    f = lambda u: u**3 - u
    g = lambda u: np.cos(u)
    combined = integrate(lambda u: a * f(u) + b * g(u), -1.0, 2.0)
    split = a * integrate(f, -1.0, 2.0) + b * integrate(g, -1.0, 2.0)
    assert combined == pytest.approx(split, abs=1e-9)


def test_split_additivity():
    f = lambda u: np.exp(-(u**2))
    whole = integrate(f, -2.0, 2.0)
    parts = integrate(f, -2.0, 0.3) + integrate(f, 0.3, 2.0)
    assert whole == pytest.approx(parts, abs=2e-10)


def test_deterministic():
    f = lambda u: np.sin(10.0 * u) ** 2
    assert integrate(f, 0.0, 3.0) == integrate(f, 0.0, 3.0)


def test_subdivision_limit():
    spec = QuadSpec(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=4)
    with pytest.raises(QuadratureError) as err:
        integrate(lambda u: np.sqrt(np.abs(u)), -1.0, 1.0, spec)
    # best estimate still close to the true value 4/3
    assert err.value.estimate == pytest.approx(4.0 / 3.0, abs=1e-2)
    assert err.value.error_bound >= 0.0


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadSpec(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadSpec(max_subdivisions=0)
    with pytest.raises(ValueError):
        RootSpec(x_tol=-1.0)


def test_root_linear():
    assert find_root(lambda x: x - 0.5, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_root_quadratic():
    assert find_root(lambda x: x**2 - 0.25, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_root_beta22_median():
    f = lambda x: 3.0 * x**2 - 2.0 * x**3 - 0.5
    assert find_root(f, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_root_no_sign_change():
    with pytest.raises(RootFindingError):
        find_root(lambda x: x + 1.0, 0.0, 1.0)


def test_root_endpoint_hit():
    assert find_root(lambda x: x, 0.0, 1.0) == 0.0


def test_root_stays_bracketed_and_small_residual():
    for c in (0.1, 0.37, 0.9):
        f = lambda x, c=c: np.tanh(3.0 * (x - c))
        r = find_root(f, 0.0, 1.0)
        assert 0.0 <= r <= 1.0
        # |f'| <= 3, bracket width <= 1e-12
        assert abs(f(r)) <= 3.0 * 1e-12 + 1e-15
