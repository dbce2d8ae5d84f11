import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from solfdtd.analytic import (
    WaveParams,
    envelope,
    envelope_integrals,
    error_norms,
    exact_soliton,
    reconstruct_electric_field,
    soliton_field,
)
from solfdtd.errors import DomainError
from solfdtd.grid import ComplexField, make_grid


def test_soliton_peak():
    assert exact_soliton(0.0, 0.0, 5.0, 2.0, -0.5) == pytest.approx(0.316228, abs=1e-6)
    assert complex(exact_soliton(0.0, 0.0, 5.0, 2.0, -0.5)).imag == 0


@pytest.mark.parametrize("y", [-20.0, 20.0])
def test_soliton_tail(y):
    assert abs(exact_soliton(y, 0.0, 5.0, 2.0, -0.5)) <= 3.2e-5


@given(y=st.floats(-30, 30), z=st.floats(-100, 100))
def test_modulus_independent_of_z(y, z):
    assert abs(exact_soliton(y, z, 5.0, 2.0, -0.5)) == pytest.approx(abs(exact_soliton(y, 0.0, 5.0, 2.0, -0.5)), rel=1e-12)


@pytest.mark.parametrize("g, w, beta", [(0, 2, -0.5), (5, 0, -0.5), (5, 2, 0)])
def test_soliton_rejects(g, w, beta):
    with pytest.raises(DomainError):
        exact_soliton(0.0, 0.0, g, w, beta)


def _residual(h, g=5.0, w=2.0, beta=-0.5):
    # 2i beta f_z + f_yy + g|f|^2 f with fourth-order differences in both y and z
    y = np.linspace(-5, 5, 41)
    z = 0.3
    f = lambda yy, zz: exact_soliton(yy, zz, g, w, beta)
    fz = (-f(y, z + 2 * h) + 8 * f(y, z + h) - 8 * f(y, z - h) + f(y, z - 2 * h)) / (12 * h)
    fyy = (-f(y + 2 * h, z) + 16 * f(y + h, z) - 30 * f(y, z) + 16 * f(y - h, z) - f(y - 2 * h, z)) / (12 * h**2)
    f0 = f(y, z)
    return np.max(np.abs(2j * beta * fz + fyy + g * np.abs(f0) ** 2 * f0))


def test_soliton_solves_nlse():
    hs = [0.2, 0.1, 0.05]
    res = [_residual(h) for h in hs]
    orders = np.log2(np.array(res[:-1]) / np.array(res[1:]))
    assert res[-1] < 1e-5
    assert np.all(orders >= 3.5), orders


def test_envelope_values():
    assert envelope(0.0) == 1
    assert envelope(1.0) == 0.5
    assert envelope(3.0) == pytest.approx(0.1, rel=1e-15)


def test_envelope_integrals_closed_form():
    ints = envelope_integrals()
    assert ints.i1 == pytest.approx(math.pi / 2, rel=1e-6)
    assert ints.i2 == pytest.approx(-math.pi / 4, rel=1e-6)
    assert ints.i3 == pytest.approx(5 * math.pi / 16, rel=1e-6)


@pytest.mark.parametrize("half_width", [0.5, 2.0, 10.0])
def test_envelope_integrals_finite_width(half_width):
    # independent adaptive quadrature on the untransformed integrands
    a = lambda x: 1 / (1 + x**2)
    a2 = lambda x: (6 * x**2 - 2) / (1 + x**2) ** 3
    ints = envelope_integrals(half_width)
    ref = [
        integrate.quad(lambda x: a(x) ** 2, -half_width, half_width, epsabs=0, epsrel=1e-13)[0],
        integrate.quad(lambda x: a(x) * a2(x), -half_width, half_width, epsabs=0, epsrel=1e-13)[0],
        integrate.quad(lambda x: a(x) ** 4, -half_width, half_width, epsabs=0, epsrel=1e-13)[0],
    ]
    np.testing.assert_allclose([ints.i1, ints.i2, ints.i3], ref, rtol=1e-10)


def test_envelope_integral_signs():
    ints = envelope_integrals()
    assert ints.i1 > 0 and ints.i3 > 0 and ints.i2 <= 0


def test_envelope_integrals_rejects():
    with pytest.raises(DomainError):
        envelope_integrals(quadrature_points=50)


def test_efield_zero(grid, params):
    e = reconstruct_electric_field(ComplexField.zeros(grid.n_y), grid, 0.0, 0.0, 1.0, params)
    assert np.all(e == 0)


def test_efield_sine():
    # f(0) real = 0.316228 at x=0, z=0, omega=1: E(t) = 0.316228 sin t
    grid = make_grid(-1, 1, 7, 0.01)
    params = WaveParams(beta=-0.5, omega=1.0, phi=1.0, w=2.0, g_background=5.0)
    f = ComplexField(np.full(7, 0.316228), np.zeros(7))
    for t in np.linspace(0, 7, 15):
        e = reconstruct_electric_field(f, grid, 0.0, 0.0, t, params, signed=True)
        assert e[3] == pytest.approx(0.316228 * math.sin(t), abs=1e-15)
    assert reconstruct_electric_field(f, grid, 0.0, 0.0, math.pi / 2, params)[3] == pytest.approx(0.316228)


def test_efield_against_numeric_time_derivative(grid, params, soliton0):
    # E = -dA/dt with A rebuilt from the field ansatz; derivative by central differences
    x, z, t, h = 0.7, 0.0, 1.3, 1e-5
    F = soliton0.values * np.exp(1j * params.phi * z)
    A = lambda tt: np.real(envelope(x) * F * np.exp(1j * (params.beta * z - params.omega * tt)))
    numeric = -(A(t + h) - A(t - h)) / (2 * h)
    e = reconstruct_electric_field(soliton0, grid, x, z, t, params, signed=True)
    np.testing.assert_allclose(e, numeric, atol=1e-9)


@given(t=st.floats(-50, 50), omega=st.floats(0.1, 5))
def test_efield_periodic(t, omega):
    grid = make_grid(-10, 10, 21, 0.01)
    params = WaveParams(omega=omega)
    f = soliton_field(grid, params, 0.4)
    e1 = reconstruct_electric_field(f, grid, 0.2, 0.4, t, params, signed=True)
    e2 = reconstruct_electric_field(f, grid, 0.2, 0.4, t + 2 * math.pi / omega, params, signed=True)
    np.testing.assert_allclose(e1, e2, rtol=0, atol=1e-12)


def test_error_norms(grid, soliton0):
    n = error_norms(soliton0, soliton0, grid)
    assert (n.l2, n.linf, n.linf_relative) == (0, 0, 0)
    shifted = ComplexField(soliton0.re + 1e-3, soliton0.im)
    assert error_norms(shifted, soliton0, grid).linf == pytest.approx(1e-3, rel=1e-9)
    with pytest.raises(DomainError):
        error_norms(soliton0, ComplexField.zeros(grid.n_y), grid)
    with pytest.raises(DomainError):
        error_norms(soliton0, ComplexField.zeros(5), grid)
