import numpy as np
import pytest

from solfdtd.analytic import WaveParams, soliton_field
from solfdtd.errors import DomainError
from solfdtd.gfdtd import discrete_mass
from solfdtd.grid import ComplexField, make_grid
from solfdtd.nonlinearity import point_defect_profile, uniform_profile
from solfdtd.oracle import OracleConfig, split_step_propagate


def test_zero_field(grid, params, profile):
    out = split_step_propagate(ComplexField.zeros(grid.n_y), profile, grid, params, OracleConfig(exterior="zero"), 0.5)
    assert np.all(out.values == 0)


def test_soliton_modulus(grid, params, profile, soliton0):
    out = split_step_propagate(soliton0, profile, grid, params, OracleConfig(dz_ref=1e-3), 1.0)
    assert out.z_level == 1.0
    assert np.max(np.abs(out.abs - soliton0.abs)) <= 1e-5
    np.testing.assert_allclose(out.values, soliton_field(grid, params, 1.0).values, rtol=0, atol=1e-5)


def test_edge_decay_precondition(grid, params, profile, soliton0):
    # without padding the soliton is still at 1.3% of its peak at y = +-10
    with pytest.raises(DomainError):
        split_step_propagate(soliton0, profile, grid, params, OracleConfig(padding_factor=1), 0.1)


def test_mass_conserved(params):
    grid = make_grid(-20, 20, 400, 0.01)
    f0 = soliton_field(grid, params, 0.0)
    prof = point_defect_profile(grid, [0.0, 3.0], 2.0, 5.0)
    cfg = OracleConfig(dz_ref=1e-2, padding_factor=1)
    m0 = discrete_mass(f0, grid)
    f = f0
    for z in np.arange(1, 6) * 0.1:
        f = split_step_propagate(f, prof, grid, params, cfg, z)
        assert abs(discrete_mass(f, grid) - m0) / m0 < 1e-12


def test_linear_gaussian():
    # g = 0 reduces to free dispersion with a closed-form Gaussian solution
    beta, s = 2.0, 1.0
    grid = make_grid(-20, 20, 256, 0.01)
    params = WaveParams(beta=beta)
    from solfdtd.nonlinearity import NonlinearityProfile

    prof = NonlinearityProfile(np.zeros(grid.n_y), 0.0)

    def gauss(z):
        q = s**2 + 2j * z / (2 * beta)
        return ComplexField.from_complex(s / np.sqrt(q) * np.exp(-grid.y**2 / (2 * q)), z)

    out = split_step_propagate(gauss(0.0), prof, grid, params, OracleConfig(dz_ref=0.1, padding_factor=1, exterior="zero"), 1.0)
    np.testing.assert_allclose(out.values, gauss(1.0).values, rtol=0, atol=1e-12)


def test_rejects_backwards(grid, params, profile, soliton0):
    with pytest.raises(DomainError):
        split_step_propagate(ComplexField(soliton0.re, soliton0.im, 1.0), profile, grid, params, OracleConfig(), 0.5)


def test_config_validation():
    with pytest.raises(DomainError):
        OracleConfig(dz_ref=0)
    with pytest.raises(DomainError):
        OracleConfig(padding_factor=0)
    with pytest.raises(DomainError):
        OracleConfig(exterior="mirror")
