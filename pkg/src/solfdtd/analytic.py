"""Closed-form references: the bright soliton, the transverse envelope and
the electric field rebuilt from a propagated auxiliary function."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericsError
from .grid import ComplexField, GridSpec


@dataclass(frozen=True)
class WaveParams:
    """Physical parameters of the reduced model.

    beta is the propagation constant, omega the angular frequency, phi the
    constant phase offset between F and f, w the soliton width and
    g_background the Kerr coefficient of the defect-free layer.
    """

    beta: float = -0.5
    omega: float = 1.0
    phi: float = 1.0
    w: float = 2.0
    g_background: float = 5.0

    def __post_init__(self):
        for name in ("beta", "omega", "phi", "w", "g_background"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.beta == 0:
            raise DomainError("beta must be nonzero")
        if self.w <= 0:
            raise DomainError(f"w must be positive (got {self.w})")
        if self.g_background <= 0:
            raise DomainError(f"g_background must be positive (got {self.g_background})")

    @property
    def phase_rate(self) -> float:
        """dz-derivative of the soliton phase, 1/(2 beta w^2)."""
        return 1.0 / (2.0 * self.beta * self.w**2)


def _sech(x):
    # 1/cosh overflows to 0 gracefully; avoids the warning from exp(-|x|) forms
    with np.errstate(over="ignore"):
        return 1.0 / np.cosh(x)


def exact_soliton(y, z, g: float, w: float, beta: float):
    """Bright soliton (1/w) sqrt(2/g) sech(y/w) exp(i z / (2 beta w^2)).

    Accepts scalars or arrays for y and z.
    """
    if not g > 0:
        raise DomainError(f"g must be positive (got {g})")
    if not w > 0:
        raise DomainError(f"w must be positive (got {w})")
    if beta == 0:
        raise DomainError("beta must be nonzero")
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    amp = math.sqrt(2.0 / g) / w
    out = amp * _sech(y / w) * np.exp(1j * z / (2.0 * beta * w**2))
    return out[()] if out.ndim == 0 else out


def soliton_field(grid: GridSpec, params: WaveParams, z: float = 0.0, g: float | None = None) -> ComplexField:
    g = params.g_background if g is None else g
    return ComplexField.from_complex(exact_soliton(grid.y, z, g, params.w, params.beta), z)


def soliton_mass(params: WaveParams, g: float | None = None) -> float:
    g = params.g_background if g is None else g
    return 4.0 / (g * params.w)


def envelope(x):
    """Transverse confinement profile 1/(1+x^2)."""
    x = np.asarray(x, dtype=float)
    out = 1.0 / (1.0 + x**2)
    return out[()] if out.ndim == 0 else out


def envelope_d2(x):
    x = np.asarray(x, dtype=float)
    out = (6.0 * x**2 - 2.0) / (1.0 + x**2) ** 3
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class EnvelopeIntegrals:
    i1: float  # int |A|^2
    i2: float  # int A* A''
    i3: float  # int |A|^4


def _integrals_gauss(theta_max: float, n_points: int) -> np.ndarray:
    # x = tan(theta) maps the (possibly infinite) line onto a bounded interval;
    # all three integrands become polynomials in cos/sin, so Gauss-Legendre panels converge fast.
    per_panel = 10
    n_panels = max(1, n_points // per_panel)
    nodes, weights = np.polynomial.legendre.leggauss(per_panel)
    edges = np.linspace(-theta_max, theta_max, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    theta = (mid[:, None] + half[:, None] * nodes[None, :]).ravel()
    wts = (half[:, None] * weights[None, :]).ravel()
    x = np.tan(theta)
    jac = 1.0 / np.cos(theta) ** 2
    a = envelope(x)
    integrands = np.stack([a**2, a * envelope_d2(x), a**4]) * jac
    return integrands @ wts


def envelope_integrals(x_half_width: float = math.inf, quadrature_points: int = 400) -> EnvelopeIntegrals:
    """Quadrature of the envelope integrals over [-x_half_width, x_half_width].

    The result is accepted only if doubling the number of points changes
    every integral by less than 1e-8 relative.
    """
    if quadrature_points < 100:
        raise DomainError(f"quadrature_points must be >= 100 (got {quadrature_points})")
    if not x_half_width > 0:
        raise DomainError(f"x_half_width must be positive (got {x_half_width})")
    theta_max = math.pi / 2 if math.isinf(x_half_width) else math.atan(x_half_width)
    coarse = _integrals_gauss(theta_max, quadrature_points)
    fine = _integrals_gauss(theta_max, 2 * quadrature_points)
    rel = np.abs(fine - coarse) / np.maximum(np.abs(fine), np.finfo(float).tiny)
    if np.any(rel > 1e-8):
        raise NumericsError(f"envelope quadrature not converged (relative changes {rel.tolist()})")
    return EnvelopeIntegrals(*map(float, fine))


def reconstruct_electric_field(
    f: ComplexField,
    grid: GridSpec,
    x: float,
    z: float,
    t: float,
    params: WaveParams,
    signed: bool = False,
) -> np.ndarray:
    """Electric field E = -dA/dt across y at fixed (x, z, t).

    With F = f exp(i phi z) and A = Re[env(x) F exp(i(beta z - omega t))],
    the time derivative is taken exactly, giving
    E = -omega env(x) Im[F exp(i(beta z - omega t))].
    """
    f.check_matches(grid)
    carrier = np.exp(1j * ((params.phi + params.beta) * z - params.omega * t))
    e = -params.omega * envelope(x) * np.imag(f.values * carrier)
    return e if signed else np.abs(e)


@dataclass(frozen=True)
class ErrorNorms:
    l2: float
    linf: float
    linf_relative: float


def error_norms(numeric: ComplexField, reference: ComplexField, grid: GridSpec) -> ErrorNorms:
    if len(numeric) != len(reference):
        raise DomainError(f"length mismatch: {len(numeric)} vs {len(reference)}")
    numeric.check_matches(grid)
    diff = np.abs(numeric.values - reference.values)
    ref_max = float(np.max(reference.abs))
    if ref_max == 0:
        raise DomainError("relative norm undefined for an identically zero reference")
    linf = float(np.max(diff))
    return ErrorNorms(
        l2=float(np.sqrt(grid.dy * np.sum(diff**2))),
        linf=linf,
        linf_relative=linf / ref_max,
    )
