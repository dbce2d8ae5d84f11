"""Explicit staggered G-FDTD integrator for 2i beta f_z + f_yy + g|f|^2 f = 0.

The scheme advances two interleaved copies of f, one on integer z-levels
and one on half levels. Each update jumps a full dz and uses the other copy
at the midpoint:

    f^n       = f^{n-1}   - 2i S(B) f^{n-1/2},   B frozen at |f^{n-1/2}|^2
    f^{n+1/2} = f^{n-1/2} - 2i S(B) f^n,         B frozen at |f^n|^2

where S(B) = sum_{m<=M} (-1)^m B^{2m+1} / (2m+1)! is the truncated sine
series and

    B u = -(1/(2 beta)) [ (sigma/2) D_y^2 u + (dz/2) g |f|^2 u ].

Split into real and imaginary parts this is exactly the pair of real
updates with coefficients 2(-1)^m/(2m+1)! (real part, driven by the
imaginary part) and 2(-1)^(m+1)/(2m+1)! (imaginary part, driven by the
real part).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .analytic import WaveParams, exact_soliton
from .errors import DomainError, NumericsError
from .grid import ComplexField, GridSpec, StaggeredState
from .nonlinearity import NonlinearityProfile
from .stencil import GhostPolicy, STENCIL_HALF_WIDTH, extend, second_difference

REAL_UPDATE = "real_update"
IMAG_UPDATE = "imag_update"

ANALYTIC_HALF_SHIFT = "analytic_half_shift"
SELF_START = "self_start"
BOOTSTRAP_METHODS = (ANALYTIC_HALF_SHIFT, SELF_START)


@dataclass(frozen=True)
class SchemeParams:
    m_terms: int = 1
    divergence_guard: float = 1e3
    steady_tol: float = 1e-6

    def __post_init__(self):
        if int(self.m_terms) != self.m_terms or self.m_terms < 0:
            raise DomainError(f"m_terms must be a nonnegative integer (got {self.m_terms})")
        if not self.divergence_guard > 0:
            raise DomainError(f"divergence_guard must be positive (got {self.divergence_guard})")
        if not self.steady_tol > 0:
            raise DomainError(f"steady_tol must be positive (got {self.steady_tol})")


def _guard(u: np.ndarray, limit: float, what: str) -> None:
    peak = float(np.max(np.abs(u))) if u.size else 0.0
    if not math.isfinite(peak) or peak > limit:
        raise NumericsError(f"{what}: max |value| = {peak:.6g} exceeds guard {limit:.6g}", max_abs=peak)


def _powers(
    target: np.ndarray,
    nonlin_sq: np.ndarray,
    g: np.ndarray,
    grid: GridSpec,
    beta: float,
    count: int,
    guard: float,
):
    """Yield B^1 u, ..., B^count u cropped to the n_y interior points.

    All inputs are ghost-extended by 2*count points per side; every
    application of the five-point operator consumes two of them.
    """
    n = grid.n_y
    half_sigma = 0.5 * grid.sigma
    half_dz = 0.5 * grid.dz
    scale = -1.0 / (2.0 * beta)
    u = target
    for j in range(1, count + 1):
        lo = STENCIL_HALF_WIDTH * j
        hi = lo + len(u) - 2 * STENCIL_HALF_WIDTH
        u = scale * (half_sigma * second_difference(u) + half_dz * g[lo:hi] * nonlin_sq[lo:hi] * u[2:-2])
        _guard(u, guard, f"operator power {j}")
        pad = STENCIL_HALF_WIDTH * (count - j)
        yield j, (u[pad : pad + n] if pad else u)


def _extended_inputs(values, modsq, profile, grid, policy, z_level, layers):
    target = extend(values, grid, policy, z_level, layers)
    exterior = extend(np.zeros(grid.n_y, dtype=complex), grid, policy, z_level, layers)
    modsq_ext = np.abs(exterior) ** 2
    modsq_ext[layers:-layers] = modsq
    g_ext = np.full(len(target), profile.background)
    g_ext[layers:-layers] = profile.g
    return target, modsq_ext, g_ext


def _sine_series(values, modsq, z_level, profile, grid, params, scheme, policy) -> np.ndarray:
    """S(B) applied to a complex array (B is real, so real and imaginary parts decouple)."""
    count = 2 * scheme.m_terms + 1
    layers = STENCIL_HALF_WIDTH * count
    target, modsq_ext, g_ext = _extended_inputs(values, modsq, profile, grid, policy, z_level, layers)
    total = np.zeros(grid.n_y, dtype=target.dtype)
    for j, bu in _powers(target, modsq_ext, g_ext, grid, params.beta, count, scheme.divergence_guard):
        if j % 2 == 1:
            m = (j - 1) // 2
            total += ((-1) ** m / math.factorial(j)) * bu
    return total


def apply_series_operator(
    target: ComplexField,
    nonlin_sq: np.ndarray,
    profile: NonlinearityProfile,
    grid: GridSpec,
    params: WaveParams,
    scheme: SchemeParams,
    parity: str,
    policy: GhostPolicy,
) -> np.ndarray:
    """Increment for one real sub-update.

    ``real_update`` returns sum_m 2(-1)^m/(2m+1)! B^{2m+1} target.im and
    ``imag_update`` returns sum_m 2(-1)^(m+1)/(2m+1)! B^{2m+1} target.re.
    Ghost values for the driving component come from ``policy`` at
    ``target.z_level``.
    """
    target.check_matches(grid)
    nonlin_sq = np.asarray(nonlin_sq, dtype=float)
    if nonlin_sq.shape != (grid.n_y,):
        raise DomainError(f"nonlin_sq must have length {grid.n_y}")
    if parity == REAL_UPDATE:
        # ghosts of the imaginary part: take the imaginary part of the complex exterior
        s = _sine_series(target.values, nonlin_sq, target.z_level, profile, grid, params, scheme, policy)
        return 2.0 * s.imag
    if parity == IMAG_UPDATE:
        s = _sine_series(target.values, nonlin_sq, target.z_level, profile, grid, params, scheme, policy)
        return -2.0 * s.real
    raise DomainError(f"unknown parity {parity!r}")


def _leapfrog(prev: ComplexField, mid: ComplexField, profile, grid, params, scheme, policy) -> ComplexField:
    # modulus frozen at the midpoint; both sub-updates read the old partner field
    s = _sine_series(mid.values, mid.modulus_sq, mid.z_level, profile, grid, params, scheme, policy)
    new = prev.values - 2j * s
    _guard(new, scheme.divergence_guard, "updated field")
    return ComplexField.from_complex(new, prev.z_level + grid.dz)


def full_step(state: StaggeredState, profile, grid, params, scheme, policy) -> ComplexField:
    """f^{n-1} -> f^n using f^{n-1/2}."""
    return _leapfrog(state.f_int, state.f_half, profile, grid, params, scheme, policy)


def half_step(f_n: ComplexField, f_half: ComplexField, profile, grid, params, scheme, policy) -> ComplexField:
    """f^{n-1/2} -> f^{n+1/2} using f^n."""
    return _leapfrog(f_half, f_n, profile, grid, params, scheme, policy)


def step(state: StaggeredState, profile, grid, params, scheme, policy) -> StaggeredState:
    f_n = full_step(state, profile, grid, params, scheme, policy)
    f_next_half = half_step(f_n, state.f_half, profile, grid, params, scheme, policy)
    return StaggeredState(f_n, f_next_half, state.step_index + 1)


def bootstrap(
    f0: ComplexField,
    method: str,
    profile: NonlinearityProfile,
    grid: GridSpec,
    params: WaveParams,
    scheme: SchemeParams,
    policy: GhostPolicy,
    soliton_data: bool = True,
) -> StaggeredState:
    """Build the first staggered pair (f^0, f^{1/2}).

    ``analytic_half_shift`` samples the background soliton at z = dz/2 and
    is only meaningful for soliton initial data. ``self_start`` advances f^0
    by dz/2 with the truncated Taylor series of exp(-iB), modulus frozen at
    |f^0|^2, and works for any initial data.
    """
    f0.check_matches(grid)
    z_half = f0.z_level + grid.dz / 2
    if method == ANALYTIC_HALF_SHIFT:
        if not soliton_data:
            raise DomainError("analytic_half_shift requires soliton initial data")
        half = exact_soliton(grid.y, z_half, params.g_background, params.w, params.beta)
    elif method == SELF_START:
        half = _self_start(f0, profile, grid, params, scheme, policy)
    else:
        raise DomainError(f"unknown bootstrap method {method!r}; expected one of {BOOTSTRAP_METHODS}")
    return StaggeredState(f0, ComplexField.from_complex(half, z_half), 1)


def _self_start(f0, profile, grid, params, scheme, policy) -> np.ndarray:
    # exp(-iB) with B = (dz/2) L advances by exactly dz/2; keep terms through order 2M+2
    count = 2 * scheme.m_terms + 2
    layers = STENCIL_HALF_WIDTH * count
    target, modsq_ext, g_ext = _extended_inputs(
        f0.values, f0.modulus_sq, profile, grid, policy, f0.z_level, layers
    )
    total = f0.values.astype(complex)
    for j, bu in _powers(target, modsq_ext, g_ext, grid, params.beta, count, scheme.divergence_guard):
        total = total + ((-1j) ** j / math.factorial(j)) * bu
    return total


def discrete_mass(field: ComplexField, grid: GridSpec) -> float:
    """dy * sum |f|^2."""
    if not field.is_finite():
        raise NumericsError("mass of a non-finite field")
    return float(grid.dy * np.sum(field.modulus_sq))


def steady_diff(f_a: ComplexField, f_b: ComplexField) -> float:
    if len(f_a) != len(f_b):
        raise DomainError(f"length mismatch: {len(f_a)} vs {len(f_b)}")
    a, b = f_a.abs, f_b.abs
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(b))))


def steady_state_reached(f_a: ComplexField, f_b: ComplexField, tol: float) -> bool:
    """True when the moduli of two fields agree to ``tol`` (scaled by max(1, max|f_b|)).

    The moduli are compared because the soliton's phase rotates with z
    while its shape does not.
    """
    return steady_diff(f_a, f_b) <= tol


@dataclass(frozen=True)
class StepReport:
    step: int
    z: float
    mass: float
    max_abs_f: float
    steady: bool
    steady_diff: float


Observer = Callable[[int, ComplexField, float, float], None]


def propagate(
    state0: StaggeredState,
    profile: NonlinearityProfile,
    grid: GridSpec,
    params: WaveParams,
    scheme: SchemeParams,
    policy: GhostPolicy,
    z_end: float,
    observer: Optional[Observer] = None,
) -> tuple[StaggeredState, list[StepReport]]:
    """Repeat (full_step, half_step) until the integer level reaches z_end."""
    state0.check_staggering(grid)
    span = z_end - state0.z
    n_steps = round(span / grid.dz)
    if span < -1e-12 or abs(n_steps * grid.dz - span) > 1e-9 * max(1.0, abs(z_end)):
        raise DomainError(f"z_end - z_start = {span!r} is not a nonnegative multiple of dz = {grid.dz!r}")
    state = state0
    reports: list[StepReport] = []
    for _ in range(n_steps):
        prev = state.f_int
        try:
            state = step(state, profile, grid, params, scheme, policy)
        except NumericsError as exc:
            raise NumericsError(
                f"step {state.step_index} (z={prev.z_level + grid.dz:.6g}): {exc}",
                step=state.step_index,
                max_abs=exc.max_abs,
            ) from exc
        f_n = state.f_int
        # snap to the exact multiple so cadence and steady checks do not drift
        z = state0.z + (state.step_index - state0.step_index) * grid.dz
        f_n = replace(f_n, z_level=z)
        state = replace(state, f_int=f_n, f_half=replace(state.f_half, z_level=z + grid.dz / 2))
        mass = discrete_mass(f_n, grid)
        peak = float(np.max(f_n.abs))
        diff = steady_diff(f_n, prev)
        reports.append(StepReport(state.step_index - 1, z, mass, peak, diff <= scheme.steady_tol, diff))
        if observer is not None:
            observer(state.step_index - 1, f_n, mass, peak)
    return state, reports
