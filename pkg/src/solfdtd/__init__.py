"""Bright soliton propagation in a nonlinear layer with the explicit staggered G-FDTD scheme."""

from .analytic import (
    EnvelopeIntegrals,
    ErrorNorms,
    WaveParams,
    envelope,
    envelope_integrals,
    error_norms,
    exact_soliton,
    reconstruct_electric_field,
    soliton_field,
)
from .config import SimulationConfig, parse_config
from .errors import DomainError, IoError, NumericsError, ParseError, ValidationError
from .gfdtd import (
    SchemeParams,
    StepReport,
    apply_series_operator,
    bootstrap,
    discrete_mass,
    full_step,
    half_step,
    propagate,
    steady_state_reached,
    step,
)
from .grid import ComplexField, GridSpec, StaggeredState, make_grid, sample_on_grid
from .nonlinearity import NonlinearityProfile, point_defect_profile, uniform_profile
from .oracle import OracleConfig, split_step_propagate
from .stencil import GhostPolicy, apply_d2y

__version__ = "0.1.0"
