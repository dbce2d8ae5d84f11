"""Line-oriented ``section.key = value`` configuration with validated defaults.

Defaults reproduce the defect-free experiment: y in [-10, 10] on 200 points,
dz = 0.01, M = 1, g = 5, w = 2, beta = -0.5, phi = omega = 1, z_end = 1.
"""

from __future__ import annotations

import math
import dataclasses
from dataclasses import dataclass, fields, replace

from .analytic import WaveParams
from .errors import DomainError, ParseError, ValidationError
from .gfdtd import ANALYTIC_HALF_SHIFT, BOOTSTRAP_METHODS, SELF_START, SchemeParams
from .grid import GridSpec, make_grid
from .nonlinearity import NonlinearityProfile, point_defect_profile, uniform_profile
from .oracle import OracleConfig
from .stencil import GHOST_KINDS, GhostPolicy

AUTO = "auto"


@dataclass(frozen=True)
class GridSection:
    y_min: float = -10.0
    y_max: float = 10.0
    n_y: int = 200
    dz: float = 0.01


@dataclass(frozen=True)
class PhysicsSection:
    beta: float = -0.5
    omega: float = 1.0
    phi: float = 1.0
    w: float = 2.0
    g_background: float = 5.0


@dataclass(frozen=True)
class DefectsSection:
    locations: tuple[float, ...] = ()
    g_defect: float = 0.5
    g_background_override: float | None = None
    width_cells: int = 1
    spacing: float = 2.0


@dataclass(frozen=True)
class SchemeSection:
    m_terms: int = 1
    steady_tol: float = 1e-6
    divergence_guard: float = 1e3
    bootstrap: str = AUTO
    ghost_policy: str = "analytic"


@dataclass(frozen=True)
class RunSection:
    z_end: float = 1.0
    snapshot_every: int = 10
    output_dir: str = "out"


@dataclass(frozen=True)
class FieldSection:
    x_sample: float = 0.0
    t_list: tuple[float, ...] = (0.0, 2.0, 4.0, 6.0, 8.0, 10.0)
    snapshot: str | None = None


@dataclass(frozen=True)
class OracleSection:
    enabled: bool = False
    dz_ref: float = 1e-3
    padding_factor: int = 2


@dataclass(frozen=True)
class SimulationConfig:
    grid: GridSection = dataclasses.field(default_factory=GridSection)
    physics: PhysicsSection = dataclasses.field(default_factory=PhysicsSection)
    defects: DefectsSection = dataclasses.field(default_factory=DefectsSection)
    scheme: SchemeSection = dataclasses.field(default_factory=SchemeSection)
    run: RunSection = dataclasses.field(default_factory=RunSection)
    field: FieldSection = dataclasses.field(default_factory=FieldSection)
    oracle: OracleSection = dataclasses.field(default_factory=OracleSection)

    def __post_init__(self):
        validate(self)

    # downstream objects

    def grid_spec(self) -> GridSpec:
        g = self.grid
        return make_grid(g.y_min, g.y_max, g.n_y, g.dz)

    def wave_params(self) -> WaveParams:
        p = self.physics
        return WaveParams(p.beta, p.omega, p.phi, p.w, p.g_background)

    def scheme_params(self) -> SchemeParams:
        s = self.scheme
        return SchemeParams(s.m_terms, s.divergence_guard, s.steady_tol)

    @property
    def profile_background(self) -> float:
        d = self.defects
        return self.physics.g_background if d.g_background_override is None else d.g_background_override

    def profile(self, grid: GridSpec | None = None) -> NonlinearityProfile:
        grid = grid or self.grid_spec()
        d = self.defects
        if not d.locations:
            return uniform_profile(grid, self.profile_background)
        return point_defect_profile(grid, d.locations, d.g_defect, self.profile_background, d.width_cells)

    def ghost_policy(self) -> GhostPolicy:
        if self.scheme.ghost_policy == "zero":
            return GhostPolicy.zero()
        return GhostPolicy.analytic(self.wave_params())

    def bootstrap_method(self) -> str:
        """``auto`` picks the analytic half shift only when the soliton is an exact solution."""
        if self.scheme.bootstrap != AUTO:
            return self.scheme.bootstrap
        if not self.defects.locations and self.profile_background == self.physics.g_background:
            return ANALYTIC_HALF_SHIFT
        return SELF_START

    def oracle_config(self) -> OracleConfig:
        return OracleConfig(self.oracle.dz_ref, self.oracle.padding_factor)

    def with_defects(self, locations) -> "SimulationConfig":
        return replace(self, defects=replace(self.defects, locations=tuple(float(v) for v in locations)))

    def with_grid(self, **changes) -> "SimulationConfig":
        return replace(self, grid=replace(self.grid, **changes))

    def with_scheme(self, **changes) -> "SimulationConfig":
        return replace(self, scheme=replace(self.scheme, **changes))


SECTIONS = {f.name: f.default_factory for f in fields(SimulationConfig)}


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def validate(cfg: SimulationConfig) -> None:
    """Fail fast on anything a downstream constructor would reject."""
    try:
        grid = cfg.grid_spec()
        cfg.wave_params()
        cfg.scheme_params()
        cfg.profile(grid)
        cfg.oracle_config()
    except DomainError as exc:
        raise ValidationError(str(exc)) from exc
    if cfg.defects.g_background_override is not None:
        _check(cfg.defects.g_background_override > 0, "defects.g_background_override must be positive")
    _check(cfg.defects.spacing > 0, "defects.spacing must be positive")
    _check(cfg.scheme.bootstrap in (AUTO,) + BOOTSTRAP_METHODS,
           f"scheme.bootstrap must be one of {(AUTO,) + BOOTSTRAP_METHODS}")
    _check(cfg.scheme.ghost_policy in GHOST_KINDS, f"scheme.ghost_policy must be one of {GHOST_KINDS}")
    _check(math.isfinite(cfg.run.z_end) and cfg.run.z_end >= 0, "run.z_end must be nonnegative")
    steps = cfg.run.z_end / grid.dz
    _check(abs(steps - round(steps)) <= 1e-9 * max(1.0, steps), "run.z_end must be a multiple of grid.dz")
    _check(cfg.run.snapshot_every >= 1, "run.snapshot_every must be >= 1")
    _check(bool(cfg.run.output_dir), "run.output_dir must not be empty")
    _check(all(math.isfinite(t) for t in cfg.field.t_list), "field.t_list entries must be finite")
    _check(math.isfinite(cfg.field.x_sample), "field.x_sample must be finite")


def _parse_bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_list(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.replace(",", " ").split())


def _optional(conv):
    def parse(text: str):
        return None if text.lower() in ("", "none") else conv(text)

    return parse


_CONVERTERS = {
    "float": float,
    "int": int,
    "str": str,
    "bool": _parse_bool,
    "tuple[float, ...]": _parse_list,
    "float | None": _optional(float),
    "str | None": _optional(str),
}


def parse_config(text: str) -> SimulationConfig:
    values: dict[str, dict[str, object]] = {name: {} for name in SECTIONS}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"expected 'section.key = value', got {raw.strip()!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        section, _, name = key.partition(".")
        if section not in SECTIONS or not name:
            raise ParseError(f"unknown key {key!r}", lineno)
        types = {f.name: f.type for f in fields(SECTIONS[section]())}
        if name not in types:
            raise ParseError(f"unknown key {key!r}", lineno)
        if name in values[section]:
            raise ParseError(f"duplicate key {key!r}", lineno)
        try:
            values[section][name] = _CONVERTERS[types[name]](value)
        except ValueError as exc:
            raise ParseError(f"bad value for {key}: {exc}", lineno) from exc
    sections = {name: SECTIONS[name]().__class__(**kv) for name, kv in values.items()}
    return SimulationConfig(**sections)


def _format_value(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, tuple):
        return ", ".join(repr(float(x)) for x in v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def format_config(cfg: SimulationConfig) -> str:
    """Fully resolved config in the same format ``parse_config`` reads."""
    lines = []
    for section in SECTIONS:
        sec = getattr(cfg, section)
        for f in fields(sec):
            lines.append(f"{section}.{f.name} = {_format_value(getattr(sec, f.name))}")
    return "\n".join(lines) + "\n"
