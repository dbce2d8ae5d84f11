"""Experiment drivers behind the CLI commands: run, sweep, convergence, field."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io
from .analytic import error_norms, reconstruct_electric_field, soliton_field
from .config import SimulationConfig, format_config
from .errors import DomainError, NumericsError
from .gfdtd import StepReport, bootstrap, discrete_mass, propagate
from .grid import ComplexField, GridSpec, StaggeredState
from .nonlinearity import default_defect_locations, uniform_profile
from .oracle import split_step_propagate

log = logging.getLogger(__name__)

COMMANDS = ("run", "sweep", "convergence", "field")
LADDER_N_Y = (50, 100, 200)
LADDER_M = (0, 1)


@dataclass
class Simulation:
    """In-memory outcome of one propagation."""

    config: SimulationConfig
    grid: GridSpec
    initial: ComplexField
    state: StaggeredState
    reports: list[StepReport]
    snapshots: dict[int, ComplexField] = field(default_factory=dict)

    @property
    def final(self) -> ComplexField:
        return self.state.f_int

    @property
    def mass0(self) -> float:
        return discrete_mass(self.initial, self.grid)

    def mass_drift(self) -> float:
        m0 = self.mass0
        return max((abs(r.mass - m0) / m0 for r in self.reports), default=0.0)


def simulate(cfg: SimulationConfig, z_end: float | None = None, snapshot_every: int | None = None) -> Simulation:
    grid = cfg.grid_spec()
    params = cfg.wave_params()
    scheme = cfg.scheme_params()
    profile = cfg.profile(grid)
    policy = cfg.ghost_policy()
    z_end = cfg.run.z_end if z_end is None else z_end
    f0 = soliton_field(grid, params, 0.0)
    state = bootstrap(f0, cfg.bootstrap_method(), profile, grid, params, scheme, policy)
    snapshots = {0: f0}

    def observe(n, f_n, mass, peak):
        if snapshot_every and n % snapshot_every == 0:
            snapshots[n] = f_n

    state, reports = propagate(state, profile, grid, params, scheme, policy, z_end, observer=observe)
    if reports:
        snapshots[reports[-1].step] = state.f_int
    return Simulation(cfg, grid, f0, state, reports, snapshots)


@dataclass
class RunReport:
    command: str
    output_dir: Path
    files: list[Path] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def _manifest(cfg: SimulationConfig, grid: GridSpec, extra: dict | None = None) -> str:
    profile = cfg.profile(grid)
    lines = ["# resolved configuration", format_config(cfg).rstrip("\n"), "# resolved run data"]
    lines.append("defect_indices = " + ", ".join(str(k) for k in profile.defect_indices))
    lines.append("defect_y = " + ", ".join(io.fmt(grid.y[k]) for k in profile.defect_indices))
    lines.append(f"bootstrap_resolved = {cfg.bootstrap_method()}")
    lines.append(f"dy = {io.fmt(grid.dy)}")
    lines.append(f"sigma = {io.fmt(grid.sigma)}")
    for k, v in (extra or {}).items():
        lines.append(f"{k} = {v}")
    return "\n".join(lines) + "\n"


def _run(cfg: SimulationConfig, out: Path) -> RunReport:
    out = io.ensure_dir(out)
    grid = cfg.grid_spec()
    report = RunReport("run", out)
    io.write_text(out / "manifest", _manifest(cfg, grid))
    report.files.append(out / "manifest")
    with io.MetricsLog(out / "metrics.log") as metrics:
        sim = simulate(cfg, snapshot_every=cfg.run.snapshot_every)
        for r in sim.reports:
            metrics.write(r)
    report.files.append(out / "metrics.log")
    for n, f in sorted(sim.snapshots.items()):
        path = out / f"snapshot_{n:06d}.csv"
        io.write_snapshot(f, grid, path)
        report.files.append(path)
    final_path = out / "final.csv"
    io.write_snapshot(sim.final, grid, final_path)
    report.files.append(final_path)
    report.summary.update(
        steps=len(sim.reports),
        z_end=sim.final.z_level,
        mass_drift=sim.mass_drift(),
        max_abs_f=float(np.max(sim.final.abs)),
        defect_indices=cfg.profile(grid).defect_indices,
    )
    if not cfg.defects.locations and cfg.profile_background == cfg.physics.g_background:
        exact = soliton_field(grid, cfg.wave_params(), sim.final.z_level)
        report.summary["linf_relative_vs_exact"] = error_norms(sim.final, exact, grid).linf_relative
    if cfg.oracle.enabled:
        ref = split_step_propagate(
            sim.initial, cfg.profile(grid), grid, cfg.wave_params(), cfg.oracle_config(), sim.final.z_level
        )
        io.write_snapshot(ref, grid, out / "oracle_final.csv")
        report.files.append(out / "oracle_final.csv")
        report.summary["linf_vs_oracle"] = float(np.max(np.abs(ref.values - sim.final.values)))
    log.info("run finished: %s", report.summary)
    return report


def _sweep_one(args):
    cfg, out = args
    return _run(cfg, out)


def _sweep(cfg: SimulationConfig, out: Path, jobs: int = 1, max_defects: int = 5) -> RunReport:
    out = io.ensure_dir(out)
    tasks = [
        (cfg.with_defects(default_defect_locations(n, cfg.defects.spacing)), out / f"defects_{n}")
        for n in range(max_defects + 1)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_sweep_one, tasks))
    else:
        runs = [_sweep_one(t) for t in tasks]
    report = RunReport("sweep", out)
    for n, r in enumerate(runs):
        report.files.extend(r.files)
        report.summary[n] = r.summary
    return report


def convergence_table(cfg: SimulationConfig, n_values=LADDER_N_Y, m_values=LADDER_M) -> list[dict]:
    """Error against the exact soliton for every (n_y, M) on the ladder.

    Runs use a uniform profile at the background g regardless of any
    configured defects. Diverged runs are kept in the table with infinite error.
    """
    rows = []
    base = cfg.with_defects(())
    for m in m_values:
        prev = None
        for n in n_values:
            run_cfg = base.with_grid(n_y=n).with_scheme(m_terms=m)
            grid = run_cfg.grid_spec()
            row = {"n_y": n, "m_terms": m, "dy": grid.dy, "status": "ok"}
            try:
                sim = simulate(run_cfg)
                exact = soliton_field(grid, run_cfg.wave_params(), sim.final.z_level)
                norms = error_norms(sim.final, exact, grid)
                row.update(linf=norms.linf, l2=norms.l2)
            except NumericsError as exc:
                row.update(linf=math.inf, l2=math.inf, status="diverged")
                log.warning("n_y=%d M=%d diverged: %s", n, m, exc)
            order = math.nan
            if prev is not None and row["status"] == prev["status"] == "ok" and row["linf"] > 0:
                order = math.log(prev["linf"] / row["linf"]) / math.log(prev["dy"] / row["dy"])
            row["order"] = order
            rows.append(row)
            prev = row
    return rows


def _convergence(cfg: SimulationConfig, out: Path) -> RunReport:
    out = io.ensure_dir(out)
    rows = convergence_table(cfg)
    lines = ["n_y,m_terms,dy,linf,l2,order,status"]
    for r in rows:
        lines.append(
            f"{r['n_y']},{r['m_terms']},{io.fmt(r['dy'])},{io.fmt(r['linf'])},{io.fmt(r['l2'])},"
            f"{io.fmt(r['order'])},{r['status']}"
        )
    io.write_text(out / "convergence.csv", "\n".join(lines) + "\n")
    io.write_text(out / "manifest", _manifest(cfg, cfg.grid_spec()))
    return RunReport("convergence", out, [out / "convergence.csv", out / "manifest"], {"rows": rows})


def steady_field(cfg: SimulationConfig) -> tuple[GridSpec, ComplexField]:
    grid = cfg.grid_spec()
    if cfg.field.snapshot:
        y, f = io.read_snapshot(cfg.field.snapshot)
        if len(y) != grid.n_y or not np.allclose(y, grid.y, rtol=0, atol=1e-12 * grid.dy):
            raise DomainError(f"snapshot {cfg.field.snapshot} does not lie on the configured grid")
        return grid, f
    return grid, simulate(cfg).final


def _field(cfg: SimulationConfig, out: Path) -> RunReport:
    out = io.ensure_dir(out)
    grid, f = steady_field(cfg)
    params = cfg.wave_params()
    report = RunReport("field", out)
    io.write_text(out / "manifest", _manifest(cfg, grid, {"field_z": io.fmt(f.z_level)}))
    report.files.append(out / "manifest")
    for i, t in enumerate(cfg.field.t_list):
        e = reconstruct_electric_field(f, grid, cfg.field.x_sample, f.z_level, t, params, signed=True)
        path = out / f"efield_{i:02d}_t{io.fmt(t)}.csv"
        io.write_efield(grid.y, e, cfg.field.x_sample, f.z_level, t, path)
        report.files.append(path)
    report.summary["z"] = f.z_level
    return report


def execute(cfg: SimulationConfig, command: str, out_dir=None, jobs: int = 1) -> RunReport:
    if command not in COMMANDS:
        raise DomainError(f"unknown command {command!r}; expected one of {COMMANDS}")
    out = Path(out_dir if out_dir is not None else cfg.run.output_dir)
    if command == "run":
        return _run(cfg, out)
    if command == "sweep":
        return _sweep(cfg, out, jobs=jobs)
    if command == "convergence":
        return _convergence(cfg, out)
    return _field(cfg, out)


def local_minima(values: np.ndarray) -> list[int]:
    """Indices of strict interior local minima."""
    v = np.asarray(values)
    return [int(k) for k in np.flatnonzero((v[1:-1] < v[:-2]) & (v[1:-1] < v[2:])) + 1]


def peak_index(values: np.ndarray, rtol: float = 1e-9) -> int:
    """argmax, with near-ties (to rtol) resolved toward the smaller index."""
    v = np.asarray(values)
    return int(np.flatnonzero(v >= v.max() * (1 - rtol))[0])
