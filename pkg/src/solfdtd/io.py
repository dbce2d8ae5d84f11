"""Snapshot, metrics and E-field profile files."""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .errors import IoError, ParseError
from .gfdtd import StepReport
from .grid import ComplexField, GridSpec


def fmt(v: float) -> str:
    # 17 significant digits round-trips any finite double; +0.0 folds -0 into 0
    return format(float(v) + 0.0, ".17g")


def _write(path, text: str) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_snapshot(field: ComplexField, grid: GridSpec, path) -> None:
    field.check_matches(grid)
    lines = [f"# z={fmt(field.z_level)}", "y,f_real,f_imag,abs_f"]
    for y, re, im, a in zip(grid.y, field.re, field.im, field.abs):
        lines.append(f"{fmt(y)},{fmt(re)},{fmt(im)},{fmt(a)}")
    _write(path, "\n".join(lines) + "\n")


def read_snapshot(path) -> tuple[np.ndarray, ComplexField]:
    """Return (y, field) from a snapshot file."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    if len(lines) < 2 or not lines[0].startswith("# z="):
        raise ParseError(f"{path}: missing '# z=' header", 1)
    if lines[1].strip() != "y,f_real,f_imag,abs_f":
        raise ParseError(f"{path}: unexpected column header {lines[1]!r}", 2)
    z = float(lines[0][4:])
    rows = []
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split(",")
        if len(parts) != 4:
            raise ParseError(f"{path}: expected 4 columns", lineno)
        rows.append([float(p) for p in parts])
    data = np.array(rows, dtype=float).reshape(-1, 4)
    return data[:, 0], ComplexField(data[:, 1], data[:, 2], z)


def metrics_line(r: StepReport) -> str:
    return f"step:{r.step} z:{fmt(r.z)} mass:{fmt(r.mass)} max_abs_f:{fmt(r.max_abs_f)} steady:{int(r.steady)}"


class MetricsLog:
    """Appends one line per step to ``metrics.log``."""

    def __init__(self, path):
        self.path = Path(path)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._fh = open(self.path, "w", encoding="utf-8", newline="\n")
        except OSError as exc:
            raise IoError(f"cannot open {path}: {exc}") from exc

    def write(self, report: StepReport) -> None:
        self._fh.write(metrics_line(report) + "\n")

    def close(self) -> None:
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def read_metrics(path) -> list[dict[str, float]]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append({k: float(v) for k, v in (tok.split(":", 1) for tok in line.split())})
    return out


def write_efield(y: np.ndarray, e_signed: np.ndarray, x: float, z: float, t: float, path) -> None:
    lines = [f"# x={fmt(x)} z={fmt(z)} t={fmt(t)}", "y,E_signed,E_abs"]
    for yk, ek in zip(y, e_signed):
        lines.append(f"{fmt(yk)},{fmt(ek)},{fmt(abs(ek))}")
    _write(path, "\n".join(lines) + "\n")


def read_efield(path) -> tuple[dict[str, float], np.ndarray]:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()[1:].split()
        meta = {k: float(v) for k, v in (tok.split("=", 1) for tok in header)}
        fh.readline()
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    return meta, data


def write_text(path, text: str) -> None:
    _write(path, text)


def ensure_dir(path) -> Path:
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {path}: {exc}") from exc
    return Path(path)
