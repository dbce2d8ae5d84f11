"""Discretization geometry and the field containers used by every solver module."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NumericsError

MIN_POINTS = 7


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class GridSpec:
    """Uniform y-grid, endpoints included, plus the z-step."""

    y_min: float
    y_max: float
    n_y: int
    dz: float

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / (self.n_y - 1)

    @property
    def sigma(self) -> float:
        return self.dz / self.dy**2

    @property
    def y(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.n_y)

    def with_dz(self, dz: float) -> "GridSpec":
        return make_grid(self.y_min, self.y_max, self.n_y, dz)


def make_grid(y_min: float, y_max: float, n_y: int, dz: float) -> GridSpec:
    if not (math.isfinite(y_min) and math.isfinite(y_max)) or y_max <= y_min:
        raise DomainError(f"y_max must exceed y_min (got y_min={y_min}, y_max={y_max})")
    if int(n_y) != n_y or n_y < MIN_POINTS:
        raise DomainError(f"n_y must be an integer >= {MIN_POINTS} (got n_y={n_y})")
    if not math.isfinite(dz) or dz <= 0:
        raise DomainError(f"dz must be positive (got dz={dz})")
    return GridSpec(float(y_min), float(y_max), int(n_y), float(dz))


@dataclass(frozen=True)
class ComplexField:
    """f(z, .) at one z-level, split into real and imaginary arrays."""

    re: np.ndarray
    im: np.ndarray
    z_level: float = 0.0

    def __post_init__(self):
        re, im = _frozen(self.re), _frozen(self.im)
        if re.ndim != 1 or re.shape != im.shape:
            raise DomainError(f"re and im must be 1-D of equal length, got {re.shape} and {im.shape}")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "z_level", float(self.z_level))

    @classmethod
    def from_complex(cls, values, z_level: float = 0.0) -> "ComplexField":
        values = np.asarray(values, dtype=complex)
        return cls(values.real, values.imag, z_level)

    @classmethod
    def zeros(cls, n: int, z_level: float = 0.0) -> "ComplexField":
        return cls(np.zeros(n), np.zeros(n), z_level)

    @property
    def values(self) -> np.ndarray:
        return self.re + 1j * self.im

    @property
    def abs(self) -> np.ndarray:
        with np.errstate(over="ignore"):
            return np.hypot(self.re, self.im)

    @property
    def modulus_sq(self) -> np.ndarray:
        return self.re**2 + self.im**2

    def __len__(self) -> int:
        return len(self.re)

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.re)) and np.all(np.isfinite(self.im)))

    def check_matches(self, grid: GridSpec) -> None:
        if len(self) != grid.n_y:
            raise DomainError(f"field has {len(self)} points but grid has n_y={grid.n_y}")


@dataclass(frozen=True)
class StaggeredState:
    """Solver state: f at z=(n-1)dz and at z=(n-1/2)dz."""

    f_int: ComplexField
    f_half: ComplexField
    step_index: int = 1

    def check_staggering(self, grid: GridSpec, rtol: float = 1e-12) -> None:
        gap = self.f_half.z_level - self.f_int.z_level
        if abs(gap - grid.dz / 2) > rtol * max(1.0, abs(self.f_half.z_level)):
            raise DomainError(f"half level must lead the integer level by dz/2, got gap {gap!r}")

    @property
    def z(self) -> float:
        return self.f_int.z_level


def sample_on_grid(grid: GridSpec, fn: Callable[[float], complex], z_level: float = 0.0) -> ComplexField:
    """Evaluate a scalar function of y at every grid point."""
    values = np.empty(grid.n_y, dtype=complex)
    for k, yk in enumerate(grid.y):
        try:
            values[k] = complex(fn(float(yk)))
        except (ZeroDivisionError, OverflowError) as exc:
            raise NumericsError(f"sampled function failed at y={yk!r}: {exc}") from exc
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0])
        raise NumericsError(f"sampled function is non-finite at y={grid.y[bad]!r}")
    return ComplexField.from_complex(values, z_level)
