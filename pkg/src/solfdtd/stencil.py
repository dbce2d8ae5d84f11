"""Fourth-order central second difference in y with ghost-point policies."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import WaveParams, exact_soliton
from .errors import DomainError, NumericsError
from .grid import ComplexField, GridSpec

ANALYTIC_SOLITON = "analytic"
ZERO_DIRICHLET = "zero"
GHOST_KINDS = (ANALYTIC_SOLITON, ZERO_DIRICHLET)

STENCIL_HALF_WIDTH = 2


@dataclass(frozen=True)
class GhostPolicy:
    """Where off-grid values come from.

    ``analytic`` fills the exterior with the defect-free soliton (background
    g) at the field's own z-level; ``zero`` fills it with zeros.
    """

    kind: str = ANALYTIC_SOLITON
    params: WaveParams | None = None

    def __post_init__(self):
        if self.kind not in GHOST_KINDS:
            raise DomainError(f"unknown ghost policy {self.kind!r}; expected one of {GHOST_KINDS}")
        if self.kind == ANALYTIC_SOLITON and self.params is None:
            raise DomainError("analytic ghost policy needs WaveParams")

    @classmethod
    def analytic(cls, params: WaveParams) -> "GhostPolicy":
        return cls(ANALYTIC_SOLITON, params)

    @classmethod
    def zero(cls) -> "GhostPolicy":
        return cls(ZERO_DIRICHLET)

    def exterior(self, y: np.ndarray, z_level: float) -> np.ndarray:
        """Complex field values at off-grid coordinates y."""
        if self.kind == ZERO_DIRICHLET:
            return np.zeros(len(y), dtype=complex)
        p = self.params
        return np.asarray(exact_soliton(y, z_level, p.g_background, p.w, p.beta), dtype=complex)


def ghost_coordinates(grid: GridSpec, layers: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(1, layers + 1)
    left = grid.y_min - k[::-1] * grid.dy
    right = grid.y_max + k * grid.dy
    return left, right


def extend(values: np.ndarray, grid: GridSpec, policy: GhostPolicy, z_level: float, layers: int) -> np.ndarray:
    """Pad a complex array with ``layers`` ghost points on each side."""
    left, right = ghost_coordinates(grid, layers)
    return np.concatenate([policy.exterior(left, z_level), values, policy.exterior(right, z_level)])


def second_difference(u: np.ndarray) -> np.ndarray:
    """Undivided five-point operator D_y^2; the result is 4 points shorter."""
    return (-u[4:] + 16.0 * u[3:-1] - 30.0 * u[2:-2] + 16.0 * u[1:-3] - u[:-4]) / 12.0


def apply_d2y(field: ComplexField, grid: GridSpec, policy: GhostPolicy) -> ComplexField:
    """Approximate d^2 f / dy^2 at every grid point."""
    field.check_matches(grid)
    ext = extend(field.values, grid, policy, field.z_level, STENCIL_HALF_WIDTH)
    d2 = second_difference(ext) / grid.dy**2
    if not np.all(np.isfinite(d2)):
        raise NumericsError("non-finite second derivative")
    return ComplexField.from_complex(d2, field.z_level)
