"""Spatial Kerr coefficient g(y), optionally with point defects."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .grid import GridSpec


@dataclass(frozen=True)
class Defect:
    y_location: float
    grid_index: int


@dataclass(frozen=True)
class NonlinearityProfile:
    g: np.ndarray
    background: float
    defects: tuple[Defect, ...] = ()
    g_defect: float | None = None
    width_cells: int = 1

    def __post_init__(self):
        g = np.array(self.g, dtype=float)
        g.setflags(write=False)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "defects", tuple(self.defects))

    @property
    def defect_indices(self) -> list[int]:
        return [d.grid_index for d in self.defects]

    def defect_cells(self) -> list[int]:
        """All grid indices carrying g_defect (more than one per defect when width_cells > 1)."""
        return [k for d in self.defects for k in _footprint(d.grid_index, self.width_cells)]


def _footprint(center: int, width: int) -> range:
    start = center - (width - 1) // 2
    return range(start, start + width)


def uniform_profile(grid: GridSpec, g: float) -> NonlinearityProfile:
    if not g > 0:
        raise DomainError(f"g must be positive (got {g})")
    return NonlinearityProfile(np.full(grid.n_y, float(g)), float(g))


def nearest_index(grid: GridSpec, y: float) -> int:
    """Nearest grid index to y; exact ties (to roundoff) go to the smaller index."""
    dist = np.abs(grid.y - y)
    tied = np.flatnonzero(dist <= dist.min() + 1e-9 * grid.dy)
    return int(tied[0])


def point_defect_profile(
    grid: GridSpec,
    locations: Sequence[float],
    g_defect: float,
    g_background: float,
    width_cells: int = 1,
) -> NonlinearityProfile:
    """Background g with g_defect on the grid cell nearest each location."""
    if not g_defect > 0:
        raise DomainError(f"g_defect must be positive (got {g_defect})")
    if not g_background > 0:
        raise DomainError(f"g_background must be positive (got {g_background})")
    if int(width_cells) != width_cells or width_cells < 1:
        raise DomainError(f"width_cells must be a positive integer (got {width_cells})")
    lo = grid.y_min + 2 * grid.dy
    hi = grid.y_max - 2 * grid.dy
    g = np.full(grid.n_y, float(g_background))
    defects = []
    taken: set[int] = set()
    for y in locations:
        y = float(y)
        if not lo - 1e-12 <= y <= hi + 1e-12:
            raise DomainError(f"defect at y={y} outside the allowed band [{lo}, {hi}]")
        k = nearest_index(grid, y)
        cells = set(_footprint(k, width_cells))
        if min(cells) < 2 or max(cells) > grid.n_y - 3:
            raise DomainError(f"defect at y={y} reaches into the boundary band")
        if cells & taken:
            raise DomainError(f"defect at y={y} collides with another defect at grid index {k}")
        taken |= cells
        g[sorted(cells)] = g_defect
        defects.append(Defect(y, k))
    return NonlinearityProfile(g, float(g_background), tuple(defects), float(g_defect), int(width_cells))


def default_defect_locations(count: int, spacing: float = 2.0) -> list[float]:
    """``count`` locations spaced evenly and symmetrically about y=0."""
    if count < 0:
        raise DomainError(f"defect count must be nonnegative (got {count})")
    return [(i - (count - 1) / 2) * spacing for i in range(count)]
