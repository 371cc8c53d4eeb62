"""Discretized scenario space for the cut-in encounter.

The decision variables are the range R (m) and range rate dR/dt (m/s) at the
cut-in moment. The feasible set is a finite uniform grid of cells; a scenario
is one cell, addressed either by a per-dimension index tuple or by a flat
row-major index. All structures are immutable after construction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import ConfigError, OutOfBoundsError

DIM_NAMES = ("range", "range_rate")

AXIS = "axis"
FULL = "full"


@dataclass(frozen=True)
class OddConfig:
    """Fixed operating-condition parameters: grid bounds, ego state, horizon.

    Units: meters, seconds, meters/second. ``cells_per_dim`` gives the cell
    count for (range, range_rate) in that order.
    """

    range_min: float
    range_max: float
    range_rate_min: float
    range_rate_max: float
    cells_per_dim: tuple[int, int]
    ego_speed: float
    sim_horizon: float
    sim_dt: float
    event_gap_threshold: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "cells_per_dim", tuple(int(n) for n in self.cells_per_dim))
        if len(self.cells_per_dim) != 2:
            raise ConfigError("cells_per_dim must have exactly 2 entries (range, range_rate)")
        if not self.range_min < self.range_max:
            raise ConfigError(f"range_min must be < range_max (got {self.range_min} >= {self.range_max})")
        if not self.range_rate_min < self.range_rate_max:
            raise ConfigError(
                f"range_rate_min must be < range_rate_max (got {self.range_rate_min} >= {self.range_rate_max})"
            )
        for name, n in zip(DIM_NAMES, self.cells_per_dim):
            if n < 2:
                raise ConfigError(f"cells_per_dim[{name}] must be >= 2 (got {n})")
        if not self.sim_dt > 0:
            raise ConfigError(f"sim_dt must be > 0 (got {self.sim_dt})")
        if self.sim_horizon < 10 * self.sim_dt:
            raise ConfigError(f"sim_horizon must be >= 10*sim_dt (got {self.sim_horizon} < {10 * self.sim_dt})")
        if not self.ego_speed > 0:
            raise ConfigError(f"ego_speed must be > 0 (got {self.ego_speed})")
        if self.event_gap_threshold < 0:
            raise ConfigError(f"event_gap_threshold must be >= 0 (got {self.event_gap_threshold})")

    @property
    def bounds(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.range_min, self.range_max), (self.range_rate_min, self.range_rate_max))


@dataclass(frozen=True)
class ScenarioGrid:
    """Uniform cell grid over the decision-variable space.

    ``cell_centers[k]`` holds the strictly increasing, equally spaced center
    coordinates of dimension k (bin midpoints). Flat indices are row-major
    over ``shape``.
    """

    odd: OddConfig
    cell_centers: tuple[np.ndarray, ...]
    dims: int = field(init=False, default=2)

    def __post_init__(self):
        object.__setattr__(self, "dims", len(self.cell_centers))
        for axis in self.cell_centers:
            axis.setflags(write=False)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cell_centers)

    @property
    def total_cells(self) -> int:
        return int(np.prod(self.shape))

    @property
    def widths(self) -> tuple[float, ...]:
        """Per-dimension bound width (used to normalize distances)."""
        return tuple(hi - lo for lo, hi in self.odd.bounds)

    def flat_index(self, index: tuple[int, ...]) -> int:
        return int(np.ravel_multi_index(index, self.shape))

    def unflatten(self, flat: int) -> tuple[int, ...]:
        return tuple(int(i) for i in np.unravel_index(flat, self.shape))

    def cell_center(self, index: tuple[int, ...]) -> tuple[float, ...]:
        self._check_index(index)
        return tuple(float(self.cell_centers[k][i]) for k, i in enumerate(index))

    def point_at(self, index: tuple[int, ...]) -> "ScenarioPoint":
        return ScenarioPoint(index=tuple(int(i) for i in index), values=self.cell_center(index))

    def indices(self) -> Iterator[tuple[int, ...]]:
        """Row-major enumeration of all cell indices."""
        return itertools.product(*(range(n) for n in self.shape))

    def centers_matrix(self) -> np.ndarray:
        """(total_cells, dims) array of cell centers in flat order."""
        mesh = np.meshgrid(*self.cell_centers, indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=1)

    def _check_index(self, index: Sequence[int]) -> None:
        if len(index) != self.dims:
            raise OutOfBoundsError(f"index must have {self.dims} entries (got {len(index)})")
        for k, (i, n) in enumerate(zip(index, self.shape)):
            if not 0 <= i < n:
                raise OutOfBoundsError(f"index {i} out of grid along {DIM_NAMES[k]} (size {n})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScenarioGrid):
            return NotImplemented
        return self.odd == other.odd and all(
            np.array_equal(a, b) for a, b in zip(self.cell_centers, other.cell_centers)
        )

    def __hash__(self):
        return hash((self.odd, self.shape))


@dataclass(frozen=True)
class ScenarioPoint:
    """One scenario: a cell index plus its physical (R, dR/dt) coordinates."""

    index: tuple[int, ...]
    values: tuple[float, ...]


def build_grid(odd: OddConfig) -> ScenarioGrid:
    """Construct the cell grid for an operating domain.

    Cell centers sit at bin midpoints: dimension k with n cells over [lo, hi]
    gets centers lo + (i + 0.5) * (hi - lo) / n.
    """
    centers = []
    for (lo, hi), n in zip(odd.bounds, odd.cells_per_dim):
        width = (hi - lo) / n
        centers.append(lo + (np.arange(n) + 0.5) * width)
    return ScenarioGrid(odd=odd, cell_centers=tuple(centers))


def point_to_index(grid: ScenarioGrid, coords: Sequence[float]) -> tuple[int, ...]:
    """Index of the cell whose center is nearest to ``coords``.

    Bounds are inclusive; a coordinate equidistant between two centers bins to
    the lower index, so histogram binning is deterministic.
    """
    if len(coords) != grid.dims:
        raise OutOfBoundsError(f"coords must have {grid.dims} entries (got {len(coords)})")
    index = []
    for k, ((lo, hi), n, x) in enumerate(zip(grid.odd.bounds, grid.shape, coords)):
        if x < lo or x > hi:
            raise OutOfBoundsError(f"coordinate {x} outside [{lo}, {hi}] along {DIM_NAMES[k]}")
        # ceil(u) - 1 maps interior points to their bin and exact bin edges
        # (the midpoints between adjacent centers) to the lower cell.
        u = (x - lo) / ((hi - lo) / n)
        index.append(int(min(max(math.ceil(u) - 1, 0), n - 1)))
    return tuple(index)


def bin_coords(grid: ScenarioGrid, coords: np.ndarray) -> np.ndarray:
    """Vectorized point_to_index for an (n, dims) array of in-bounds coords.

    Returns flat cell indices; callers must pre-filter out-of-bounds rows.
    """
    per_dim = []
    for k, ((lo, hi), n) in enumerate(zip(grid.odd.bounds, grid.shape)):
        u = (coords[:, k] - lo) / ((hi - lo) / n)
        per_dim.append(np.clip(np.ceil(u).astype(np.int64) - 1, 0, n - 1))
    return np.ravel_multi_index(tuple(per_dim), grid.shape)


def neighbors(grid: ScenarioGrid, index: tuple[int, ...], connectivity: str = AXIS) -> list[tuple[int, ...]]:
    """Adjacent cell indices under face (``axis``) or full connectivity.

    Face connectivity yields at most 2*dims neighbors, full at most
    3**dims - 1; boundary cells get fewer. The input index is never included.
    """
    grid._check_index(index)
    if connectivity not in (AXIS, FULL):
        raise ConfigError(f"connectivity must be '{AXIS}' or '{FULL}' (got {connectivity!r})")
    shape = grid.shape
    out = []
    if connectivity == AXIS:
        for k in range(grid.dims):
            for step in (-1, 1):
                j = index[k] + step
                if 0 <= j < shape[k]:
                    out.append(index[:k] + (j,) + index[k + 1 :])
    else:
        for offset in itertools.product((-1, 0, 1), repeat=grid.dims):
            if all(o == 0 for o in offset):
                continue
            cand = tuple(i + o for i, o in zip(index, offset))
            if all(0 <= c < n for c, n in zip(cand, shape)):
                out.append(cand)
    return out
