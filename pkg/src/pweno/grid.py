"""Uniform grids and point-value samples on their nodes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class UniformGrid:
    """J equal subintervals of [a, b]; node i sits at a + i*h for i = 0..J."""

    a: float
    b: float
    J: int

    def __post_init__(self) -> None:
        if self.J < 1:
            raise ValueError(f"invalid domain: need at least one subinterval, got J={self.J}")
        if not self.b > self.a:
            raise ValueError(f"invalid domain: need b > a, got a={self.a}, b={self.b}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.J

    def node(self, i: int) -> float:
        # fused form a + i*h; cumulative summation would drift
        return self.a + i * self.h

    def nodes(self) -> np.ndarray:
        return self.a + np.arange(self.J + 1) * self.h

    def midpoint(self, i: int) -> float:
        """Center of the i-th subinterval (node(i-1), node(i)), 1 <= i <= J."""
        if not 1 <= i <= self.J:
            raise ValueError(f"interval index {i} out of range [1, {self.J}]")
        return self.a + (i - 0.5) * self.h


@dataclass(frozen=True, eq=False)
class PointValues:
    """Samples f_i = f(node(i)) attached to their grid."""

    grid: UniformGrid
    values: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.J + 1,):
            raise ValueError(
                f"need {self.grid.J + 1} samples (one per node), got shape {v.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite sample in point values")
        object.__setattr__(self, "values", v)


def build_uniform_grid(a: float, b: float, J: int) -> UniformGrid:
    return UniformGrid(a, b, J)


def sample_point_values(f: Callable[[float], float], grid: UniformGrid) -> PointValues:
    vals = np.array([f(x) for x in grid.nodes()], dtype=float)
    return PointValues(grid, vals)


def midpoint(grid: UniformGrid, i: int) -> float:
    return grid.midpoint(i)
