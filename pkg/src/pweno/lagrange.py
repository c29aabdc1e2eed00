"""Midpoint evaluation of nested Lagrange interpolants on a 2r-point stencil.

All arithmetic happens in local coordinates xi = (x - x_mid)/h: the stencil
nodes sit at xi_j = j - r + 1/2 for j = 0..2r-1 and the evaluation target is
xi = 0.  Unit spacing keeps the Neville tableau well conditioned and makes
every value independent of the grid origin and of h.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .weights import dyadic_coefficient


@dataclass(frozen=True, eq=False)
class Stencil:
    """The 2r point values feeding one midpoint interpolation."""

    r: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"need r >= 2, got r={self.r}")
        v = np.asarray(self.values, dtype=float)
        if v.shape != (2 * self.r,):
            raise ValueError(f"need exactly {2 * self.r} values, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("non-finite value in stencil")
        object.__setattr__(self, "values", v)

    def local_nodes(self) -> np.ndarray:
        return np.arange(2 * self.r) - (self.r - 0.5)

    def reversed(self) -> "Stencil":
        return Stencil(self.r, self.values[::-1])


def neville_tableau(s: Stencil) -> list[np.ndarray]:
    """All nested interpolants evaluated at the midpoint.

    Row m holds, for every admissible start offset k, the value at xi = 0 of
    the degree-m polynomial through nodes k..k+m.  Row 0 is the data itself;
    row r holds the r sub-stencil values; row 2r-1 the full-stencil value.
    """
    xi = s.local_nodes()
    rows = [np.array(s.values)]
    for m in range(1, 2 * s.r):
        prev = rows[-1]
        rows.append((xi[m:] * prev[:-1] - xi[:-m] * prev[1:]) / m)
    return rows


def substencil_value(s: Stencil, k: int, degree: int) -> float:
    """Value at the midpoint of the degree-`degree` interpolant through nodes k..k+degree."""
    if degree < 1:
        raise ValueError(f"need degree >= 1, got {degree}")
    if k < 0 or k + degree + 1 > 2 * s.r:
        raise ValueError(
            f"sub-stencil (k={k}, degree={degree}) exceeds the {2 * s.r}-point stencil"
        )
    return float(neville_tableau(s)[degree][k])


def full_stencil_value(s: Stencil) -> float:
    """Midpoint value of the degree-(2r-1) interpolant through all 2r nodes."""
    return float(neville_tableau(s)[2 * s.r - 1][0])


def aitken_combine(vL: float, vR: float, l: int, k: int, r: int) -> float:
    """Combine two degree-l midpoint values into the degree-(l+1) one."""
    c = dyadic_coefficient(l, k, r)
    return c.left * vL + c.right * vR
