"""Smoothness indicators for the degree-r sub-stencil interpolants.

Two families are provided.  The classical family sums integrals of squared
derivatives of orders 1..r-1 over the central interval; the kink/jump family
sums orders 2..r, which keeps the indicator O(h^4)-small on smooth data while
still blowing up on stencils that cross a corner or a jump.  Everything is
evaluated in local coordinates (unit spacing, central interval [-1/2, 1/2]),
where the h-power prefactors of the defining integrals cancel exactly and the
result is a pure polynomial in undivided differences of the data.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from numpy.polynomial import polynomial as P

if TYPE_CHECKING:  # pragma: no cover - annotation only
    from .lagrange import Stencil

INDICATOR_KINDS = ("classical", "new", "legacy-summed")


@dataclass(frozen=True, eq=False)
class UndividedDifferences:
    """Second, third and fourth undivided differences of a value sequence."""

    d2: np.ndarray
    d3: np.ndarray
    d4: np.ndarray


@dataclass(frozen=True, eq=False)
class IndicatorSet:
    """The r indicators belonging to one 2r-point stencil."""

    r: int
    kind: str
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.kind not in INDICATOR_KINDS:
            raise ValueError(f"unknown indicator kind {self.kind!r}")
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.r,):
            raise ValueError(f"need {self.r} indicator values, got shape {v.shape}")
        if np.any(v < -1e-15):
            raise ValueError("indicators must be nonnegative (integrals of squares)")
        object.__setattr__(self, "values", v)


def undivided_differences(values) -> UndividedDifferences:
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        raise ValueError(f"need at least 3 values, got {v.size}")
    d2 = v[:-2] - 2.0 * v[1:-1] + v[2:]
    d3 = d2[1:] - d2[:-1]
    d4 = d3[1:] - d3[:-1]
    return UndividedDifferences(d2=d2, d3=d3, d4=d4)


@lru_cache(maxsize=None)
def _gauss_legendre_half(npts: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre rule mapped from [-1, 1] to [-1/2, 1/2]."""
    x, w = np.polynomial.legendre.leggauss(npts)
    return 0.5 * x, 0.5 * w


def _newton_coefficients(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Divided-difference coefficients of the Newton form anchored at x[0]."""
    c = np.array(y, dtype=float)
    n = len(x)
    for m in range(1, n):
        c[m:] = (c[m:] - c[m - 1 : n - 1]) / (x[m:] - x[: n - m])
    return c


def _newton_to_monomial(coef: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Expand a Newton-form polynomial into ascending monomial coefficients."""
    poly = np.array([coef[-1]])
    for j in range(len(coef) - 2, -1, -1):
        poly = P.polymul(poly, [-x[j], 1.0])
        poly[0] += coef[j]
    return poly


def indicator_quadrature(s: "Stencil", k: int, l_min: int) -> float:
    """Sum of integrated squared derivatives of p_k^r over the central interval.

    l_min = 1 selects the classical family (derivative orders 1..r-1);
    l_min = 2 selects the kink/jump family (orders 2..r).  The sub-stencil
    polynomial is built in Newton form over the local nodes, differentiated in
    coefficient space, and each term integrated with an r-point Gauss-Legendre
    rule, which is exact for every integrand degree that occurs.
    """
    r = s.r
    if not 0 <= k <= r - 1:
        raise ValueError(f"sub-stencil index {k} out of range [0, {r - 1}]")
    if l_min not in (1, 2):
        raise ValueError(f"l_min must be 1 (classical) or 2 (kink/jump), got {l_min}")
    l_max = r - 1 if l_min == 1 else r
    xi = s.local_nodes()[k : k + r + 1]
    window = s.values[k : k + r + 1]
    mono = _newton_to_monomial(_newton_coefficients(xi, window), xi)
    nodes, wts = _gauss_legendre_half(r)
    total = 0.0
    deriv = mono
    for l in range(1, l_max + 1):
        deriv = P.polyder(deriv)
        if l >= l_min:
            vals = P.polyval(nodes, deriv)
            total += float(np.dot(wts, vals * vals))
    return total


def indicator_set(s: "Stencil", kind: str = "new") -> IndicatorSet:
    """All r indicators of one stencil, as fed to the weight machinery."""
    l_min = 1 if kind == "classical" else 2
    vals = np.array([indicator_quadrature(s, k, l_min) for k in range(s.r)])
    return IndicatorSet(r=s.r, kind=kind, values=vals)


def indicator_closed_form(diffs: UndividedDifferences, r: int, k: int) -> float:
    """Closed-form kink/jump indicator (available for r = 3 and r = 4).

    The index k addresses the sub-stencil starting k nodes into the 2r-point
    window, so the difference sequences must come from the full window.
    """
    if r == 3:
        if not 0 <= k <= 2:
            raise ValueError(f"sub-stencil index {k} out of range [0, 2]")
        if len(diffs.d3) < 3:
            raise ValueError("need differences of a full 6-point window")
        a, b = diffs.d3[k], diffs.d2[k]
        if k == 0:
            return (10.0 / 3.0) * a * a + 3.0 * a * b + b * b
        if k == 1:
            return (4.0 / 3.0) * a * a + a * b + b * b
        return (4.0 / 3.0) * a * a - a * b + b * b
    if r == 4:
        if not 0 <= k <= 3:
            raise ValueError(f"sub-stencil index {k} out of range [0, 3]")
        if len(diffs.d4) < 4:
            raise ValueError("need differences of a full 8-point window")
        a, b, c = diffs.d4[k], diffs.d3[k], diffs.d2[k]
        if k == 0:
            return (
                (2107.0 / 240.0) * a * a
                + (22.0 / 3.0) * b * b
                + c * c
                + (27.0 / 2.0) * a * b
                + (11.0 / 3.0) * a * c
                + 5.0 * b * c
            )
        if k == 1:
            return (
                (547.0 / 240.0) * a * a
                + (10.0 / 3.0) * b * b
                + c * c
                + (19.0 / 6.0) * a * b
                + (2.0 / 3.0) * a * c
                + 3.0 * b * c
            )
        if k == 2:
            return (
                (89.0 / 80.0) * a * a
                + (4.0 / 3.0) * b * b
                + c * c
                - (1.0 / 6.0) * a * b
                - (1.0 / 3.0) * a * c
                + b * c
            )
        return (
            (547.0 / 240.0) * a * a
            + (4.0 / 3.0) * b * b
            + c * c
            - (5.0 / 2.0) * a * b
            + (2.0 / 3.0) * a * c
            - b * c
        )
    raise ValueError(f"closed forms exist only for r in {{3, 4}}, got r={r}")


def _check_tree_indices(r: int, l: int, k: int, side: str) -> None:
    if not r + 1 <= l <= 2 * r - 2:
        raise ValueError(f"tree level {l} out of range [{r + 1}, {2 * r - 2}]")
    if not 0 <= k <= (2 * r - 2) - l:
        raise ValueError(f"tree node {k} out of range [0, {(2 * r - 2) - l}] at level {l}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def paired_indicator(ind: IndicatorSet, l: int, k: int, side: str) -> float:
    """Indicator attached to one branch of tree node (l, k).

    The left branch reuses the indicator of the leftmost degree-r sub-stencil
    contained in it, the right branch the rightmost one; together the pair
    covers the whole node, so a discontinuity anywhere inside is seen by
    exactly the branches containing it.
    """
    r = ind.r
    if ind.kind != "new":
        raise ValueError("paired indicators are defined on the kink/jump family")
    _check_tree_indices(r, l, k, side)
    if side == "left":
        return float(ind.values[k])
    return float(ind.values[l - (r - 1) + k])


def legacy_summed_indicator(ind: IndicatorSet, l: int, k: int, side: str) -> float:
    """Superseded branch indicator: sum over every sub-stencil the branch covers.

    Kept for comparison runs; the summation makes every branch at the top
    levels see the discontinuity, which destroys the progressive-order
    behaviour for r >= 4.
    """
    r = ind.r
    if r not in (3, 4):
        raise ValueError(f"summed indicators only provided for r in {{3, 4}}, got r={r}")
    if ind.kind != "new":
        raise ValueError("summed indicators are built from the kink/jump family")
    _check_tree_indices(r, l, k, side)
    k1 = k if side == "left" else k + 1
    return float(ind.values[k1 : k1 + (l - r) + 1].sum())
