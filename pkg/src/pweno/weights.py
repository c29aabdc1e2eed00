"""Weight machinery for 2r-point WENO midpoint interpolation.

Covers the classical optimal weights, the dyadic coefficients that combine two
degree-l interpolants into a degree-(l+1) one, the sparse base vectors, the
pairwise nonlinear weights, the recursive weight tree that produces the
progressive optimal weights, and the final nonlinear weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .smoothness import IndicatorSet, legacy_summed_indicator, paired_indicator

PAIRINGS = ("paired", "legacy-summed")


@dataclass(frozen=True)
class WenoParams:
    """Stencil half-width r, indicator exponent t (defaults to r), and epsilon."""

    r: int
    t: int | None = None
    epsilon: float = 1e-16

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"need r >= 2, got r={self.r}")
        if self.t is None:
            object.__setattr__(self, "t", self.r)
        if self.t < 1:
            raise ValueError(f"need exponent t >= 1, got t={self.t}")
        if not self.epsilon > 0:
            raise ValueError(f"need epsilon > 0, got {self.epsilon}")


@dataclass(frozen=True, eq=False)
class WeightVector:
    """r convex weights: nonnegative, summing to 1."""

    w: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.w, dtype=float)
        if v.ndim != 1 or v.size < 2:
            raise ValueError(f"need a vector of at least 2 weights, got shape {v.shape}")
        if np.any(v < 0.0):
            raise ValueError(f"weights must be nonnegative, got {v}")
        if abs(v.sum() - 1.0) > 1e-14:
            raise ValueError(f"weights must sum to 1, got sum {v.sum()!r}")
        object.__setattr__(self, "w", v)

    @property
    def r(self) -> int:
        return self.w.size


@dataclass(frozen=True)
class DyadicCoefficient:
    """Pair (left, right) combining interpolants of degree l at offsets k, k+1."""

    l: int
    k: int
    left: float
    right: float
    left_exact: Fraction = field(repr=False, default=Fraction(0))
    right_exact: Fraction = field(repr=False, default=Fraction(0))

    def __post_init__(self) -> None:
        if self.left_exact + self.right_exact != 1:
            raise ValueError("dyadic coefficient pair must sum to 1 exactly")
        if not 0 < self.left_exact < 1:
            raise ValueError("dyadic coefficients must lie strictly inside (0, 1)")


@dataclass(frozen=True)
class WeightTreeTrace:
    """Every pairwise weight chosen while collapsing the tree, plus the result."""

    r: int
    pairing: str
    pairs: dict[tuple[int, int], tuple[float, float]]
    result: "WeightVector"


def classical_optimal_weights(r: int) -> WeightVector:
    """Convex weights reproducing the full-stencil interpolant at the midpoint."""
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    den = 2 ** (2 * r - 1)
    return WeightVector(np.array([comb(2 * r, 2 * k + 1) / den for k in range(r)]))


def dyadic_coefficient(l: int, k: int, r: int) -> DyadicCoefficient:
    """Exact combination coefficients (numerators odd, denominator 2(l+1))."""
    if not r <= l <= 2 * r - 2:
        raise ValueError(f"level {l} out of range [{r}, {2 * r - 2}]")
    if not 0 <= k <= (2 * r - 2) - l:
        raise ValueError(f"node {k} out of range [0, {(2 * r - 2) - l}] at level {l}")
    den = 2 * (l + 1)
    left = Fraction(2 * (l - r + k + 1) + 1, den)
    right = Fraction(2 * (r - k) - 1, den)
    return DyadicCoefficient(l=l, k=k, left=float(left), right=float(right),
                             left_exact=left, right_exact=right)


def base_vectors(r: int) -> list[WeightVector]:
    """The r-1 sparse leaf vectors of the weight tree (two adjacent slots each)."""
    if r < 3:
        raise ValueError(f"base vectors need r >= 3, got r={r}")
    out = []
    for k in range(r - 1):
        c = dyadic_coefficient(r, k, r)
        v = np.zeros(r)
        v[k] = c.left
        v[k + 1] = c.right
        out.append(WeightVector(v))
    return out


def pair_nonlinear_weights(cLeft: float, cRight: float, iLeft: float, iRight: float,
                           params: WenoParams) -> tuple[float, float]:
    """Indicator-biased version of a coefficient pair; sums to 1.

    Equal indicators short-circuit to the exact coefficients, so a tree fed
    with constant indicators collapses to the linear recombination identity.
    """
    if iLeft == iRight:
        return (cLeft, cRight)
    aL = cLeft / (params.epsilon + iLeft) ** params.t
    aR = cRight / (params.epsilon + iRight) ** params.t
    total = aL + aR
    return (aL / total, aR / total)


def progressive_optimal_weights(ind: IndicatorSet, r: int, params: WenoParams,
                                pairing: str = "paired") -> tuple[WeightVector, WeightTreeTrace]:
    """Collapse the dyadic weight tree bottom-up into the progressive optimal vector.

    Levels r+1 .. 2r-2 carry pairwise nonlinear weights; the leaves at level r
    are the sparse base vectors.  With all indicators equal every pair reduces
    to its constant coefficients and the result is the classical optimal
    vector; when some indicators flag a discontinuity, whole branches are
    suppressed and the result converges to the optimal weights of the widest
    smooth interpolant.
    """
    if r < 3:
        raise ValueError(f"the weight tree needs r >= 3, got r={r} (use the classical path)")
    if ind.r != r:
        raise ValueError(f"indicator set is for r={ind.r}, expected r={r}")
    if pairing not in PAIRINGS:
        raise ValueError(f"unknown pairing {pairing!r}")
    branch = paired_indicator if pairing == "paired" else legacy_summed_indicator

    vectors = [np.array(b.w) for b in base_vectors(r)]
    pairs: dict[tuple[int, int], tuple[float, float]] = {}
    for l in range(r + 1, 2 * r - 1):
        merged = []
        for k in range(2 * r - 1 - l):
            c = dyadic_coefficient(l, k, r)
            wL, wR = pair_nonlinear_weights(c.left, c.right,
                                            branch(ind, l, k, "left"),
                                            branch(ind, l, k, "right"), params)
            pairs[(l, k)] = (wL, wR)
            merged.append(wL * vectors[k] + wR * vectors[k + 1])
        vectors = merged
    assert len(vectors) == 1
    result = WeightVector(vectors[0])
    return result, WeightTreeTrace(r=r, pairing=pairing, pairs=pairs, result=result)


def final_nonlinear_weights(optimal: WeightVector, ind: IndicatorSet,
                            params: WenoParams) -> WeightVector:
    """Indicator-biased normalization of an optimal vector; zero slots stay zero."""
    alpha = optimal.w / (params.epsilon + ind.values) ** params.t
    return WeightVector(alpha / alpha.sum())
