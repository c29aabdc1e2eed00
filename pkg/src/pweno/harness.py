"""Grid-refinement experiments around a discontinuity.

Provides the piecewise polynomial test function (kink at x=0 for eta=0, a
unit jump sitting exactly on a node for eta=1), a driver that halves the grid
over a range of levels and records midpoint errors at signed interval offsets
from the singular interval, order estimation between levels, wall-clock
timing, and table rendering (markdown / csv / json).
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .grid import UniformGrid, build_uniform_grid, sample_point_values
from .interp import MethodSpec, interpolate_all_midpoints

# Errors at or below this floor are rounding noise; order estimates built on
# them are meaningless and render as "-".
ORDER_FLOOR = 1e-17

# Branch coefficients of the test function, highest degree first.
_BRANCH_NEG = (1.0, -1.0, 1.0, -4.0, 1.0, 1.0, 1.0, 1.0, 5.0, 3.0, 0.0)
_BRANCH_POS = (1.0, -2.0, 3.0, -8.0, -2.0, 1.0, -2.0, -3.0, -5.0, 0.5, 0.0)


def _horner(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class TestFunctionSpec:
    """Two-branch polynomial test function with its discontinuity at x = 0.

    eta=0: continuous with a derivative jump (kink), domain (-pi/6, 1-pi/6)
    so the kink never falls on a node.  eta=1: unit jump in the function
    value, domain (-0.5, 0.5) so the jump sits exactly on the middle node;
    x = 0 itself takes the second branch.
    """

    eta: int

    __test__ = False  # keep pytest from collecting this despite the Test* name

    def __post_init__(self) -> None:
        if self.eta not in (0, 1):
            raise ValueError(f"eta must be 0 or 1, got {self.eta}")

    @property
    def a(self) -> float:
        return -math.pi / 6 if self.eta == 0 else -0.5

    @property
    def b(self) -> float:
        return 1 - math.pi / 6 if self.eta == 0 else 0.5

    @property
    def label(self) -> str:
        return f"eta={self.eta}"

    def __call__(self, x: float) -> float:
        return test_function(self, x)


@dataclass(frozen=True)
class CustomFunction:
    """Adapter so any callable on (a, b) can drive a refinement run."""

    fn: Callable[[float], float]
    a: float
    b: float
    label: str = "custom"

    def __call__(self, x: float) -> float:
        return self.fn(x)


def test_function(spec: TestFunctionSpec, x: float) -> float:
    slack = 1e-12 * (spec.b - spec.a)
    if x < spec.a - slack or x > spec.b + slack:
        raise ValueError(f"x={x} outside the domain [{spec.a}, {spec.b})")
    if x < 0.0:
        return _horner(_BRANCH_NEG, x)
    return spec.eta - _horner(_BRANCH_POS, x)


def locate_singular_interval(grid: UniformGrid) -> int:
    """Smallest i with node(i-1) < 0 <= node(i); the interval containing x=0.

    When 0 is exactly a node, the returned interval ends on it; callers learn
    this through the jump-on-node flag of the refinement report.
    """
    if not grid.a < 0.0 < grid.b:
        raise ValueError(f"zero not inside the domain ({grid.a}, {grid.b})")
    i = int(np.searchsorted(grid.nodes(), 0.0, side="left"))
    assert 1 <= i <= grid.J and grid.node(i - 1) < 0.0 <= grid.node(i)
    return i


def estimated_order(e_coarse: float, e_fine: float) -> float | None:
    """log2 error ratio under grid halving; None once either error is noise."""
    if e_coarse <= ORDER_FLOOR or e_fine <= ORDER_FLOOR:
        return None
    return math.log2(e_coarse / e_fine)


@dataclass(frozen=True)
class RefinementLevel:
    level: int
    J: int
    singular_interval: int
    jump_on_node: bool
    errors: dict[int, float]
    runtime: float | None = None


@dataclass(frozen=True)
class RefinementReport:
    method: MethodSpec
    label: str
    offsets: tuple[int, ...]
    levels: tuple[RefinementLevel, ...]

    def order(self, level: int, offset: int) -> float | None:
        """Order between `level` and the previous one; None at the first level."""
        idx = [lv.level for lv in self.levels].index(level)
        if idx == 0:
            return None
        return estimated_order(self.levels[idx - 1].errors[offset],
                               self.levels[idx].errors[offset])

    def last_defined_order(self, offset: int) -> float | None:
        """The finest-level order at this offset whose error pair is above noise."""
        for lv in reversed(self.levels[1:]):
            o = self.order(lv.level, offset)
            if o is not None:
                return o
        return None

    @property
    def jump_on_node(self) -> bool:
        return any(lv.jump_on_node for lv in self.levels)


def run_refinement(fn, spec: MethodSpec, i_min: int, i_max: int,
                   offsets, threads: int = 1, time_reps: int = 0) -> RefinementReport:
    """Halve the grid from 2^i_min to 2^i_max subintervals and collect errors.

    `fn` is any callable exposing endpoints a and b with 0 inside (a, b); the
    errors are |interpolant - fn| at the midpoints `offset` intervals away
    from the singular interval.  With time_reps > 0 each level also records
    the mean wall-clock seconds of a full interpolation sweep.
    """
    r = spec.params.r
    smallest = math.ceil(math.log2(4 * r))
    if i_min < smallest:
        raise ValueError(f"need i_min >= {smallest} so the coarsest grid has J >= 4r")
    if i_max < i_min:
        raise ValueError(f"need i_max >= i_min, got {i_min}..{i_max}")
    offsets = tuple(int(d) for d in offsets)
    levels = []
    for lvl in range(i_min, i_max + 1):
        J = 2 ** lvl
        grid = build_uniform_grid(fn.a, fn.b, J)
        pv = sample_point_values(fn, grid)
        s = locate_singular_interval(grid)
        results = interpolate_all_midpoints(pv, spec, threads=threads)
        by_interval = {i: (x, v) for (i, x, v) in results}
        errors = {}
        for d in offsets:
            if s + d not in by_interval:
                raise ValueError(
                    f"offset {d} leaves the admissible interval range at level {lvl}"
                )
            x, v = by_interval[s + d]
            errors[d] = abs(v - fn(x))
        runtime = time_method(pv, spec, reps=time_reps) if time_reps > 0 else None
        levels.append(RefinementLevel(level=lvl, J=J, singular_interval=s,
                                      jump_on_node=grid.node(s) == 0.0,
                                      errors=errors, runtime=runtime))
    return RefinementReport(method=spec, label=getattr(fn, "label", "custom"),
                            offsets=offsets, levels=tuple(levels))


def time_method(pv, spec: MethodSpec, reps: int = 500) -> float:
    """Mean wall-clock seconds of one full interpolation sweep (4 significant digits)."""
    if reps < 1:
        raise ValueError(f"need reps >= 1, got {reps}")
    for _ in range(3):
        interpolate_all_midpoints(pv, spec)
    start = time.perf_counter()
    for _ in range(reps):
        interpolate_all_midpoints(pv, spec)
    mean = (time.perf_counter() - start) / reps
    return float(f"{mean:.4g}")


def _fmt_error(e: float) -> str:
    return f"{e:.3e}"


def _fmt_order(o: float | None) -> str:
    return "-" if o is None else f"{o:.3f}"


def _meta_line(rep: RefinementReport) -> str:
    m = rep.method
    line = (f"method={m.method} r={m.params.r} t={m.params.t} "
            f"epsilon={m.params.epsilon!r} pairing={m.pairing} function={rep.label}")
    if rep.jump_on_node:
        line += " jump-on-node"
    return line


def render_report(rep: RefinementReport, format: str = "markdown") -> str:
    """Render a refinement report; errors as 0.000e+00-style, orders to 3 decimals."""
    if format == "csv":
        lines = ["level,offset,error,order"]
        for lv in rep.levels:
            for d in rep.offsets:
                lines.append(f"{lv.level},{d},{_fmt_error(lv.errors[d])},"
                             f"{_fmt_order(rep.order(lv.level, d))}")
        return "\n".join(lines) + "\n"

    if format == "json":
        records = []
        for lv in rep.levels:
            for d in rep.offsets:
                o = rep.order(lv.level, d)
                records.append({
                    "level": lv.level,
                    "offset": d,
                    "error": float(_fmt_error(lv.errors[d])),
                    "order": None if o is None else round(o, 3),
                })
        return json.dumps(records, indent=2) + "\n"

    if format == "markdown":
        head = ["i", "J", "s"]
        for d in rep.offsets:
            head += [f"e(d={d})", "order"]
        timed = any(lv.runtime is not None for lv in rep.levels)
        if timed:
            head.append("time(s)")
        lines = [_meta_line(rep), "",
                 "| " + " | ".join(head) + " |",
                 "|" + "|".join("---" for _ in head) + "|"]
        for lv in rep.levels:
            row = [str(lv.level), str(lv.J), str(lv.singular_interval)]
            for d in rep.offsets:
                row += [_fmt_error(lv.errors[d]), _fmt_order(rep.order(lv.level, d))]
            if timed:
                row.append("-" if lv.runtime is None else f"{lv.runtime:.3e}")
            lines.append("| " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"

    raise ValueError(f"unknown format {format!r}")
