import numpy as np
import pytest

from pweno import PointValues, UniformGrid, build_uniform_grid, sample_point_values
from pweno.grid import midpoint


def test_basic_grid_quantities():
    g = UniformGrid(0.0, 1.0, 4)
    assert g.h == 0.25
    np.testing.assert_array_equal(g.nodes(), [0.0, 0.25, 0.5, 0.75, 1.0])
    assert g.node(0) == 0.0
    assert g.node(4) == 1.0


def test_node_formula_is_fused_not_cumulative():
    g = UniformGrid(-0.5, 0.5, 32)
    # a + 16*h must hit zero exactly in floating point
    assert g.node(16) == 0.0
    assert g.nodes()[16] == 0.0


def test_nodes_match_node_everywhere():
    g = UniformGrid(-np.pi / 6, 1 - np.pi / 6, 32)
    np.testing.assert_array_equal(g.nodes(), [g.node(i) for i in range(33)])


def test_grid_validation():
    with pytest.raises(ValueError, match="at least one subinterval"):
        UniformGrid(0.0, 1.0, 0)
    with pytest.raises(ValueError, match="b > a"):
        UniformGrid(1.0, 0.0, 4)
    with pytest.raises(ValueError, match="b > a"):
        UniformGrid(1.0, 1.0, 4)


def test_midpoints():
    g = UniformGrid(0.0, 1.0, 4)
    assert g.midpoint(1) == 0.125
    assert g.midpoint(4) == 0.875
    assert midpoint(g, 2) == 0.375
    g2 = UniformGrid(-0.5, 0.5, 8)
    assert g2.midpoint(4) == -0.0625


def test_midpoint_range_checks():
    g = UniformGrid(0.0, 1.0, 4)
    with pytest.raises(ValueError, match="out of range"):
        g.midpoint(0)
    with pytest.raises(ValueError, match="out of range"):
        g.midpoint(5)


def test_sample_constant_function():
    g = build_uniform_grid(2.0, 3.0, 7)
    pv = sample_point_values(lambda x: 42.0, g)
    np.testing.assert_array_equal(pv.values, np.full(8, 42.0))


def test_sample_square_function():
    g = build_uniform_grid(0.0, 1.0, 4)
    pv = sample_point_values(lambda x: x * x, g)
    np.testing.assert_array_equal(pv.values, [0.0, 0.0625, 0.25, 0.5625, 1.0])


def test_point_values_validation():
    g = UniformGrid(0.0, 1.0, 4)
    with pytest.raises(ValueError, match="one per node"):
        PointValues(g, np.zeros(4))
    bad = np.zeros(5)
    bad[2] = np.nan
    with pytest.raises(ValueError, match="non-finite"):
        PointValues(g, bad)


def test_point_values_keeps_grid_reference():
    g = UniformGrid(0.0, 1.0, 4)
    pv = PointValues(g, np.arange(5.0))
    assert pv.grid is g
    assert pv.values.dtype == float
