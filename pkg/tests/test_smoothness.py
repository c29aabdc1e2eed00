import numpy as np
import pytest

from pweno import (
    IndicatorSet,
    Stencil,
    indicator_closed_form,
    indicator_quadrature,
    indicator_set,
    undivided_differences,
)
from pweno.smoothness import legacy_summed_indicator, paired_indicator


def test_undivided_differences_of_zeros():
    d = undivided_differences([0.0, 0.0, 0.0, 0.0])
    np.testing.assert_array_equal(d.d2, [0.0, 0.0])
    np.testing.assert_array_equal(d.d3, [0.0])
    assert d.d4.size == 0


def test_undivided_differences_of_squares():
    d = undivided_differences([0.0, 1.0, 4.0, 9.0])
    np.testing.assert_array_equal(d.d2, [2.0, 2.0])
    np.testing.assert_array_equal(d.d3, [0.0])


def test_undivided_differences_direct_formula():
    d = undivided_differences([1.0, 0.0, 2.0, 5.0, 3.0])
    np.testing.assert_array_equal(d.d2, [3.0, 1.0, -5.0])
    np.testing.assert_array_equal(d.d3, [-2.0, -6.0])
    np.testing.assert_array_equal(d.d4, [-4.0])


def test_undivided_differences_needs_three_values():
    with pytest.raises(ValueError, match="at least 3"):
        undivided_differences([1.0, 2.0])


def test_constant_data_gives_zero_for_both_kinds():
    s = Stencil(3, np.full(6, 4.2))
    for k in range(3):
        assert indicator_quadrature(s, k, 1) == pytest.approx(0.0, abs=1e-14)
        assert indicator_quadrature(s, k, 2) == pytest.approx(0.0, abs=1e-14)


def test_linear_data_vanishes_only_for_the_kink_jump_kind():
    # slope 2 on unit spacing: the classical kind keeps the (slope)^2 first-
    # derivative term, the kink/jump kind starts at the second derivative
    s = Stencil(3, 2.0 * Stencil(3, np.zeros(6)).local_nodes())
    for k in range(3):
        assert indicator_quadrature(s, k, 2) == pytest.approx(0.0, abs=1e-13)
        assert indicator_quadrature(s, k, 1) == pytest.approx(4.0, rel=1e-12)


def test_unit_second_difference_example():
    # sub-stencil 1 sees a quadratic with unit second difference and no third
    # difference, so its kink/jump indicator is exactly 1
    v = np.array([9.0, 0.0, 0.5, 2.0, 4.5, -3.0])
    d = undivided_differences(v)
    assert d.d2[1] == 1.0 and d.d3[1] == 0.0
    assert indicator_closed_form(d, 3, 1) == pytest.approx(1.0, abs=1e-14)
    assert indicator_quadrature(Stencil(3, v), 1, 2) == pytest.approx(1.0, rel=1e-13)


def test_closed_form_matches_quadrature():
    rng = np.random.default_rng(5)
    for r in (3, 4):
        for _ in range(200):
            v = rng.normal(size=2 * r)
            s = Stencil(r, v)
            d = undivided_differences(v)
            for k in range(r):
                want = indicator_quadrature(s, k, 2)
                got = indicator_closed_form(d, r, k)
                assert got == pytest.approx(want, rel=1e-11, abs=1e-13)


def test_closed_form_range_checks():
    d = undivided_differences(np.arange(8.0) ** 3)
    with pytest.raises(ValueError, match="only for r"):
        indicator_closed_form(d, 5, 0)
    with pytest.raises(ValueError, match="out of range"):
        indicator_closed_form(d, 4, 4)
    short = undivided_differences(np.arange(6.0))
    with pytest.raises(ValueError, match="8-point window"):
        indicator_closed_form(short, 4, 0)


def test_quadrature_argument_checks():
    s = Stencil(3, np.arange(6.0))
    with pytest.raises(ValueError, match="out of range"):
        indicator_quadrature(s, 3, 2)
    with pytest.raises(ValueError, match="l_min"):
        indicator_quadrature(s, 0, 3)


def test_indicator_set_shapes_and_kinds():
    s = Stencil(4, np.arange(8.0) ** 2)
    ind = indicator_set(s)
    assert ind.kind == "new" and ind.r == 4 and ind.values.shape == (4,)
    ind_c = indicator_set(s, "classical")
    assert ind_c.kind == "classical"
    with pytest.raises(ValueError, match="unknown indicator kind"):
        IndicatorSet(3, "bogus", np.ones(3))
    with pytest.raises(ValueError, match="3 indicator values"):
        IndicatorSet(3, "new", np.ones(4))
    with pytest.raises(ValueError, match="nonnegative"):
        IndicatorSet(3, "new", np.array([1.0, -1.0, 1.0]))


def test_reversal_symmetry():
    rng = np.random.default_rng(17)
    for r in (2, 3, 4, 5):
        for _ in range(30):
            s = Stencil(r, rng.normal(size=2 * r))
            for kind in ("classical", "new"):
                fwd = indicator_set(s, kind).values
                rev = indicator_set(s.reversed(), kind).values
                np.testing.assert_allclose(fwd, rev[::-1], rtol=1e-10, atol=1e-12)


def test_translation_invariance_and_quadratic_scaling():
    rng = np.random.default_rng(23)
    for _ in range(30):
        v = rng.normal(size=8)
        base = indicator_set(Stencil(4, v)).values
        shifted = indicator_set(Stencil(4, v + 11.0)).values
        scaled = indicator_set(Stencil(4, 3.0 * v)).values
        np.testing.assert_allclose(shifted, base, rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(scaled, 9.0 * base, rtol=1e-12, atol=1e-14)


def test_smooth_sample_scaling_in_h():
    # on smooth samples the kink/jump kind scales like h^4, the classical
    # kind like h^2 (leading derivative term squared, two extra h powers per
    # derivative order in local coordinates)
    x0 = 0.3
    for h, ratio_new, ratio_classical in ((1e-2, 16.0, 4.0),):
        def sample(step):
            xs = x0 + step * (np.arange(6) - 2.5)
            return Stencil(3, np.sin(xs))

        coarse_new = indicator_set(sample(h)).values
        fine_new = indicator_set(sample(h / 2)).values
        np.testing.assert_allclose(coarse_new / fine_new, ratio_new, rtol=0.15)
        coarse_c = indicator_set(sample(h), "classical").values
        fine_c = indicator_set(sample(h / 2), "classical").values
        np.testing.assert_allclose(coarse_c / fine_c, ratio_classical, rtol=0.05)


def test_jump_blows_up_only_the_crossing_substencil():
    xi = Stencil(3, np.zeros(6)).local_nodes()
    v = 1e-3 * xi**3
    v[5] += 1.0  # the step lands only in sub-stencil k=2 (slots 2..5)
    ind = indicator_set(Stencil(3, v)).values
    assert ind[2] > 1e4 * max(ind[0], ind[1])


def test_paired_indicator_index_rule():
    ind = IndicatorSet(4, "new", np.array([1.0, 2.0, 3.0, 4.0]))
    # node (l=5, k=0): left branch carries sub-stencil 0, right sub-stencil 2
    assert paired_indicator(ind, 5, 0, "left") == 1.0
    assert paired_indicator(ind, 5, 0, "right") == 3.0
    assert paired_indicator(ind, 6, 0, "right") == 4.0
    with pytest.raises(ValueError, match="out of range"):
        paired_indicator(ind, 7, 0, "left")
    with pytest.raises(ValueError, match="side"):
        paired_indicator(ind, 5, 0, "up")
    classical = IndicatorSet(4, "classical", np.ones(4))
    with pytest.raises(ValueError, match="kink/jump family"):
        paired_indicator(classical, 5, 0, "left")


def test_legacy_summed_indicator_rule():
    ind = IndicatorSet(3, "new", np.array([1.0, 2.0, 4.0]))
    assert legacy_summed_indicator(ind, 4, 0, "left") == 3.0   # I0 + I1
    assert legacy_summed_indicator(ind, 4, 0, "right") == 6.0  # I1 + I2
    big = IndicatorSet(5, "new", np.ones(5))
    with pytest.raises(ValueError, match="only provided for r"):
        legacy_summed_indicator(big, 6, 0, "left")
