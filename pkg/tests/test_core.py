import dataclasses
import math

import pytest
from hypothesis import given, strategies as st

from ellipse_perimeter import EllipseAxes, Formula, MethodId, make_axes, shape_params

positive_axis = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)
scale = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


class TestMakeAxes:
    def test_passthrough(self):
        ax = make_axes(3, 2)
        assert (ax.a, ax.b) == (3.0, 2.0)

    def test_swap_normalization(self):
        ax = make_axes(2, 3)
        assert (ax.a, ax.b) == (3.0, 2.0)

    def test_degenerate_flat_allowed(self):
        ax = make_axes(1, 0)
        assert (ax.a, ax.b) == (1.0, 0.0)
        assert make_axes(0, 1) == EllipseAxes(1.0, 0.0)

    @pytest.mark.parametrize("a,b", [(float("nan"), 1), (1, float("inf")), (float("-inf"), 2)])
    def test_rejects_non_finite(self, a, b):
        with pytest.raises(ValueError):
            make_axes(a, b)

    @pytest.mark.parametrize("a,b", [(0, 0), (-1, -2), (0, -3)])
    def test_rejects_nonpositive_major(self, a, b):
        with pytest.raises(ValueError):
            make_axes(a, b)

    def test_rejects_negative_minor(self):
        with pytest.raises(ValueError):
            make_axes(5, -1)

    def test_immutable(self):
        ax = make_axes(2, 1)
        with pytest.raises(dataclasses.FrozenInstanceError):
            ax.a = 10.0


class TestShapeParams:
    def test_circle(self):
        sp = shape_params(make_axes(1, 1))
        assert (sp.h, sp.e, sp.m) == (0.0, 0.0, 0.0)

    def test_flat(self):
        sp = shape_params(make_axes(1, 0))
        assert (sp.h, sp.e, sp.m) == (1.0, 1.0, 1.0)

    def test_three_to_one(self):
        # ((3-1)/(3+1))^2 = 1/4; e = sqrt(8)/3; m = 8/9
        sp = shape_params(make_axes(3, 1))
        assert sp.h == 0.25
        assert math.isclose(sp.e, math.sqrt(8) / 3, rel_tol=1e-15)
        assert math.isclose(sp.m, 8 / 9, rel_tol=1e-15)

    @given(a=positive_axis, ratio=st.floats(min_value=0.0, max_value=1 - 1e-6), lam=scale)
    def test_scale_invariance(self, a, ratio, lam):
        sp1 = shape_params(make_axes(a, a * ratio))
        sp2 = shape_params(make_axes(lam * a, lam * (a * ratio)))
        assert math.isclose(sp1.m, sp2.m, rel_tol=1e-9, abs_tol=1e-12)
        assert math.isclose(sp1.e, sp2.e, rel_tol=1e-9, abs_tol=1e-12)
        assert math.isclose(sp1.h, sp2.h, rel_tol=1e-9, abs_tol=1e-12)

    @given(a=positive_axis, lam=scale)
    def test_scaled_circle_stays_exact(self, a, lam):
        sp = shape_params(make_axes(lam * a, lam * a))
        assert (sp.h, sp.e, sp.m) == (0.0, 0.0, 0.0)

    @given(b=positive_axis, a1=positive_axis, a2=positive_axis)
    def test_h_and_e_monotone_in_a(self, b, a1, a2):
        lo, hi = sorted([max(a1, b), max(a2, b)])
        sp_lo = shape_params(make_axes(lo, b))
        sp_hi = shape_params(make_axes(hi, b))
        assert sp_hi.h >= sp_lo.h
        assert sp_hi.e >= sp_lo.e

    def test_strictly_increasing_when_separated(self):
        sps = [shape_params(make_axes(a, 1.0)) for a in (1.5, 2.0, 4.0, 50.0)]
        assert all(s2.h > s1.h and s2.e > s1.e for s1, s2 in zip(sps, sps[1:]))


class TestMethodId:
    def test_n_terms_validation(self):
        with pytest.raises(ValueError):
            MethodId(Formula.EULER_IVORY, n_terms=0)

    def test_parse_round_trip(self):
        for m in (
            MethodId(Formula.CANTRELL),
            MethodId(Formula.EULER_IVORY, n_terms=148),
            MethodId(Formula.R2_TWO_EXP, sigmoid=False),
            MethodId(Formula.R2_ONE_EXP),
        ):
            assert MethodId.parse(m.label) == m

    def test_parse_rejects_unknown(self):
        with pytest.raises(ValueError, match="unknown method"):
            MethodId.parse("moscato")
        with pytest.raises(ValueError, match="takes no"):
            MethodId.parse("fagnano:3")
