import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ellipse_perimeter import (
    FLAT_LIMIT_DEFICIT,
    ONE_EXP_DEFAULTS,
    TWO_EXP_DEFAULTS,
    CorrectionParams,
    Formula,
    MethodId,
    cantrell,
    euler,
    evaluate,
    exact_perimeter,
    fagnano,
    koshy1,
    koshy2,
    make_axes,
    r2_one_exp,
    r2_two_exp,
    ramanujan1,
    ramanujan2,
    sigmoid_factor,
)

CIRCLE = make_axes(1, 1)
FLAT = make_axes(1, 0)

ALL_METHODS = [
    MethodId(Formula.FAGNANO),
    MethodId(Formula.EULER),
    MethodId(Formula.EULER_IVORY, n_terms=64),
    MethodId(Formula.RAMANUJAN_I),
    MethodId(Formula.RAMANUJAN_II),
    MethodId(Formula.CANTRELL),
    MethodId(Formula.KOSHY_1),
    MethodId(Formula.KOSHY_2),
    MethodId(Formula.R2_ONE_EXP),
    MethodId(Formula.R2_TWO_EXP),
]


class TestClassicFormulas:
    def test_fagnano(self):
        assert math.isclose(fagnano(CIRCLE), 2 * math.pi, rel_tol=1e-15)
        assert math.isclose(fagnano(FLAT), math.pi, rel_tol=1e-15)

    def test_euler(self):
        assert math.isclose(euler(CIRCLE), 2 * math.pi, rel_tol=1e-15)
        assert math.isclose(euler(FLAT), 2 * math.pi / math.sqrt(2), rel_tol=1e-15)
        assert math.isclose(euler(make_axes(3, 1)), 2 * math.pi * math.sqrt(5), rel_tol=1e-15)

    def test_ramanujan1(self):
        assert math.isclose(ramanujan1(CIRCLE), 2 * math.pi, rel_tol=1e-15)
        assert math.isclose(ramanujan1(FLAT), math.pi * (3 - math.sqrt(3)), rel_tol=1e-15)

    def test_ramanujan2(self):
        assert math.isclose(ramanujan2(CIRCLE), 2 * math.pi, rel_tol=1e-15)
        assert math.isclose(ramanujan2(FLAT), 14 * math.pi / 11, rel_tol=1e-15)

    def test_ramanujan2_flat_deficit_matches_constraint(self):
        # |(14 pi/11 - 4)/4| equals the A+C constraint to 9 significant digits
        rel = (ramanujan2(FLAT) - 4.0) / 4.0
        assert rel < 0
        assert math.isclose(abs(rel), FLAT_LIMIT_DEFICIT, rel_tol=1e-9)

    def test_cantrell(self):
        assert math.isclose(cantrell(CIRCLE), 2 * math.pi, rel_tol=1e-15)
        # algebraic identity: pi*(1 + 3/11 + 4/pi - 14/11) = 4 exactly
        assert math.isclose(cantrell(FLAT), 4.0, rel_tol=1e-14)

    def test_koshy1(self):
        # k(1) makes (b/a)^k = 1, so p = ln2/ln(pi/2) and Q = 2^(1/p) = pi/2
        assert math.isclose(koshy1(CIRCLE), 2 * math.pi, rel_tol=1e-12)
        assert koshy1(FLAT) == 4.0
        assert koshy1(make_axes(5, 0)) == 20.0

    def test_koshy2(self):
        assert math.isclose(koshy2(CIRCLE), 2 * math.pi, rel_tol=1e-12)
        assert koshy2(FLAT) == 4.0


class TestSigmoid:
    def test_midpoint(self):
        assert sigmoid_factor(0.33) == 0.5

    def test_saturates_high(self):
        assert abs(sigmoid_factor(1.0) - 1.0) < 1e-17

    def test_nearly_zero_at_circle(self):
        expected = math.exp(-19.8) / (1 + math.exp(-19.8))
        assert math.isclose(sigmoid_factor(0.0), expected, rel_tol=1e-12)
        assert sigmoid_factor(0.0) < 3e-9

    def test_monotone(self):
        # the gate saturates to 1.0 in double precision for h near 1
        hs = np.linspace(0, 1, 101)
        vals = [sigmoid_factor(h) for h in hs]
        assert all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))
        assert all(0 < v <= 1 for v in vals)
        below_saturation = [v for h, v in zip(hs, vals) if h <= 0.8]
        assert all(v2 > v1 for v1, v2 in zip(below_saturation, below_saturation[1:]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            sigmoid_factor(-0.1)
        with pytest.raises(ValueError):
            sigmoid_factor(1.1)


class TestCorrectionParams:
    def test_shipped_defaults(self):
        assert (ONE_EXP_DEFAULTS.A, ONE_EXP_DEFAULTS.B) == (3.62077e-4, 10.826)
        assert (TWO_EXP_DEFAULTS.A, TWO_EXP_DEFAULTS.B) == (3.37528e-4, 10.29662)
        assert (TWO_EXP_DEFAULTS.C, TWO_EXP_DEFAULTS.D) == (6.48093e-5, 40.89043)
        assert TWO_EXP_DEFAULTS.constraint_K == 4.023374941e-4
        assert (TWO_EXP_DEFAULTS.sigmoid_gain, TWO_EXP_DEFAULTS.sigmoid_center) == (60.0, 0.33)

    def test_printed_defaults_nearly_satisfy_constraint(self):
        gap = abs(TWO_EXP_DEFAULTS.A + TWO_EXP_DEFAULTS.C - TWO_EXP_DEFAULTS.constraint_K)
        assert gap < 2e-10  # printed to 6 digits; exact satisfaction is the fitter's job

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            CorrectionParams(A=-1e-4, B=10.0)
        with pytest.raises(ValueError):
            CorrectionParams(A=1e-4, B=10.0, sigmoid_gain=0.0)
        with pytest.raises(ValueError):
            CorrectionParams(A=float("nan"), B=10.0)


class TestCorrectedMethods:
    def test_circle_with_sigmoid_is_exact(self):
        two_pi = 2 * math.pi
        assert abs(r2_one_exp(CIRCLE) / two_pi - 1) < 1e-12
        assert abs(r2_two_exp(CIRCLE) / two_pi - 1) < 1e-12

    def test_circle_without_sigmoid_within_1e7(self):
        two_pi = 2 * math.pi
        dev1 = abs(r2_one_exp(CIRCLE, use_sigmoid=False) / two_pi - 1)
        dev2 = abs(r2_two_exp(CIRCLE, use_sigmoid=False) / two_pi - 1)
        # ungated correction at h=0 is A e^-B (+ C e^-D) ~ 8e-9
        assert 1e-10 < dev1 < 1e-7
        assert 1e-10 < dev2 < 1e-7

    def test_two_exp_flat_cancellation(self):
        assert abs(r2_two_exp(FLAT) / 4.0 - 1) < 1e-9
        assert abs(r2_two_exp(make_axes(3, 0)) / 12.0 - 1) < 1e-9

    def test_denominator_safety_default_params(self):
        K = TWO_EXP_DEFAULTS.constraint_K
        for r in np.linspace(0, 1, 201):
            ax = make_axes(1.0, float(r))
            ratio = ramanujan2(ax) / r2_two_exp(ax)  # the correction denominator
            assert 1 - K - 1e-15 <= ratio <= 1 + 1e-15

    def test_rejects_denominator_blowup(self):
        bad = CorrectionParams(A=1.5, B=1e-9)
        with pytest.raises(ValueError, match="denominator"):
            r2_one_exp(make_axes(1000, 1), params=bad)
        bad2 = CorrectionParams(A=0.9, B=1e-9, C=0.9, D=1e-9)
        with pytest.raises(ValueError, match="denominator"):
            r2_two_exp(make_axes(1000, 1), params=bad2)

    def test_two_exp_requires_second_term(self):
        with pytest.raises(ValueError, match="C > 0"):
            r2_two_exp(CIRCLE, params=CorrectionParams(A=1e-4, B=10.0))


class TestEvaluateDispatch:
    def test_fagnano_circle(self):
        assert evaluate(MethodId(Formula.FAGNANO), CIRCLE) == fagnano(CIRCLE)

    def test_ramanujan2_flat(self):
        assert math.isclose(
            evaluate(MethodId(Formula.RAMANUJAN_II), FLAT), 14 * math.pi / 11, rel_tol=1e-15
        )

    def test_euler_ivory_first_term(self):
        # one term is just pi*(a+b)
        assert math.isclose(
            evaluate(MethodId(Formula.EULER_IVORY, n_terms=1), make_axes(3, 1)),
            4 * math.pi,
            rel_tol=1e-15,
        )

    def test_circle_exactness_all_methods(self):
        for a in (1.0, 3.7):
            ax = make_axes(a, a)
            for method in ALL_METHODS:
                value = evaluate(method, ax)
                assert abs(value / (2 * math.pi * a) - 1) < 1e-12, method.label

    def test_flat_exactness_where_promised(self):
        for formula in (Formula.CANTRELL, Formula.KOSHY_1, Formula.KOSHY_2, Formula.R2_TWO_EXP):
            value = evaluate(MethodId(formula), make_axes(2, 0))
            assert abs(value / 8.0 - 1) < 1e-9, formula.value


@given(
    a=st.floats(min_value=1e-3, max_value=1e4),
    ratio=st.floats(min_value=0.0, max_value=1.0),
    lam=st.floats(min_value=1e-3, max_value=1e3),
)
def test_homogeneity_within_four_ulps(a, ratio, lam):
    ax = make_axes(a, a * ratio)
    scaled = make_axes(lam * ax.a, lam * ax.b)
    for method in ALL_METHODS:
        p_scaled = evaluate(method, scaled)
        p_ref = lam * evaluate(method, ax)
        tol = 4 * np.spacing(max(abs(p_scaled), abs(p_ref)))
        assert abs(p_scaled - p_ref) <= tol, method.label


def test_fagnano_euler_sandwich_high_eccentricity(cfg):
    for a in np.geomspace(2.0, 1000.0, 100):
        ax = make_axes(float(a), 1.0)
        exact = exact_perimeter(ax, cfg)
        assert fagnano(ax) < exact < euler(ax)
