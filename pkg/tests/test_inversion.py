import math

import numpy as np
import pytest

from symlap.core import SLPoint, catalog_signal
from symlap.errors import PropernessError
from symlap.expr import evaluate_rational, parse_transform
from symlap.forward import sl_forward
from symlap.inversion import (
    PartialFractionTerm,
    inverse_laplace_rational,
    partial_fractions,
    sl_inverse_numeric,
    sl_inverse_split,
)


def by_pole(terms):
    return {(round(t.pole.real, 6), round(t.pole.imag, 6)): t for t in terms}


class TestPartialFractions:
    def test_imaginary_pole_pair_residues(self):
        terms = by_pole(partial_fractions(parse_transform("1/(s^2+1)").g1))
        assert terms[(0.0, 1.0)].order == 1
        assert terms[(0.0, 1.0)].coefficient == pytest.approx(-0.5j, abs=1e-12)
        assert terms[(0.0, -1.0)].coefficient == pytest.approx(0.5j, abs=1e-12)

    def test_cover_up_for_simple_real_poles(self):
        terms = by_pole(partial_fractions(
            parse_transform("(2*s+3)/((s+1)*(s+2))").g1))
        assert terms[(-1.0, 0.0)].coefficient == pytest.approx(1.0, abs=1e-12)
        assert terms[(-2.0, 0.0)].coefficient == pytest.approx(1.0, abs=1e-12)

    def test_single_double_pole_term(self):
        terms = partial_fractions(parse_transform("1/s^2").g1)
        assert len(terms) == 1
        assert terms[0] == PartialFractionTerm(0j, 2, 1 + 0j)

    def test_improper_raises(self):
        with pytest.raises(PropernessError):
            partial_fractions(parse_transform("s^2/(s+1)").g1)
        with pytest.raises(PropernessError):
            partial_fractions(parse_transform("3").g1)

    def test_reconstruction_on_random_points(self):
        rng = np.random.default_rng(9)
        texts = ["1/(s^2+1)", "(2*s+3)/((s+1)*(s+2))", "1/s^2",
                 "(s^2 - 2*s + 5)/((s+1)^2*(s^2+4))",
                 "1/2 * 1/(s-1) - 1/2 * s/(s^2+1) - 1/2 * 1/(s^2+1)"]
        for text in texts:
            r = parse_transform(text).g1
            terms = partial_fractions(r)
            for _ in range(20):
                z = complex(3.0 + rng.random(), rng.normal())
                direct = evaluate_rational(r, z)
                rebuilt = sum(t.coefficient / (z - t.pole) ** t.order
                              for t in terms)
                assert abs(rebuilt - direct) <= 1e-9 * max(1.0, abs(direct))

    def test_removable_factor_disappears(self):
        # s/s^2 has only a simple pole once the common factor cancels
        terms = partial_fractions(parse_transform("s/s^2").g1)
        assert len(terms) == 1
        assert terms[0].order == 1
        assert terms[0].coefficient == pytest.approx(1.0, abs=1e-10)


class TestRationalTable:
    def test_exponential_term(self):
        v = inverse_laplace_rational([PartialFractionTerm(1 + 0j, 1, 1 + 0j)],
                                     1.0)
        assert v == pytest.approx(math.e, abs=1e-12)

    def test_double_pole_gives_ramp(self):
        v = inverse_laplace_rational([PartialFractionTerm(0j, 2, 1 + 0j)], 3.0)
        assert v == pytest.approx(3.0, abs=1e-12)

    def test_cosine_from_conjugate_pair(self):
        terms = partial_fractions(parse_transform("s/(s^2+1)").g1)
        v = inverse_laplace_rational(terms, math.pi)
        assert v.real == pytest.approx(-1.0, abs=1e-12)
        assert abs(v.imag) <= 1e-12

    def test_cosine_roundtrip_through_forward_quadrature(self):
        # invert s/(s^2+1), then transform the samples back via quadrature
        from symlap.core import ExponentialOrderBound, PiecewiseSignal
        terms = partial_fractions(parse_transform("s/(s^2+1)").g1)
        f = PiecewiseSignal(
            "rebuilt_cos",
            lambda t: np.array([inverse_laplace_rational(terms, float(u)).real
                                for u in np.atleast_1d(t)]),
            lambda t: np.zeros_like(t),
            ExponentialOrderBound(1.0, 0.0), ExponentialOrderBound(1.0, 0.0),
            osc_hint=1.0)
        r = sl_forward(f, SLPoint(2.0, 2.0, 0.0), 1e-8)
        assert abs(r.value - 2.0 / 5.0) <= 1e-8

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError):
            inverse_laplace_rational([PartialFractionTerm(0j, 1, 1 + 0j)],
                                     -1.0)

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            inverse_laplace_rational([PartialFractionTerm(2.0 + 0j, 1, 1 + 0j)],
                                     400.0)

    def test_zero_at_time_zero_with_simple_pole(self):
        v = inverse_laplace_rational([PartialFractionTerm(-1.0 + 0j, 1,
                                                          1 + 0j)], 0.0)
        assert v == pytest.approx(1.0)


class TestSplitInversion:
    @pytest.mark.parametrize("t", [2.0, -3.0, 1.0, -1.0, 0.25, -0.25])
    def test_identity_signal(self, t):
        st = parse_transform("1/s^2 - 1/cs^2")
        assert sl_inverse_split(st, t) == pytest.approx(t, abs=1e-12)

    @pytest.mark.parametrize("t", [5.0, -5.0])
    def test_constant_signal(self, t):
        st = parse_transform("1/s + 1/cs")
        assert sl_inverse_split(st, t) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("t,expected", [(1.0, 1.0), (-1.0, -1.0)])
    def test_sign_signal(self, t, expected):
        st = parse_transform("1/s - 1/cs")
        assert sl_inverse_split(st, t) == pytest.approx(expected, abs=1e-12)

    def test_zero_time_uses_positive_side(self):
        st = parse_transform("1/s - 1/cs")
        assert sl_inverse_split(st, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_improper_side_rejected(self):
        with pytest.raises(PropernessError):
            sl_inverse_split(parse_transform("s + 1/cs"), 1.0)
        with pytest.raises(PropernessError):
            sl_inverse_split(parse_transform("2 + 1/s"), 1.0)

    def test_roundtrip_against_forward_transform(self):
        # forward transform of the recovered signal matches the rational
        # transform it came from, at asymmetric points too
        cases = [("1/s^2 - 1/cs^2", "ramp"), ("1/s + 1/cs", "one"),
                 ("1/s - 1/cs", "sign")]
        rng = np.random.default_rng(31)
        for text, name in cases:
            st = parse_transform(text)
            f = catalog_signal(name)
            for _ in range(10):
                x1, x2 = 0.5 + 2 * rng.random(2)
                y = float(rng.normal())
                target = (evaluate_rational(st.g1, complex(x1, y))
                          + evaluate_rational(st.g2, complex(x2, -y)))
                got = sl_forward(f, SLPoint(x1, x2, y), 1e-8).value
                assert abs(got - target) <= 1e-6


def closed_form_transform(name):
    if name == "sign":
        return lambda x1, x2, y: 1.0 / (x1 + 1j * y) + 1.0 / (-x2 + 1j * y)
    if name == "one":
        return lambda x1, x2, y: 1.0 / (x1 + 1j * y) + 1.0 / (x2 - 1j * y)
    if name == "heaviside":
        return lambda x1, x2, y: 1.0 / (x1 + 1j * y) + 0.0 * y
    raise KeyError(name)


def midpoint_value(name, t):
    f = catalog_signal(name)
    if t != 0:
        return complex(f(t))
    return (complex(f(1e-12)) + complex(f(-1e-12))) / 2.0


class TestNumericInversion:
    def test_midpoint_at_jump(self):
        v = sl_inverse_numeric(closed_form_transform("sign"), 1.0, 1.0, 0.0,
                               1000.0, 1e-6)
        assert abs(v) <= 5e-3
        v2 = sl_inverse_numeric(closed_form_transform("heaviside"), 1.0, 1.0,
                                0.0, 1000.0, 1e-6)
        assert abs(v2 - 0.5) <= 5e-3

    @pytest.mark.parametrize("t,expected", [(1.0, 1.0), (-1.0, -1.0)])
    def test_sign_at_unit_times(self, t, expected):
        v = sl_inverse_numeric(closed_form_transform("sign"), 1.0, 1.0, t,
                               1000.0, 1e-6)
        assert abs(v - expected) <= 1e-2

    def test_one_at_negative_time(self):
        v = sl_inverse_numeric(closed_form_transform("one"), 1.0, 1.0, -2.0,
                               1000.0, 1e-6)
        assert abs(v - 1.0) <= 1e-2

    @pytest.mark.parametrize("name", ["sign", "one", "heaviside"])
    @pytest.mark.parametrize("t", [2.0, -2.0, 0.5, -0.5])
    def test_roundtrip_and_error_shrinks_when_a_doubles(self, name, t):
        F = closed_form_transform(name)
        target = midpoint_value(name, t)
        v1 = sl_inverse_numeric(F, 1.0, 1.0, t, 1000.0, 1e-6)
        v2 = sl_inverse_numeric(F, 1.0, 1.0, t, 2000.0, 1e-6)
        e1, e2 = abs(v1 - target), abs(v2 - target)
        assert e1 <= 1e-2
        # truncation error envelope halves; allow estimate-level noise
        assert e2 <= e1 + 1e-6
