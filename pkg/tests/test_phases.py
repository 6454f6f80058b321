"""Exact scalar ring: arithmetic laws, numeric evaluation, text round-trip."""

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtorus.phases import (
    ONE,
    ZERO,
    GaussianRational,
    ParseError,
    PhaseScalar,
    parse_phase,
    phase_pow,
)

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
phases = st.dictionaries(st.integers(-8, 8), gaussians, max_size=4).map(PhaseScalar)


# --- Gaussian rationals ---

def test_gaussian_rational_reduced_form():
    g = GaussianRational(Fraction(2, 4), Fraction(-3, -6))
    assert g.re == Fraction(1, 2) and g.im == Fraction(1, 2)
    assert g.re.denominator > 0


def test_gaussian_rational_arithmetic():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 2), -1)
    assert a + b == GaussianRational(Fraction(3, 2), 1)
    assert a * b == GaussianRational(Fraction(5, 2), 0)  # (1+2i)(1/2-i)
    assert -a == GaussianRational(-1, -2)
    assert a - a == GaussianRational(0)
    assert not (a - a)


def test_gaussian_rational_inverse():
    a = GaussianRational(1, 2)
    assert a * a.inverse() == GaussianRational(1)
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


@given(gaussians, gaussians, gaussians)
def test_gaussian_rational_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# --- construction and basic identities ---

def test_phase_pow_examples():
    assert phase_pow(0) == ONE
    assert phase_pow(2) == PhaseScalar({2: 1})  # q itself
    assert phase_pow(-1) == PhaseScalar({-1: 1})  # q^(-1/2)
    assert phase_pow(2) * phase_pow(2) == phase_pow(4)


def test_addition_examples():
    s = phase_pow(1)
    assert s + s == PhaseScalar({1: 2})
    assert s + (-s) == ZERO
    assert not (s - s)
    assert (ONE + s) + (ONE - s) == PhaseScalar(2)


def test_multiplication_examples():
    s = phase_pow(1)
    assert phase_pow(2) * phase_pow(-2) == ONE
    assert (ONE + s) * (ONE - s) == ONE - phase_pow(2)
    # q^(-1/2) * q = q^(1/2)
    assert phase_pow(-1) * phase_pow(2) == s


def test_zero_annihilates_and_one_is_identity():
    a = PhaseScalar({3: GaussianRational(2, 1), -1: Fraction(1, 2)})
    assert a * ONE == a
    assert a * ZERO == ZERO
    assert a + ZERO == a


def test_pow_and_inverse():
    s = phase_pow(1)
    assert s**4 == phase_pow(4)
    assert s**0 == ONE
    assert s**-3 == phase_pow(-3)
    c = PhaseScalar({2: GaussianRational(0, 1)})
    assert c * c.inverse() == ONE
    with pytest.raises(ValueError):
        (ONE + s).inverse()


# --- ring laws ---

@given(phases, phases, phases)
@settings(max_examples=150)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(phases, phases)
def test_canonical_uniqueness(a, b):
    # equal iff identical canonical term maps, iff difference is empty
    assert (a == b) == (dict(a.terms) == dict(b.terms))
    assert (a == b) == (not (a - b))


def test_canonical_form_drops_zero_coefficients():
    a = PhaseScalar({0: 1, 3: 0, 5: GaussianRational(0, 0)})
    assert dict(a.terms) == {0: GaussianRational(1)}


# --- numeric evaluation ---

def test_eval_constant():
    for theta in (0.0, 0.25, 1.9):
        assert ONE.eval_numeric(theta) == pytest.approx(1.0 + 0j, abs=1e-15)


def test_eval_full_power_at_half():
    # s**2 at theta = 1/2 is exp(i*pi) = -1
    expected = cmath.exp(1j * math.pi)
    got = phase_pow(2).eval_numeric(0.5)
    assert abs(got - expected) < 1e-12
    assert abs(got - (-1.0)) < 1e-12


def test_eval_symmetric_pair_at_third():
    # s + s**-1 at theta = 1/3 is 2*cos(pi/3) = 1
    got = (phase_pow(1) + phase_pow(-1)).eval_numeric(1.0 / 3.0)
    expected = 2.0 * math.cos(math.pi / 3.0)
    assert abs(got - expected) < 1e-12
    assert abs(got - 1.0) < 1e-12


def test_eval_pure_powers_have_unit_modulus():
    for e in range(-8, 9):
        for theta in (0.0, 1.0 / 3.0, 0.1375):
            assert abs(abs(phase_pow(e).eval_numeric(theta)) - 1.0) < 1e-12


@given(phases, phases, st.sampled_from([0.0, 1.0 / 3.0, 0.1375, 0.77]))
@settings(max_examples=150)
def test_eval_is_ring_homomorphism(a, b, theta):
    ea, eb = a.eval_numeric(theta), b.eval_numeric(theta)
    assert abs((a * b).eval_numeric(theta) - ea * eb) < 1e-10
    assert abs((a + b).eval_numeric(theta) - (ea + eb)) < 1e-10


# --- canonical rendering and parsing ---

def test_render_examples():
    s = phase_pow(1)
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert phase_pow(2).render() == "q^(1)"
    assert phase_pow(-1).render() == "q^(-1/2)"
    assert (PhaseScalar(2) * phase_pow(3)).render() == "2*q^(3/2)"
    mixed = PhaseScalar({-1: GaussianRational(Fraction(-1, 2), Fraction(1, 3)), 3: 2})
    assert mixed.render() == "(-1/2+1/3i)*q^(-1/2) + 2*q^(3/2)"
    assert (ONE - s).render() == "1 - q^(1/2)"


def test_parse_round_trip_of_pinned_rendering():
    text = "(-1/2+1/3i)*q^(-1/2) + 2*q^(3/2)"
    value = parse_phase(text)
    assert value.render() == text


@given(phases)
@settings(max_examples=200)
def test_parse_render_round_trip(a):
    assert parse_phase(a.render()) == a


def test_parse_accepts_plain_q_and_imaginary_units():
    assert parse_phase("q") == phase_pow(2)
    assert parse_phase("i*i") == PhaseScalar(-1)
    assert parse_phase("-i") == PhaseScalar(GaussianRational(0, -1))
    assert parse_phase("2 q^(1/2)") == PhaseScalar(2) * phase_pow(1)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError):
        parse_phase("q^(1/3)")
    with pytest.raises(ParseError):
        parse_phase("1 +")
    with pytest.raises(ParseError):
        parse_phase("(1 + q^(1)")
    try:
        parse_phase("2 ! 3")
    except ParseError as err:
        assert err.pos == 2
