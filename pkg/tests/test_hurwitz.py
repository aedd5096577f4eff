import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from zetaix.config import EvalConfig
from zetaix.errors import DomainError, PoleError, SnapError
from zetaix.hurwitz import (
    NEAR_BAND,
    EvalPoint,
    evaluate,
    f_and_g,
    f_even,
    g_odd,
    hurwitz_deriv_generic,
    hurwitz_deriv_neg_int,
    hurwitz_deriv_pos_int,
    hurwitz_generic,
    hurwitz_neg_int,
    hurwitz_pos_int,
    hurwitz_zeta_ix,
)
from zetaix.numerics import bernoulli_poly
from zetaix.oracle import oracle_hurwitz, oracle_hurwitz_deriv
from zetaix.polylog import polylog_minus, polylog_neg_int


def mp_ref(s, x, d=0):
    # mpmath's own Hurwitz zeta accepts a complex shift
    return complex(mpmath.zeta(s, 1j * x, d))


def rel(a, b):
    return abs(a - b) / abs(b)


def li(n, w):
    return float(mpmath.polylog(n, w))


# -- generic --------------------------------------------------------------------

def test_f_and_g_examples():
    _, im_f, _, _ = f_and_g(-0.5, 0.3)
    assert im_f == pytest.approx(-math.pi * (0.6 * math.pi) ** 0.5 / math.gamma(1.5), rel=1e-14)
    re_f, _, re_g, _ = f_and_g(0.5, 0.5)
    assert re_g + 2 * polylog_minus(0.5, 0.5) - re_f == pytest.approx(0.0, abs=1e-14)


def test_f_and_g_approaches_integer_limit():
    # Re F(-2 + eps) tends to the finite limit of the log-series at nu = 3
    x = 0.5
    near = [f_and_g(-2 + e, x)[0] for e in (1e-3, -1e-3)]
    t = 2 * math.pi * x
    w = math.exp(-t)
    # F(-2, x) = Li_3(e^t) + Li_3(e^-t), real part, from mpmath
    limit = float(mpmath.re(mpmath.polylog(3, mpmath.exp(t)))) + li(3, w)
    # the symmetric mean cancels the linear term, leaving O(eps^2)
    assert 0.5 * sum(near) == pytest.approx(limit, rel=1e-5)


@pytest.mark.parametrize("s", [-3.5, -1.25, -0.5, 0.3, 0.5, 1.5, 2.5, 4.5, 7.25])
@pytest.mark.parametrize("x", [0.1, 0.3, 0.5, 0.9])
def test_generic_values(s, x):
    out = hurwitz_generic(s, x)
    assert out.path == ("generic-left" if s < 1 else "generic-right")
    ref = mp_ref(s, x)
    assert rel(out.value, ref) <= 1e-9
    assert abs(out.value - ref) <= max(out.error_estimate * 10, 1e-14 * abs(ref))


@pytest.mark.parametrize("s", [-3.5, -1.25, -0.5, 0.3, 0.5, 1.5, 2.5, 4.5])
@pytest.mark.parametrize("x", [0.1, 0.3, 0.5, 0.8])
def test_generic_derivatives(s, x):
    out = hurwitz_deriv_generic(s, x)
    assert rel(out.value, mp_ref(s, x, 1)) <= 1e-9


def test_generic_matches_own_oracle_examples():
    assert rel(hurwitz_generic(2.5, 0.3).value, oracle_hurwitz(2.5, 0.3)) <= 1e-9
    assert rel(hurwitz_generic(-0.5, 0.5).value, oracle_hurwitz(-0.5, 0.5)) <= 1e-8
    assert rel(hurwitz_deriv_generic(0.5, 0.5).value, oracle_hurwitz_deriv(0.5, 0.5)) <= 1e-6
    assert rel(hurwitz_deriv_generic(2.5, 0.3).value, oracle_hurwitz_deriv(2.5, 0.3)) <= 1e-6


def test_generic_derivative_is_derivative_of_generic_value():
    s, x, h = -1.25, 0.8, 1e-3
    v = [hurwitz_generic(s + k * h, x).value for k in (-2, -1, 1, 2)]
    fd = (v[0] - 8 * v[1] + 8 * v[2] - v[3]) / (12 * h)
    d = hurwitz_deriv_generic(s, x).value
    assert abs(d.imag - fd.imag) <= 1e-9 * max(1.0, abs(fd))
    assert abs(d.real - fd.real) <= 1e-9 * max(1.0, abs(fd))


def test_generic_refuses_integers_and_pole():
    with pytest.raises(SnapError):
        hurwitz_generic(-1.999999, 0.5)
    with pytest.raises(SnapError):
        hurwitz_deriv_generic(3.0, 0.5)
    with pytest.raises(PoleError):
        hurwitz_generic(1.0 + 1e-7, 0.5)
    with pytest.raises(DomainError):
        hurwitz_generic(0.5, 1.0)


def test_half_integers_are_regular():
    for s in (-2.5, -0.5, 0.5, 1.5, 3.5):
        for deriv in (0, 1):
            assert rel(hurwitz_zeta_ix(s, 0.4, deriv), mp_ref(s, 0.4, deriv)) <= 1e-9


# -- negative integers ----------------------------------------------------------

def test_neg_int_examples():
    v = hurwitz_neg_int(0, 0.3)
    assert (v.re, v.im) == pytest.approx((0.5, -0.3), abs=1e-15)
    v = hurwitz_neg_int(1, 0.5)
    assert v.re == pytest.approx(0.125 - 1 / 12, abs=1e-15)
    assert v.im == pytest.approx(0.25, abs=1e-15)
    assert hurwitz_neg_int(2, 0.5).re == pytest.approx(-0.125, abs=1e-15)
    assert hurwitz_neg_int(2, 0.5).path == "neg-even"
    assert hurwitz_neg_int(3, 0.5).path == "neg-odd"


@pytest.mark.parametrize("n", range(0, 11))
def test_neg_int_bernoulli(n):
    for i in range(1, 20):
        x = 0.05 * i
        got = hurwitz_neg_int(n, x).value
        ref = -bernoulli_poly(n + 1, 1j * x) / (n + 1)
        for g, r in ((got.real, ref.real), (got.imag, ref.imag)):
            assert abs(g - r) <= max(1e-10 * abs(r), 1e-12)


def test_neg_int_derivative_examples():
    # n = 0, x = 1/2: (pi/2)(-1/2) - (1/2) ln(1/2) + (1/2) Li_1(e^-pi)
    x = 0.5
    expected = -math.pi / 4 - 0.5 * math.log(x) + 0.5 * (-math.log1p(-math.exp(-math.pi)))
    assert hurwitz_deriv_neg_int(0, x).re == pytest.approx(expected, rel=1e-13)
    assert rel(hurwitz_deriv_neg_int(2, 0.5).value, oracle_hurwitz_deriv(-2, 0.5)) <= 1e-6


def test_neg_odd_derivative_imaginary_sign():
    # n = 1, x = 0.3: the Li_2(e^{-2 pi x}) term carries coefficient -1/(4 pi)
    x = 0.3
    li2 = li(2, math.exp(-0.6 * math.pi))
    base = -(math.pi / 2) * hurwitz_neg_int(1, x).re - (x / 2) * math.log(x)
    got = hurwitz_deriv_neg_int(1, x).im
    oracle = oracle_hurwitz_deriv(-1, x).imag
    assert got == pytest.approx(base - li2 / (4 * math.pi), rel=1e-13)
    assert got == pytest.approx(oracle, rel=1e-8)
    # the opposite sign on that term misses the oracle by ~2.5e-2
    assert abs(base + li2 / (4 * math.pi) - oracle) > 1e-2


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("x", [0.05, 0.3, 0.6, 0.95])
def test_neg_int_derivatives_against_mpmath(n, x):
    assert abs(hurwitz_deriv_neg_int(n, x).value - mp_ref(-n, x, 1)) <= 1e-11 * max(1.0, abs(mp_ref(-n, x, 1)))


# -- positive integers ----------------------------------------------------------

def test_pos_int_examples():
    w = math.exp(-math.pi)
    expected = -math.pi ** 2 * 2 * w / (1 - w) ** 2 - 2
    v = hurwitz_pos_int(2, 0.5)
    assert v.re == pytest.approx(expected, rel=1e-13)
    assert v.path == "pos-even"
    direct = math.fsum((complex(k, 0.5) ** -2).real for k in range(200000)) + 1 / 200000
    assert v.re == pytest.approx(direct, rel=1e-9)
    for x in (0.1, 0.5, 0.9):
        assert f_even(1, x) == pytest.approx(2 * polylog_neg_int(1, math.exp(-2 * math.pi * x)), rel=1e-15)
    assert rel(hurwitz_pos_int(3, 0.5).value, oracle_hurwitz(3, 0.5)) <= 1e-9
    assert hurwitz_pos_int(3, 0.5).path == "pos-odd"


def test_g_odd_reduction():
    for m in (1, 2, 3):
        for x in (0.2, 0.7):
            t = 2 * math.pi * x
            g = polylog_neg_int(2 * m, math.exp(t)) - polylog_neg_int(2 * m, math.exp(-t))
            assert g_odd(m, x) == pytest.approx(g, rel=1e-12)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("x", [0.05, 0.3, 0.6, 0.9])
def test_pos_int_against_mpmath(n, x):
    assert rel(hurwitz_pos_int(n, x).value, mp_ref(n, x)) <= 1e-10
    assert rel(hurwitz_deriv_pos_int(n, x).value, mp_ref(n, x, 1)) <= 1e-9


@pytest.mark.parametrize("n", range(2, 13))
@pytest.mark.parametrize("x", [0.3, 0.8, 0.9, 0.95])
def test_pos_int_error_estimate_covers_error(n, x):
    # the coefficient series cancels heavily as x -> 1 at large n; the estimate must say so
    for fn, d in ((hurwitz_pos_int, 0), (hurwitz_deriv_pos_int, 1)):
        out = fn(n, x)
        assert abs(out.value - mp_ref(n, x, d)) <= out.error_estimate


def test_pos_int_derivative_oracle_examples():
    assert rel(hurwitz_deriv_pos_int(2, 0.5).value, oracle_hurwitz_deriv(2, 0.5)) <= 1e-6
    assert rel(hurwitz_deriv_pos_int(3, 0.3).value, oracle_hurwitz_deriv(3, 0.3)) <= 1e-6


def test_pos_int_domain():
    with pytest.raises(DomainError):
        hurwitz_pos_int(1, 0.5)
    with pytest.raises(DomainError):
        hurwitz_deriv_pos_int(0, 0.5)


# -- dispatcher -----------------------------------------------------------------

def test_evaluate_routing():
    snapped = evaluate(EvalPoint(-2.0000001, 0.5))
    assert snapped.path == "neg-even"
    assert snapped.value == hurwitz_neg_int(2, 0.5).value
    with pytest.raises(PoleError, match="simple pole at s=1"):
        evaluate(EvalPoint(1.0000001, 0.5))
    assert evaluate(EvalPoint(0.5, 0.5, 1)).path == "generic-left"
    assert evaluate(EvalPoint(4.0, 0.5, 1)).path == "pos-even"
    assert evaluate(EvalPoint(5.0, 0.5)).path == "pos-odd"
    assert evaluate(EvalPoint(-3.0, 0.5)).path == "neg-odd"
    with pytest.raises(DomainError):
        EvalPoint(0.5, 0.0)
    with pytest.raises(DomainError):
        EvalPoint(0.5, 0.5, 2)


def test_snap_radius_follows_config():
    cfg = EvalConfig(integer_snap=1e-3)
    assert evaluate(EvalPoint(2.0005, 0.5), cfg).path == "pos-even"
    assert evaluate(EvalPoint(2.0005, 0.5)).path == "generic-right"


@pytest.mark.parametrize("n", [-6, -3, -1, 0, 2, 3, 5, 6])
@pytest.mark.parametrize("d", [-9e-3, -1e-5, 3e-6, 1e-3, 5e-3])
@pytest.mark.parametrize("deriv", [0, 1])
def test_near_integer_band(n, d, deriv):
    # inside the band the public function interpolates; judge it against mpmath
    assert abs(d) < NEAR_BAND
    s, x = n + d, 0.8
    out = evaluate(EvalPoint(s, x, deriv))
    ref = mp_ref(s, x, deriv)
    assert rel(out.value, ref) <= 1e-9
    assert abs(out.value - ref) <= out.error_estimate


@pytest.mark.parametrize("n", [-3, 2, 5])
def test_raw_formula_degrades_near_integers(n):
    # why the band exists: the bare formula loses ~eps/(s-n)^2
    s, x = n + 1e-5, 0.8
    raw = rel(hurwitz_deriv_generic(s, x).value, mp_ref(s, x, 1))
    far = rel(hurwitz_deriv_generic(n + 0.3, x).value, mp_ref(n + 0.3, x, 1))
    assert far < 1e-11
    assert raw > 100 * far


@given(st.floats(min_value=-6.0, max_value=6.0), st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=40, deadline=None)
def test_public_function_against_mpmath(s, x):
    assume(abs(s - 1.0) > 1e-3)
    # inside the snap radius the contract is the value at the integer itself
    target = round(s) if abs(s - round(s)) <= EvalConfig().integer_snap else s
    for deriv in (0, 1):
        ref = mp_ref(target, x, deriv)
        assert abs(hurwitz_zeta_ix(s, x, deriv) - ref) <= 1e-8 * max(1.0, abs(ref))


def test_conjugate_symmetry_of_imaginary_part():
    # zeta_H(s, ix) from the Jonquiere pieces: P Im F = -x^-s / 2 exactly
    for s in (-2.5, 0.3, 2.5):
        for x in (0.2, 0.6):
            out = hurwitz_generic(s, x)
            direct = mp_ref(s, x)
            assert out.im == pytest.approx(direct.imag, rel=1e-9, abs=1e-12)
