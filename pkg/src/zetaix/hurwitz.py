"""Real and imaginary parts of zeta_H(s, ix) and d/ds zeta_H(s, ix), 0 < x < 1.

Everything is built on the polylogarithm combinations

    F(s, x) = Li_{1-s}(e^{2 pi x}) + Li_{1-s}(e^{-2 pi x})
    G(s, x) = Li_{1-s}(e^{2 pi x}) - Li_{1-s}(e^{-2 pi x})

through

    zeta_H(s, ix) = Gamma(1-s)/(2 pi)^(1-s) [sin(pi s/2) F + i cos(pi s/2) G].

At non-integer s this is evaluated as written.  At integers the Gamma and
trigonometric factors are singular or vanish and the limits are taken
analytically; those closed forms are the fast paths below, and
:func:`evaluate` snaps any s within ``integer_snap`` of an integer onto them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, PoleError, SnapError
from .numerics import (
    EULER_GAMMA,
    LOG_2PI,
    bernoulli_number,
    cospi,
    digamma,
    gamma_sign_log,
    harmonic,
    sinpi,
)
from .polylog import polylog_minus, polylog_neg_int, polylog_pos_int, polylog_series
from .riemann import zeta_power_series

PATHS = ("generic-left", "generic-right", "neg-even", "neg-odd", "pos-even", "pos-odd")


@dataclass(frozen=True)
class EvalPoint:
    s: float
    x: float
    deriv: int = 0

    def __post_init__(self):
        _check_x(self.x)
        if self.deriv not in (0, 1):
            raise DomainError(f"deriv must be 0 or 1, got {self.deriv}")


@dataclass(frozen=True)
class EvalOutcome:
    value: complex
    path: str
    error_estimate: float

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag


def _check_x(x: float) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x={x} outside the open interval (0, 1)")


def _check_generic(s: float, cfg: EvalConfig) -> None:
    if abs(s - 1.0) < max(cfg.pole_guard, cfg.integer_snap):
        raise PoleError(f"simple pole at s=1 (s={s})")
    n = round(s)
    if abs(s - n) <= cfg.integer_snap:
        raise SnapError(f"s={s} is within {cfg.integer_snap} of the integer {n}; use the fast path")


# -- generic real s ---------------------------------------------------------

def _gamma_ratio(s: float, x: float) -> float:
    """(2 pi x)^(-s) / Gamma(1-s), in log space."""
    g_sign, g_log = gamma_sign_log(1.0 - s)
    return g_sign * math.exp(-s * math.log(2.0 * math.pi * x) - g_log)


def _prefactor(s: float) -> float:
    """Gamma(1-s) / (2 pi)^(1-s)."""
    g_sign, g_log = gamma_sign_log(1.0 - s)
    return g_sign * math.exp(g_log + (s - 1.0) * LOG_2PI)


def _consistent(s: float) -> float:
    """Nudge s so that 1 - s is exact.

    Near an integer the pole of zeta(1-s-k) and the zero of sin(pi s) cancel
    to O(1) from terms of size 1/(s-n)^2; both must see the same distance.
    """
    return 1.0 - (1.0 - s)


def _f_and_g(s: float, x: float, cfg: EvalConfig) -> tuple[float, float, float, float, float, float]:
    q = _gamma_ratio(s, x)
    cot = cospi(s) / sinpi(s)
    series, err, _ = zeta_power_series(0, 1.0 - s, 2.0 * math.pi * x, cfg)
    li_minus = polylog_minus(1.0 - s, x, cfg)
    re_f = math.pi * cot * q + series + li_minus
    im_f = -math.pi * q
    re_g = re_f - 2.0 * li_minus
    return re_f, im_f, re_g, im_f, li_minus, err


def f_and_g(s: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[float, float, float, float]:
    """(Re F, Im F, Re G, Im G) at non-integer real s."""
    _check_x(x)
    _check_generic(s, cfg)
    s = _consistent(s)
    return _f_and_g(s, x, cfg)[:4]


def hurwitz_generic(s: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """zeta_H(s, ix) at real s away from the integers."""
    _check_x(x)
    _check_generic(s, cfg)
    s = _consistent(s)
    re_f, _, re_g, _, _, err = _f_and_g(s, x, cfg)
    pre = _prefactor(s)
    sn = sinpi(0.5 * s)
    cs = cospi(0.5 * s)
    # pre * Im F = -x^(-s)/2 exactly
    pim = -0.5 * x ** (-s)
    re = pre * sn * re_f - cs * pim
    im = pre * cs * re_g + sn * pim
    value = complex(re, im)
    estimate = abs(pre) * err + 1e-15 * (abs(pre) * (abs(re_f) + abs(re_g)) + abs(pim))
    return EvalOutcome(value, "generic-left" if s < 1.0 else "generic-right", estimate)


def _re_f_prime(s: float, x: float, cfg: EvalConfig) -> tuple[float, float, float]:
    """(Re F)'(s, x), the nu-derivative Li^(1)_{1-s}(e^{-2 pi x}), and an error estimate."""
    t = 2.0 * math.pi * x
    q = _gamma_ratio(s, x)
    sn = sinpi(s)
    # pi cot(pi s) * 2 pi / sin(2 pi s) folded into pi^2 / sin^2(pi s): finite at half-integers
    lead = -q * (math.pi * cospi(s) / sn * (math.log(t) - digamma(1.0 - s)) + (math.pi / sn) ** 2)
    series, err, _ = zeta_power_series(1, 1.0 - s, t, cfg)
    li1 = polylog_minus(1.0 - s, x, cfg, order_deriv=1)
    return lead - series - li1, li1, err


def hurwitz_deriv_generic(s: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """d/ds zeta_H(s, ix) at real s away from the integers."""
    _check_x(x)
    _check_generic(s, cfg)
    s = _consistent(s)
    re_f, _, re_g, _, _, err0 = _f_and_g(s, x, cfg)
    re_fp, li1, err1 = _re_f_prime(s, x, cfg)
    re_gp = re_fp + 2.0 * li1

    pre = _prefactor(s)
    sn = sinpi(0.5 * s)
    cs = cospi(0.5 * s)
    log_ratio = LOG_2PI - digamma(1.0 - s)
    xs = x ** (-s)
    xs_log = xs * math.log(x)
    re = (pre * sn * (re_f * log_ratio + re_fp) - 0.25 * math.pi * sn * xs
          + pre * cs * 0.5 * math.pi * re_f - 0.5 * cs * xs_log)
    im = (pre * cs * (re_g * log_ratio + re_gp) - 0.25 * math.pi * cs * xs
          - pre * sn * 0.5 * math.pi * re_g + 0.5 * sn * xs_log)
    scale = abs(pre) * (abs(re_f) * (1 + abs(log_ratio)) + abs(re_fp) + abs(re_gp)) + abs(xs)
    estimate = abs(pre) * (err0 * (1 + abs(log_ratio)) + err1) + 1e-15 * scale
    return EvalOutcome(complex(re, im), "generic-left" if s < 1.0 else "generic-right", estimate)


# -- negative integers s = -n -----------------------------------------------

def hurwitz_neg_int(n: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """zeta_H(-n, ix) for n >= 0 in closed form (a Bernoulli polynomial)."""
    _check_x(x)
    if n < 0:
        raise DomainError(f"hurwitz_neg_int: n={n} must be >= 0")
    m, odd = divmod(n, 2)
    if not odd:
        re = (-1) ** m * x ** (2 * m) / 2.0
        im = math.fsum(
            (-1) ** (j + 1) * bernoulli_number(2 * (m - j)) * x ** (2 * j + 1)
            / (math.factorial(2 * (m - j)) * math.factorial(2 * j + 1))
            for j in range(m)
        ) * math.factorial(2 * m)
        im += (-1) ** (m + 1) * x ** (2 * m + 1) / (2 * m + 1)
        path = "neg-even"
    else:
        re = math.fsum(
            (-1) ** (j + 1) * bernoulli_number(2 * (m - j + 1)) * x ** (2 * j)
            / (math.factorial(2 * (m - j + 1)) * math.factorial(2 * j))
            for j in range(m + 1)
        ) * math.factorial(2 * m + 1)
        re += (-1) ** m * x ** (2 * m + 2) / (2 * (m + 1))
        im = (-1) ** m * x ** (2 * m + 1) / 2.0
        path = "neg-odd"
    value = complex(re, im)
    return EvalOutcome(value, path, 1e-16 * math.factorial(n + 1) * (1.0 + abs(value)))


def hurwitz_deriv_neg_int(n: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """d/ds zeta_H(s, ix) at s = -n, n >= 0."""
    base = hurwitz_neg_int(n, x, cfg)
    t = 2.0 * math.pi * x
    m, odd = divmod(n, 2)
    log_x = math.log(x)
    shift = LOG_2PI + EULER_GAMMA - harmonic(n)
    if not odd:
        re = (0.5 * math.pi * base.im + (-1) ** (m + 1) * x ** (2 * m) * log_x / 2.0
              + (-1) ** m * math.factorial(2 * m) / (2.0 * (2.0 * math.pi) ** (2 * m))
              * polylog_pos_int(2 * m + 1, x, cfg))
        series, err, _ = zeta_power_series(1, 2.0 * m, t, cfg, step=2, power0=1)
        coef = (-1) ** (m + 1) * math.factorial(2 * m) / (math.pi * (2.0 * math.pi) ** (2 * m))
        im = base.im * shift + 0.5 * math.pi * (-1) ** (m + 1) * x ** (2 * m) + coef * series
        path = "neg-even"
    else:
        series, err, _ = zeta_power_series(1, 2.0 * m + 2.0, t, cfg, step=2, power0=0)
        coef = (-1) ** m * math.factorial(2 * m + 1) / (math.pi * (2.0 * math.pi) ** (2 * m + 1))
        re = base.re * shift + 0.5 * math.pi * (-1) ** m * x ** (2 * m + 1) + coef * series
        im = (-0.5 * math.pi * base.re + (-1) ** (m + 1) * x ** (2 * m + 1) * log_x / 2.0
              + (-1) ** (m + 1) * math.factorial(2 * m + 1) / (2.0 * (2.0 * math.pi) ** (2 * m + 1))
              * polylog_pos_int(2 * m + 2, x, cfg))
        path = "neg-odd"
    value = complex(re, im)
    return EvalOutcome(value, path, abs(coef) * err + 1e-15 * (1.0 + abs(value)))


# -- positive integers s = n >= 2 -------------------------------------------

def _check_pos(n: int) -> None:
    if n < 2:
        raise DomainError(f"positive-integer fast path needs n >= 2, got {n}")


def f_even(m: int, x: float) -> float:
    """F(2m, x) = 2 Li_{1-2m}(e^{-2 pi x}); G(2m, x) vanishes."""
    return 2.0 * polylog_neg_int(2 * m - 1, math.exp(-2.0 * math.pi * x))


def g_odd(m: int, x: float) -> float:
    """G(2m+1, x) = -2 Li_{-2m}(e^{-2 pi x}); F(2m+1, x) vanishes."""
    return -2.0 * polylog_neg_int(2 * m, math.exp(-2.0 * math.pi * x))


def hurwitz_pos_int(n: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """zeta_H(n, ix) for integer n >= 2."""
    _check_x(x)
    _check_pos(n)
    t = 2.0 * math.pi * x
    m, odd = divmod(n, 2)
    if not odd:
        re = ((-1) ** m * (2.0 * math.pi) ** (2 * m) / (4.0 * math.factorial(2 * m - 1)) * f_even(m, x)
              + (-1) ** m * x ** (-2 * m) / 2.0)
        series, err, _ = zeta_power_series(1, -2.0 * m, t, cfg, step=2, power0=1)
        coef = (-1) ** (m + 1) * (2.0 * math.pi) ** (2 * m) / (math.pi * math.factorial(2 * m - 1))
        im = coef * series
        path = "pos-even"
    else:
        series, err, _ = zeta_power_series(1, -2.0 * m, t, cfg, step=2, power0=0)
        coef = (-1) ** m * 2.0 * (2.0 * math.pi) ** (2 * m) / math.factorial(2 * m)
        re = coef * series
        im = ((-1) ** m * (2.0 * math.pi) ** (2 * m + 1) / (4.0 * math.factorial(2 * m)) * g_odd(m, x)
              + (-1) ** (m + 1) * x ** (-2 * m - 1) / 2.0)
        path = "pos-odd"
    value = complex(re, im)
    return EvalOutcome(value, path, abs(coef) * err + 1e-15 * abs(value))


def hurwitz_deriv_pos_int(n: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """d/ds zeta_H(s, ix) at integer s = n >= 2."""
    base = hurwitz_pos_int(n, x, cfg)
    t = 2.0 * math.pi * x
    m, odd = divmod(n, 2)
    shift = LOG_2PI + EULER_GAMMA - harmonic(n - 1)
    log_block = math.log(t) + EULER_GAMMA - harmonic(n - 1)
    xn = x ** (-n)
    if not odd:
        s_re, e_re, _ = zeta_power_series(1, 1.0 - 2 * m, t, cfg, step=2, power0=0)
        c_re = (-1) ** (m + 1) * (2.0 * math.pi) ** (2 * m) / (2.0 * math.factorial(2 * m - 1))
        re = base.re * shift + (-1) ** (m + 1) * xn * log_block + c_re * s_re
        s_im, e_im, _ = zeta_power_series(2, -2.0 * m, t, cfg, step=2, power0=1)
        c_im = (-1) ** m * (2.0 * math.pi) ** (2 * m - 1) / math.factorial(2 * m - 1)
        im = base.im * shift + 0.5 * math.pi * (-1) ** (m + 1) * xn + c_im * s_im
        path = "pos-even"
    else:
        s_re, e_re, _ = zeta_power_series(2, -2.0 * m, t, cfg, step=2, power0=0)
        c_re = (-1) ** (m + 1) * (2.0 * math.pi) ** (2 * m) / math.factorial(2 * m)
        re = base.re * shift + 0.5 * math.pi * (-1) ** (m + 1) * xn + c_re * s_re
        s_im, e_im, _ = zeta_power_series(1, -1.0 - 2 * m, t, cfg, step=2, power0=1)
        c_im = (-1) ** (m + 1) * math.pi * (2.0 * math.pi) ** (2 * m) / math.factorial(2 * m)
        im = base.im * shift + (-1) ** m * xn * log_block + c_im * s_im
        path = "pos-odd"
    value = complex(re, im)
    estimate = abs(c_re) * e_re + abs(c_im) * e_im + base.error_estimate * abs(shift) + 1e-15 * abs(value)
    return EvalOutcome(value, path, estimate)


# -- dispatcher -------------------------------------------------------------

# Within NEAR_BAND of an integer n != 1 the generic formula cancels terms of
# size 1/(s-n)^2 and keeps only ~eps/(s-n)^2 absolute accuracy.  There the
# value is interpolated instead: degree six through the fast path at n and the
# generic path at n + k NODE_STEP, k = +-1, +-2, +-3, where it is accurate.
NEAR_BAND = 1e-2
NODE_STEP = 1.5e-2


def _integer_path(n: int, x: float, deriv: int, cfg: EvalConfig) -> EvalOutcome:
    if n <= 0:
        fn = hurwitz_deriv_neg_int if deriv else hurwitz_neg_int
        return fn(-n, x, cfg)
    fn = hurwitz_deriv_pos_int if deriv else hurwitz_pos_int
    return fn(n, x, cfg)


_OFFSETS = (-3, -2, -1, 0, 1, 2, 3)


@lru_cache(maxsize=256)
def _band_nodes(n: int, x: float, deriv: int, cfg: EvalConfig) -> tuple[EvalOutcome, ...]:
    generic = hurwitz_deriv_generic if deriv else hurwitz_generic
    return tuple(
        _integer_path(n, x, deriv, cfg) if k == 0 else generic(n + k * NODE_STEP, x, cfg)
        for k in _OFFSETS
    )


def _near_integer(n: int, s: float, x: float, deriv: int, cfg: EvalConfig) -> EvalOutcome:
    offsets = _OFFSETS
    outcomes = _band_nodes(n, x, deriv, cfg)
    u = (s - n) / NODE_STEP

    def lagrange(nodes):
        total = 0j
        for i in nodes:
            w = 1.0
            for j in nodes:
                if j != i:
                    w *= (u - j) / (i - j)
            total += w * outcomes[i + 3].value
        return total

    value = lagrange(offsets)
    # truncation gauged by the drop from degree six to degree four
    trunc = abs(value - lagrange((-2, -1, 0, 1, 2)))
    noise = 4.0 * max(o.error_estimate for o in outcomes)
    return EvalOutcome(value, "generic-left" if s < 1.0 else "generic-right", trunc + noise)


def evaluate(point: EvalPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalOutcome:
    """Route ``point`` to the integer fast path it snaps to, or to the generic path."""
    s, x = point.s, point.x
    if abs(s - 1.0) < max(cfg.pole_guard, cfg.integer_snap):
        raise PoleError(f"simple pole at s=1 (s={s}); residue 1")
    n = round(s)
    if abs(s - n) <= cfg.integer_snap:
        return _integer_path(n, x, point.deriv, cfg)
    if n != 1 and abs(s - n) < NEAR_BAND:
        return _near_integer(n, s, x, point.deriv, cfg)
    fn = hurwitz_deriv_generic if point.deriv else hurwitz_generic
    return fn(s, x, cfg)


def hurwitz_zeta_ix(s: float, x: float, deriv: int = 0, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Convenience wrapper: the complex value of zeta_H(s, ix) or its s-derivative."""
    return evaluate(EvalPoint(s, x, deriv), cfg).value
