"""Polylogarithms Li_nu(e^{+-2 pi x}) and their derivatives in the order nu.

``sign`` selects the argument: ``"+"`` means e^{+2 pi x} (outside the unit
disk, complex for non-integer nu) and ``"-"`` means e^{-2 pi x} (inside,
always real).  The branch for e^{+2 pi x} is fixed by writing
(-2 pi x)^(nu-1) = exp((nu-1)(ln 2 pi x + i pi)).
"""

from __future__ import annotations

import math

from .config import DEFAULT_CONFIG, EvalConfig, SeriesResult
from .errors import AccuracyError, DomainError, PoleError, SnapError
from .numerics import (
    EULERIAN_CAP,
    digamma,
    digamma_pos_int,
    eulerian,
    gamma_sign_log,
    harmonic,
    trigamma,
    trigamma_pos_int,
)
from .riemann import riemann_zeta, zeta_power_series

SIGNS = ("+", "-")


def _check_x(x: float) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x={x} outside the open interval (0, 1)")


def _check_sign(sign: str) -> None:
    if sign not in SIGNS:
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")


def polylog_neg_int(n: int, w: float) -> float:
    """Li_{-n}(w) for real w > 0, w != 1, as a rational function of w.

    Li_0(w) = w/(1-w); for n >= 1 the numerator is the Eulerian polynomial.
    """
    if n < 0 or n > EULERIAN_CAP:
        raise DomainError(f"polylog_neg_int: n={n} outside [0, {EULERIAN_CAP}]")
    if w <= 0.0:
        raise DomainError(f"polylog_neg_int: w={w} must be positive")
    if w == 1.0:
        raise PoleError("polylog_neg_int: Li_{-n} is singular at w = 1")
    if n == 0:
        return w / (1.0 - w)
    num = 0.0
    for k in range(n):
        num = num * w + eulerian(n, k)
    # num now holds sum_k <n k> w^(n-1-k); one more factor of w gives w^(n-k)
    return num * w / (1.0 - w) ** (n + 1)


def polylog_pos_int(n: int, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Li_n(e^{-2 pi x}) for integer n >= 1 and x in (0, 1).

    Direct exponential series; for small x, where that series converges
    slowly, the logarithmic expansion about w = 1 is used instead.
    """
    if n < 1:
        raise DomainError(f"polylog_pos_int: n={n} must be >= 1")
    _check_x(x)
    t = 2.0 * math.pi * x
    if n == 1:
        return -math.log(-math.expm1(-t))
    if t < 0.5:
        head = (-t) ** (n - 1) / math.factorial(n - 1) * (harmonic(n - 1) - math.log(t))
        # sum over k != n-1 of zeta(n-k) (-t)^k / k!
        lower = math.fsum(
            riemann_zeta(0, float(n - k), cfg) * (-t) ** k / math.factorial(k) for k in range(n - 1)
        )
        upper, _, _ = zeta_power_series(0, 0.0, -t, cfg, step=1, power0=n)
        return head + lower + upper
    w = math.exp(-t)
    cap = 5000
    terms = []
    wk = 1.0
    for k in range(1, cap + 1):
        wk *= w
        term = wk / k ** n
        terms.append(term)
        if term < 1e-17 * terms[0]:
            return math.fsum(terms)
    raise AccuracyError(f"Li_{n}(e^(-2 pi {x})) not converged in {cap} terms", achieved=terms[-1])


def _leading(nu: float, x: float, sign: str, order_deriv: int) -> complex:
    """d^j/dnu^j of Gamma(1-nu) (-+2 pi x)^(nu-1)."""
    g_sign, g_log = gamma_sign_log(1.0 - nu)
    log_arg = math.log(2.0 * math.pi * x)
    mag = g_sign * math.exp(g_log + (nu - 1.0) * log_arg)
    if sign == "+":
        lam = complex(log_arg, math.pi)
        h = mag * complex(math.cos(math.pi * (nu - 1.0)), math.sin(math.pi * (nu - 1.0)))
    else:
        lam = complex(log_arg, 0.0)
        h = complex(mag, 0.0)
    if order_deriv == 0:
        return h
    d = lam - digamma(1.0 - nu)
    if order_deriv == 1:
        return h * d
    return h * (d * d + trigamma(1.0 - nu))


def polylog_series(nu: float, x: float, sign: str, cfg: EvalConfig = DEFAULT_CONFIG,
                   order_deriv: int = 0) -> SeriesResult:
    """Li_nu(e^{+-2 pi x}) (or its ``order_deriv``-th nu-derivative) from

        Gamma(1-nu) (-+2 pi x)^(nu-1) + sum_k zeta(nu-k) (+-2 pi x)^k / k!

    Only the leading term can be non-real; with ``sign="-"`` the returned
    imaginary part is exactly zero.
    """
    _check_sign(sign)
    _check_x(x)
    if order_deriv not in (0, 1, 2):
        raise DomainError(f"order_deriv must be 0, 1 or 2, got {order_deriv}")
    if nu >= 1.0 and nu == math.floor(nu):
        raise SnapError(f"polylog_series: positive integer order nu={nu}; use the integer-order path")
    if abs(nu - round(nu)) < cfg.pole_guard and round(nu) >= 1:
        raise PoleError(f"polylog_series: nu={nu} within pole guard of the integer {round(nu)}")
    t = 2.0 * math.pi * x
    lead = _leading(nu, x, sign, order_deriv)
    tail, err, used = zeta_power_series(order_deriv, nu, t if sign == "+" else -t, cfg)
    if sign == "-":
        return SeriesResult(complex(lead.real + tail, 0.0), err, used + 1)
    return SeriesResult(lead + tail, err, used + 1)


def polylog_order_deriv(j: int, n: int, x: float, sign: str,
                        cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """(d/dnu)^j Li_nu(e^{+-2 pi x}) at the non-positive integer order nu = 1 - n."""
    _check_sign(sign)
    _check_x(x)
    if j not in (1, 2):
        raise DomainError(f"j must be 1 or 2, got {j}")
    if n < 1:
        raise DomainError(f"n={n} must be >= 1")
    t = 2.0 * math.pi * x
    log_t = math.log(t)
    psi = digamma_pos_int(n)
    fact = math.factorial(n - 1)
    block = fact * t ** (-n)
    series, _, _ = zeta_power_series(j, 1.0 - n, t if sign == "+" else -t, cfg)
    quad = log_t * log_t - 2.0 * psi * log_t + psi * psi + trigamma_pos_int(n)
    if j == 1:
        if sign == "-":
            return complex(block * (log_t - psi) + series, 0.0)
        return (-1) ** n * block * complex(log_t - psi, math.pi) + series
    if sign == "-":
        return complex(block * quad + series, 0.0)
    return (
        (-1) ** (n + 1) * math.pi ** 2 * block
        + series
        + (-1) ** n * 2j * math.pi * block * (log_t - psi)
        + (-1) ** n * block * quad
    )


def polylog_minus(nu: float, x: float, cfg: EvalConfig = DEFAULT_CONFIG,
                  order_deriv: int = 0) -> float:
    """Li_nu(e^{-2 pi x}) for real nu, or its first/second nu-derivative.

    Sums the Dirichlet series sum_k e^{-2 pi x k}/k^nu directly when the ratio
    e^{-2 pi x} is small enough; near x = 0 falls back to :func:`polylog_series`
    (or :func:`polylog_pos_int`), except for nu-derivatives at positive integer
    nu, which stay on the direct sum.
    """
    _check_x(x)
    t = 2.0 * math.pi * x
    integer_order = nu >= 1.0 and nu == math.floor(nu)
    if t < 1.0:
        if order_deriv == 0 and integer_order:
            return polylog_pos_int(int(nu), x, cfg)
        if not integer_order:
            return polylog_series(nu, x, "-", cfg, order_deriv).value.real
        # nu-derivatives at positive integer nu: the series form is singular
        # there, the Dirichlet sum is not (it only needs more terms)
    w = math.exp(-t)
    terms = []
    wk = 1.0
    peak = 0.0
    for k in range(1, cfg.term_cap + 1):
        wk *= w
        term = wk * k ** (-nu) * (-math.log(k)) ** order_deriv
        terms.append(term)
        peak = max(peak, abs(term))
        if abs(term) < 1e-3 * cfg.tol_rel * peak and k > max(-nu, 1.0) / t + 2:
            return math.fsum(terms)
    raise AccuracyError(f"Li_{nu}(e^(-2 pi {x})) not converged in {cfg.term_cap} terms",
                        achieved=terms[-1])
