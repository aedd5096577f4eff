"""Riemann zeta function and its first two derivatives on the real line.

For sigma >= -1/4 the value comes from Euler-Maclaurin summation, with every
piece (partial sum, integral tail, half term, Bernoulli corrections)
differentiated analytically in sigma.  Left of that, direct summation loses
everything to cancellation (partial sums grow like N^(1-sigma)), so the
functional equation is used instead, differentiated through its logarithmic
derivative and evaluated in log space.  The log-space form also lets callers
request ``zeta^(j)(sigma) * exp(log_scale)`` when the bare value would
overflow a double (|zeta(-n)| grows like n!/(2 pi)^n).
"""

from __future__ import annotations

import math

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import AccuracyError, DomainError, PoleError
from .numerics import bernoulli_number, cospi, digamma, sinpi, trigamma

_FE_THRESHOLD = -0.25
_N_START = 8
_N_MAX = 256
_K_CORR = 16

# B_{2k}/(2k)! for k = 1..K+1
_EM_COEF = tuple(bernoulli_number(2 * k) / math.factorial(2 * k) for k in range(1, _K_CORR + 2))


def _em_zeta(order: int, sigma: float, n_direct: int) -> tuple[float, float]:
    """Euler-Maclaurin value of zeta^(order)(sigma) and the first dropped term."""
    log_n = math.log(n_direct)
    sign = (-1.0) ** order

    partial = math.fsum(
        sign * math.log(n) ** order * n ** (-sigma) for n in range(2, n_direct)
    )
    if order == 0:
        partial += 1.0

    # d^j/du^j [e^{-uL}/u] at u = sigma - 1
    u = sigma - 1.0
    e_tail = math.exp(-u * log_n)
    tail = 0.0
    for i in range(order + 1):
        tail += math.comb(order, i) * (-log_n) ** (order - i) * (-1) ** i * math.factorial(i) / u ** (i + 1)
    tail *= e_tail

    n_pow = n_direct ** (-sigma)
    half = 0.5 * n_pow * (-log_n) ** order

    # P_k(sigma) = prod_{i=0}^{2k-2} (sigma + i) carried with two derivatives
    p0, p1, p2 = sigma, 1.0, 0.0
    corr = 0.0
    dropped = 0.0
    for k in range(1, _K_CORR + 2):
        if k > 1:
            for a in (sigma + 2 * k - 3, sigma + 2 * k - 2):
                p0, p1, p2 = p0 * a, p1 * a + p0, p2 * a + 2.0 * p1
        e = n_direct ** (-sigma - 2 * k + 1)
        if order == 0:
            g = p0
        elif order == 1:
            g = p1 - log_n * p0
        else:
            g = p2 - 2.0 * log_n * p1 + log_n * log_n * p0
        term = _EM_COEF[k - 1] * g * e
        if k <= _K_CORR:
            corr += term
        else:
            dropped = abs(term)
    value = partial + tail + half + corr
    return value, dropped


def _zeta_em(order: int, sigma: float, tol: float) -> tuple[float, float]:
    n_direct = _N_START
    while True:
        value, err = _em_zeta(order, sigma, n_direct)
        if err <= tol * abs(value) or err < 1e-300:
            return value, err
        if n_direct >= _N_MAX:
            raise AccuracyError(
                f"Euler-Maclaurin for zeta^({order})({sigma}) stalled at N={n_direct}",
                achieved=err,
            )
        n_direct *= 2


def _zeta_functional(order: int, sigma: float, log_scale: float, tol: float,
                     log_amp: float | None = None) -> tuple[float, float]:
    # zeta(sigma) = A(sigma) sin(pi sigma/2),  A = 2^sigma pi^(sigma-1) Gamma(1-sigma) zeta(1-sigma)
    # log_amp, when given, replaces sigma ln 2 + (sigma-1) ln pi + lgamma(1-sigma) + log_scale
    t = 1.0 - sigma
    z0, e0 = _zeta_em(0, t, tol)
    if log_amp is None:
        log_amp = sigma * math.log(2.0) + (sigma - 1.0) * math.log(math.pi) + math.lgamma(t) + log_scale
    log_a = log_amp + math.log(z0)
    s = sinpi(0.5 * sigma)
    c = cospi(0.5 * sigma)
    amp = math.exp(log_a) if log_a < 709.0 else math.inf
    if order == 0:
        value = amp * s
    else:
        z1, _ = _zeta_em(1, t, tol)
        dlog = math.log(2.0 * math.pi) - digamma(t) - z1 / z0
        if order == 1:
            value = amp * (dlog * s + 0.5 * math.pi * c)
        else:
            z2, _ = _zeta_em(2, t, tol)
            d2log = trigamma(t) + z2 / z0 - (z1 / z0) ** 2
            value = amp * ((dlog * dlog + d2log) * s + math.pi * dlog * c - 0.25 * math.pi ** 2 * s)
    if math.isinf(value):
        raise AccuracyError(f"zeta^({order})({sigma}) overflows; pass a log_scale", achieved=math.inf)
    # the exponent carries an absolute error ~ ulp(log_a); that is the dominant term
    err = abs(value) * (4e-16 * (1.0 + abs(log_a)) + e0 / z0)
    return value, err


def riemann_zeta_with_error(order: int, sigma: float, cfg: EvalConfig = DEFAULT_CONFIG,
                            log_scale: float = 0.0) -> tuple[float, float]:
    """``(zeta^(order)(sigma) * exp(log_scale), error estimate)``."""
    if order not in (0, 1, 2):
        raise DomainError(f"derivative order must be 0, 1 or 2, got {order}")
    if abs(sigma - 1.0) < cfg.pole_guard:
        raise PoleError(f"zeta_R pole: sigma={sigma} within {cfg.pole_guard} of 1")
    if sigma < _FE_THRESHOLD:
        return _zeta_functional(order, sigma, log_scale, cfg.tol_rel)
    value, err = _zeta_em(order, sigma, cfg.tol_rel)
    if log_scale:
        f = math.exp(log_scale)
        value, err = value * f, err * f
    return value, err


def riemann_zeta(order: int, sigma: float, cfg: EvalConfig = DEFAULT_CONFIG,
                 log_scale: float = 0.0) -> float:
    """d^order/dsigma^order zeta_R(sigma), optionally times exp(log_scale).

    Valid for every real sigma outside the pole guard around 1.
    """
    return riemann_zeta_with_error(order, sigma, cfg, log_scale)[0]


def zeta_power_series(order: int, sigma0: float, t: float, cfg: EvalConfig = DEFAULT_CONFIG,
                      step: int = 1, power0: int = 0) -> tuple[float, float, int]:
    """Sum ``zeta^(order)(sigma0 - step*k) * t^p / p!`` over k >= 0, p = power0 + step*k.

    This is the coefficient stream shared by every polylog expansion.  Each
    term is formed in log space, so very negative zeta arguments do not
    overflow.  Summation stops once three consecutive terms fall below
    ``tol_rel`` times the running sum after the terms have started to decay.
    Returns ``(sum, error estimate, terms used)``.
    """
    if step < 1 or power0 < 0:
        raise DomainError("zeta_power_series: step >= 1 and power0 >= 0 required")
    log_t = math.log(abs(t)) if t else -math.inf
    neg = t < 0.0
    ratio = min((abs(t) / (2.0 * math.pi)) ** step, 0.999)

    terms: list[float] = []
    running = 0.0
    rounding = 0.0
    small_run = 0
    recent: list[float] = []
    # three digits below tol_rel: downstream formulas cancel O(1) pieces
    threshold = 1e-3 * cfg.tol_rel
    # Left of the functional-equation threshold the exponent
    #   sigma ln 2 + (sigma-1) ln pi + lgamma(1-sigma) + p ln|t| - lgamma(p+1)
    # is a small difference of large numbers; it is carried incrementally
    # instead (lgamma difference via log1p, powers via ln(|t|/2pi)).
    log_ratio = log_t - math.log(2.0 * math.pi)
    shift = -sigma0 - power0
    lg_diff = None
    for k in range(cfg.term_cap):
        p = power0 + step * k
        sigma = sigma0 - step * k
        if t == 0.0 and p > 0:
            term, err = 0.0, 0.0
        elif sigma < _FE_THRESHOLD:
            if lg_diff is None:
                lg_diff = math.lgamma(1.0 - sigma) - math.lgamma(p + 1.0)
            else:
                for i in range(step):
                    lg_diff += math.log1p(shift / (p - i))
            log_amp = (sigma0 * math.log(2.0 * math.pi) - math.log(math.pi)
                       + (power0 * log_t if power0 else 0.0) + step * k * log_ratio + lg_diff)
            term, err = _zeta_functional(order, sigma, 0.0, cfg.tol_rel, log_amp)
            if neg and p % 2:
                term = -term
        else:
            scale = p * log_t - math.lgamma(p + 1) if p > 0 else 0.0
            term, err = riemann_zeta_with_error(order, sigma, cfg, scale)
            if neg and p % 2:
                term = -term
        terms.append(term)
        rounding += err
        mag = abs(term)
        running += term
        # zeta(sigma) carries a sin(pi sigma/2) modulation, so compare against
        # the envelope of the last few terms rather than the previous one
        decaying = not recent or mag <= max(recent)
        recent = (recent + [mag])[-4:]
        if mag <= threshold * abs(running) + 1e-300 and decaying:
            small_run += 1
            if small_run >= 3:
                total = math.fsum(terms)
                last = max(abs(v) for v in terms[-3:])
                tail = 2.0 * last * ratio / (1.0 - ratio)
                return total, tail + rounding + 1e-16 * abs(total), k + 1
        else:
            small_run = 0
    raise AccuracyError(
        f"zeta power series (order {order}, sigma0={sigma0}, t={t}) not converged "
        f"after {cfg.term_cap} terms",
        achieved=abs(terms[-1]) if terms else math.inf,
    )
