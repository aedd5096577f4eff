"""Independent reference values for zeta_H(s, ix).

Euler-Maclaurin summation applied directly to sum_k (k + a)^(-s): a finite
partial sum, the integral tail, the half term and Bernoulli corrections.  The
same formula is the analytic continuation to s < 1, so no polylogarithms,
Riemann zeta values or integer-specific closed forms are involved; the only
thing shared with the main evaluation path is the complex return type.

For s < 0 the partial sum grows like N^(1-s) while the answer stays O(1), so
the arithmetic is done in mpmath multiprecision numbers (``OracleConfig.dps``
digits).  mpmath is used purely as an arithmetic backend here.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .errors import DomainError, PoleError, ZetaError


class OracleError(ZetaError):
    """The oracle cannot produce a trustworthy value with the given settings."""


@dataclass(frozen=True)
class OracleConfig:
    direct_terms: int = 64
    em_order: int = 12
    fd_step: float = 1e-3
    fd_levels: int = 3
    dps: int = 40

    def __post_init__(self):
        if self.em_order % 2:
            raise DomainError(f"em_order must be even, got {self.em_order}")
        if self.direct_terms < 16:
            raise DomainError(f"direct_terms must be >= 16, got {self.direct_terms}")
        if self.fd_levels < 1 or self.fd_step <= 0:
            raise DomainError("fd_levels >= 1 and fd_step > 0 required")


DEFAULT_ORACLE = OracleConfig()
POLE_MARGIN = 1e-4


def _em_hurwitz(s, a, cfg: OracleConfig) -> tuple[mpmath.mpc, mpmath.mpf]:
    """Euler-Maclaurin sum for zeta_H(s, a); returns (value, first dropped correction)."""
    n = cfg.direct_terms
    total = mpmath.fsum(mpmath.power(k + a, -s) for k in range(n))
    z = n + a
    total += mpmath.power(z, 1 - s) / (s - 1) + mpmath.power(z, -s) / 2
    poch = mpmath.mpf(s)        # s (s+1) ... (s+2j-2)
    dropped = mpmath.mpf(0)
    for j in range(1, cfg.em_order + 2):
        if j > 1:
            poch *= (s + 2 * j - 3) * (s + 2 * j - 2)
        term = mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * poch * mpmath.power(z, -s - 2 * j + 1)
        if j <= cfg.em_order:
            total += term
        else:
            dropped = abs(term)
    return total, dropped


def oracle_hurwitz_at(s: float, a: complex, cfg: OracleConfig = DEFAULT_ORACLE) -> complex:
    """zeta_H(s, a) for real s and complex a with Re(a) >= 0, a != 0."""
    with mpmath.workdps(cfg.dps):
        value, _ = _em_hurwitz(mpmath.mpf(s), mpmath.mpc(a), cfg)
        return complex(value)


def _validate(s: float, x: float, cfg: OracleConfig) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"x={x} outside the open interval (0, 1)")
    if abs(s - 1.0) < POLE_MARGIN:
        raise PoleError(f"oracle: s={s} within {POLE_MARGIN} of the pole at s=1")
    if s <= 1 - cfg.em_order:
        raise OracleError(f"oracle: s={s} too negative for em_order={cfg.em_order}; widen the order")


def oracle_hurwitz_with_error(s: float, x: float,
                              cfg: OracleConfig = DEFAULT_ORACLE) -> tuple[complex, float]:
    _validate(s, x, cfg)
    with mpmath.workdps(cfg.dps):
        value, dropped = _em_hurwitz(mpmath.mpf(s), mpmath.mpc(0, x), cfg)
        rounding = mpmath.mpf(10) ** (-cfg.dps) * cfg.direct_terms ** max(1.0 - s, 1.0)
        return complex(value), float(dropped + rounding)


def oracle_hurwitz(s: float, x: float, cfg: OracleConfig = DEFAULT_ORACLE) -> complex:
    """Reference value of zeta_H(s, ix)."""
    return oracle_hurwitz_with_error(s, x, cfg)[0]


def oracle_hurwitz_deriv_with_error(s: float, x: float,
                                    cfg: OracleConfig = DEFAULT_ORACLE) -> tuple[complex, float]:
    """Richardson-extrapolated central difference of the oracle in s."""
    widest = cfg.fd_step * 2 ** cfg.fd_levels
    if abs(s + widest - 1.0) < POLE_MARGIN or abs(s - widest - 1.0) < POLE_MARGIN or abs(s - 1.0) <= widest:
        raise PoleError(f"oracle derivative: stencil around s={s} crosses the pole at s=1")
    _validate(s - widest, x, cfg)
    with mpmath.workdps(cfg.dps):
        sm = mpmath.mpf(s)
        a = mpmath.mpc(0, x)
        table: list[list[mpmath.mpc]] = []
        for i in range(cfg.fd_levels + 1):
            h = mpmath.mpf(widest) / 2 ** i
            up, _ = _em_hurwitz(sm + h, a, cfg)
            down, _ = _em_hurwitz(sm - h, a, cfg)
            row = [(up - down) / (2 * h)]
            for k in range(1, i + 1):
                row.append(row[k - 1] + (row[k - 1] - table[i - 1][k - 1]) / (4 ** k - 1))
            table.append(row)
        best = table[-1][-1]
        err = abs(best - table[-2][-2])
        return complex(best), float(err)


def oracle_hurwitz_deriv(s: float, x: float, cfg: OracleConfig = DEFAULT_ORACLE) -> complex:
    """Reference value of d/ds zeta_H(s, ix)."""
    return oracle_hurwitz_deriv_with_error(s, x, cfg)[0]


def oracle_residue_check(epsilon: float, x: float, cfg: OracleConfig = DEFAULT_ORACLE) -> float:
    """|epsilon * zeta_H(1 + epsilon, ix) - 1|, which vanishes linearly as the residue is 1."""
    if not 1e-5 <= epsilon <= 1e-2:
        raise DomainError(f"epsilon={epsilon} outside [1e-5, 1e-2]")
    if not 0.0 < x < 1.0:
        raise DomainError(f"x={x} outside the open interval (0, 1)")
    with mpmath.workdps(cfg.dps):
        eps = mpmath.mpf(epsilon)
        value, _ = _em_hurwitz(1 + eps, mpmath.mpc(0, x), cfg)
        return float(abs(eps * value - 1))
