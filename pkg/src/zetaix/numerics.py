"""Combinatorial numbers and classical constants used by every formula.

Bernoulli numbers use the B_1 = -1/2 convention and are generated exactly
(rational arithmetic) once, then cached as floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243
# first Stieltjes constant, coefficient of -(s-1) in the Laurent series of zeta at 1
STIELTJES_GAMMA1 = -0.072815845483676724860586375874901319
LOG_2PI = math.log(2.0 * math.pi)

BERNOULLI_CAP = 60
EULERIAN_CAP = 25


@lru_cache(maxsize=1)
def _bernoulli_table() -> tuple[float, ...]:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0, exact in rationals
    b = [Fraction(1)]
    for k in range(1, BERNOULLI_CAP + 1):
        acc = sum(math.comb(k + 1, j) * b[j] for j in range(k))
        b.append(-acc / (k + 1))
    return tuple(float(v) for v in b)


def bernoulli_number(k: int) -> float:
    """B_k with B_1 = -1/2; odd k >= 3 give exactly 0.0."""
    if k < 0 or k > BERNOULLI_CAP:
        raise DomainError(f"bernoulli_number: k={k} outside [0, {BERNOULLI_CAP}]")
    return _bernoulli_table()[k]


def bernoulli_poly(n: int, z: complex) -> complex:
    """B_n(z) = sum_k C(n,k) B_k z^(n-k), Horner in z."""
    if n < 0 or n > BERNOULLI_CAP:
        raise DomainError(f"bernoulli_poly: n={n} outside [0, {BERNOULLI_CAP}]")
    z = complex(z)
    # coefficient of z^(n-k) is C(n,k) B_k; highest power first
    acc = 0j
    for k in range(n + 1):
        acc = acc * z + math.comb(n, k) * bernoulli_number(k)
    return acc


def harmonic(n: int) -> float:
    if n < 0:
        raise DomainError(f"harmonic: n={n} must be non-negative")
    return math.fsum(1.0 / k for k in range(1, n + 1))


def digamma_pos_int(n: int) -> float:
    """Psi(n) = -gamma + H_{n-1} for positive integers."""
    if n <= 0:
        raise DomainError(f"digamma_pos_int: pole at n={n}")
    return harmonic(n - 1) - EULER_GAMMA


def trigamma_pos_int(n: int) -> float:
    """Psi'(n) = pi^2/6 - sum_{k<n} 1/k^2 for positive integers."""
    if n <= 0:
        raise DomainError(f"trigamma_pos_int: pole at n={n}")
    partial = math.fsum(1.0 / (k * k) for k in range(1, n))
    return math.pi ** 2 / 6.0 - partial


def eulerian(n: int, k: int) -> float:
    """Eulerian number <n k>: permutations of n elements with k descents."""
    if n < 1 or n > EULERIAN_CAP:
        raise DomainError(f"eulerian: n={n} outside [1, {EULERIAN_CAP}]")
    if k < 0 or k >= n:
        raise DomainError(f"eulerian: need 0 <= k <= n-1, got n={n}, k={k}")
    total = sum((-1) ** j * math.comb(n + 1, j) * (k - j + 1) ** n for j in range(k + 2))
    return float(total)


def stieltjes_gamma1() -> float:
    return STIELTJES_GAMMA1


# -- trigonometric and gamma helpers on the real line ------------------------

def sinpi(x: float) -> float:
    """sin(pi*x), exactly zero at integers."""
    n = round(2.0 * x)
    r = x - 0.5 * n
    q = n % 4
    if q == 0:
        return math.sin(math.pi * r)
    if q == 1:
        return math.cos(math.pi * r)
    if q == 2:
        return -math.sin(math.pi * r)
    return -math.cos(math.pi * r)


def cospi(x: float) -> float:
    """cos(pi*x), exactly zero at half-integers."""
    return sinpi(x + 0.5) if abs(x) < 1e15 else math.cos(math.pi * x)


def gamma_sign_log(x: float) -> tuple[float, float]:
    """(sign of Gamma(x), log|Gamma(x)|) for real non-pole x."""
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x}")
    lg = math.lgamma(x)
    if x > 0.0:
        return 1.0, lg
    return (-1.0 if math.floor(x) % 2 else 1.0), lg


def _psi_asymptotic(x: float) -> float:
    inv2 = 1.0 / (x * x)
    acc = 0.0
    term = 1.0
    for k in range(1, 10):
        term *= inv2
        acc += bernoulli_number(2 * k) / (2 * k) * term
    return math.log(x) - 0.5 / x - acc


def _trigamma_asymptotic(x: float) -> float:
    inv2 = 1.0 / (x * x)
    acc = 0.0
    term = 1.0 / x
    for k in range(1, 10):
        term *= inv2
        acc += bernoulli_number(2 * k) * term
    return 1.0 / x + 0.5 * inv2 + acc


def digamma(x: float) -> float:
    """Digamma at a real non-pole argument.

    Recurrence up to x >= 8 then the asymptotic series; reflection for x < 0.5.
    """
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"digamma has a pole at {x}")
    if x < 0.5:
        return digamma(1.0 - x) - math.pi * cospi(x) / sinpi(x)
    shift = 0.0
    while x < 8.0:
        shift -= 1.0 / x
        x += 1.0
    return shift + _psi_asymptotic(x)


def trigamma(x: float) -> float:
    """Trigamma at a real non-pole argument (same scheme as :func:`digamma`)."""
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"trigamma has a pole at {x}")
    if x < 0.5:
        s = sinpi(x)
        return math.pi ** 2 / (s * s) - trigamma(1.0 - x)
    shift = 0.0
    while x < 8.0:
        shift += 1.0 / (x * x)
        x += 1.0
    return shift + _trigamma_asymptotic(x)
