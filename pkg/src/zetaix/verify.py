"""Self-verification suites run by ``zetaix verify`` and the acceptance tests.

Each suite returns a :class:`SuiteResult` carrying the worst error it saw and
the tolerance it was held to.  Errors are measured relative to
``max(1, |reference|)`` unless the suite says otherwise, so values that
happen to be close to zero are judged on an absolute scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .config import DEFAULT_CONFIG, EvalConfig
from .hurwitz import EvalPoint, evaluate, hurwitz_deriv_generic, hurwitz_generic
from .numerics import bernoulli_number, bernoulli_poly
from .oracle import oracle_hurwitz, oracle_hurwitz_deriv, oracle_residue_check
from .polylog import polylog_neg_int, polylog_order_deriv, polylog_series
from .riemann import riemann_zeta


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name:<15} max_err={self.max_error:.3e}  tol={self.tolerance:.1e}"
        return f"{text}  {self.detail}" if self.detail else text


def _mixed(value: complex, ref: complex) -> float:
    return abs(value - ref) / max(1.0, abs(ref))


def _relative(value: complex, ref: complex) -> float:
    return abs(value - ref) / abs(ref)


def _result(name: str, errors: list[tuple[float, str]], tol: float) -> SuiteResult:
    worst, where = max(errors)
    return SuiteResult(name, worst <= tol, worst, tol, f"worst at {where}")


ORACLE_S = (-3.5, -1.25, -0.5, 0.3, 2.5, 4.5, -6, -5, -4, -3, -2, -1, 2, 3, 4, 5, 6)
ORACLE_X = (0.1, 0.5, 0.9)


def suite_bernoulli(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """zeta_H(-n, ix) = -B_{n+1}(ix)/(n+1), per component, relative 1e-10 or absolute 1e-12."""
    tol = 1e-10
    errors = []
    for n in range(11):
        for i in range(1, 20):
            x = 0.05 * i
            got = evaluate(EvalPoint(-n, x), cfg).value
            ref = -bernoulli_poly(n + 1, 1j * x) / (n + 1)
            for g, r, part in ((got.real, ref.real, "re"), (got.imag, ref.imag, "im")):
                diff = abs(g - r)
                # components within 1e-12 of zero are judged absolutely, scaled to the relative budget
                err = diff * tol / 1e-12 if abs(r) < 1e-2 else diff / abs(r)
                errors.append((err, f"n={n} x={x:.2f} {part}"))
    return _result("bernoulli", errors, tol)


def suite_oracle_values(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    errors = []
    for s in ORACLE_S:
        for x in ORACLE_X:
            got = evaluate(EvalPoint(s, x), cfg).value
            errors.append((_relative(got, oracle_hurwitz(s, x)), f"s={s} x={x}"))
    return _result("oracle-values", errors, 1e-8)


def suite_oracle_derivs(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    errors = []
    for s in ORACLE_S:
        for x in ORACLE_X:
            got = evaluate(EvalPoint(s, x, 1), cfg).value
            errors.append((_relative(got, oracle_hurwitz_deriv(s, x)), f"s={s} x={x}"))
    return _result("oracle-derivs", errors, 1e-6)


def suite_inversion(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """Li_{-n}(w) + (-1)^n Li_{-n}(1/w) = 0 for n >= 1; Li_0 gives -1 instead."""
    errors = []
    for n in range(9):
        for w in (0.1, 0.37, 0.8):
            a = polylog_neg_int(n, w)
            b = polylog_neg_int(n, 1.0 / w)
            target = -1.0 if n == 0 else 0.0
            residual = a + (-1) ** n * b - target
            errors.append((abs(residual) / max(abs(a), abs(b), 1.0), f"n={n} w={w}"))
    return _result("inversion", errors, 1e-10)


def suite_eulerian(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    errors = []
    for n in range(1, 9):
        for w in (0.1, 0.5, 0.9):
            terms = []
            k = 1
            while True:
                term = k ** n * w ** k
                terms.append(term)
                if k > n / -math.log(w) and term < 1e-18 * max(terms):
                    break
                k += 1
            ref = math.fsum(terms)
            errors.append((abs(polylog_neg_int(n, w) - ref) / ref, f"n={n} w={w}"))
    return _result("eulerian", errors, 1e-11)


def suite_riemann(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """Trivial zeros zeta(-2m) and the even values zeta(2m) from Bernoulli numbers."""
    errors = []
    for m in range(1, 7):
        errors.append((abs(riemann_zeta(0, -2.0 * m, cfg)), f"zeta(-{2 * m})"))
        ref = (-1) ** (m + 1) * bernoulli_number(2 * m) * (2 * math.pi) ** (2 * m) / (2 * math.factorial(2 * m))
        errors.append((abs(riemann_zeta(0, 2.0 * m, cfg) - ref) / ref, f"zeta({2 * m})"))
    return _result("riemann", errors, 1e-12)


def suite_residue(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """eps * zeta_H(1+eps, ix) - 1 vanishes linearly: below 5e-2 at eps=1e-3, ratios near 10."""
    tol = 5e-2
    worst = 0.0
    ok = True
    notes = []
    for x in (0.25, 0.75):
        r = [oracle_residue_check(eps, x) for eps in (1e-2, 1e-3, 1e-4)]
        worst = max(worst, r[1])
        ratios = (r[0] / r[1], r[1] / r[2])
        ok &= r[1] < tol and all(5.0 < q < 20.0 for q in ratios)
        notes.append(f"x={x} ratios={ratios[0]:.2f},{ratios[1]:.2f}")
    return SuiteResult("residue", ok, worst, tol, "; ".join(notes))


def suite_vanishing(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """G(2m, x) and F(2m+1, x) rebuilt from Li_{-n}(e^{+-2 pi x}); scaled by the largest piece."""
    errors = []
    for m in (1, 2, 3):
        for x in (0.2, 0.5, 0.8):
            up, down = math.exp(2 * math.pi * x), math.exp(-2 * math.pi * x)
            a, b = polylog_neg_int(2 * m - 1, up), polylog_neg_int(2 * m - 1, down)
            errors.append((abs(a - b) / max(1.0, abs(a), abs(b)), f"G(2m) m={m} x={x}"))
            a, b = polylog_neg_int(2 * m, up), polylog_neg_int(2 * m, down)
            errors.append((abs(a + b) / max(1.0, abs(a), abs(b)), f"F(2m+1) m={m} x={x}"))
    return _result("vanishing", errors, 1e-12)


def suite_seam(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """Continuity of :func:`evaluate` across the snap radius at every integer.

    The detail also records the raw Jonquiere formula at the same points; it is
    not what ``evaluate`` returns there (see the near-integer band in hurwitz).
    """
    errors = []
    raw_worst = 0.0
    offset = 10 * cfg.integer_snap
    for n in (*range(-6, 0), *range(2, 7)):
        for x in (0.2, 0.5, 0.8):
            for deriv, generic in ((0, hurwitz_generic), (1, hurwitz_deriv_generic)):
                fast = evaluate(EvalPoint(n, x, deriv), cfg).value
                for side in (-1, 1):
                    s = n + side * offset
                    near = evaluate(EvalPoint(s, x, deriv), cfg).value
                    errors.append((_mixed(near, fast), f"n={n} x={x} deriv={deriv} side={side:+d}"))
                    raw_worst = max(raw_worst, _mixed(generic(s, x, cfg).value, fast))
    result = _result("seam", errors, 1e-4)
    return SuiteResult(result.name, result.passed, result.max_error, result.tolerance,
                       f"{result.detail}; raw formula worst {raw_worst:.1e}")


def _fd5(f: Callable[[float], float], nu: float, h: float, order: int) -> float:
    fm2, fm1, f0, fp1, fp2 = (f(nu + k * h) for k in (-2, -1, 0, 1, 2))
    if order == 1:
        return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
    return (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)


def suite_polylog_derivs(cfg: EvalConfig = DEFAULT_CONFIG) -> SuiteResult:
    """Order derivatives at nu = 1-n against 5-point nu-differences; worst error over budget."""
    budget = {1: 1e-7, 2: 1e-5}
    errors = []
    for j, h in ((1, 1e-3), (2, 1e-2)):
        for n in (1, 2, 3):
            for x in (0.2, 0.5, 0.8):
                ref = _fd5(lambda nu: polylog_series(nu, x, "-", cfg).value.real, 1.0 - n, h, j)
                got = polylog_order_deriv(j, n, x, "-", cfg)
                # normalise so both orders share the pass threshold of 1
                errors.append((_mixed(got, ref) / budget[j], f"j={j} n={n} x={x}"))
    return _result("polylog-derivs", errors, 1.0)


SUITES: dict[str, Callable[[EvalConfig], SuiteResult]] = {
    "bernoulli": suite_bernoulli,
    "oracle-values": suite_oracle_values,
    "oracle-derivs": suite_oracle_derivs,
    "inversion": suite_inversion,
    "eulerian": suite_eulerian,
    "riemann": suite_riemann,
    "residue": suite_residue,
    "vanishing": suite_vanishing,
    "seam": suite_seam,
    "polylog-derivs": suite_polylog_derivs,
}


def run_suites(names: list[str] | None = None, cfg: EvalConfig = DEFAULT_CONFIG) -> list[SuiteResult]:
    selected = names or list(SUITES)
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    return [SUITES[name](cfg) for name in selected]
