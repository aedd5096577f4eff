from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DomainError

ComplexValue = complex


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and caps threaded through every evaluation.

    ``tol_rel`` is the target relative accuracy of series truncation,
    ``term_cap`` bounds the number of terms of any coefficient series,
    ``integer_snap`` is the radius inside which a real ``s`` is treated as the
    nearest integer, and ``pole_guard`` is the exclusion radius around
    arguments where the Riemann zeta function has its pole.
    """

    tol_rel: float = 1e-12
    term_cap: int = 2000
    integer_snap: float = 1e-6
    pole_guard: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.tol_rel < 1.0:
            raise DomainError(f"tol_rel must lie in (0, 1), got {self.tol_rel}")
        if not 0.0 < self.integer_snap < 0.5:
            raise DomainError(f"integer_snap must lie in (0, 0.5), got {self.integer_snap}")
        if self.pole_guard <= 0.0:
            raise DomainError(f"pole_guard must be positive, got {self.pole_guard}")
        if self.term_cap < 8:
            raise DomainError(f"term_cap too small: {self.term_cap}")

    @classmethod
    def from_env(cls, **overrides) -> "EvalConfig":
        """Default config, with ``ZETAIX_TOL`` overriding ``tol_rel`` if set."""
        env = os.environ.get("ZETAIX_TOL")
        if env and "tol_rel" not in overrides:
            overrides["tol_rel"] = float(env)
        return cls(**overrides)


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    error_estimate: float
    terms_used: int
