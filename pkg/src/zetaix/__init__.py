"""Hurwitz zeta function at purely imaginary shift, zeta_H(s, ix) for 0 < x < 1."""

from .config import DEFAULT_CONFIG, ComplexValue, EvalConfig, SeriesResult
from .errors import AccuracyError, DomainError, PoleError, SnapError, ZetaError
from .hurwitz import (
    EvalOutcome,
    EvalPoint,
    evaluate,
    hurwitz_deriv_generic,
    hurwitz_deriv_neg_int,
    hurwitz_deriv_pos_int,
    hurwitz_generic,
    hurwitz_neg_int,
    hurwitz_pos_int,
    hurwitz_zeta_ix,
)
from .oracle import OracleConfig, oracle_hurwitz, oracle_hurwitz_deriv, oracle_residue_check
from .polylog import polylog_neg_int, polylog_order_deriv, polylog_series
from .riemann import riemann_zeta

__all__ = [
    "AccuracyError", "ComplexValue", "DEFAULT_CONFIG", "DomainError", "EvalConfig", "EvalOutcome",
    "EvalPoint", "OracleConfig", "PoleError", "SeriesResult", "SnapError", "ZetaError", "evaluate",
    "hurwitz_deriv_generic", "hurwitz_deriv_neg_int", "hurwitz_deriv_pos_int", "hurwitz_generic",
    "hurwitz_neg_int", "hurwitz_pos_int", "hurwitz_zeta_ix", "oracle_hurwitz", "oracle_hurwitz_deriv",
    "oracle_residue_check", "polylog_neg_int", "polylog_order_deriv", "polylog_series", "riemann_zeta",
]
__version__ = "0.1.0"
