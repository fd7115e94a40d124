"""Exact arithmetic for maximal subfields generated by polynomial and word values.

Thin re-export of the compiled core. Matrices are lists of rows whose entries
are decimal strings (over Q) or integers (over finite fields); the shorthand
strings accepted by the CLI (``identity2``, ``diag:2,3``, ``e12``) work
anywhere a matrix is expected.
"""

from maxsubfield._core import (
    DEFAULT_SEED,
    SCHEMA_VERSION,
    MathError,
    ParseError,
    SearchExhausted,
    __version__,
    audit_bound,
    build_pm,
    build_qm,
    evaluate,
    evaluate_quaternion,
    gn_check_degree,
    gn_nonvanishing,
    max_subfield,
    min_poly,
    parse_expr,
    preimage,
    word_preimage,
)

__all__ = [
    "DEFAULT_SEED",
    "SCHEMA_VERSION",
    "MathError",
    "ParseError",
    "SearchExhausted",
    "__version__",
    "audit_bound",
    "build_pm",
    "build_qm",
    "evaluate",
    "evaluate_quaternion",
    "gn_check_degree",
    "gn_nonvanishing",
    "max_subfield",
    "min_poly",
    "parse_expr",
    "preimage",
    "word_preimage",
]
