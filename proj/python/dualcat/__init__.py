"""Exact congruence checks for dual-sequence polynomials and Catalan sums.

The residue fast path works in Z/p^e for odd primes p and e in {1,2,3};
the exact_* functions are the big-rational oracle. Rational arguments may
be ints, "num/den" strings, or fractions.Fraction.
"""

from fractions import Fraction

from ._core import (
    DualcatError,
    binom_mod,
    check,
    dual_transform as _dual_transform,
    eval_catalan_inner,
    eval_d,
    eval_d_ljunggren,
    eval_j2,
    eval_s,
    exact_binom as _exact_binom,
    exact_catalan as _exact_catalan,
    exact_catalan_inner as _exact_catalan_inner,
    exact_d as _exact_d,
    exact_j2 as _exact_j2,
    exact_s as _exact_s,
    exact_statement_lhs as _exact_statement_lhs,
    is_prime,
    least_residue,
    legendre,
    reduce_mod,
    statement_ids,
    sweep,
    telescope,
    __version__,
)

__all__ = [
    "DualcatError",
    "binom_mod",
    "check",
    "dual_transform",
    "eval_catalan_inner",
    "eval_d",
    "eval_d_ljunggren",
    "eval_j2",
    "eval_s",
    "exact_binom",
    "exact_catalan",
    "exact_catalan_inner",
    "exact_d",
    "exact_j2",
    "exact_s",
    "exact_statement_lhs",
    "is_prime",
    "least_residue",
    "legendre",
    "reduce_mod",
    "statement_ids",
    "sweep",
    "telescope",
    "__version__",
]


def exact_d(n, x, y):
    return Fraction(_exact_d(n, x, y))


def exact_s(n, x, y):
    return Fraction(_exact_s(n, x, y))


def exact_j2(n):
    return Fraction(_exact_j2(n))


def exact_catalan_inner(n, a):
    return Fraction(_exact_catalan_inner(n, a))


def exact_binom(x, k):
    return Fraction(_exact_binom(x, k))


def exact_catalan(k):
    return int(_exact_catalan(k))


def exact_statement_lhs(statement, p, params=None):
    return Fraction(_exact_statement_lhs(statement, p, params or {}))


def dual_transform(seq, n):
    return Fraction(_dual_transform(list(seq), n))
