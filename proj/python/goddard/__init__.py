"""Exact-arithmetic toolkit for the Goddard series S_k, A_k, B_k.

The heavy lifting happens in the C++ extension ``goddard._core``: exact
rational series expansion, coefficient-by-coefficient verification of the
closed forms, and double-precision evaluation with alternating-series tail
bounds.
"""

from goddard._core import (
    binomial,
    bivariate_matches,
    closed_coefficients,
    closed_form_terms,
    direct_coefficients,
    eval_closed,
    eval_partial,
    factorial,
    sample_grid,
    tail_bound,
    verify,
)

__all__ = [
    "binomial",
    "bivariate_matches",
    "closed_coefficients",
    "closed_form_terms",
    "direct_coefficients",
    "eval_closed",
    "eval_partial",
    "factorial",
    "sample_grid",
    "tail_bound",
    "verify",
]
