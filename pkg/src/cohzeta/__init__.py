"""Exact q-series and zeta-function formulas for quadratic orders over F_q[[T]].

Values are Laurent polynomials in ``q`` and ``t = q^(-s)`` with exact
integer coefficients.  The :mod:`cohzeta.oracle` subpackage recomputes the
same numbers by enumerating submodules over small prime fields.
"""

from .identity import IdentityResult, check_identity
from .laurent import (
    ONE,
    Q,
    T,
    ZERO,
    NonPolynomialError,
    PochFactor,
    QTFraction,
    QTLaurent,
    TSeries,
    monomial,
    poch,
    qbinom,
    substitute,
)
from .partitions import Partition, column, rectangle, subpartitions
from .qseries import (
    SumFamily,
    ag_multisum,
    br_multisum,
    g_skew,
    hall_g,
    infinite_sum,
    product_side,
    singlesum,
)
from .zeta import (
    ClosedForm,
    DescentRule,
    OrderFamily,
    closed_form_coh,
    coh_finitized,
    inert_m1_count,
    key_lemma,
    nakayama_compose,
    normalize_nuhat,
    nuhat_zero,
    nuhat_zero_prediction,
    reflection_check,
    rtilde_zeta,
    saturation_zeta,
    solomon_zeta,
)

__all__ = [
    "IdentityResult",
    "check_identity",
    "ONE",
    "Q",
    "T",
    "ZERO",
    "NonPolynomialError",
    "PochFactor",
    "QTFraction",
    "QTLaurent",
    "TSeries",
    "monomial",
    "poch",
    "qbinom",
    "substitute",
    "Partition",
    "column",
    "rectangle",
    "subpartitions",
    "SumFamily",
    "ag_multisum",
    "br_multisum",
    "g_skew",
    "hall_g",
    "infinite_sum",
    "product_side",
    "singlesum",
    "ClosedForm",
    "DescentRule",
    "OrderFamily",
    "closed_form_coh",
    "coh_finitized",
    "inert_m1_count",
    "key_lemma",
    "nakayama_compose",
    "normalize_nuhat",
    "nuhat_zero",
    "nuhat_zero_prediction",
    "reflection_check",
    "rtilde_zeta",
    "saturation_zeta",
    "solomon_zeta",
]

__version__ = "0.1.0"
