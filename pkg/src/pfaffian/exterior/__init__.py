"""Exact exterior calculus over the Gaussian rationals."""

from .scalar import CScalar, I, ONE, ZERO, as_scalar
from .poly import DEFAULT_DEGREE_CAP, Poly, VarSpace, degree_cap, get_degree_cap
from .forms import (
    KForm,
    PolyMap,
    VField,
    contract,
    dform,
    eval_two_form,
    lie_bracket,
    lie_derivative_fn,
    pullback,
    wedge,
    wedge_power,
)

__all__ = [
    "CScalar",
    "I",
    "ONE",
    "ZERO",
    "as_scalar",
    "DEFAULT_DEGREE_CAP",
    "Poly",
    "VarSpace",
    "degree_cap",
    "get_degree_cap",
    "KForm",
    "PolyMap",
    "VField",
    "contract",
    "dform",
    "eval_two_form",
    "lie_bracket",
    "lie_derivative_fn",
    "pullback",
    "wedge",
    "wedge_power",
]
