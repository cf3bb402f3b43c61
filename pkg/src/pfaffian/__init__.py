"""Exact exterior calculus, integrability tests and admissible-curve planning
for hyperplane distributions, with a numeric reachability explorer."""

from .exterior import (
    CScalar,
    KForm,
    Poly,
    PolyMap,
    VarSpace,
    VField,
    contract,
    dform,
    eval_two_form,
    lie_bracket,
    lie_derivative_fn,
    pullback,
    wedge,
)
from .grammar import parse_field, parse_form, parse_point, parse_poly
from .integrability import bracket_defect, cartan_residual, contact_class, frobenius_form

__all__ = [
    "CScalar",
    "KForm",
    "Poly",
    "PolyMap",
    "VarSpace",
    "VField",
    "contract",
    "dform",
    "eval_two_form",
    "lie_bracket",
    "lie_derivative_fn",
    "pullback",
    "wedge",
    "parse_field",
    "parse_form",
    "parse_point",
    "parse_poly",
    "bracket_defect",
    "cartan_residual",
    "contact_class",
    "frobenius_form",
]

__version__ = "0.1.0"
