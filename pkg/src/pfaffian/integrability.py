"""Integrability of hyperplane distributions ``ker(omega)``.

The Frobenius 3-form ``omega ^ d(omega)`` vanishes identically exactly
when the distribution is integrable. More generally the class of
``omega`` is the least ``k >= 1`` with ``omega ^ d(omega)^k == 0``; the
standard contact form ``x dy + dz`` on a 3-space has class 2.
"""

from dataclasses import dataclass

from .errors import DegenerateInputError, TangencyError
from .exterior import (
    KForm,
    contract,
    dform,
    eval_two_form,
    lie_bracket,
    lie_derivative_fn,
    wedge,
)

__all__ = [
    "ContactClassReport",
    "frobenius_form",
    "contact_class",
    "cartan_residual",
    "cartan_terms",
    "bracket_defect",
    "max_class",
]


def _require_one_form(omega):
    if not isinstance(omega, KForm) or omega.degree != 1:
        raise ValueError("expected a 1-form")
    if omega.is_zero():
        raise DegenerateInputError("the zero 1-form does not define a distribution")


def max_class(n):
    """Largest possible class of a 1-form on an ``n``-dimensional space."""
    return (n + 1) // 2


def frobenius_form(omega):
    """``omega ^ d(omega)``; identically zero iff ``ker(omega)`` is integrable."""
    _require_one_form(omega)
    return wedge(omega, dform(omega))


@dataclass(frozen=True)
class ContactClassReport:
    """Result of :func:`contact_class`.

    ``witness`` is ``omega ^ d(omega)^(k-1)``, nonzero by minimality of
    ``k``; its zero set is where the class drops.
    """

    k: int
    witness: KForm
    integrable: bool


def contact_class(omega):
    """Least ``k >= 1`` with ``omega ^ d(omega)^k`` identically zero."""
    _require_one_form(omega)
    d_omega = dform(omega)
    witness = omega
    k = 1
    while True:
        nxt = wedge(witness, d_omega)
        if nxt.is_zero():
            return ContactClassReport(k=k, witness=witness, integrable=(k == 1))
        witness = nxt
        k += 1


def cartan_terms(omega, X, Y):
    """The four terms of the invariant formula for ``d(omega)(X, Y)``.

    Returns ``(d(omega)(X, Y), X(omega(Y)), Y(omega(X)), omega([X, Y]))``.
    """
    return (
        eval_two_form(dform(omega), X, Y),
        lie_derivative_fn(X, contract(omega, Y)),
        lie_derivative_fn(Y, contract(omega, X)),
        contract(omega, lie_bracket(X, Y)),
    )


def cartan_residual(omega, X, Y):
    """``d(omega)(X,Y) - X(omega(Y)) + Y(omega(X)) + omega([X,Y])``; always zero."""
    lhs, x_wy, y_wx, w_xy = cartan_terms(omega, X, Y)
    return lhs - x_wy + y_wx + w_xy


def bracket_defect(omega, X, Y):
    """``omega([X, Y])`` for fields tangent to ``ker(omega)``.

    Where this is nonzero the bracket points out of the distribution,
    which is what lets admissible paths move transversally.
    """
    for name, field in (("X", X), ("Y", Y)):
        pairing = contract(omega, field)
        if pairing:
            raise TangencyError(
                f"field {name} = {field} is not tangent: omega({name}) = {pairing}", name)
    return contract(omega, lie_bracket(X, Y))
