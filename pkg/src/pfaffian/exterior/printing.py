"""Canonical text rendering, readable back by :mod:`pfaffian.grammar`."""


def _monomial_factors(names, exponent):
    out = []
    for name, k in zip(names, exponent):
        if k == 1:
            out.append(name)
        elif k > 1:
            out.append(f"{name}^{k}")
    return out


def _piece(coeff, factors):
    """Return (negative, text) for ``coeff * factors``."""
    tail = "*".join(factors)
    re, im = coeff.re, coeff.im
    if re and im:
        text = f"({coeff})"
        return False, f"{text}*{tail}" if tail else text
    if im:
        mag = abs(im)
        head = "i" if mag == 1 else f"{mag}i"
        return im < 0, f"{head}*{tail}" if tail else head
    mag = abs(re)
    if tail and mag == 1:
        return re < 0, tail
    return re < 0, f"{mag}*{tail}" if tail else str(mag)


def _join(pieces):
    if not pieces:
        return "0"
    parts = []
    for k, (negative, text) in enumerate(pieces):
        if k == 0:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f" - {text}" if negative else f" + {text}")
    return "".join(parts)


def format_poly(poly):
    names = poly.space.names
    return _join([_piece(c, _monomial_factors(names, e)) for e, c in poly.sorted_terms()])


def _coefficient_times(poly, basis):
    terms = poly.sorted_terms()
    if len(terms) == 1:
        (e, c), = terms
        return _piece(c, _monomial_factors(poly.space.names, e) + [basis])
    return False, f"({format_poly(poly)})*{basis}"


def format_form(form):
    names = form.space.names
    if form.degree == 0:
        return format_poly(form.coefficient(()))
    pieces = []
    for idx, poly in sorted(form.terms.items()):
        basis = "^".join("d" + names[i] for i in idx)
        pieces.append(_coefficient_times(poly, basis))
    if not pieces and form.degree <= len(names):
        return "0*" + "^".join("d" + n for n in names[:form.degree])
    return _join(pieces)


def format_field(field):
    names = field.space.names
    pieces = []
    for name, poly in zip(names, field.components):
        if poly:
            pieces.append(_coefficient_times(poly, f"d/d{name}"))
    return _join(pieces)
