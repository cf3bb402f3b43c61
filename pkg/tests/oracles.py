"""Independent checks that never call the operation under test."""

import itertools
import math
import random
from fractions import Fraction

from pfaffian.exterior import CScalar


def perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def det(rows):
    """Leibniz determinant, exact."""
    n = len(rows)
    if n == 0:
        return CScalar(1)
    total = CScalar(0)
    for perm in itertools.permutations(range(n)):
        term = CScalar(perm_sign(perm))
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def eval_form(form, point, vectors):
    """``form(point)(v_1, ..., v_p)`` from its coefficients via determinants."""
    total = CScalar(0)
    for idx, coeff in form.terms.items():
        minor = [[v[i] for i in idx] for v in vectors]
        total = total + coeff.evaluate(point) * det(minor)
    return total


def eval_wedge(a, b, point, vectors):
    """``(a ^ b)(v...)`` by the alternating-sum definition."""
    p, q = a.degree, b.degree
    total = CScalar(0)
    for perm in itertools.permutations(range(p + q)):
        vs = [vectors[k] for k in perm]
        total = total + perm_sign(perm) * eval_form(a, point, vs[:p]) * eval_form(b, point, vs[p:])
    return total / (math.factorial(p) * math.factorial(q))


def random_point(rng, n, bound=4):
    return tuple(CScalar(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                         Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
                 for _ in range(n))


def random_vectors(rng, n, p):
    return [random_point(rng, n) for _ in range(p)]


def numeric_partial(poly, point, i, h=1e-6):
    """Central difference of a polynomial in coordinate i at a complex point."""
    plus = list(point)
    minus = list(point)
    plus[i] = complex(plus[i]) + h
    minus[i] = complex(minus[i]) - h
    return (poly.evaluate(plus) - poly.evaluate(minus)) / (2 * h)


def seeded(seed):
    return random.Random(seed)
