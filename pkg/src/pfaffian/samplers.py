"""Seeded random generators of exact objects, for fuzzing and demos.

All functions take a :class:`random.Random` instance so callers control
reproducibility.
"""

import itertools
from fractions import Fraction

from .exterior import CScalar, KForm, Poly, PolyMap, VarSpace, VField


def random_rational(rng, bound=5):
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_scalar(rng, bound=5, complex_prob=0.3, nonzero=False):
    while True:
        re = random_rational(rng, bound)
        im = random_rational(rng, bound) if rng.random() < complex_prob else 0
        c = CScalar(re, im)
        if c or not nonzero:
            return c


def random_poly(rng, space, max_degree=3, max_terms=3, bound=5):
    """Sparse random polynomial of total degree at most ``max_degree``."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_degree)
        exp = [0] * space.dim
        for _ in range(deg):
            exp[rng.randrange(space.dim)] += 1
        terms[tuple(exp)] = random_scalar(rng, bound)
    return Poly(space, terms)


def random_form(rng, space, degree, max_degree=3, max_terms=3, density=0.5):
    """Random ``degree``-form with sparse polynomial coefficients."""
    terms = {}
    for idx in itertools.combinations(range(space.dim), degree):
        if rng.random() < density:
            terms[idx] = random_poly(rng, space, max_degree, max_terms)
    return KForm(space, degree, terms)


def random_field(rng, space, max_degree=2, max_terms=3):
    return VField(space, [random_poly(rng, space, max_degree, max_terms) for _ in range(space.dim)])


def random_map(rng, source, target, max_degree=3, max_terms=3):
    return PolyMap(source, target,
                   [random_poly(rng, source, max_degree, max_terms) for _ in range(target.dim)])


def random_space(rng, min_dim=1, max_dim=5):
    n = rng.randint(min_dim, max_dim)
    return VarSpace([f"x{k + 1}" for k in range(n)])
