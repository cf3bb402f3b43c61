"""Algebraic invariants of the exact exterior calculus, fuzzed with hypothesis."""

import random

from hypothesis import given, settings, strategies as st

from pfaffian.exterior import (
    KForm,
    VarSpace,
    dform,
    lie_bracket,
    pullback,
    wedge,
)
from pfaffian.grammar import parse_field, parse_form, parse_poly
from pfaffian.samplers import random_field, random_form, random_map, random_poly

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=1, max_value=5)
SETTINGS = settings(max_examples=60, deadline=None)


def _space(n):
    return VarSpace([f"x{k}" for k in range(1, n + 1)])


def _form(seed, n, p):
    return random_form(random.Random(seed), _space(n), p)


@SETTINGS
@given(seeds, dims, st.data())
def test_d_squared_is_zero(seed, n, data):
    p = data.draw(st.integers(0, n))
    a = _form(seed, n, p)
    dda = dform(dform(a))
    assert dda.is_zero() and dda.degree == p + 2


@SETTINGS
@given(seeds, dims, st.data())
def test_graded_commutativity(seed, n, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(0, n - p))
    rng = random.Random(seed)
    a = random_form(rng, _space(n), p)
    b = random_form(rng, _space(n), q)
    assert wedge(a, b) == wedge(b, a) * (-1) ** (p * q)


@SETTINGS
@given(seeds, dims, st.data())
def test_wedge_associative(seed, n, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(0, n - p))
    r = data.draw(st.integers(0, n - p - q))
    rng = random.Random(seed)
    a, b, c = (random_form(rng, _space(n), k, max_degree=2) for k in (p, q, r))
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@SETTINGS
@given(seeds, dims, st.data())
def test_leibniz(seed, n, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(0, n - p))
    rng = random.Random(seed)
    a = random_form(rng, _space(n), p)
    b = random_form(rng, _space(n), q)
    lhs = dform(wedge(a, b))
    rhs = wedge(dform(a), b) + wedge(a, dform(b)) * (-1) ** p
    assert lhs == rhs


@SETTINGS
@given(seeds, dims, dims, st.data())
def test_pullback_naturality(seed, n, m, data):
    p = data.draw(st.integers(0, n))
    q = data.draw(st.integers(0, n - p))
    rng = random.Random(seed)
    target, source = _space(n), VarSpace([f"s{k}" for k in range(m)])
    a = random_form(rng, target, p)
    b = random_form(rng, target, q)
    phi = random_map(rng, source, target, max_degree=3)
    assert pullback(phi, wedge(a, b)) == wedge(pullback(phi, a), pullback(phi, b))
    assert pullback(phi, dform(a)) == dform(pullback(phi, a))


@SETTINGS
@given(seeds, dims)
def test_bracket_antisymmetry_and_jacobi(seed, n):
    rng = random.Random(seed)
    space = _space(n)
    X, Y, Z = (random_field(rng, space, max_degree=2) for _ in range(3))
    assert lie_bracket(X, Y) == -lie_bracket(Y, X)
    jacobi = (lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X))
              + lie_bracket(Z, lie_bracket(X, Y)))
    assert jacobi.is_zero()


@SETTINGS
@given(seeds, dims, st.data())
def test_print_parse_idempotent(seed, n, data):
    p = data.draw(st.integers(0, n))
    rng = random.Random(seed)
    space = _space(n)
    a = random_form(rng, space, p)
    assert parse_form(str(a), space) == a
    assert str(parse_form(str(a), space)) == str(a)
    f = random_poly(rng, space)
    assert parse_poly(str(f), space) == f
    X = random_field(rng, space)
    assert parse_field(str(X), space) == X


def test_zero_form_degree_survives_round_trip():
    space = _space(3)
    for p in range(4):
        z = KForm.zero(space, p)
        assert parse_form(str(z), space) == z
