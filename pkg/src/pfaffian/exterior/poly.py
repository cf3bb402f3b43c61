"""Sparse multivariate polynomials over the Gaussian rationals."""

import contextlib
import contextvars
from dataclasses import dataclass
from types import MappingProxyType

from ..errors import DegreeOverflowError, SpaceMismatchError
from .scalar import ONE, ZERO, _coerce, as_scalar

__all__ = [
    "VarSpace",
    "Poly",
    "DEFAULT_DEGREE_CAP",
    "degree_cap",
    "get_degree_cap",
    "grlex_key",
]

DEFAULT_DEGREE_CAP = 64

_degree_cap = contextvars.ContextVar("degree_cap", default=DEFAULT_DEGREE_CAP)


def get_degree_cap():
    return _degree_cap.get()


@contextlib.contextmanager
def degree_cap(bound):
    """Temporarily change the maximal total degree any Poly may reach."""
    if bound < 0:
        raise ValueError("degree cap must be non-negative")
    token = _degree_cap.set(int(bound))
    try:
        yield bound
    finally:
        _degree_cap.reset(token)


def _check_degree(degree):
    cap = _degree_cap.get()
    if degree > cap:
        raise DegreeOverflowError(f"polynomial degree {degree} exceeds the cap of {cap}")


@dataclass(frozen=True)
class VarSpace:
    """Ordered list of distinct coordinate names."""

    names: tuple

    def __init__(self, names):
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")
        object.__setattr__(self, "names", names)

    @property
    def dim(self):
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name):
        if isinstance(name, int):
            if not 0 <= name < len(self.names):
                raise IndexError(f"variable index {name} out of range")
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in space {self.names}") from None

    def variables(self):
        """All coordinate functions as Polys, in declared order."""
        return [Poly.var(self, i) for i in range(self.dim)]

    def __str__(self):
        return ",".join(self.names)


def grlex_key(exponent):
    """Sort key for graded lexicographic order (larger key = larger monomial)."""
    return (sum(exponent), exponent)


def _same_space(a, b):
    if a.space != b.space:
        raise SpaceMismatchError(f"variable spaces differ: {a.space.names} vs {b.space.names}")


class Poly:
    """Polynomial with :class:`CScalar` coefficients on a :class:`VarSpace`.

    Terms map exponent tuples to nonzero coefficients. Instances are
    immutable and hashable; two polys are equal when their spaces and
    term maps coincide.
    """

    __slots__ = ("_space", "_terms", "_hash")

    def __init__(self, space, terms=None):
        if not isinstance(space, VarSpace):
            space = VarSpace(space)
        clean = {}
        n = space.dim
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for a {n}-variable space")
            c = as_scalar(coeff)
            if c:
                clean[exp] = clean.get(exp, ZERO) + c
                if not clean[exp]:
                    del clean[exp]
        if clean:
            _check_degree(max(sum(e) for e in clean))
        self._space = space
        self._terms = clean
        self._hash = None

    @classmethod
    def _make(cls, space, terms):
        # Trusted constructor: terms already canonical.
        obj = object.__new__(cls)
        obj._space = space
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, space):
        return cls._make(space, {})

    @classmethod
    def const(cls, space, value):
        c = as_scalar(value)
        return cls._make(space, {(0,) * space.dim: c} if c else {})

    @classmethod
    def var(cls, space, name):
        i = space.index(name)
        exp = tuple(1 if j == i else 0 for j in range(space.dim))
        return cls._make(space, {exp: ONE})

    @classmethod
    def monomial(cls, space, exponent, coeff=1):
        return cls(space, {tuple(exponent): coeff})

    @property
    def space(self):
        return self._space

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self._space.dim, ZERO)

    def coefficient(self, exponent):
        return self._terms.get(tuple(exponent), ZERO)

    def support(self):
        """Indices of variables that occur with positive exponent."""
        used = set()
        for exp in self._terms:
            used.update(i for i, e in enumerate(exp) if e)
        return used

    def sorted_terms(self):
        """Terms in descending graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._space == other._space and self._terms == other._terms
        c = _coerce(other)
        if c is not None:
            return self.is_constant() and self.constant_term() == c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._space, frozenset(self._terms.items())))
        return self._hash

    def _lift(self, other):
        if isinstance(other, Poly):
            _same_space(self, other)
            return other
        c = _coerce(other)
        if c is None:
            return None
        return Poly.const(self._space, c)

    def __neg__(self):
        return Poly._make(self._space, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._make(self._space, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = as_scalar(c)
        if not c:
            return Poly.zero(self._space)
        return Poly._make(self._space, {e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        _same_space(self, other)
        if not self._terms or not other._terms:
            return Poly.zero(self._space)
        _check_degree(self.degree + other.degree)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly._make(self._space, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(ONE / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        if self._terms:
            _check_degree(self.degree * k)
        result = Poly.const(self._space, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def diff(self, var):
        """Partial derivative with respect to a variable name or index."""
        i = self._space.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return Poly._make(self._space, out)

    def gradient(self):
        return [self.diff(i) for i in range(self._space.dim)]

    def evaluate(self, point):
        """Value at a point.

        Exact (a :class:`CScalar`) when every coordinate is an int,
        Fraction or CScalar; a Python ``complex`` otherwise.
        """
        if len(point) != self._space.dim:
            raise ValueError(f"point has {len(point)} coordinates, space has {self._space.dim}")
        exact = [_coerce(p) for p in point]
        if all(p is not None for p in exact):
            total = ZERO
            for e, c in self._terms.items():
                term = c
                for p, k in zip(exact, e):
                    if k:
                        term = term * p ** k
                total = total + term
            return total
        values = [complex(p) for p in point]
        total = 0j
        for e, c in self._terms.items():
            term = complex(c)
            for p, k in zip(values, e):
                if k:
                    term *= p ** k
            total += term
        return total

    __call__ = evaluate

    def compose(self, substitutions):
        """Substitute one Poly (all on a common space) for each variable."""
        substitutions = list(substitutions)
        if len(substitutions) != self._space.dim:
            raise ValueError(
                f"need {self._space.dim} substitutions, got {len(substitutions)}")
        if not substitutions:
            raise ValueError("cannot compose a polynomial on an empty space")
        target = substitutions[0].space
        for s in substitutions:
            if s.space != target:
                raise SpaceMismatchError("substitutions live on different spaces")
        if self._terms:
            sub_deg = [max(s.degree, 0) for s in substitutions]
            _check_degree(max(sum(k * d for k, d in zip(e, sub_deg)) for e in self._terms))
        powers = [{0: Poly.const(target, 1)} for _ in substitutions]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * substitutions[i]
            return cache[k]

        total = Poly.zero(target)
        for e, c in self._terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def to_space(self, space, mapping=None):
        """Re-express on another space, renaming variables by name (or via ``mapping``)."""
        mapping = mapping or {}
        idx = []
        for i, name in enumerate(self._space.names):
            target = mapping.get(name, name)
            if target in space.names:
                idx.append(space.index(target))
            elif any(e[i] for e in self._terms):
                raise SpaceMismatchError(f"variable {name!r} has no counterpart in {space.names}")
            else:
                idx.append(None)
        out = {}
        for e, c in self._terms.items():
            ne = [0] * space.dim
            for i, k in enumerate(e):
                if k:
                    ne[idx[i]] += k
            out[tuple(ne)] = c
        return Poly(space, out)

    def __repr__(self):
        return f"Poly({self._space.names}, {str(self)!r})"

    def __str__(self):
        from .printing import format_poly

        return format_poly(self)
