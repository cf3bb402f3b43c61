"""Differential forms, vector fields and polynomial maps with exact coefficients."""

from types import MappingProxyType

from ..errors import DimensionMismatchError, SpaceMismatchError
from .poly import Poly, VarSpace
from .scalar import _coerce

__all__ = [
    "KForm",
    "VField",
    "PolyMap",
    "wedge",
    "wedge_power",
    "dform",
    "pullback",
    "contract",
    "lie_bracket",
    "eval_two_form",
    "lie_derivative_fn",
]


def _check_space(a, b):
    if a.space != b.space:
        raise SpaceMismatchError(f"variable spaces differ: {a.space.names} vs {b.space.names}")


def _sort_with_sign(idx):
    """Sort an index tuple; return (sign, sorted) or (0, None) on a repeat."""
    if len(set(idx)) != len(idx):
        return 0, None
    inversions = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


class KForm:
    """A degree-``p`` differential form ``sum f_I dx_I`` with Poly coefficients.

    ``terms`` may be given with unsorted index tuples; they are sorted on
    construction with the permutation sign applied, and tuples with a
    repeated index are dropped.
    """

    __slots__ = ("_space", "_degree", "_terms")

    def __init__(self, space, degree, terms=None):
        if not isinstance(space, VarSpace):
            space = VarSpace(space)
        if degree < 0:
            raise ValueError("form degree must be non-negative")
        clean = {}
        for idx, coeff in (terms or {}).items():
            idx = tuple(space.index(i) for i in idx)
            if len(idx) != degree:
                raise ValueError(f"index tuple {idx} does not have length {degree}")
            if not isinstance(coeff, Poly):
                coeff = Poly.const(space, coeff)
            elif coeff.space != space:
                raise SpaceMismatchError("coefficient lives on a different space")
            sign, key = _sort_with_sign(idx)
            if not sign or not coeff:
                continue
            value = coeff if sign > 0 else -coeff
            if key in clean:
                value = clean[key] + value
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._space = space
        self._degree = degree
        self._terms = clean

    @classmethod
    def _make(cls, space, degree, terms):
        obj = object.__new__(cls)
        obj._space = space
        obj._degree = degree
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, space, degree):
        return cls._make(space, degree, {})

    @classmethod
    def from_poly(cls, poly):
        """The 0-form carried by a polynomial."""
        return cls._make(poly.space, 0, {(): poly} if poly else {})

    @classmethod
    def basis(cls, space, *names):
        """``dx_a ^ dx_b ^ ...`` for the named coordinates."""
        return cls(space, len(names), {tuple(names): 1})

    @classmethod
    def one_form(cls, space, coefficients):
        """1-form from one coefficient per variable (Polys or scalars)."""
        if len(coefficients) != space.dim:
            raise DimensionMismatchError("need one coefficient per variable")
        return cls(space, 1, {(i,): c for i, c in enumerate(coefficients)})

    @property
    def space(self):
        return self._space

    @property
    def degree(self):
        return self._degree

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, idx):
        idx = tuple(self._space.index(i) for i in idx)
        sign, key = _sort_with_sign(idx)
        if not sign:
            return Poly.zero(self._space)
        c = self._terms.get(key, Poly.zero(self._space))
        return c if sign > 0 else -c

    def coefficients(self):
        """Dense coefficient list of a 1-form, one Poly per variable."""
        if self._degree != 1:
            raise ValueError("coefficients() is defined for 1-forms only")
        return [self._terms.get((i,), Poly.zero(self._space)) for i in range(self._space.dim)]

    def as_poly(self):
        if self._degree != 0:
            raise ValueError("only 0-forms convert to polynomials")
        return self._terms.get((), Poly.zero(self._space))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, KForm):
            return (self._space == other._space and self._degree == other._degree
                    and self._terms == other._terms)
        return NotImplemented

    def __hash__(self):
        return hash((self._space, self._degree, frozenset(self._terms.items())))

    def _binary(self, other, op):
        if not isinstance(other, KForm):
            return NotImplemented
        _check_space(self, other)
        if self._degree != other._degree:
            raise ValueError(f"cannot add forms of degrees {self._degree} and {other._degree}")
        out = dict(self._terms)
        for idx, c in other._terms.items():
            v = op(out[idx], c) if idx in out else op(Poly.zero(self._space), c)
            if v:
                out[idx] = v
            else:
                out.pop(idx, None)
        return KForm._make(self._space, self._degree, out)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return KForm._make(self._space, self._degree, {i: -c for i, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, KForm):
            return wedge(self, other)
        if isinstance(other, Poly):
            if other.space != self._space:
                raise SpaceMismatchError("multiplier lives on a different space")
        elif _coerce(other) is None:
            return NotImplemented
        out = {}
        for idx, c in self._terms.items():
            v = c * other
            if v:
                out[idx] = v
        return KForm._make(self._space, self._degree, out)

    __rmul__ = __mul__

    def __xor__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return wedge(self, other)

    def __repr__(self):
        return f"KForm({self._space.names}, degree={self._degree}, {str(self)!r})"

    def __str__(self):
        from .printing import format_form

        return format_form(self)


class VField:
    """Polynomial vector field ``sum X_i d/dx_i``."""

    __slots__ = ("_space", "_components")

    def __init__(self, space, components):
        if not isinstance(space, VarSpace):
            space = VarSpace(space)
        if isinstance(components, dict):
            dense = [Poly.zero(space)] * space.dim
            for name, c in components.items():
                dense[space.index(name)] = c
            components = dense
        comps = []
        for c in components:
            if not isinstance(c, Poly):
                c = Poly.const(space, c)
            elif c.space != space:
                raise SpaceMismatchError("component lives on a different space")
            comps.append(c)
        if len(comps) != space.dim:
            raise DimensionMismatchError(
                f"vector field needs {space.dim} components, got {len(comps)}")
        self._space = space
        self._components = tuple(comps)

    @classmethod
    def basis(cls, space, name):
        """The coordinate field ``d/d<name>``."""
        return cls(space, {name: 1})

    @classmethod
    def zero(cls, space):
        return cls(space, [0] * space.dim)

    @property
    def space(self):
        return self._space

    @property
    def components(self):
        return self._components

    def is_zero(self):
        return not any(self._components)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, VField):
            return self._space == other._space and self._components == other._components
        return NotImplemented

    def __hash__(self):
        return hash((self._space, self._components))

    def __add__(self, other):
        if not isinstance(other, VField):
            return NotImplemented
        _check_space(self, other)
        return VField(self._space, [a + b for a, b in zip(self._components, other._components)])

    def __sub__(self, other):
        if not isinstance(other, VField):
            return NotImplemented
        _check_space(self, other)
        return VField(self._space, [a - b for a, b in zip(self._components, other._components)])

    def __neg__(self):
        return VField(self._space, [-a for a in self._components])

    def __mul__(self, other):
        if isinstance(other, Poly) and other.space != self._space:
            raise SpaceMismatchError("multiplier lives on a different space")
        if not isinstance(other, Poly) and _coerce(other) is None:
            return NotImplemented
        return VField(self._space, [a * other for a in self._components])

    __rmul__ = __mul__

    def __call__(self, f):
        return lie_derivative_fn(self, f)

    def __repr__(self):
        return f"VField({self._space.names}, {str(self)!r})"

    def __str__(self):
        from .printing import format_field

        return format_field(self)


class PolyMap:
    """Polynomial map from ``source`` coordinates to ``target`` coordinates.

    ``components[k]`` is the k-th target coordinate written as a Poly in
    the source variables. A 1-dimensional source makes the map a curve.
    """

    __slots__ = ("_source", "_target", "_components")

    def __init__(self, source, target, components):
        if not isinstance(source, VarSpace):
            source = VarSpace(source)
        if not isinstance(target, VarSpace):
            target = VarSpace(target)
        comps = []
        for c in components:
            if not isinstance(c, Poly):
                c = Poly.const(source, c)
            elif c.space != source:
                raise SpaceMismatchError("map component must be a Poly in the source variables")
            comps.append(c)
        if len(comps) != target.dim:
            raise DimensionMismatchError(
                f"map into {target.dim} coordinates needs {target.dim} components, got {len(comps)}")
        self._source = source
        self._target = target
        self._components = tuple(comps)

    @classmethod
    def identity(cls, space):
        return cls(space, space, space.variables())

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def components(self):
        return self._components

    def __call__(self, point):
        return tuple(c.evaluate(point) for c in self._components)

    def after(self, inner):
        """Composite ``self ∘ inner``."""
        if inner.target != self._source:
            raise SpaceMismatchError("inner map target differs from this map's source")
        return PolyMap(inner.source, self._target,
                       [c.compose(inner.components) for c in self._components])

    def jacobian(self):
        return [[c.diff(j) for j in range(self._source.dim)] for c in self._components]

    def __eq__(self, other):
        if isinstance(other, PolyMap):
            return (self._source == other._source and self._target == other._target
                    and self._components == other._components)
        return NotImplemented

    def __hash__(self):
        return hash((self._source, self._target, self._components))

    def __repr__(self):
        parts = ", ".join(f"{n} = {c}" for n, c in zip(self._target.names, self._components))
        return f"PolyMap({self._source}; {parts})"


def wedge(a, b):
    """Exterior product of two forms on the same space."""
    _check_space(a, b)
    space = a.space
    degree = a.degree + b.degree
    if degree > space.dim:
        return KForm.zero(space, degree)
    out = {}
    for i1, c1 in a.terms.items():
        for i2, c2 in b.terms.items():
            sign, key = _sort_with_sign(i1 + i2)
            if not sign:
                continue
            v = c1 * c2
            if sign < 0:
                v = -v
            if key in out:
                v = out[key] + v
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return KForm._make(space, degree, out)


def wedge_power(a, k):
    """``a ^ a ^ ... ^ a`` (k factors); the constant 0-form 1 when k == 0."""
    if k < 0:
        raise ValueError("wedge power must be non-negative")
    result = KForm.from_poly(Poly.const(a.space, 1))
    for _ in range(k):
        result = wedge(result, a)
    return result


def dform(a):
    """Exterior derivative."""
    space = a.space
    if a.degree + 1 > space.dim:
        return KForm.zero(space, a.degree + 1)
    out = {}
    for idx, c in a.terms.items():
        for j in range(space.dim):
            if j in idx:
                continue
            dc = c.diff(j)
            if not dc:
                continue
            sign, key = _sort_with_sign((j,) + idx)
            v = dc if sign > 0 else -dc
            if key in out:
                v = out[key] + v
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return KForm._make(space, a.degree + 1, out)


def pullback(phi, a):
    """Pull a form on ``phi.target`` back to ``phi.source``."""
    if phi.target != a.space:
        raise SpaceMismatchError(
            f"form lives on {a.space.names}, map targets {phi.target.names}")
    source = phi.source
    differentials = {}

    def d_comp(i):
        if i not in differentials:
            differentials[i] = dform(KForm.from_poly(phi.components[i]))
        return differentials[i]

    result = KForm.zero(source, a.degree)
    for idx, c in a.terms.items():
        term = KForm.from_poly(c.compose(phi.components))
        for i in idx:
            term = wedge(term, d_comp(i))
            if not term:
                break
        if term:
            result = result + term
    return result


def contract(omega, X):
    """Pairing ``omega(X)`` of a 1-form with a vector field."""
    _check_space(omega, X)
    if omega.degree != 1:
        raise ValueError("contract expects a 1-form")
    total = Poly.zero(omega.space)
    for (i,), c in omega.terms.items():
        if X.components[i]:
            total = total + c * X.components[i]
    return total


def lie_derivative_fn(X, f):
    """Directional derivative ``X(f) = sum X_i df/dx_i``."""
    if isinstance(f, KForm):
        f = f.as_poly()
    _check_space(X, f)
    total = Poly.zero(f.space)
    for i, Xi in enumerate(X.components):
        if Xi:
            df = f.diff(i)
            if df:
                total = total + Xi * df
    return total


def lie_bracket(X, Y):
    """Commutator ``[X, Y]`` with components ``X(Y_i) - Y(X_i)``."""
    _check_space(X, Y)
    return VField(X.space, [lie_derivative_fn(X, Yi) - lie_derivative_fn(Y, Xi)
                            for Xi, Yi in zip(X.components, Y.components)])


def eval_two_form(beta, X, Y):
    """``beta(X, Y) = sum_{i<j} beta_ij (X_i Y_j - X_j Y_i)``."""
    _check_space(beta, X)
    _check_space(beta, Y)
    if beta.degree != 2:
        raise ValueError("eval_two_form expects a 2-form")
    total = Poly.zero(beta.space)
    Xc, Yc = X.components, Y.components
    for (i, j), c in beta.terms.items():
        pair = Xc[i] * Yc[j] - Xc[j] * Yc[i]
        if pair:
            total = total + c * pair
    return total
