"""Explicit admissible curves for the contact distribution on a 3-space.

Two normal forms are used throughout::

    omega_sym = x dy - y dx - dz      # symmetric form
    omega_std = x dy + dz             # Darboux normal form

They are related by ``phi(x, y, z) = (2x, y, -xy - z)``, which pulls
``omega_std`` back to ``omega_sym``. Every curve built here is checked
exactly: its residual (the ``dt`` coefficient of the pulled-back form) must
be the zero polynomial, otherwise construction fails.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ChainingError,
    DegenerateDilation,
    DelegationRequired,
    DimensionMismatchError,
    HintRequired,
    InvalidGeneratingFunction,
    InvalidHint,
    NotAdmissibleError,
    SpaceMismatchError,
)
from .exterior import CScalar, KForm, Poly, PolyMap, VarSpace, as_scalar, pullback

__all__ = [
    "SPACE3",
    "PARAM",
    "symmetric_form",
    "standard_form",
    "standard_space",
    "equivalence_map",
    "equivalence_inverse",
    "residual",
    "Curve",
    "Plan",
    "Strategy",
    "plan_single_curve_sym",
    "plan_generating_std",
    "plan_three_link",
    "principal_cube_root_hint",
    "heisenberg_translate",
    "plan_between",
    "LegendrianChart",
    "legendrian_from_S",
    "dilation",
    "dilate_plan",
    "DilationReport",
    "dilation_check",
]

SPACE3 = VarSpace("x,y,z")
PARAM = VarSpace("t")
_X, _Y, _Z = SPACE3.variables()
_T = Poly.var(PARAM, "t")


def symmetric_form():
    """``x dy - y dx - dz`` on (x, y, z)."""
    return KForm.one_form(SPACE3, [-_Y, _X, -1])


def standard_space(n=1):
    """Coordinates of the (2n+1)-space: (x, y, z) for n = 1, else x1..xn, y1..yn, z."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return SPACE3
    return VarSpace([f"x{k}" for k in range(1, n + 1)]
                    + [f"y{k}" for k in range(1, n + 1)] + ["z"])


def standard_form(n=1):
    """``sum_k x_k dy_k + dz`` on :func:`standard_space`."""
    space = standard_space(n)
    coeffs = [Poly.zero(space)] * space.dim
    for k in range(n):
        coeffs[n + k] = Poly.var(space, k)
    coeffs[-1] = Poly.const(space, 1)
    return KForm.one_form(space, coeffs)


def equivalence_map():
    """``(x, y, z) -> (2x, y, -xy - z)``; pulls ``omega_std`` back to ``omega_sym``."""
    return PolyMap(SPACE3, SPACE3, [2 * _X, _Y, -_X * _Y - _Z])


def equivalence_inverse():
    """``(x, y, z) -> (x/2, y, -xy/2 - z)``; pulls ``omega_sym`` back to ``omega_std``."""
    half = Fraction(1, 2)
    return PolyMap(SPACE3, SPACE3, [half * _X, _Y, -half * _X * _Y - _Z])


def _point(p, dim=3):
    p = tuple(as_scalar(c) for c in p)
    if len(p) != dim:
        raise DimensionMismatchError(f"expected a point with {dim} coordinates, got {len(p)}")
    return p


def residual(omega, curve_map):
    """``dt`` coefficient of the pullback of ``omega`` along a curve; zero iff admissible."""
    if curve_map.source.dim != 1:
        raise DimensionMismatchError("a curve must have a one-dimensional source")
    if curve_map.target != omega.space:
        raise DimensionMismatchError(
            f"curve targets {curve_map.target.names}, form lives on {omega.space.names}")
    pulled = pullback(curve_map, omega)
    return pulled.coefficient((0,))


@dataclass(frozen=True)
class Curve:
    """An admissible polynomial curve traversed from ``t_start`` to ``t_end``.

    The same map with swapped parameter bounds is the reversed curve.
    ``info`` carries construction constants (for example ``c`` or ``a, b``).
    """

    map: PolyMap
    t_start: CScalar
    t_end: CScalar
    form: KForm
    info: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "t_start", as_scalar(self.t_start))
        object.__setattr__(self, "t_end", as_scalar(self.t_end))
        res = residual(self.form, self.map)
        if res:
            raise NotAdmissibleError(f"curve is not admissible: residual {res}")

    @property
    def start(self):
        return self.map((self.t_start,))

    @property
    def end(self):
        return self.map((self.t_end,))

    def reversed(self):
        return Curve(self.map, self.t_end, self.t_start, self.form, dict(self.info))

    def residual(self):
        return residual(self.form, self.map)

    def transformed(self, psi, form):
        """Image under a polynomial map ``psi``, admissible for ``form``."""
        return Curve(psi.after(self.map), self.t_start, self.t_end, form, dict(self.info))


@dataclass(frozen=True)
class Plan:
    """Broken line of admissible curves from ``start`` to ``end``."""

    links: tuple
    start: tuple
    end: tuple

    def __post_init__(self):
        object.__setattr__(self, "links", tuple(self.links))
        object.__setattr__(self, "start", _point(self.start, len(self.start)))
        object.__setattr__(self, "end", _point(self.end, len(self.end)))
        here = self.start
        for k, link in enumerate(self.links):
            if link.start != here:
                raise ChainingError(f"link {k} starts at {link.start}, expected {here}")
            here = link.end
        if here != self.end:
            raise ChainingError(f"plan ends at {here}, expected {self.end}")
        forms = {link.form for link in self.links}
        if len(forms) > 1:
            raise ValueError("all links of a plan must share one form")

    def __len__(self):
        return len(self.links)

    @property
    def form(self):
        return self.links[0].form if self.links else None

    def residuals(self):
        return [link.residual() for link in self.links]

    def verified(self):
        return all(r.is_zero() for r in self.residuals())

    def transformed(self, psi, form):
        links = [link.transformed(psi, form) for link in self.links]
        return Plan(links, psi(self.start), psi(self.end))


class Strategy(str, enum.Enum):
    SINGLE = "single"
    THREE_LINK = "three_link"
    GENERATING = "generating"


def _swap_map():
    # (x, y, z) -> (y, x, -z) pulls omega_sym back to -omega_sym
    return PolyMap(SPACE3, SPACE3, [_Y, _X, -_Z])


def plan_single_curve_sym(target):
    """One curve from the origin (t = 0) to ``target`` (t = 1) for ``omega_sym``.

    Uses ``(x1 t, y1 t^2 - c t(t-1), (x1 y1 - c x1) t^3 / 3)`` with ``c``
    solving ``z1 = (x1 y1 - c x1)/3``. When ``x1 == 0`` the roles of x and
    y are exchanged through ``(x, y, z) -> (y, x, -z)``.
    """
    x1, y1, z1 = _point(target)
    if not x1 and not y1:
        raise DelegationRequired(
            "x1 = y1 = 0: a single curve of this family cannot reach (0, 0, z1); "
            "use plan_three_link", delegate="plan_three_link")
    if not x1:
        curve = plan_single_curve_sym((y1, x1, -z1))
        swapped = curve.transformed(_swap_map(), symmetric_form())
        return Curve(swapped.map, 0, 1, symmetric_form(), {**curve.info, "swapped": True})
    c = (x1 * y1 - 3 * z1) / x1
    t = _T
    third = Fraction(1, 3)
    comps = [
        x1 * t,
        y1 * t ** 2 - c * t * (t - 1),
        third * x1 * y1 * t ** 3 - third * c * x1 * t ** 3,
    ]
    return Curve(PolyMap(PARAM, SPACE3, comps), 0, 1, symmetric_form(), {"c": c, "swapped": False})


def plan_generating_std(target):
    """Curve for ``omega_std`` from the origin to ``target`` via a cubic generating function.

    With ``S = a x^2 + b x^3`` the curve is ``(t, S'(t), S(t) - t S'(t))``
    and reaches the target at ``t = x1``; ``(a, b)`` solve a 2x2 system of
    determinant ``-x1^4``. If ``x1 == 0`` the y-variant ``S = a y^2 + b y^3``
    is used, ending at ``t = y1``.
    """
    x1, y1, z1 = _point(target)
    t = _T
    if x1:
        det = -x1 ** 4
        a = (-2 * x1 ** 3 * y1 - 3 * x1 ** 2 * z1) / det
        b = (2 * x1 * z1 + x1 ** 2 * y1) / det
        comps = [t, 2 * a * t + 3 * b * t ** 2, -a * t ** 2 - 2 * b * t ** 3]
        return Curve(PolyMap(PARAM, SPACE3, comps), 0, x1, standard_form(),
                     {"a": a, "b": b, "variable": "x"})
    if y1:
        det = y1 ** 4
        a = (x1 * y1 ** 3 + 3 * y1 ** 2 * z1) / det
        b = (-2 * y1 * z1 - x1 * y1 ** 2) / det
        comps = [-2 * a * t - 3 * b * t ** 2, t, a * t ** 2 + b * t ** 3]
        return Curve(PolyMap(PARAM, SPACE3, comps), 0, y1, standard_form(),
                     {"a": a, "b": b, "variable": "y"})
    raise DelegationRequired(
        "x1 = y1 = 0: generating functions of one variable cannot reach (0, 0, z1); "
        "use plan_three_link", delegate="plan_three_link")


def principal_cube_root_hint(z1, max_denominator=10**12):
    """Rational approximation of the principal cube root of ``3*z1``.

    The resulting plan is exactly admissible but ends only approximately at
    the requested height.
    """
    w = complex(3 * as_scalar(z1))
    return CScalar.from_complex(w ** (1 / 3) if w else 0, max_denominator)


def plan_three_link(target, cube_root_hint=None, numeric=False):
    """Broken line with at most three links from the origin to ``target`` for ``omega_sym``.

    Link 1 follows the cubic ``(t, t^2, t^3/3)`` up to ``t1`` with
    ``t1^3 = 3 z1``; link 2 contracts along ``(t1 t, t1^2 t, z1)`` to
    ``(0, 0, z1)``; link 3 expands along ``(x1 t, y1 t, z1)``. Links that
    would be constant are omitted.

    ``cube_root_hint`` supplies ``t1`` exactly. With ``numeric=True`` and no
    hint, a rational approximation of the principal root is used and the
    plan ends at the height that root actually reaches.
    """
    x1, y1, z1 = _point(target)
    origin = (CScalar(0),) * 3
    form = symmetric_form()
    links = []
    height = z1
    if z1:
        if cube_root_hint is None:
            if not numeric:
                raise HintRequired(
                    f"reaching height z = {z1} needs t1 with t1^3 = 3*z1 = {3 * z1}; "
                    "supply cube_root_hint (Gaussian rationals have no general cube roots)")
            t1 = principal_cube_root_hint(z1)
        else:
            t1 = as_scalar(cube_root_hint)
            if t1 ** 3 != 3 * z1:
                raise InvalidHint(f"hint {t1} has t1^3 = {t1 ** 3}, need 3*z1 = {3 * z1}")
        t = _T
        height = t1 ** 3 / 3
        cubic = PolyMap(PARAM, SPACE3, [t, t ** 2, Fraction(1, 3) * t ** 3])
        links.append(Curve(cubic, 0, t1, form, {"role": "cubic", "t1": t1}))
        back = PolyMap(PARAM, SPACE3, [t1 * t, t1 ** 2 * t, Poly.const(PARAM, height)])
        links.append(Curve(back, 1, 0, form, {"role": "contract"}))
    elif cube_root_hint is not None and as_scalar(cube_root_hint):
        raise InvalidHint(f"hint {cube_root_hint} given for z1 = 0; t1 must be 0")
    if x1 or y1:
        line = PolyMap(PARAM, SPACE3, [x1 * _T, y1 * _T, Poly.const(PARAM, height)])
        links.append(Curve(line, 0, 1, form, {"role": "expand"}))
    return Plan(links, origin, (x1, y1, height))


def heisenberg_translate(p):
    """``T_p(x, y, z) = (x + a, y + b, z + a y - b x + c)``, a symmetry of ``omega_sym``.

    ``T_p`` sends the origin to ``p = (a, b, c)`` and its inverse is ``T_{-p}``.
    """
    a, b, c = _point(p)
    return PolyMap(SPACE3, SPACE3, [_X + a, _Y + b, _Z + a * _Y - b * _X + c])


def plan_between(p0, p1, strategy=Strategy.SINGLE, cube_root_hint=None, numeric=False):
    """Plan for ``omega_sym`` from ``p0`` to ``p1``.

    The target is first moved to ``q = T_{p0}^{-1}(p1)``, an origin-based
    plan to ``q`` is built and then translated back by ``T_{p0}``. For the
    three-link strategy the hint must satisfy ``t1^3 = 3 q_z``. The
    generating strategy plans for ``omega_std`` towards ``phi(q)`` and
    transports the curve back with ``phi^{-1}``.
    """
    p0, p1 = _point(p0), _point(p1)
    strategy = Strategy(strategy)
    form = symmetric_form()
    if p0 == p1:
        return Plan([], p0, p1)
    shift = heisenberg_translate(p0)
    q = heisenberg_translate(tuple(-c for c in p0))(p1)
    if strategy is Strategy.SINGLE:
        local = Plan([plan_single_curve_sym(q)], (0, 0, 0), q)
    elif strategy is Strategy.THREE_LINK:
        local = plan_three_link(q, cube_root_hint, numeric=numeric)
    else:
        curve = plan_generating_std(equivalence_map()(q))
        local = Plan([curve.transformed(equivalence_inverse(), form)], (0, 0, 0), q)
    return local.transformed(shift, form)


@dataclass(frozen=True)
class LegendrianChart:
    """Legendrian submanifold of the standard (2n+1)-space parametrized by ``(x_I, y_J)``."""

    S: Poly
    partition: tuple
    map: PolyMap

    def __post_init__(self):
        n = len(self.partition[0]) + len(self.partition[1])
        pulled = pullback(self.map, standard_form(n))
        if pulled:
            raise NotAdmissibleError(f"chart is not Legendrian: pullback {pulled}")


def _normalize_partition(partition, n):
    parts = list(partition) if not isinstance(partition, (set, frozenset)) else None
    if parts is not None and len(parts) == 2 and not isinstance(parts[0], int):
        I, J = (tuple(sorted(int(k) for k in part)) for part in parts)
    else:
        I = tuple(sorted(int(k) for k in partition))
        J = tuple(k for k in range(1, n + 1) if k not in I)
    if sorted(I + J) != list(range(1, n + 1)):
        raise ValueError(f"({I}, {J}) is not a partition of 1..{n}")
    return I, J


def legendrian_from_S(S, partition, n):
    """Chart ``y_I = dS/dx_I, x_J = -dS/dy_J, z = S - x_I dS/dx_I``.

    ``S`` may be written over the full (2n+1)-space or over the parameter
    space ``(x_I, y_J)``; it must not involve any other coordinate.
    """
    I, J = _normalize_partition(partition, n)
    space = standard_space(n)
    xs = space.names[:n]
    ys = space.names[n:2 * n]
    params = VarSpace([xs[k - 1] if k in I else ys[k - 1] for k in range(1, n + 1)])
    try:
        S = S.to_space(params)
    except SpaceMismatchError:
        bad = sorted(S.space.names[i] for i in S.support() if S.space.names[i] not in params.names)
        raise InvalidGeneratingFunction(
            f"S may only depend on {params.names}; it involves {bad}") from None
    comps = [None] * space.dim
    z = S
    for k in range(1, n + 1):
        if k in I:
            xk = Poly.var(params, xs[k - 1])
            dS = S.diff(xs[k - 1])
            comps[k - 1] = xk
            comps[n + k - 1] = dS
            z = z - xk * dS
        else:
            comps[k - 1] = -S.diff(ys[k - 1])
            comps[n + k - 1] = Poly.var(params, ys[k - 1])
    comps[-1] = z
    return LegendrianChart(S, (I, J), PolyMap(params, space, comps))


def dilation(alpha):
    """``D_alpha(x, y, z) = (alpha x, alpha y, alpha^2 z)``."""
    alpha = as_scalar(alpha)
    if not alpha:
        raise DegenerateDilation("dilation by zero collapses the space")
    return PolyMap(SPACE3, SPACE3, [alpha * _X, alpha * _Y, alpha ** 2 * _Z])


def dilate_plan(plan, alpha):
    """Image of a ``omega_sym`` plan under ``D_alpha``; re-verified link by link."""
    return plan.transformed(dilation(alpha), symmetric_form())


@dataclass(frozen=True)
class DilationReport:
    alpha: CScalar
    factor: CScalar
    form_scaled: bool
    plans_checked: int
    plans_admissible: bool
    failures: tuple = ()

    @property
    def ok(self):
        return self.form_scaled and self.plans_admissible


def _default_plans():
    return [
        plan_between((0, 0, 0), (1, 1, 1), Strategy.SINGLE),
        plan_between((0, 0, 0), (1, 2, 9), Strategy.THREE_LINK, cube_root_hint=3),
        plan_between((0, 0, 0), (1, 1, 1), Strategy.GENERATING),
        plan_between((1, 2, 3), (Fraction(1, 2), -1, CScalar(0, 2)), Strategy.SINGLE),
    ]


def dilation_check(alpha, plans=None):
    """Check that ``D_alpha`` rescales ``omega_sym`` by ``alpha^2`` and keeps plans admissible."""
    alpha = as_scalar(alpha)
    D = dilation(alpha)
    form = symmetric_form()
    factor = alpha ** 2
    form_scaled = pullback(D, form) == form * factor
    plans = _default_plans() if plans is None else list(plans)
    failures = []
    for k, plan in enumerate(plans):
        try:
            image = dilate_plan(plan, alpha)
            if image.start != D(plan.start) or image.end != D(plan.end):
                failures.append((k, "endpoints"))
        except (NotAdmissibleError, ChainingError) as exc:
            failures.append((k, str(exc)))
    return DilationReport(alpha, factor, form_scaled, len(plans), not failures, tuple(failures))
