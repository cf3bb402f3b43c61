"""Floating-point exploration of paths tangent to a Pfaffian system.

A :class:`NumDist` holds 1-forms with polynomial coefficients and evaluates
their covector matrix at real points. Holomorphic forms on complex
coordinates are realified: each complex coordinate ``w`` becomes the pair
``(Re w, Im w)`` and each form contributes its real and imaginary parts.

Velocities are projected orthogonally (Euclidean metric on the real
coordinates) onto the common kernel and integrated with the classical
fourth-order Runge-Kutta scheme at a fixed step.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import SingularPointError
from .exterior import KForm, Poly, VarSpace

__all__ = [
    "NumDist",
    "NumPath",
    "ReachSummary",
    "project_kernel",
    "integrate_tangent",
    "drift",
    "reach_sample",
    "random_controls",
]

RANK_RTOL = 1e-10
RANK_ATOL = 1e-14


class _CompiledPoly:
    """Vectorized evaluator of a Poly at a batch of points."""

    def __init__(self, poly):
        terms = list(poly.terms.items())
        n = poly.space.dim
        self.exponents = np.array([e for e, _ in terms], dtype=np.int64).reshape(len(terms), n)
        self.coeffs = np.array([complex(c) for _, c in terms], dtype=complex)
        self.is_real = all(c.is_real for _, c in terms)

    def __call__(self, Z):
        if not len(self.coeffs):
            return np.zeros(Z.shape[0], dtype=Z.dtype)
        monomials = np.prod(Z[:, None, :] ** self.exponents[None, :, :], axis=2)
        if np.isrealobj(Z) and self.is_real:
            return monomials @ self.coeffs.real
        return monomials @ self.coeffs


@dataclass(frozen=True, eq=False)
class NumDist:
    """A Pfaffian system evaluated in floating point.

    Build with :meth:`real` for forms already written in real coordinates
    or :meth:`realify` for holomorphic forms in complex coordinates.
    """

    names: tuple
    forms: tuple
    complex_space: VarSpace = None
    _coeffs: tuple = field(default=(), repr=False)

    @classmethod
    def real(cls, forms):
        forms = tuple(forms)
        space = _common_space(forms)
        for f in forms:
            for c in f.coefficients():
                if any(not v.is_real for v in c.terms.values()):
                    raise ValueError("real systems need real coefficients; use NumDist.realify")
        coeffs = tuple(tuple(_CompiledPoly(c) for c in f.coefficients()) for f in forms)
        return cls(space.names, forms, None, coeffs)

    @classmethod
    def realify(cls, forms):
        forms = tuple(forms)
        space = _common_space(forms)
        names = tuple(n for name in space.names for n in (f"{name}_re", f"{name}_im"))
        coeffs = tuple(tuple(_CompiledPoly(c) for c in f.coefficients()) for f in forms)
        return cls(names, forms, space, coeffs)

    @property
    def dim(self):
        return len(self.names)

    @property
    def rank(self):
        """Number of real constraints (codimension of the distribution)."""
        return len(self.forms) * (2 if self.complex_space is not None else 1)

    def to_complex(self, points):
        """Coordinates in which the forms are written (complex when realified)."""
        P = np.atleast_2d(np.asarray(points, dtype=float))
        if self.complex_space is None:
            return P
        return P[:, 0::2] + 1j * P[:, 1::2]

    def covectors(self, points):
        """Covector matrices, shape ``(batch, rank, dim)``."""
        P = np.atleast_2d(np.asarray(points, dtype=float))
        B = P.shape[0]
        A = np.zeros((B, self.rank, self.dim))
        if self.complex_space is None:
            for j, row in enumerate(self._coeffs):
                for i, c in enumerate(row):
                    A[:, j, i] = c(P)
            return A
        Z = self.to_complex(P)
        for j, row in enumerate(self._coeffs):
            for i, c in enumerate(row):
                v = c(Z.astype(complex))
                A[:, 2 * j, 2 * i] = v.real
                A[:, 2 * j, 2 * i + 1] = -v.imag
                A[:, 2 * j + 1, 2 * i] = v.imag
                A[:, 2 * j + 1, 2 * i + 1] = v.real
        return A

    def evaluate(self, F, points):
        """Values of a function at real points.

        ``F`` is a Poly on the forms' coordinates (complex ones for a
        realified system) or a callable taking a ``(batch, dim)`` array.
        """
        P = np.atleast_2d(np.asarray(points, dtype=float))
        if callable(F) and not isinstance(F, Poly):
            return np.asarray(F(P))
        if isinstance(F, KForm):
            F = F.as_poly()
        return _CompiledPoly(F)(self.to_complex(P))


def _common_space(forms):
    if not forms:
        raise ValueError("a Pfaffian system needs at least one form")
    space = forms[0].space
    for f in forms:
        if f.degree != 1:
            raise ValueError("Pfaffian systems consist of 1-forms")
        if f.space != space:
            raise ValueError("all forms must share one variable space")
    return space


def _singular_mask(A):
    s = np.linalg.svd(A, compute_uv=False)
    return s[:, -1] <= RANK_RTOL * s[:, 0] + RANK_ATOL


def _project_batch(A, V):
    """Orthogonal projection of each ``V[b]`` onto ``ker A[b]`` (nonsingular rows only)."""
    G = A @ np.swapaxes(A, 1, 2)
    out = V
    for _ in range(2):
        lam = np.linalg.solve(G, (A @ out[:, :, None]))
        out = out - (np.swapaxes(A, 1, 2) @ lam)[:, :, 0]
    return out


def project_kernel(dist, p, v):
    """Euclidean projection of velocity ``v`` at ``p`` onto the common kernel."""
    p = np.asarray(p, dtype=float)
    A = dist.covectors(p[None, :])
    if _singular_mask(A)[0]:
        raise SingularPointError(f"covector matrix is rank deficient at {p.tolist()}", point=p)
    return _project_batch(A, np.asarray(v, dtype=float)[None, :])[0]


@dataclass(frozen=True, eq=False)
class NumPath:
    """Sampled path; ``max_residual`` uses forward-difference velocities."""

    samples: np.ndarray
    times: np.ndarray
    step: float
    max_residual: float
    controls: dict
    names: tuple = ()

    @property
    def start(self):
        return self.samples[0]

    @property
    def end(self):
        return self.samples[-1]

    def residuals(self, dist):
        """``|omega_i(velocity)|`` per sample and form, recomputed from the samples."""
        if len(self.samples) < 2:
            return np.zeros((0, dist.rank))
        vel = np.diff(self.samples, axis=0) / self.step
        A = dist.covectors(self.samples[:-1])
        return np.abs((A @ vel[:, :, None])[:, :, 0])

    def recompute_max_residual(self, dist):
        r = self.residuals(dist)
        return float(r.max()) if r.size else 0.0


def _rk4(dist, P0, control, h, n_steps, record=True, on_singular="raise"):
    """Fixed-step RK4 on the projected field, for a batch of start points.

    ``control(k, t, P)`` gives desired velocities at step ``k``. Returns the
    trajectory (or final points), and a per-sample list of singular hits.
    With ``on_singular="raise"`` the first singular evaluation aborts.
    """
    P = np.array(P0, dtype=float)
    B = P.shape[0]
    alive = np.ones(B, dtype=bool)
    hits = {}
    traj = [P.copy()] if record else None
    done_steps = 0

    def field(k, t, Q):
        A = dist.covectors(Q)
        bad = _singular_mask(A) & alive
        if bad.any():
            for b in np.flatnonzero(bad):
                hits.setdefault(int(b), Q[b].copy())
            if on_singular == "raise":
                raise _Abort()
            alive[bad] = False
        V = np.zeros_like(Q)
        ok = alive
        if ok.any():
            V[ok] = _project_batch(A[ok], control(k, t, Q)[ok])
        return V

    try:
        for k in range(n_steps):
            t = k * h
            k1 = field(k, t, P)
            k2 = field(k, t + h / 2, P + h / 2 * k1)
            k3 = field(k, t + h / 2, P + h / 2 * k2)
            k4 = field(k, t + h, P + h * k3)
            P = P + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
            done_steps += 1
            if record:
                traj.append(P.copy())
    except _Abort:
        pass
    out = np.stack(traj, axis=1) if record else P
    return out, alive, hits, done_steps


class _Abort(Exception):
    pass


def integrate_tangent(dist, p0, schedule, h, T):
    """Integrate ``p' = project_kernel(dist, p, schedule(t, p))`` from ``p0``.

    ``schedule`` maps ``(t, p)`` to a desired velocity; it should be smooth
    in ``t`` within each step, since a jump between RK4 stages costs the
    method its order. Raises
    :class:`SingularPointError` carrying the partial path when the system
    loses rank.
    """
    if h <= 0:
        raise ValueError("step must be positive")
    if T < h:
        raise ValueError("horizon must be at least one step")
    n_steps = int(round(T / h))
    p0 = np.asarray(p0, dtype=float)

    def control(k, t, P):
        return np.asarray(schedule(t, P[0]), dtype=float)[None, :]

    traj, alive, hits, done = _rk4(dist, p0[None, :], control, h, n_steps)
    samples = traj[0]
    times = h * np.arange(len(samples))
    path = NumPath(samples, times, h, 0.0, {"kind": "schedule", "schedule": schedule}, dist.names)
    path = NumPath(samples, times, h, path.recompute_max_residual(dist), path.controls, dist.names)
    if hits:
        point = hits[0]
        raise SingularPointError(
            f"covector matrix is rank deficient at {point.tolist()} (t = {done * h})",
            point=point, partial_path=path)
    return path


def drift(F, path, dist=None):
    """``max_k |F(p_k) - F(p_0)|`` along a path.

    ``dist`` is needed when ``F`` is written in the complex coordinates of a
    realified system; otherwise F is evaluated on the real samples.
    """
    if dist is not None:
        values = dist.evaluate(F, path.samples)
    elif isinstance(F, Poly):
        values = _CompiledPoly(F)(path.samples)
    else:
        values = np.asarray(F(path.samples))
    return float(np.max(np.abs(values - values[0])))


@dataclass(frozen=True, eq=False)
class ReachSummary:
    """Endpoint cloud of :func:`reach_sample` plus confinement statistics.

    ``escape`` is ``max |F(p) - F(p0)|`` over the cloud (motion across the
    level sets of the candidate invariant); ``spread`` is the radius of the
    smallest ball about ``p0`` containing the cloud.
    """

    points: np.ndarray
    p0: np.ndarray
    escape: float
    spread: float
    radius: float
    seed: int
    n_requested: int
    skipped: tuple = ()

    @property
    def n_ok(self):
        return len(self.points)


def random_controls(seed, index, pieces, dim, speed=1.0):
    """Unit-speed piecewise-constant directions for one sample."""
    rng = np.random.default_rng([seed, index])
    D = rng.standard_normal((pieces, dim))
    return speed * D / np.linalg.norm(D, axis=1, keepdims=True)


def reach_sample(dist, p0, n, radius, seed, invariant=None, h=1e-3, pieces=16, speed=1.0):
    """Endpoints of ``n`` random admissible paths of length at most ``radius``.

    Controls are unit-speed directions, constant on each of ``pieces``
    equal sub-intervals of the horizon ``radius / speed``, drawn from a
    generator seeded by ``(seed, sample index)`` and then projected onto
    the distribution. Samples that hit a singular point are dropped and
    listed in ``skipped``.
    """
    if n < 1:
        raise ValueError("need at least one sample")
    if radius <= 0:
        raise ValueError("radius must be positive")
    p0 = np.asarray(p0, dtype=float)
    T = radius / speed
    n_steps = max(1, int(round(T / h)))
    controls = np.stack([random_controls(seed, i, pieces, dist.dim, speed) for i in range(n)])
    piece_of_step = (np.arange(n_steps) * pieces) // n_steps

    def control(k, t, P):
        return controls[:, piece_of_step[k], :]

    P0 = np.repeat(p0[None, :], n, axis=0)
    final, alive, hits, _ = _rk4(dist, P0, control, h, n_steps, record=False, on_singular="skip")
    skipped = tuple((i, f"singular point at {hits[i].tolist()}") for i in sorted(hits))
    points = final[alive]
    spread = float(np.max(np.linalg.norm(points - p0, axis=1))) if len(points) else 0.0
    escape = float("nan")
    if invariant is not None and len(points):
        f0 = dist.evaluate(invariant, p0[None, :])[0]
        escape = float(np.max(np.abs(dist.evaluate(invariant, points) - f0)))
    return ReachSummary(points, p0, escape, spread, radius, seed, n, skipped)
