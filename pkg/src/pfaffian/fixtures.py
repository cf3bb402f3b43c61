"""Standard Pfaffian systems for the reachability dichotomy.

* integrable: ``{dz}`` on R^3. Admissible paths stay on planes z = const.
* contact: ``x dy + dz`` on C^3, realified to R^6. Paths reach off the
  starting level of z.
* sphere: ``{d(r^2), 2(u1 dv1 - v1 du1 + u2 dv2 - v2 du2)}`` on R^4, the
  complex tangent lines of concentric spheres in C^2. Paths move freely
  inside a sphere but cannot leave it.

Frozen thresholds (``h = 1e-3``, ``radius = 1``, ``n = 200``, ``seed = 1``).
Calibration run on the fixed seed measured a contact-fixture escape
max |z - z0| = 0.0619 against a required 0.01 * radius, integrable
z-drift 0.0 and sphere r^2-drift 8.2e-15, with leafwise spreads
0.45 (plane) and 0.38 (sphere) against a required 0.1 * radius.

``RESIDUAL_C`` bounds ``max_residual / h`` for unit-speed controls. Measured
on seed 1: 0 (integrable), 0.219 (contact), 0.997 (sphere), the same at
h = 1e-2 and h = 1e-3; frozen with a factor 2 margin.
"""

from dataclasses import dataclass

from .exterior import KForm, Poly, VarSpace, dform
from .numeric_reach import NumDist

DICHOTOMY_SEED = 1
DICHOTOMY_N = 200
DICHOTOMY_RADIUS = 1.0
DICHOTOMY_STEP = 1e-3

INTEGRABLE_DRIFT_TOL = 1e-9
SPHERE_DRIFT_TOL = 1e-6
SPREAD_FRACTION = 0.1
CONTACT_ESCAPE_FRACTION = 0.01

RESIDUAL_C = {"integrable": 1e-9, "contact": 0.5, "sphere": 2.0}


@dataclass(frozen=True)
class Fixture:
    name: str
    dist: NumDist
    p0: tuple
    invariant: Poly
    invariant_name: str


def integrable_fixture():
    space = VarSpace("x,y,z")
    form = KForm.basis(space, "z")
    return Fixture("integrable", NumDist.real([form]), (0.0, 0.0, 0.0),
                   Poly.var(space, "z"), "z")


def contact_fixture():
    space = VarSpace("x,y,z")
    x, _, _ = space.variables()
    form = KForm.one_form(space, [0, x, 1])
    return Fixture("contact", NumDist.realify([form]), (0.0,) * 6,
                   Poly.var(space, "z"), "z")


def sphere_fixture():
    space = VarSpace("u1,v1,u2,v2")
    u1, v1, u2, v2 = space.variables()
    r2 = u1 ** 2 + v1 ** 2 + u2 ** 2 + v2 ** 2
    alpha = dform(KForm.from_poly(r2))
    beta = KForm.one_form(space, [-2 * v1, 2 * u1, -2 * v2, 2 * u2])
    return Fixture("sphere", NumDist.real([alpha, beta]), (1.0, 0.0, 0.0, 0.0), r2, "r2")


FIXTURES = {
    "integrable": integrable_fixture,
    "contact": contact_fixture,
    "sphere": sphere_fixture,
}


def get_fixture(name):
    key = name.lower().removesuffix("-fixture")
    if key not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    return FIXTURES[key]()
