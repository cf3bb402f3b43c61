# # Reaching around numerically
#
# Random admissible paths from a base point, integrated with fixed-step
# RK4 on the projected velocity field. For an integrable system the
# endpoints stay on one leaf; for a contact form they leave the starting
# level of z; on the sphere system they spread over the sphere but never
# change the radius.

# %%
import numpy as np

from pfaffian.fixtures import FIXTURES
from pfaffian.numeric_reach import drift, integrate_tangent, random_controls, reach_sample

for name, make in FIXTURES.items():
    fx = make()
    s = reach_sample(fx.dist, fx.p0, n=200, radius=1.0, seed=1, invariant=fx.invariant)
    print(f"{name:10s} |d{fx.invariant_name}| max = {s.escape:.3g}   spread = {s.spread:.3f}")

# %% [markdown]
# A single long path on the sphere with a smooth control: the residual of
# the discrete velocity is first order in h, the r^2 drift fourth order.
# (A control that jumps in t would spoil the RK4 stages that straddle the
# jump; reach_sample switches controls on step boundaries for that reason.)

# %%
fx = FIXTURES["sphere"]()
D = random_controls(7, 0, 3, fx.dist.dim)


def control(t, p):
    return D[0] * np.cos(t) + D[1] * np.sin(0.7 * t) + D[2]


for h in (1e-2, 1e-3):
    path = integrate_tangent(fx.dist, fx.p0, control, h, 10.0)
    print(f"h = {h:g}: max residual {path.max_residual:.2e}, r2 drift {drift(fx.invariant, path):.1e}")

# %% [markdown]
# Dump the contact cloud for plotting elsewhere.

# %%
fx = FIXTURES["contact"]()
s = reach_sample(fx.dist, fx.p0, n=50, radius=1.0, seed=1, invariant=fx.invariant)
z = fx.dist.to_complex(s.points)[:, 2]
print(np.round(z[:5], 4))
