# # Legendrian charts from generating functions
#
# In 2n+1 variables with the form sum x_k dy_k + dz, any polynomial S in
# a mixed set of coordinates (x_I, y_J) produces an n-dimensional
# integral manifold:
#
#     y_I = dS/dx_I,   x_J = -dS/dy_J,   z = S - x_I dS/dx_I

# %%
import itertools
import random

from pfaffian.exterior import VarSpace, pullback
from pfaffian.grammar import parse_poly
from pfaffian.planner import legendrian_from_S, plan_generating_std, standard_form
from pfaffian.samplers import random_poly

chart = legendrian_from_S(parse_poly("5*x^2 - 3*x^3", "x"), {1}, 1)
print(chart.map.components)
print("pullback:", pullback(chart.map, standard_form(1)))

# %% [markdown]
# With n = 1 the chart is a curve, and choosing S = a x^2 + b x^3 hits any
# point with x1 != 0. The planner solves for (a, b).

# %%
c = plan_generating_std((1, 1, 1))
print("a, b =", c.info["a"], c.info["b"], " end:", c.end)

# %% [markdown]
# A quick fuzz over every partition of {1, 2, 3}.

# %%
rng = random.Random(0)
n = 3
omega = standard_form(n)
names = omega.space.names
for r in range(n + 1):
    for I in itertools.combinations(range(1, n + 1), r):
        params = VarSpace([names[k - 1] if k in I else names[n + k - 1] for k in range(1, n + 1)])
        S = random_poly(rng, params, max_degree=4, max_terms=4)
        ch = legendrian_from_S(S, set(I), n)
        print(f"I = {I!s:10s} S = {S!s:40s} pullback zero: {pullback(ch.map, omega).is_zero()}")
