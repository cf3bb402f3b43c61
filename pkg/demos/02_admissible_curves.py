# # Admissible curves and broken lines
#
# A curve is admissible for w when w pulled back along it is zero.
# Everything below is exact: residuals are polynomials over the Gaussian
# rationals and "admissible" means the zero polynomial.

# %%
from pfaffian.grammar import format_curve, parse_point, parse_poly, parse_scalar
from pfaffian.exterior import PolyMap
from pfaffian.planner import (
    PARAM, SPACE3, dilation_check, plan_between, plan_single_curve_sym,
    plan_three_link, residual, symmetric_form,
)


def show(p):
    return "(" + ", ".join(str(c) for c in p) + ")"


w = symmetric_form()
print("w =", w)

cubic = PolyMap(PARAM, SPACE3, [parse_poly(e, PARAM) for e in ("t", "t^2", "1/3*t^3")])
print("residual of the cubic:", residual(w, cubic))

# %% [markdown]
# A single curve from the origin to (x1, y1, z1) needs only a linear
# equation for its free constant c whenever x1 is nonzero.

# %%
c = plan_single_curve_sym((2, 3, 1))
print("c =", c.info["c"])
print(format_curve(c.map, c.t_start, c.t_end))

# %% [markdown]
# Straight up the z axis there is no single curve of that family. The
# cubic climbs to the right height and a line through the origin of the
# (x, y) plane brings us back to the axis. Gaussian rationals have no
# general cube roots, so the climbing time t1 is passed in.

# %%
plan = plan_three_link((1, 2, 9), cube_root_hint=3)
for k, link in enumerate(plan.links, 1):
    print(f"link {k}: {show(link.start)} -> {show(link.end)}  residual {link.residual()}")

# %% [markdown]
# Complex targets work the same way. Any point can serve as a start,
# using the translation symmetry of w.

# %%
plan = plan_between(parse_point("1, 1/2, 0"), parse_point("0, i, 2"), "single")
print(len(plan), "link(s), verified:", plan.verified())
print(format_curve(plan.links[0].map))

# %%
for alpha in ("2", "1/3", "i"):
    report = dilation_check(parse_scalar(alpha))
    print(f"alpha = {alpha}: w scaled by {report.factor}, plans stay admissible: {report.ok}")
