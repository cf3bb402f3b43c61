# # Contact class of a 1-form
#
# A hyperplane field ker(w) is integrable exactly when w ^ dw vanishes.
# The class refines that yes/no answer: it is the first k for which
# w ^ (dw)^k is identically zero.

# %%
from pfaffian import contact_class, dform, frobenius_form, parse_form, wedge

w = parse_form("x*dy + dz", "x,y,z")
print("w      =", w)
print("dw     =", dform(w))
print("w ^ dw =", frobenius_form(w))

# %% [markdown]
# A nonzero 3-form, so the planes of x dy + dz twist and no surface is
# tangent to them. Compare with dz, whose planes stack into z = const.

# %%
for text in ["x*dy + dz", "dz", "x*dy - y*dx - dz", "z*dx"]:
    r = contact_class(parse_form(text, "x,y,z"))
    print(f"{text:18s} k = {r.k}  integrable = {r.integrable}")

# %% [markdown]
# In five variables a form can be partly non-integrable: x1 dy1 + dz
# never sees x2, y2, so the second power of dw already kills it.

# %%
V5 = "x1,y1,x2,y2,z"
for text in ["x1*dy1 + dz", "x1*dy1 + x2*dy2 + dz"]:
    w = parse_form(text, V5)
    dw = dform(w)
    print(text)
    print("   w ^ dw      =", wedge(w, dw))
    print("   w ^ (dw)^2  =", wedge(w, wedge(dw, dw)))
    print("   class       =", contact_class(w).k)

# %% [markdown]
# Multiplying w by a function f scales w ^ (dw)^k by f^(k+1), so the class
# belongs to the distribution rather than to the particular form.

# %%
w = parse_form("x*dy + dz", "x,y,z")
fw = parse_form("(1 + x^2)*x*dy + (1 + x^2)*dz", "x,y,z")
print(frobenius_form(fw))
print(contact_class(fw).k == contact_class(w).k)
