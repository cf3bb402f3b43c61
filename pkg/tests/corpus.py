"""Expression corpus for the grammar round trip: (kind, text, variables)."""

V3 = "x,y,z"
V5 = "x1,y1,x2,y2,z"

CORPUS = [
    # contact and integrable forms that appear in the constructions
    ("form", "x*dy + dz", V3),
    ("form", "x*dy - y*dx - dz", V3),
    ("form", "dz", V3),
    ("form", "x1*dy1 + dz", V5),
    ("form", "x1*dy1 + x2*dy2 + dz", V5),
    ("form", "dx^dy", V3),
    ("form", "-2*dx^dy", V3),
    ("form", "dx^dy^dz", V3),
    ("form", "-2*dx^dy^dz", V3),
    ("form", "dx1^dy1 + dx2^dy2", V5),
    ("form", "2*dx1^dy1^dx2^dy2", V5),
    ("form", "2*dx1^dy1^dx2^dy2^dz", V5),
    ("form", "x1*dy1^dx1^dy1", V5),
    ("form", "0*dx", V3),
    ("form", "0*dx^dy", V3),
    ("form", "0", V3),
    # coefficients and literals
    ("form", "1/2*dx", V3),
    ("form", "(1/2 + 3i)*dx", V3),
    ("form", "i*dz", V3),
    ("form", "-i*x*dy", V3),
    ("form", "(x + y)*dz", V3),
    ("form", "(x^2 - 2/3*y*z + 7)*dx^dz", V3),
    ("form", "x^3*y^2*z*dy", V3),
    ("form", "(1 + i)*x*dy - (2 - i)*y*dx", V3),
    ("form", "dy^dx", V3),
    ("form", "dz^dy^dx", V3),
    ("form", "x*dx + x*dx", V3),
    ("form", "x*dy - x*dy", V3),
    ("form", "(x + 1)^2*dy", V3),
    ("form", "x^2*y", V3),
    ("form", "12/8*dx^dz", V3),
    ("form", "dx + dy + dz", V3),
    ("form", "y2*dx1 + x1*dy2 - z*dz", V5),
    ("form", "-dx1^dz + 3i*dy1^dy2", V5),
    ("form", "(x1*y1 - x2*y2)*dx1^dx2^dz", V5),
    # polynomials
    ("poly", "x*y - z", V3),
    ("poly", "1/3*x^3", V3),
    ("poly", "5*x^2 - 3*x^3", "x"),
    ("poly", "t^2 + t + 1", "t"),
    ("poly", "3*t^2 - 2*t", "t"),
    ("poly", "-5*t^2 + 6*t^3", "t"),
    ("poly", "(2 + i)*x*y*z", V3),
    ("poly", "0", V3),
    ("poly", "-7/2", V3),
    ("poly", "x1*y2 - x2*y1", V5),
    ("poly", "(x - y)^3", V3),
    ("poly", "i", V3),
    ("poly", "x^10", V3),
    # vector fields
    ("field", "d/dx", V3),
    ("field", "d/dy - x*d/dz", V3),
    ("field", "x*d/dx + y*d/dy", V3),
    ("field", "(1 + 2i)*z*d/dz", V3),
    ("field", "y^2*d/dx - 1/2*d/dy", V3),
    ("field", "d/dx1 + d/dy1 + d/dz", V5),
    ("field", "0", V3),
]
