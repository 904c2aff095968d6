"""Exact Laurent arithmetic and the pole-part splitting.

Every scalar in this package is a Laurent polynomial in e with Fraction
coefficients, so all identities below hold exactly, not to within a
tolerance.
"""

from birkhopf import AlgebraElement, POLE_PART, parse_element, rota_baxter_identity_holds

x = parse_element("e^-2 + 3 - 1/2*e", "laurent")
y = parse_element("2*e^-1 + e^2", "laurent")

print("x        =", x)
print("y        =", y)
print("x * y    =", x * y)
print()

print("pole part of x      :", POLE_PART.minus(x))
print("regular part of x   :", POLE_PART.plus(x))
print("they recombine to x :", POLE_PART.minus(x) + POLE_PART.plus(x) == x)
print()

# The splitting is a weight -1 Rota-Baxter operator:
#   p(x) p(y) + p(x y) = p(x p(y)) + p(p(x) y)
print("Rota-Baxter identity on (x, y):", rota_baxter_identity_holds(POLE_PART, x, y))

p = POLE_PART.minus
lhs = p(x) * p(y) + p(x * y)
rhs = p(x * p(y)) + p(p(x) * y)
print("spelled out, both sides equal :", lhs, "==", rhs, "->", lhs == rhs)
