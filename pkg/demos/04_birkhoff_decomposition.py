"""Birkhoff decomposition of a character, two ways.

A character assigns a Laurent scalar to each generator and extends
multiplicatively.  It factors uniquely as phi = phi_minus^{*-1} * phi_plus
where phi_minus lands in the pole sector and phi_plus is pole-free.  The
recursive engine builds the factors degree by degree; the closed engine
evaluates one explicit word formula per monomial.  They agree exactly.
"""

from birkhopf import (
    Character,
    POLE_PART,
    brb_recursive,
    closed_brb,
    convolve,
    is_character,
    ladder_spec,
    monomials_up_to,
    parse_element,
    render_hopf_monomial,
)

spec = ladder_spec(3)
phi = Character(
    spec,
    "laurent",
    {
        "l1": parse_element("e^-1", "laurent"),
        "l2": parse_element("e^-2 + 1", "laurent"),
        "l3": parse_element("2*e^-1 - 3", "laurent"),
    },
)

plus_c, minus_c = closed_brb(phi, POLE_PART)
plus_r, minus_r = brb_recursive(phi, POLE_PART)
print("closed form and Bogoliubov recursion agree:",
      (plus_c, minus_c) == (plus_r, minus_r))
print()

print("%-10s %-22s %-22s %s" % ("monomial", "phi", "plus factor", "minus factor"))
for m in monomials_up_to(spec):
    print("%-10s %-22s %-22s %s"
          % (render_hopf_monomial(m), phi(m), plus_c(m), minus_c(m)))
print()

print("factorization contract  minus * phi == plus :", convolve(minus_c, phi) == plus_c)
print("both factors are characters again           :",
      is_character(plus_c) and is_character(minus_c))
