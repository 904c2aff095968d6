"""Why one closed formula covers every Hopf algebra.

Each monomial embeds into the word coalgebra via its iterated reduced
coproduct.  Universal functionals on words (J, its convolution inverse,
and the plus/minus pair) then transport back along the embedding to give
the inverse and both Birkhoff factors of any character, with no
recursion at evaluation time.
"""

from birkhopf import (
    Character,
    HopfElement,
    J,
    JMinusFunctional,
    JPlusFunctional,
    J_INVERSE,
    POLE_PART,
    as_unital_map,
    closed_brb,
    iota,
    ladder_spec,
    parse_element,
    transport,
)

spec = ladder_spec(3)
x = HopfElement.monomial(spec, "l3")
print("embedding of l3 into words:")
print("  ", iota(x))
print()

phi = Character(
    spec,
    "laurent",
    {
        "l1": parse_element("e^-1", "laurent"),
        "l2": parse_element("e^-2", "laurent"),
        "l3": parse_element("e^-3", "laurent"),
    },
)

print("transporting J along the embedding returns phi itself:",
      transport(J, phi) == as_unital_map(phi))

inv = transport(J_INVERSE, phi)
print("transporting the inverse functional gives the convolution inverse:")
for m in (("l1",), ("l2",), ("l3",)):
    print("  inverse at %-4s = %s" % ("".join(m), inv(m)))
print()

plus, minus = closed_brb(phi, POLE_PART)
print("the plus/minus functionals reproduce the Birkhoff factors:",
      transport(JPlusFunctional(POLE_PART), phi) == plus
      and transport(JMinusFunctional(POLE_PART), phi) == minus)
