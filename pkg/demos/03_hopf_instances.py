"""The two bundled Hopf algebras: the ladder algebra and the
composition algebra of formal diffeomorphisms.

Both are graded, connected, and truncated at a chosen degree.  The
second one is not hard-coded: its coproduct table is derived at
construction time by composing two generic truncated power series and
reading off coefficients.
"""

from birkhopf import (
    HopfElement,
    faa_di_bruno_spec,
    iterated_reduced_monomial,
    ladder_spec,
    reduced_coproduct,
    render_hopf_monomial,
)

def show_reduced(spec, name):
    x = HopfElement.monomial(spec, name)
    rendered = " + ".join(
        "%s(x)%s" % (render_hopf_monomial(a), render_hopf_monomial(b))
        if c == 1 else "%s*%s(x)%s" % (c, render_hopf_monomial(a), render_hopf_monomial(b))
        for (a, b), c in sorted(reduced_coproduct(x).items())
    )
    print("  reduced coproduct of %s: %s" % (name, rendered))


ladder = ladder_spec(4)
print("ladder algebra, one generator per degree, truncated at degree 4")
for name in ("l2", "l3"):
    show_reduced(ladder, name)
print()

fdb = faa_di_bruno_spec(4)
print("diffeomorphism algebra, generator a_n = coefficient of x^(n+1)")
for name in ("a2", "a3"):
    show_reduced(fdb, name)
print()

print("iterating the reduced coproduct terminates (connectedness):")
m = ("a3",)
for n in range(1, 4):
    terms = iterated_reduced_monomial(fdb, m, n)
    rendered = " + ".join(
        "%s*[%s]" % (c, "|".join(render_hopf_monomial(p) for p in parts))
        if c != 1 else "[%s]" % "|".join(render_hopf_monomial(p) for p in parts)
        for parts, c in sorted(terms.items())
    )
    print("  depth %d of a3: %s" % (n, rendered or "0"))
