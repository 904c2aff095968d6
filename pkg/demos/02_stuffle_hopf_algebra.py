"""The quasi-shuffle Hopf algebra on words.

Words multiply by interleaving their letters, with extra terms where two
letters merge into their product.  Deconcatenation makes this a Hopf
algebra, and the antipode has a closed form as a signed sum over block
contractions.
"""

from birkhopf import (
    SYMBOLS,
    StuffleElement,
    SymbolProduct,
    deconcat_coproduct,
    render_word,
    stuffle_antipode,
    stuffle_product,
    word,
)
from birkhopf.scalars import render_monomial


def letters(*names):
    return [SymbolProduct((n,)) for n in names]


def show(title, element):
    print("%-22s %s" % (title, element))


a1, a2, b1 = letters("a1", "a2", "b1")

u = StuffleElement.from_word(SYMBOLS, word(a1, a2))
v = StuffleElement.from_word(SYMBOLS, word(b1))
show("u =", u)
show("v =", v)
show("u * v =", stuffle_product(u, v))
print()

print("coproduct of u splits the word at every cut:")
cuts = sorted(deconcat_coproduct(u).items(), key=lambda kv: len(kv[0][0].letters))
for (left, right), c in cuts:
    print("  %s (x) %s   coefficient %s"
          % (render_word(left, render_monomial), render_word(right, render_monomial), c))
print()

show("antipode of u =", stuffle_antipode(u))
print("(reverse the word, then add one signed term per way of merging adjacent blocks)")
