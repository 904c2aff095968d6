"""Quasi-shuffle (stuffle) Hopf algebra on words.

Words are finite sequences of letters.  Letters must be hashable and come
with a commutative product that lands on a single letter again; for the
scalar word algebra the letters are basis monomials of a coefficient
algebra.  The product of two words interleaves them in all order-preserving
ways, where at each step the two current last letters may also be merged
into their letter product:

    stuffle(xa, yb) = stuffle(x, yb).a + stuffle(xa, y).b + stuffle(x, y).(ab)

The coproduct cuts a word into (left prefix, right suffix) in all ways.
Together these make the span of words a connected graded bialgebra (grading
by word length is only a filtration, since merging shortens words), and the
antipode has a closed form as an alternating sum over compositions of the
word into non-empty blocks.

The generic engine at the top works on plain letter tuples plus a merge
callable; :class:`StuffleElement` specializes letters to scalar monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterator, Mapping, Sequence, Union

from .scalars import (
    BasisMismatchError,
    Monomial,
    Rational,
    BASES,
    monomial_basis,
    monomial_product,
    render_monomial,
)

Letter = Hashable


@dataclass(frozen=True)
class Word:
    """A word: tuple of letters.  The empty word is the algebra unit."""

    letters: tuple

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def concat(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)


EMPTY_WORD = Word(())


def word(*letters: Letter) -> Word:
    return Word(tuple(letters))


def render_word(w: Word, letter_renderer: Callable[[Letter], str]) -> str:
    if not w.letters:
        return "[]"
    return "[%s]" % " | ".join(letter_renderer(a) for a in w.letters)


# generic engine on letter tuples


def stuffle_words(a: Word, b: Word, merge: Callable[[Letter, Letter], Letter]) -> dict[Word, Fraction]:
    """Stuffle product of two single words as a word -> coefficient map."""
    memo: dict[tuple[tuple, tuple], dict[tuple, Fraction]] = {}

    def go(x: tuple, y: tuple) -> dict[tuple, Fraction]:
        if not x:
            return {y: Fraction(1)}
        if not y:
            return {x: Fraction(1)}
        key = (x, y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out: dict[tuple, Fraction] = {}
        for sub, last in (
            (go(x[:-1], y), x[-1]),
            (go(x, y[:-1]), y[-1]),
            (go(x[:-1], y[:-1]), merge(x[-1], y[-1])),
        ):
            for w, c in sub.items():
                k = w + (last,)
                out[k] = out.get(k, Fraction(0)) + c
        memo[key] = out
        return out

    return {Word(w): c for w, c in go(a.letters, b.letters).items()}


def word_deconcat(w: Word) -> list[tuple[Word, Word]]:
    """All cuts of w into (prefix, suffix), empty parts included."""
    return [
        (Word(w.letters[:i]), Word(w.letters[i:])) for i in range(len(w.letters) + 1)
    ]


def word_compositions(w: Word, k: int) -> Iterator[tuple[Word, ...]]:
    """All cuts of w into k non-empty contiguous blocks."""
    n = len(w.letters)
    if k < 1 or k > n:
        return
    if k == 1:
        yield (w,)
        return
    for i in range(1, n - k + 2):
        head = Word(w.letters[:i])
        for rest in word_compositions(Word(w.letters[i:]), k - 1):
            yield (head,) + rest


def word_cuts(w: Word, k: int) -> Iterator[tuple[Word, ...]]:
    """All cuts of w into k ordered blocks, empty blocks allowed."""
    if k == 1:
        yield (w,)
        return
    for i in range(len(w.letters) + 1):
        head = Word(w.letters[:i])
        for rest in word_cuts(Word(w.letters[i:]), k - 1):
            yield (head,) + rest


def stuffle_fold(blocks: Sequence[Word], merge) -> dict[Word, Fraction]:
    """Stuffle product of several words, folded left to right."""
    acc: dict[Word, Fraction] = {blocks[0]: Fraction(1)} if blocks else {EMPTY_WORD: Fraction(1)}
    for block in blocks[1:]:
        nxt: dict[Word, Fraction] = {}
        for w, c in acc.items():
            for w2, c2 in stuffle_words(w, block, merge).items():
                nxt[w2] = nxt.get(w2, Fraction(0)) + c * c2
        acc = nxt
    return acc


def antipode_word(w: Word, merge) -> dict[Word, Fraction]:
    """Closed-form antipode: alternating sum over compositions of w into
    non-empty blocks, each composition contributing the stuffle product of
    its blocks."""
    if not w.letters:
        return {EMPTY_WORD: Fraction(1)}
    out: dict[Word, Fraction] = {}
    for k in range(1, len(w.letters) + 1):
        sign = Fraction(-1) ** k
        for blocks in word_compositions(w, k):
            for v, c in stuffle_fold(blocks, merge).items():
                out[v] = out.get(v, Fraction(0)) + sign * c
    return {v: c for v, c in out.items() if c}


# scalar-letter word algebra


class StuffleElement:
    """Linear combination of words whose letters are scalar monomials."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Word, Rational]):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        clean: dict[Word, Fraction] = {}
        for w, c in terms.items():
            for letter in w.letters:
                if monomial_basis(letter) != basis:
                    raise BasisMismatchError(
                        "%s letter in %s word" % (monomial_basis(letter), basis)
                    )
            c = Fraction(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("StuffleElement is immutable")

    @classmethod
    def zero(cls, basis: str) -> "StuffleElement":
        return cls(basis, {})

    @classmethod
    def unit(cls, basis: str) -> "StuffleElement":
        return cls(basis, {EMPTY_WORD: 1})

    @classmethod
    def from_word(cls, basis: str, w: Union[Word, Sequence[Monomial]], coeff: Rational = 1) -> "StuffleElement":
        if not isinstance(w, Word):
            w = Word(tuple(w))
        return cls(basis, {w: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "StuffleElement") -> "StuffleElement":
        if not isinstance(other, StuffleElement):
            return NotImplemented
        if self.basis != other.basis:
            raise BasisMismatchError("mixed bases %s and %s" % (self.basis, other.basis))
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return StuffleElement(self.basis, terms)

    def __sub__(self, other: "StuffleElement") -> "StuffleElement":
        return self + (-other)

    def __neg__(self) -> "StuffleElement":
        return StuffleElement(self.basis, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return StuffleElement(self.basis, {w: c * other for w, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, StuffleElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        def wkey(w: Word):
            return (len(w.letters), [str(a) for a in w.letters])
        chunks = []
        for w, c in sorted(self.terms.items(), key=lambda t: wkey(t[0])):
            body = render_word(w, render_monomial)
            if abs(c) != 1:
                body = "%s*%s" % (abs(c), body)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "<stuffle/%s %s>" % (self.basis, self.render())


def stuffle_product(x: StuffleElement, y: StuffleElement) -> StuffleElement:
    """Bilinear extension of the word stuffle to linear combinations."""
    if x.basis != y.basis:
        raise BasisMismatchError("mixed bases %s and %s" % (x.basis, y.basis))
    terms: dict[Word, Fraction] = {}
    for wa, ca in x.terms.items():
        for wb, cb in y.terms.items():
            for w, c in stuffle_words(wa, wb, monomial_product).items():
                terms[w] = terms.get(w, Fraction(0)) + ca * cb * c
    return StuffleElement(x.basis, terms)


def counit(x: StuffleElement) -> Fraction:
    return x.terms.get(EMPTY_WORD, Fraction(0))


def deconcat_coproduct(x: StuffleElement) -> dict[tuple[Word, Word], Fraction]:
    """Deconcatenation coproduct as a sparse (left, right) -> coefficient map."""
    out: dict[tuple[Word, Word], Fraction] = {}
    for w, c in x.terms.items():
        for u, v in word_deconcat(w):
            out[(u, v)] = out.get((u, v), Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def iterated_coproduct(x: StuffleElement, n: int, reduced: bool = True) -> dict[tuple[Word, ...], Fraction]:
    """n-fold coproduct.  Reduced form cuts into n non-empty blocks (so a
    word shorter than n contributes nothing); full form allows empty blocks.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    cutter = word_compositions if reduced else word_cuts
    out: dict[tuple[Word, ...], Fraction] = {}
    for w, c in x.terms.items():
        for blocks in cutter(w, n):
            out[blocks] = out.get(blocks, Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def stuffle_antipode(x: StuffleElement) -> StuffleElement:
    """Linear extension of the closed-form word antipode."""
    terms: dict[Word, Fraction] = {}
    for w, c in x.terms.items():
        for v, c2 in antipode_word(w, monomial_product).items():
            terms[v] = terms.get(v, Fraction(0)) + c * c2
    return StuffleElement(x.basis, terms)
