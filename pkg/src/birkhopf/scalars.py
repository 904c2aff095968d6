"""Exact coefficient algebras and their Rota-Baxter splittings.

Two commutative algebras over the rationals, both stored sparsely as
monomial -> Fraction maps with zero coefficients stripped:

* Laurent polynomials in one variable ``e`` (exponents may be negative),
* free commutative polynomials in named symbols.

A splitting assigns to every element a "plus" and a "minus" part whose sum
is the element; the pole-part splitting sends a Laurent polynomial to its
strictly negative powers, and the trivial splitting keeps everything in
the plus sector.  Both satisfy the weight -1 Rota-Baxter identity

    p(x)*p(y) + p(x*y) == p(x*p(y)) + p(p(x)*y)

which the test suite checks on random pairs rather than assuming.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Union

LAURENT = "laurent"
SYMBOLS = "symbols"

BASES = (LAURENT, SYMBOLS)

Rational = Union[int, Fraction]


class BasisMismatchError(ValueError):
    """Raised when operands live over different coefficient bases."""


class ParseError(ValueError):
    """Raised on malformed element text; message carries the position."""


@dataclass(frozen=True)
class LaurentPower:
    """Basis monomial e^exponent; exponent 0 is the constant monomial."""

    exponent: int


@dataclass(frozen=True)
class SymbolProduct:
    """Basis monomial: a multiset of symbol names, stored sorted."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.symbols)) != self.symbols:
            raise ValueError("symbols must be sorted: %r" % (self.symbols,))


Monomial = Union[LaurentPower, SymbolProduct]


def monomial_basis(m: Monomial) -> str:
    return LAURENT if isinstance(m, LaurentPower) else SYMBOLS


def monomial_one(basis: str) -> Monomial:
    return LaurentPower(0) if basis == LAURENT else SymbolProduct(())


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    """Product of basis monomials is again a basis monomial."""
    if isinstance(a, LaurentPower) and isinstance(b, LaurentPower):
        return LaurentPower(a.exponent + b.exponent)
    if isinstance(a, SymbolProduct) and isinstance(b, SymbolProduct):
        return SymbolProduct(tuple(sorted(a.symbols + b.symbols)))
    raise BasisMismatchError(
        "cannot multiply %s monomial by %s monomial"
        % (monomial_basis(a), monomial_basis(b))
    )


def _monomial_sort_key(m: Monomial):
    return m.exponent if isinstance(m, LaurentPower) else m.symbols


def render_monomial(m: Monomial) -> str:
    if isinstance(m, LaurentPower):
        if m.exponent == 0:
            return "1"
        if m.exponent == 1:
            return "e"
        return "e^%d" % m.exponent
    if not m.symbols:
        return "1"
    parts = []
    seen: dict[str, int] = {}
    for s in m.symbols:
        seen[s] = seen.get(s, 0) + 1
    for s in sorted(seen):
        parts.append(s if seen[s] == 1 else "%s^%d" % (s, seen[s]))
    return "*".join(parts)


class AlgebraElement:
    """Sparse exact element of one of the two coefficient algebras.

    Instances are treated as immutable; all operators build new ones.
    Coefficients are Fractions, ints are coerced, and zero coefficients
    are never stored, so equality of term maps is equality of elements.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Monomial, Rational]):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            if monomial_basis(m) != basis:
                raise BasisMismatchError(
                    "%s monomial in %s element" % (monomial_basis(m), basis)
                )
            c = Fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # constructors

    @staticmethod
    def _make(basis: str, terms: dict) -> "AlgebraElement":
        # trusted fast path for arithmetic: terms already normalized
        el = object.__new__(AlgebraElement)
        object.__setattr__(el, "basis", basis)
        object.__setattr__(el, "terms", terms)
        return el

    @classmethod
    def zero(cls, basis: str) -> "AlgebraElement":
        return cls(basis, {})

    @classmethod
    def one(cls, basis: str) -> "AlgebraElement":
        return cls(basis, {monomial_one(basis): 1})

    @classmethod
    def constant(cls, basis: str, value: Rational) -> "AlgebraElement":
        return cls(basis, {monomial_one(basis): value})

    @classmethod
    def laurent(cls, exponents: Mapping[int, Rational]) -> "AlgebraElement":
        """Element from an exponent -> coefficient map."""
        return cls(LAURENT, {LaurentPower(k): c for k, c in exponents.items()})

    @classmethod
    def symbolic(cls, monomials: Mapping[Union[str, tuple[str, ...]], Rational]) -> "AlgebraElement":
        """Element from symbol-name (or name-tuple) -> coefficient map."""
        terms: dict[Monomial, Rational] = {}
        for key, c in monomials.items():
            names = (key,) if isinstance(key, str) else key
            terms[SymbolProduct(tuple(sorted(names)))] = c
        return cls(SYMBOLS, terms)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda t: _monomial_sort_key(t[0])))

    # arithmetic

    def _require_same_basis(self, other: "AlgebraElement") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(
                "mixed bases %s and %s" % (self.basis, other.basis)
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_basis(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return AlgebraElement._make(self.basis, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._make(self.basis, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return AlgebraElement._make(self.basis, {})
            return AlgebraElement._make(
                self.basis, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same_basis(other)
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = monomial_product(ma, mb)
                s = terms.get(m)
                terms[m] = ca * cb if s is None else s + ca * cb
        return AlgebraElement._make(
            self.basis, {m: c for m, c in terms.items() if c}
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = AlgebraElement.one(self.basis)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    # text form

    def render(self) -> str:
        """Canonical text: terms in monomial order, e.g. '-1/2*e^-2 + 3 + e'."""
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for m, c in self:
            mono = render_monomial(m)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (abs(c), mono)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "<%s %s>" % (self.basis, self.render())


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<rat>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r at position %d" % (text[pos], pos))
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over the term grammar: sum of signed products of
    rationals and powered variables."""

    def __init__(self, text: str, basis: str):
        self.text = text
        self.basis = basis
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, value, pos = self.peek()
        got = repr(value) if kind else "end of input"
        raise ParseError("expected %s at position %d, got %s" % (what, pos, got))

    def parse(self) -> AlgebraElement:
        if not self.tokens:
            raise ParseError("empty expression")
        total = self.term(allow_sign=True)
        while self.peek()[0] is not None:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                total = total + (self.term() if value == "+" else -self.term())
            else:
                self.fail("'+' or '-'")
        return total

    def term(self, allow_sign: bool = False) -> AlgebraElement:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.take()
            sign = -1
        elif not allow_sign and kind == "op" and value == "+":
            self.fail("a term")
        out = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                out = out * self.factor()
            else:
                break
        return out * sign

    def factor(self) -> AlgebraElement:
        kind, value, pos = self.peek()
        if kind == "rat":
            self.take()
            try:
                coeff = Fraction(value.replace(" ", ""))
            except ZeroDivisionError:
                raise ParseError("zero denominator at position %d" % pos) from None
            return AlgebraElement.constant(self.basis, coeff)
        if kind == "name":
            self.take()
            exponent = self.exponent_if_any()
            return self.variable(value, exponent, pos)
        self.fail("a rational or a variable")

    def exponent_if_any(self) -> int:
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            sign = 1
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
            kind, value, pos = self.peek()
            if kind != "rat" or "/" in value:
                self.fail("an integer exponent")
            self.take()
            return sign * int(value)
        return 1

    def variable(self, name: str, exponent: int, pos: int) -> AlgebraElement:
        if self.basis == LAURENT:
            if name != "e":
                raise ParseError(
                    "unknown variable %r at position %d (Laurent basis uses 'e')"
                    % (name, pos)
                )
            return AlgebraElement.laurent({exponent: 1})
        if exponent < 1:
            raise ParseError(
                "symbol %r cannot carry exponent %d at position %d"
                % (name, exponent, pos)
            )
        return AlgebraElement.symbolic({(name,) * exponent: 1})


def parse_element(text: str, basis: str = LAURENT) -> AlgebraElement:
    """Inverse of :meth:`AlgebraElement.render` (on canonical text).

    Accepts any sum of signed products of rationals and powered variables,
    e.g. ``-1/2*e^-2 + 3 + e`` or ``2*a^2*b - 1/3``.
    """
    if basis not in BASES:
        raise ValueError("unknown basis %r" % basis)
    if text.strip() == "0":
        return AlgebraElement.zero(basis)
    return _Parser(text, basis).parse()


def _add_scaled(acc: dict, el: AlgebraElement, scale) -> None:
    """Hot-path helper: acc += scale * el on raw term dicts."""
    for mono, mc in el.terms.items():
        v = mc * scale
        s = acc.get(mono)
        acc[mono] = v if s is None else s + v


def _collect(basis: str, acc: dict) -> AlgebraElement:
    """Hot-path helper: finish an accumulation, stripping zeros."""
    return AlgebraElement._make(basis, {m: c for m, c in acc.items() if c})


class PolePartSplit:
    """Minus sector: strictly negative powers of e.  Laurent basis only."""

    name = "polepart"

    def minus(self, x: AlgebraElement) -> AlgebraElement:
        if x.basis != LAURENT:
            raise BasisMismatchError("pole-part splitting needs the Laurent basis")
        return AlgebraElement(
            LAURENT, {m: c for m, c in x.terms.items() if m.exponent < 0}
        )

    def plus(self, x: AlgebraElement) -> AlgebraElement:
        if x.basis != LAURENT:
            raise BasisMismatchError("pole-part splitting needs the Laurent basis")
        return AlgebraElement(
            LAURENT, {m: c for m, c in x.terms.items() if m.exponent >= 0}
        )

    def __repr__(self):
        return "PolePartSplit()"


class TrivialPlusSplit:
    """Everything lands in the plus sector; the minus map is zero."""

    name = "trivialplus"

    def minus(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement.zero(x.basis)

    def plus(self, x: AlgebraElement) -> AlgebraElement:
        return x

    def __repr__(self):
        return "TrivialPlusSplit()"


POLE_PART = PolePartSplit()
TRIVIAL_PLUS = TrivialPlusSplit()

SPLITS = {s.name: s for s in (POLE_PART, TRIVIAL_PLUS)}


def split_by_name(name: str):
    try:
        return SPLITS[name]
    except KeyError:
        raise ValueError(
            "unknown splitting %r (available: %s)" % (name, ", ".join(sorted(SPLITS)))
        ) from None


def rota_baxter_identity_holds(split, x: AlgebraElement, y: AlgebraElement) -> bool:
    """Check p(x)p(y) + p(xy) == p(x p(y)) + p(p(x) y) for p = split.plus."""
    p = split.plus
    return p(x) * p(y) + p(x * y) == p(x * p(y)) + p(p(x) * y)
