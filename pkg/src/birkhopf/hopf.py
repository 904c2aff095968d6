"""Connected graded commutative Hopf algebras, truncated at a fixed degree.

An instance is described by its generators (name, degree) and the reduced
coproduct of each generator; the coproduct extends multiplicatively to the
monomial basis of the free commutative polynomial algebra on the
generators.  Connectedness (the degree-0 part is spanned by the empty
monomial) makes every reduced-coproduct iteration nilpotent: applying it
more than deg(h) times kills h.  Everything downstream leans on that.

Monomials are sorted tuples of generator names.  All coproduct data is
returned as sparse tensor maps, e.g. {(m1, m2): coefficient}.  Operations
raise :class:`TruncationError` above the instance's truncation degree
instead of silently dropping terms.

Two built-in families:

* ``ladder``: one generator per degree with fully grouplike-like ladder
  coproduct, the smallest interesting tower.
* ``faadibruno``: the coordinate Hopf algebra of the group of
  identity-tangent formal diffeomorphisms.  Its coproduct table is not
  transcribed from anywhere; it is derived here by composing two generic
  truncated series with free-symbol coefficients and reading off which
  left/right coefficient monomials multiply each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .scalars import SYMBOLS, AlgebraElement, Rational, SymbolProduct
from .series import compose_truncated

HopfMonomial = tuple  # sorted tuple of generator names

UNIT_MONOMIAL: HopfMonomial = ()


class TruncationError(ValueError):
    """Raised when an operation needs degrees beyond the truncation."""


def hopf_monomial(*names: str) -> HopfMonomial:
    return tuple(sorted(names))


def hopf_monomial_product(a: HopfMonomial, b: HopfMonomial) -> HopfMonomial:
    return tuple(sorted(a + b))


def render_hopf_monomial(m: HopfMonomial) -> str:
    if not m:
        return "1"
    counts: dict[str, int] = {}
    for name in m:
        counts[name] = counts.get(name, 0) + 1
    return "*".join(
        name if counts[name] == 1 else "%s^%d" % (name, counts[name])
        for name in sorted(counts)
    )


@dataclass(frozen=True)
class HopfGenerator:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("generator degree must be >= 1")


TableEntry = tuple  # (left monomial, right monomial, Fraction)


@dataclass(frozen=True, eq=False)
class HopfAlgebraSpec:
    """Generators plus reduced generator coproducts plus a truncation degree.

    Instances compare and hash by identity so that the module-level caches
    below can key on them; the factories at the bottom memoize, so equal
    descriptions share one instance.
    """

    name: str
    generators: tuple[HopfGenerator, ...]
    reduced_coproducts: Mapping[str, tuple[TableEntry, ...]]
    truncation: int
    _degree: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            if g.name in seen:
                raise ValueError("duplicate generator %r" % g.name)
            seen.add(g.name)
            self._degree[g.name] = g.degree
        for name, entries in self.reduced_coproducts.items():
            if name not in seen:
                raise ValueError("coproduct table for unknown generator %r" % name)
            d = self._degree[name]
            for left, right, coeff in entries:
                if not left or not right:
                    raise ValueError(
                        "reduced coproduct of %r has an empty tensor factor" % name
                    )
                if self.degree(left) + self.degree(right) != d:
                    raise ValueError(
                        "coproduct of %r violates the grading: %r (x) %r"
                        % (name, left, right)
                    )
                if not Fraction(coeff):
                    raise ValueError("zero coefficient stored in table of %r" % name)

    def degree(self, m: HopfMonomial) -> int:
        try:
            return sum(self._degree[name] for name in m)
        except KeyError as e:
            raise ValueError("unknown generator %s in monomial %r" % (e, m)) from None

    def check_degree(self, m: HopfMonomial) -> None:
        if self.degree(m) > self.truncation:
            raise TruncationError(
                "monomial %s has degree %d, above truncation %d"
                % (render_hopf_monomial(m), self.degree(m), self.truncation)
            )

    def generator_names(self) -> list[str]:
        return [g.name for g in self.generators]


class HopfElement:
    """Sparse rational linear combination of Hopf monomials."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: HopfAlgebraSpec, terms: Mapping[HopfMonomial, Rational]):
        clean: dict[HopfMonomial, Fraction] = {}
        for m, c in terms.items():
            spec.check_degree(m)  # validates names and the truncation bound
            c = Fraction(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HopfElement is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    @classmethod
    def zero(cls, spec: HopfAlgebraSpec) -> "HopfElement":
        return cls(spec, {})

    @classmethod
    def unit(cls, spec: HopfAlgebraSpec) -> "HopfElement":
        return cls(spec, {UNIT_MONOMIAL: 1})

    @classmethod
    def monomial(cls, spec: HopfAlgebraSpec, m: Union[HopfMonomial, str], coeff: Rational = 1) -> "HopfElement":
        if isinstance(m, str):
            m = (m,)
        return cls(spec, {tuple(sorted(m)): coeff})

    def _same_spec(self, other: "HopfElement") -> None:
        if self.spec is not other.spec:
            raise ValueError("elements live over different Hopf algebra instances")

    def __add__(self, other: "HopfElement") -> "HopfElement":
        if not isinstance(other, HopfElement):
            return NotImplemented
        self._same_spec(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return HopfElement(self.spec, terms)

    def __sub__(self, other: "HopfElement") -> "HopfElement":
        return self + (-other)

    def __neg__(self) -> "HopfElement":
        return HopfElement(self.spec, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HopfElement(self.spec, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, HopfElement):
            return NotImplemented
        self._same_spec(other)
        terms: dict[HopfMonomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = hopf_monomial_product(ma, mb)
                terms[m] = terms.get(m, Fraction(0)) + ca * cb
        return HopfElement(self.spec, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.spec is other.spec and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.spec), frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        key = lambda m: (self.spec.degree(m), m)
        for m in sorted(self.terms, key=key):
            c = self.terms[m]
            mono = render_hopf_monomial(m)
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

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "<%s %s>" % (self.spec.name, self.render())


# monomial-level coproducts, cached on the spec instance


@lru_cache(maxsize=None)
def _generator_coproduct(spec: HopfAlgebraSpec, name: str) -> tuple[tuple[tuple, tuple, Fraction], ...]:
    entries = [(UNIT_MONOMIAL, (name,), Fraction(1)), ((name,), UNIT_MONOMIAL, Fraction(1))]
    for left, right, coeff in spec.reduced_coproducts.get(name, ()):
        entries.append((tuple(left), tuple(right), Fraction(coeff)))
    return tuple(entries)


@lru_cache(maxsize=None)
def coproduct_monomial(spec: HopfAlgebraSpec, m: HopfMonomial) -> Mapping[tuple, Fraction]:
    """Full coproduct of a basis monomial: {(m1, m2): coefficient}.

    Multiplicative in the monomial's generator factors.  Treat the result
    as read-only; it is cached.
    """
    spec.check_degree(m)
    if not m:
        return {(UNIT_MONOMIAL, UNIT_MONOMIAL): Fraction(1)}
    head, rest = m[0], m[1:]
    out: dict[tuple, Fraction] = {}
    rest_cop = coproduct_monomial(spec, tuple(rest)) if rest else {(UNIT_MONOMIAL, UNIT_MONOMIAL): Fraction(1)}
    for left, right, c in _generator_coproduct(spec, head):
        for (b1, b2), c2 in rest_cop.items():
            key = (hopf_monomial_product(left, b1), hopf_monomial_product(right, b2))
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def reduced_coproduct_monomial(spec: HopfAlgebraSpec, m: HopfMonomial) -> Mapping[tuple, Fraction]:
    """Coproduct with both boundary terms 1 (x) m and m (x) 1 removed."""
    return {
        (m1, m2): c
        for (m1, m2), c in coproduct_monomial(spec, m).items()
        if m1 and m2
    }


@lru_cache(maxsize=None)
def iterated_reduced_monomial(spec: HopfAlgebraSpec, m: HopfMonomial, n: int) -> Mapping[tuple, Fraction]:
    """n-fold reduced coproduct: {(m1, ..., mn): coefficient}.

    Nilpotent: empty beyond n = degree(m).  For n = 1 it is the projection
    away from the unit monomial.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return {(m,): Fraction(1)} if m else {}
    out: dict[tuple, Fraction] = {}
    for (m1, m2), c in reduced_coproduct_monomial(spec, m).items():
        for blocks, c2 in iterated_reduced_monomial(spec, m1, n - 1).items():
            key = blocks + (m2,)
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def iterated_coproduct_monomial(spec: HopfAlgebraSpec, m: HopfMonomial, n: int) -> Mapping[tuple, Fraction]:
    """n-fold full coproduct (empty factors allowed), n >= 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return {(m,): Fraction(1)}
    out: dict[tuple, Fraction] = {}
    for (m1, m2), c in coproduct_monomial(spec, m).items():
        for blocks, c2 in iterated_coproduct_monomial(spec, m1, n - 1).items():
            key = blocks + (m2,)
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in out.items() if c}


# element-level wrappers


def _linear_over_monomials(x: HopfElement, monomial_map) -> dict:
    out: dict = {}
    for m, c in x.terms.items():
        for key, c2 in monomial_map(x.spec, m).items():
            out[key] = out.get(key, Fraction(0)) + c * c2
    return {k: c for k, c in out.items() if c}


def coproduct(x: HopfElement) -> dict[tuple, Fraction]:
    return _linear_over_monomials(x, coproduct_monomial)


def reduced_coproduct(x: HopfElement) -> dict[tuple, Fraction]:
    return _linear_over_monomials(x, reduced_coproduct_monomial)


def iterated_reduced_coproduct(x: HopfElement, n: int) -> dict[tuple, Fraction]:
    return _linear_over_monomials(x, lambda s, m: iterated_reduced_monomial(s, m, n))


def iterated_coproduct(x: HopfElement, n: int) -> dict[tuple, Fraction]:
    return _linear_over_monomials(x, lambda s, m: iterated_coproduct_monomial(s, m, n))


def counit(x: HopfElement) -> Fraction:
    return x.terms.get(UNIT_MONOMIAL, Fraction(0))


def augmentation_projection(x: HopfElement) -> HopfElement:
    """Kill the unit-monomial component; identity on the rest."""
    return HopfElement(x.spec, {m: c for m, c in x.terms.items() if m})


# monomial enumeration


@lru_cache(maxsize=None)
def monomials_of_degree(spec: HopfAlgebraSpec, d: int) -> tuple[HopfMonomial, ...]:
    if d > spec.truncation:
        raise TruncationError(
            "requested degree %d above truncation %d" % (d, spec.truncation)
        )
    if d < 0:
        return ()
    if d == 0:
        return (UNIT_MONOMIAL,)
    names = sorted(spec.generator_names())

    def build(idx: int, remaining: int) -> list[tuple]:
        if remaining == 0:
            return [()]
        if idx >= len(names):
            return []
        name = names[idx]
        deg = spec._degree[name]
        out = []
        count = 0
        while count * deg <= remaining:
            for tail in build(idx + 1, remaining - count * deg):
                out.append((name,) * count + tail)
            count += 1
        return out

    return tuple(sorted(tuple(sorted(m)) for m in build(0, d)))


def monomials_up_to(spec: HopfAlgebraSpec, max_degree: int | None = None) -> list[HopfMonomial]:
    """All non-unit monomials of degree 1..max_degree (default: truncation),
    sorted by degree then name."""
    top = spec.truncation if max_degree is None else max_degree
    if top > spec.truncation:
        raise TruncationError(
            "requested degree %d above truncation %d" % (top, spec.truncation)
        )
    out: list[HopfMonomial] = []
    for d in range(1, top + 1):
        out.extend(monomials_of_degree(spec, d))
    return out


# structural validation


def validate_spec(spec: HopfAlgebraSpec, max_degree: int | None = None) -> None:
    """Check counit and coassociativity axioms monomial by monomial.

    Raises ValueError with the offending monomial on failure.  Cost grows
    quickly with degree, so factories run it once and cache the instance.
    """
    top = spec.truncation if max_degree is None else max_degree
    for d in range(1, top + 1):
        for m in monomials_of_degree(spec, d):
            cop = coproduct_monomial(spec, m)
            left_unit = {m2: c for (m1, m2), c in cop.items() if not m1}
            right_unit = {m1: c for (m1, m2), c in cop.items() if not m2}
            if left_unit != {m: Fraction(1)} or right_unit != {m: Fraction(1)}:
                raise ValueError(
                    "counit axiom fails at %s" % render_hopf_monomial(m)
                )
            lhs: dict[tuple, Fraction] = {}
            for (m1, m2), c in cop.items():
                for (a, b), c2 in coproduct_monomial(spec, m1).items():
                    key = (a, b, m2)
                    lhs[key] = lhs.get(key, Fraction(0)) + c * c2
            rhs: dict[tuple, Fraction] = {}
            for (m1, m2), c in cop.items():
                for (a, b), c2 in coproduct_monomial(spec, m2).items():
                    key = (m1, a, b)
                    rhs[key] = rhs.get(key, Fraction(0)) + c * c2
            lhs = {k: c for k, c in lhs.items() if c}
            rhs = {k: c for k, c in rhs.items() if c}
            if lhs != rhs:
                raise ValueError(
                    "coassociativity fails at %s" % render_hopf_monomial(m)
                )


# built-in instances


@lru_cache(maxsize=None)
def ladder_spec(truncation: int) -> HopfAlgebraSpec:
    """One generator l_n per degree n with coproduct sum(l_k (x) l_{n-k})."""
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    gens = tuple(HopfGenerator("l%d" % n, n) for n in range(1, truncation + 1))
    table = {}
    for n in range(1, truncation + 1):
        table["l%d" % n] = tuple(
            (("l%d" % k,), ("l%d" % (n - k),), Fraction(1))
            for k in range(1, n)
        )
    spec = HopfAlgebraSpec("ladder", gens, table, truncation)
    validate_spec(spec)
    return spec


def _faa_di_bruno_table(truncation: int, outer_left: bool) -> dict[str, tuple]:
    # compose two generic identity-tangent series whose coefficients are
    # free symbols u_m, v_m attached to x^{m+1}, then read off which
    # u-monomial multiplies which v-monomial at each output degree
    one = AlgebraElement.one(SYMBOLS)
    outer = {1: one}
    inner = {1: one}
    for m in range(1, truncation + 1):
        outer[m + 1] = AlgebraElement.symbolic({"u%d" % m: 1})
        inner[m + 1] = AlgebraElement.symbolic({"v%d" % m: 1})
    comp = compose_truncated(outer, inner, truncation + 1)

    def to_hopf(symbols: Sequence[str], prefix: str) -> HopfMonomial:
        return tuple(sorted("a%d" % int(s[1:]) for s in symbols if s[0] == prefix))

    table: dict[str, tuple] = {}
    for n in range(1, truncation + 1):
        entries = []
        coeff_el = comp.get(n + 1, AlgebraElement.zero(SYMBOLS))
        for mono, c in sorted(coeff_el.terms.items(), key=lambda t: t[0].symbols):
            assert isinstance(mono, SymbolProduct)
            left = to_hopf(mono.symbols, "u")
            right = to_hopf(mono.symbols, "v")
            if len(left) + len(right) != len(mono.symbols):
                raise AssertionError("stray symbol in composition coefficient")
            if not left or not right:
                continue  # boundary terms 1 (x) a_n and a_n (x) 1
            if not outer_left:
                left, right = right, left
            entries.append((left, right, c))
        table["a%d" % n] = tuple(entries)
    return table


@lru_cache(maxsize=None)
def faa_di_bruno_spec(truncation: int, outer_left: bool = True) -> HopfAlgebraSpec:
    """Coordinate Hopf algebra of identity-tangent formal diffeomorphisms.

    Generator a_n (degree n) reads off the coefficient of x^{n+1}.  With
    ``outer_left`` (the shipped convention) the LEFT tensor factor carries
    the outer series of a composition, so convolving two characters in
    left-to-right order matches composing their series outer-first.
    """
    if truncation < 1:
        raise ValueError("truncation must be >= 1")
    gens = tuple(HopfGenerator("a%d" % n, n) for n in range(1, truncation + 1))
    table = _faa_di_bruno_table(truncation, outer_left)
    spec = HopfAlgebraSpec(
        "faadibruno" if outer_left else "faadibruno-flipped",
        gens,
        table,
        truncation,
    )
    validate_spec(spec)
    return spec


HOPF_FACTORIES = {
    "ladder": ladder_spec,
    "faadibruno": faa_di_bruno_spec,
}


def hopf_by_name(name: str, truncation: int) -> HopfAlgebraSpec:
    try:
        factory = HOPF_FACTORIES[name]
    except KeyError:
        raise ValueError(
            "unknown Hopf instance %r (available: %s)"
            % (name, ", ".join(sorted(HOPF_FACTORIES)))
        ) from None
    return factory(truncation)


def coproduct_table_dict(spec: HopfAlgebraSpec) -> dict:
    """JSON-friendly dump of the generator data and reduced coproducts."""
    return {
        "name": spec.name,
        "truncation": spec.truncation,
        "generators": [
            {"name": g.name, "degree": g.degree}
            for g in sorted(spec.generators, key=lambda g: (g.degree, g.name))
        ],
        "reduced_coproducts": {
            g.name: [
                [render_hopf_monomial(left), render_hopf_monomial(right), str(c)]
                for left, right, c in spec.reduced_coproducts.get(g.name, ())
            ]
            for g in spec.generators
        },
    }
