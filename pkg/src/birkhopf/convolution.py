"""Convolution algebra of maps from a Hopf algebra into a scalar algebra.

A map f here is unital (f of the empty monomial is 1) and linear, stored
densely on every monomial from degree 1 up to the truncation.  Convolution
is (f * g)(h) = sum f(h1) g(h2) over the coproduct of h; unital maps form
a group under it because the reduced coproduct is nilpotent.  Characters
are the multiplicative ones; they are stored by generator values only and
extended on demand.

Two independent inverse engines are kept side by side on purpose (a
degree recursion and an alternating geometric series over iterated
reduced coproducts), as are two Birkhoff decomposition engines here and
in :mod:`birkhopf.closedform`.  Tests compare the routes; neither is
allowed to quietly stand in for the other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Union

from .hopf import (
    HopfAlgebraSpec,
    HopfElement,
    HopfMonomial,
    UNIT_MONOMIAL,
    coproduct_monomial,
    hopf_monomial_product,
    iterated_reduced_monomial,
    monomials_up_to,
    reduced_coproduct_monomial,
    render_hopf_monomial,
)
from .scalars import BASES, AlgebraElement, _add_scaled, _collect


class UnitalLinMap:
    """Linear map H -> A with value 1 at the unit monomial.

    ``values`` must cover exactly the non-unit monomials up to the
    truncation; missing or extra monomials are rejected so that equality
    of maps is equality of value tables.
    """

    __slots__ = ("spec", "basis", "values")

    def __init__(
        self,
        spec: HopfAlgebraSpec,
        basis: str,
        values: Mapping[HopfMonomial, AlgebraElement],
    ):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % basis)
        expected = set(monomials_up_to(spec))
        got = set(values)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            raise ValueError(
                "map must cover every monomial up to truncation %d exactly; "
                "missing %r, extra %r" % (spec.truncation, missing[:3], extra[:3])
            )
        for m, v in values.items():
            if v.basis != basis:
                raise ValueError(
                    "value at %s has basis %s, map declares %s"
                    % (render_hopf_monomial(m), v.basis, basis)
                )
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "values", dict(values))

    def __setattr__(self, name, value):
        raise AttributeError("UnitalLinMap is immutable")

    def __call__(self, m: HopfMonomial) -> AlgebraElement:
        if not m:
            return AlgebraElement.one(self.basis)
        try:
            return self.values[m]
        except KeyError:
            self.spec.check_degree(m)
            raise

    def evaluate(self, x: HopfElement) -> AlgebraElement:
        """Linear extension to arbitrary elements."""
        out = AlgebraElement.zero(self.basis)
        for m, c in x.terms.items():
            out = out + self(m) * c
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitalLinMap):
            return NotImplemented
        return (
            self.spec is other.spec
            and self.basis == other.basis
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.spec), self.basis, frozenset(self.values.items())))

    def __repr__(self):
        return "<UnitalLinMap %s -> %s on %d monomials>" % (
            self.spec.name,
            self.basis,
            len(self.values),
        )


class Character:
    """Multiplicative unital map, stored by its values on generators."""

    __slots__ = ("spec", "basis", "generator_values", "_map")

    def __init__(
        self,
        spec: HopfAlgebraSpec,
        basis: str,
        generator_values: Mapping[str, AlgebraElement],
    ):
        names = set(spec.generator_names())
        if set(generator_values) != names:
            raise ValueError(
                "character needs a value for every generator; expected %s"
                % ", ".join(sorted(names))
            )
        for name, v in generator_values.items():
            if v.basis != basis:
                raise ValueError(
                    "value at %s has basis %s, character declares %s"
                    % (name, v.basis, basis)
                )
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "generator_values", dict(generator_values))
        object.__setattr__(self, "_map", None)

    def __setattr__(self, name, value):
        raise AttributeError("Character is immutable")

    def as_map(self) -> UnitalLinMap:
        """Multiplicative extension to all monomials, built once."""
        if self._map is None:
            values = {}
            for m in monomials_up_to(self.spec):
                v = AlgebraElement.one(self.basis)
                for name in m:
                    v = v * self.generator_values[name]
                values[m] = v
            object.__setattr__(self, "_map", UnitalLinMap(self.spec, self.basis, values))
        return self._map

    def __call__(self, m: HopfMonomial) -> AlgebraElement:
        return self.as_map()(m)

    def __repr__(self):
        return "<Character %s -> %s>" % (self.spec.name, self.basis)


MapLike = Union[UnitalLinMap, Character]


def as_unital_map(f: MapLike) -> UnitalLinMap:
    return f.as_map() if isinstance(f, Character) else f


def _require_compatible(f: UnitalLinMap, g: UnitalLinMap) -> None:
    if f.spec is not g.spec:
        raise ValueError("maps live over different Hopf algebra instances")
    if f.basis != g.basis:
        raise ValueError("maps target different bases: %s vs %s" % (f.basis, g.basis))


def convolution_unit(spec: HopfAlgebraSpec, basis: str) -> UnitalLinMap:
    """Unit of the convolution group: counit followed by the algebra unit."""
    zero = AlgebraElement.zero(basis)
    return UnitalLinMap(spec, basis, {m: zero for m in monomials_up_to(spec)})


def convolve(f: MapLike, g: MapLike) -> UnitalLinMap:
    """(f * g)(h) = sum over the coproduct of h of f(h1) g(h2)."""
    f = as_unital_map(f)
    g = as_unital_map(g)
    _require_compatible(f, g)
    values = {}
    for m in monomials_up_to(f.spec):
        acc: dict = {}
        for (m1, m2), c in coproduct_monomial(f.spec, m).items():
            _add_scaled(acc, f(m1) * g(m2), c)
        values[m] = _collect(f.basis, acc)
    return UnitalLinMap(f.spec, f.basis, values)


def inverse_recursive(f: MapLike) -> UnitalLinMap:
    """Convolution inverse by degree recursion:

        g(h) = -f(h) - sum g(h'1) f(h'2)

    over the reduced coproduct, monomials in increasing degree so the g
    values needed are already known.
    """
    f = as_unital_map(f)
    values: dict[HopfMonomial, AlgebraElement] = {}

    def g(m: HopfMonomial) -> AlgebraElement:
        if not m:
            return AlgebraElement.one(f.basis)
        return values[m]

    for m in monomials_up_to(f.spec):
        acc = -f(m)
        for (m1, m2), c in reduced_coproduct_monomial(f.spec, m).items():
            acc = acc - g(m1) * f(m2) * c
        values[m] = acc
    return UnitalLinMap(f.spec, f.basis, values)


def inverse_series(f: MapLike) -> UnitalLinMap:
    """Convolution inverse as the alternating geometric series

        g(h) = sum_k (-1)^k  sum f(h'1) ... f(h'k)

    over k-fold iterated reduced coproducts; the sum stops at deg(h) by
    nilpotence.  Independent of :func:`inverse_recursive` by construction.
    """
    f = as_unital_map(f)
    values = {}
    for m in monomials_up_to(f.spec):
        acc: dict = {}
        for k in range(1, f.spec.degree(m) + 1):
            sign = Fraction(-1) ** k
            for blocks, c in iterated_reduced_monomial(f.spec, m, k).items():
                prod = f(blocks[0])
                for b in blocks[1:]:
                    prod = prod * f(b)
                _add_scaled(acc, prod, sign * c)
        values[m] = _collect(f.basis, acc)
    return UnitalLinMap(f.spec, f.basis, values)


def is_character(f: MapLike, max_degree: Optional[int] = None) -> bool:
    """Multiplicativity check f(m1 m2) = f(m1) f(m2) for all non-unit
    monomial pairs whose total degree stays within bounds."""
    f = as_unital_map(f)
    top = f.spec.truncation if max_degree is None else max_degree
    mons = monomials_up_to(f.spec, top)
    for i, m1 in enumerate(mons):
        d1 = f.spec.degree(m1)
        for m2 in mons[i:]:
            if d1 + f.spec.degree(m2) > top:
                continue
            if f(hopf_monomial_product(m1, m2)) != f(m1) * f(m2):
                return False
    return True


def bogoliubov_prepare(f: MapLike, split) -> UnitalLinMap:
    """Bogoliubov's preparation map:

        fbar(h) = f(h) - sum p_minus(fbar(h'1)) f(h'2)

    over the reduced coproduct, by increasing degree."""
    f = as_unital_map(f)
    values: dict[HopfMonomial, AlgebraElement] = {}
    for m in monomials_up_to(f.spec):
        acc = f(m)
        for (m1, m2), c in reduced_coproduct_monomial(f.spec, m).items():
            acc = acc - split.minus(values[m1]) * f(m2) * c
        values[m] = acc
    return UnitalLinMap(f.spec, f.basis, values)


def brb_recursive(f: MapLike, split) -> tuple[UnitalLinMap, UnitalLinMap]:
    """Birkhoff decomposition through Bogoliubov preparation.

    Returns (f_plus, f_minus) with f_minus * f = f_plus, f_plus landing in
    the plus sector and f_minus in the minus sector away from the unit.
    """
    f = as_unital_map(f)
    prepared = bogoliubov_prepare(f, split)
    plus = {}
    minus = {}
    for m, v in prepared.values.items():
        plus[m] = split.plus(v)
        minus[m] = -split.minus(v)
    return (
        UnitalLinMap(f.spec, f.basis, plus),
        UnitalLinMap(f.spec, f.basis, minus),
    )
