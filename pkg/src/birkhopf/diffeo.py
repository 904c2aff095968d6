"""Identity-tangent formal diffeomorphisms and their Birkhoff factorization.

A diffeomorphism here is x + sum_{n>=2} f_n x^n truncated at a fixed
order, with exact coefficients in a scalar algebra.  Composition and
compositional inversion come from the truncated series engine.

The bridge to the Hopf-algebra machinery: a diffeomorphism of order N+1
defines a character of the degree-N composition Hopf algebra by reading
a_m to f_{m+1}, and composition of diffeomorphisms matches convolution of
characters outer-factor-first.  Birkhoff factorization of a diffeomorphism
with Laurent coefficients splits it as

    f_minus o f = f_plus

with f_minus carrying only strictly negative powers of e away from the
identity and f_plus only non-negative ones.  The closed-form word engine
is the default; the degree recursion stays available as an oracle.
"""

from __future__ import annotations

from typing import Mapping, Optional

from .closedform import closed_brb
from .convolution import Character, MapLike, as_unital_map, brb_recursive
from .hopf import HopfAlgebraSpec, faa_di_bruno_spec
from .scalars import LAURENT, AlgebraElement, POLE_PART
from .series import compose_truncated, reversion


class FormalDiffeo:
    """x + sum of coefficient * x^n for n = 2..order, exact and truncated."""

    __slots__ = ("order", "basis", "coefficients")

    def __init__(self, order: int, coefficients: Mapping[int, AlgebraElement], basis: str = LAURENT):
        if order < 2:
            raise ValueError("order must be >= 2")
        clean: dict[int, AlgebraElement] = {}
        for n, c in coefficients.items():
            if n < 2 or n > order:
                raise ValueError(
                    "coefficient degree %d outside 2..%d" % (n, order)
                )
            if c.basis != basis:
                raise ValueError(
                    "coefficient at x^%d has basis %s, diffeo declares %s"
                    % (n, c.basis, basis)
                )
            if not c.is_zero():
                clean[n] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coefficients", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FormalDiffeo is immutable")

    @classmethod
    def identity(cls, order: int, basis: str = LAURENT) -> "FormalDiffeo":
        return cls(order, {}, basis)

    def coefficient(self, n: int) -> AlgebraElement:
        if n == 1:
            return AlgebraElement.one(self.basis)
        if n < 1 or n > self.order:
            raise ValueError("degree %d outside truncation order %d" % (n, self.order))
        return self.coefficients.get(n, AlgebraElement.zero(self.basis))

    def as_series(self) -> dict[int, AlgebraElement]:
        out = {1: AlgebraElement.one(self.basis)}
        out.update(self.coefficients)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalDiffeo):
            return NotImplemented
        return (
            self.order == other.order
            and self.basis == other.basis
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.order, self.basis, frozenset(self.coefficients.items())))

    def render(self) -> str:
        parts = ["x"]
        for n in sorted(self.coefficients):
            parts.append("(%s)*x^%d" % (self.coefficients[n].render(), n))
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "<FormalDiffeo order %d: %s>" % (self.order, self.render())


def _require_compatible(f: FormalDiffeo, g: FormalDiffeo) -> None:
    if f.order != g.order:
        raise ValueError("orders differ: %d vs %d" % (f.order, g.order))
    if f.basis != g.basis:
        raise ValueError("bases differ: %s vs %s" % (f.basis, g.basis))


def compose(f: FormalDiffeo, g: FormalDiffeo) -> FormalDiffeo:
    """f(g(x)), truncated at the common order."""
    _require_compatible(f, g)
    comp = compose_truncated(f.as_series(), g.as_series(), f.order)
    comp.pop(1, None)
    return FormalDiffeo(f.order, comp, f.basis)


def compositional_inverse(f: FormalDiffeo) -> FormalDiffeo:
    """g with f(g(x)) = g(f(x)) = x up to the truncation order."""
    inv = reversion(f.as_series(), f.order, f.basis)
    inv.pop(1, None)
    return FormalDiffeo(f.order, inv, f.basis)


def diffeo_to_character(f: FormalDiffeo, spec: Optional[HopfAlgebraSpec] = None) -> Character:
    """Character of the composition Hopf algebra reading off coefficients:
    a_m goes to the coefficient of x^{m+1}."""
    if spec is None:
        spec = faa_di_bruno_spec(f.order - 1)
    values = {}
    for name in spec.generator_names():
        if not name.startswith("a"):
            raise ValueError("spec %r is not a composition Hopf algebra" % spec.name)
        m = int(name[1:])
        if m + 1 > f.order:
            raise ValueError(
                "spec degree %d needs coefficients beyond order %d" % (m, f.order)
            )
        values[name] = f.coefficient(m + 1)
    return Character(spec, f.basis, values)


def character_to_diffeo(phi: MapLike, order: int) -> FormalDiffeo:
    """Inverse bridge: rebuild the diffeomorphism from generator values."""
    phi = as_unital_map(phi)
    coeffs = {}
    for m in range(1, order):
        coeffs[m + 1] = phi(("a%d" % m,))
    return FormalDiffeo(order, coeffs, phi.basis)


def birkhoff_factorize(f: FormalDiffeo, split=POLE_PART, engine: str = "closed") -> tuple[FormalDiffeo, FormalDiffeo]:
    """Split f as (f_plus, f_minus) with f_minus o f = f_plus exactly.

    Runs the Birkhoff decomposition of the associated character through
    the chosen engine ("closed" for the universal word formulas, the
    default; "recursive" for the Bogoliubov degree recursion) and reads
    both factors back as diffeomorphisms.
    """
    if f.basis != LAURENT:
        raise ValueError("factorization needs Laurent coefficients")
    phi = diffeo_to_character(f)
    if engine == "closed":
        plus, minus = closed_brb(phi, split)
    elif engine == "recursive":
        plus, minus = brb_recursive(phi, split)
    else:
        raise ValueError("unknown engine %r" % engine)
    return (
        character_to_diffeo(plus, f.order),
        character_to_diffeo(minus, f.order),
    )
