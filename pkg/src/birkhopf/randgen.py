"""Seeded random inputs for the cross-validation harnesses.

Everything takes an explicit random.Random so a fixed seed reproduces a
run exactly.  The distribution is deliberately small and fixed: rational
coefficients with numerators in -9..9 (never 0) and denominators in
{1, 2, 3}, Laurent exponents in -3..3, symbol pools of a few names.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Optional, Sequence

from .closedform import CustomFunctional
from .convolution import Character, UnitalLinMap
from .diffeo import FormalDiffeo
from .hopf import HopfAlgebraSpec, monomials_up_to
from .scalars import (
    LAURENT,
    SYMBOLS,
    AlgebraElement,
    LaurentPower,
    Monomial,
    SymbolProduct,
)
from .stuffle import Word

EXPONENT_RANGE = (-3, 3)
SYMBOL_POOL = ("s1", "s2", "s3")


def random_rational(rng: Random) -> Fraction:
    num = rng.choice([n for n in range(-9, 10) if n])
    den = rng.choice([1, 2, 3])
    return Fraction(num, den)


def random_monomial(rng: Random, basis: str = LAURENT) -> Monomial:
    if basis == LAURENT:
        return LaurentPower(rng.randint(*EXPONENT_RANGE))
    return SymbolProduct(tuple(sorted(
        rng.choice(SYMBOL_POOL) for _ in range(rng.randint(1, 2))
    )))


def random_element(rng: Random, basis: str = LAURENT, terms: int = 2) -> AlgebraElement:
    out: dict[Monomial, Fraction] = {}
    for _ in range(terms):
        out[random_monomial(rng, basis)] = random_rational(rng)
    return AlgebraElement(basis, out)


def random_word(rng: Random, length: int, basis: str = LAURENT) -> Word:
    return Word(tuple(random_monomial(rng, basis) for _ in range(length)))


def random_unital_map(rng: Random, spec: HopfAlgebraSpec, basis: str = LAURENT, terms: int = 2) -> UnitalLinMap:
    return UnitalLinMap(
        spec,
        basis,
        {m: random_element(rng, basis, terms) for m in monomials_up_to(spec)},
    )


def random_character(rng: Random, spec: HopfAlgebraSpec, basis: str = LAURENT, terms: int = 2) -> Character:
    return Character(
        spec,
        basis,
        {name: random_element(rng, basis, terms) for name in spec.generator_names()},
    )


def random_diffeo(rng: Random, order: int, basis: str = LAURENT, terms: int = 2) -> FormalDiffeo:
    return FormalDiffeo(
        order,
        {n: random_element(rng, basis, terms) for n in range(2, order + 1)},
        basis,
    )


def random_functional(
    rng: Random,
    basis: str = LAURENT,
    letter_pool: Optional[Sequence[Monomial]] = None,
    support: int = 3,
    max_length: int = 2,
) -> CustomFunctional:
    """Finite-support word functional: a few random words of length up to
    max_length mapped to random elements."""
    pool = list(letter_pool) if letter_pool is not None else [
        LaurentPower(k) for k in range(-2, 3)
    ]
    table: dict[Word, AlgebraElement] = {}
    for _ in range(support):
        length = rng.randint(1, max_length)
        w = Word(tuple(rng.choice(pool) for _ in range(length)))
        table[w] = random_element(rng, basis)
    return CustomFunctional(basis, table)
