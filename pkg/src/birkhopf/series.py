"""Truncated formal power series with exact algebra-element coefficients.

A series is a sparse map degree -> AlgebraElement with degrees >= 1, read
as sum_n c_n x^n and truncated beyond a fixed order.  Only what the
composition group of identity-tangent series needs lives here: truncated
multiplication, composition, and compositional reversion.  Coefficients
may sit in either scalar basis; the operations never mix bases.
"""

from __future__ import annotations

from typing import Mapping

from .scalars import AlgebraElement

Series = Mapping[int, AlgebraElement]


def _check(series: Series, order: int) -> None:
    for n in series:
        if n < 1:
            raise ValueError("series must have no constant term, got degree %d" % n)
        if n > order:
            raise ValueError("coefficient at degree %d exceeds order %d" % (n, order))


def multiply_truncated(a: Series, b: Series, order: int) -> dict[int, AlgebraElement]:
    """Cauchy product, dropping terms beyond the order."""
    _check(a, order)
    _check(b, order)
    out: dict[int, AlgebraElement] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            if i + j > order:
                continue
            prod = ca * cb
            if (i + j) in out:
                out[i + j] = out[i + j] + prod
            else:
                out[i + j] = prod
    return {n: c for n, c in out.items() if not c.is_zero()}


def compose_truncated(outer: Series, inner: Series, order: int) -> dict[int, AlgebraElement]:
    """outer(inner(x)) truncated at the order.

    The inner series must have no constant term (enforced by the series
    shape), so the composition is well defined degree by degree.
    """
    _check(outer, order)
    _check(inner, order)
    out: dict[int, AlgebraElement] = {}
    power: dict[int, AlgebraElement] = dict(inner)
    # inner^m has lowest degree m, so powers beyond the order cannot land
    for m in range(1, order + 1):
        coeff = outer.get(m)
        if coeff is not None:
            for n, c in power.items():
                term = coeff * c
                if n in out:
                    out[n] = out[n] + term
                else:
                    out[n] = term
        if m < order:
            power = multiply_truncated(power, inner, order)
            if not power:
                break
    return {n: c for n, c in out.items() if not c.is_zero()}


def reversion(f: Series, order: int, basis: str) -> dict[int, AlgebraElement]:
    """Compositional inverse of an identity-tangent series, term by term.

    Requires the coefficient at degree 1 to be the unit.  Builds h with
    f(h(x)) = x + O(x^{order+1}); correctness of each step uses only that
    f'(0) = 1, so appending h_n x^n shifts the composition's degree-n
    coefficient by exactly h_n.
    """
    one = AlgebraElement.one(basis)
    if f.get(1) != one:
        raise ValueError("reversion needs an identity-tangent series")
    h: dict[int, AlgebraElement] = {1: one}
    for n in range(2, order + 1):
        head = {k: v for k, v in f.items() if k <= n}
        comp = compose_truncated(head, h, n)
        residue = comp.get(n, AlgebraElement.zero(basis))
        if not residue.is_zero():
            h[n] = -residue
    return h
