"""Graded connected Hopf instances: coproduct tables, reduced iterates,
and the two built-in families."""

from fractions import Fraction

import pytest

from birkhopf import (
    HopfAlgebraSpec,
    HopfElement,
    HopfGenerator,
    TruncationError,
    coproduct_monomial,
    coproduct_table_dict,
    faa_di_bruno_spec,
    hopf_by_name,
    iterated_reduced_monomial,
    ladder_spec,
    monomials_of_degree,
    monomials_up_to,
    reduced_coproduct_monomial,
    validate_spec,
)
from birkhopf.hopf import hopf_monomial_product, render_hopf_monomial

F1 = Fraction(1)


def pairs(table):
    return {k: Fraction(v) for k, v in table.items()}


# ladder instance


def test_ladder_generator_coproducts():
    L = ladder_spec(4)
    assert dict(reduced_coproduct_monomial(L, ("l1",))) == {}
    assert dict(reduced_coproduct_monomial(L, ("l2",))) == pairs({(("l1",), ("l1",)): 1})
    assert dict(reduced_coproduct_monomial(L, ("l3",))) == pairs(
        {(("l1",), ("l2",)): 1, (("l2",), ("l1",)): 1}
    )
    assert dict(reduced_coproduct_monomial(L, ("l4",))) == pairs(
        {(("l1",), ("l3",)): 1, (("l2",), ("l2",)): 1, (("l3",), ("l1",)): 1}
    )


def test_full_coproduct_restores_unit_terms():
    L = ladder_spec(3)
    assert dict(coproduct_monomial(L, ("l2",))) == pairs(
        {((), ("l2",)): 1, (("l2",), ()): 1, (("l1",), ("l1",)): 1}
    )
    # the unit monomial is grouplike
    assert dict(coproduct_monomial(L, ())) == pairs({((), ()): 1})


def test_product_monomials_use_the_multiplicative_rule():
    L = ladder_spec(4)
    assert dict(reduced_coproduct_monomial(L, ("l1", "l1"))) == pairs(
        {(("l1",), ("l1",)): 2}
    )
    assert dict(reduced_coproduct_monomial(L, ("l1", "l2"))) == pairs(
        {
            (("l1",), ("l2",)): 1,
            (("l2",), ("l1",)): 1,
            (("l1",), ("l1", "l1")): 1,
            (("l1", "l1"), ("l1",)): 1,
        }
    )
    assert dict(reduced_coproduct_monomial(L, ("l1", "l1", "l1"))) == pairs(
        {(("l1",), ("l1", "l1")): 3, (("l1", "l1"), ("l1",)): 3}
    )


def test_iterated_reduced_examples():
    L = ladder_spec(3)
    assert dict(iterated_reduced_monomial(L, ("l3",), 3)) == pairs(
        {(("l1",), ("l1",), ("l1",)): 1}
    )
    assert dict(iterated_reduced_monomial(L, ("l1", "l2"), 3)) == pairs(
        {(("l1",), ("l1",), ("l1",)): 3}
    )
    assert dict(iterated_reduced_monomial(L, ("l1", "l1", "l1"), 3)) == pairs(
        {(("l1",), ("l1",), ("l1",)): 6}
    )


# Faa di Bruno instance, with the table read off from actual series
# composition at build time


def test_faa_di_bruno_low_degrees():
    F = faa_di_bruno_spec(4)
    assert dict(reduced_coproduct_monomial(F, ("a1",))) == {}
    assert dict(reduced_coproduct_monomial(F, ("a2",))) == pairs({(("a1",), ("a1",)): 2})
    assert dict(reduced_coproduct_monomial(F, ("a3",))) == pairs(
        {
            (("a1",), ("a1", "a1")): 1,
            (("a1",), ("a2",)): 2,
            (("a2",), ("a1",)): 3,
        }
    )
    assert dict(reduced_coproduct_monomial(F, ("a4",))) == pairs(
        {
            (("a1",), ("a3",)): 2,
            (("a1",), ("a1", "a2")): 2,
            (("a2",), ("a2",)): 3,
            (("a2",), ("a1", "a1")): 3,
            (("a3",), ("a1",)): 4,
        }
    )


def test_faa_di_bruno_orientations_are_transposes():
    F = faa_di_bruno_spec(4)
    G = faa_di_bruno_spec(4, outer_left=False)
    for name in F.generator_names():
        straight = dict(reduced_coproduct_monomial(F, (name,)))
        flipped = dict(reduced_coproduct_monomial(G, (name,)))
        assert flipped == {(b, a): c for (a, b), c in straight.items()}


def test_factory_registry():
    assert hopf_by_name("ladder", 3).generator_names() == ["l1", "l2", "l3"]
    assert hopf_by_name("faadibruno", 2).generator_names() == ["a1", "a2"]
    with pytest.raises(ValueError):
        hopf_by_name("unknown", 3)


# axioms and grading


def test_validate_spec_accepts_the_builtin_instances():
    validate_spec(ladder_spec(5))
    validate_spec(faa_di_bruno_spec(4))


def test_validate_spec_rejects_a_non_coassociative_table():
    gens = tuple(HopfGenerator("l%d" % n, n) for n in (1, 2, 3))
    table = {
        "l1": (),
        "l2": ((("l1",), ("l1",), F1),),
        # wrong weight on one side breaks coassociativity
        "l3": ((("l1",), ("l2",), F1), (("l2",), ("l1",), Fraction(2))),
    }
    spec = HopfAlgebraSpec("broken", gens, table, 3)
    with pytest.raises(ValueError):
        validate_spec(spec)


def test_spec_rejects_an_ungraded_table():
    gens = (HopfGenerator("g1", 1), HopfGenerator("g2", 2))
    table = {"g1": (), "g2": ((("g1",), ("g1", "g1"), F1),)}
    with pytest.raises(ValueError):
        HopfAlgebraSpec("ungraded", gens, table, 2)


def test_coproduct_terms_split_the_degree():
    for spec in (ladder_spec(5), faa_di_bruno_spec(5)):
        for m in monomials_up_to(spec):
            d = spec.degree(m)
            for (a, b), c in reduced_coproduct_monomial(spec, m).items():
                assert c != 0
                assert spec.degree(a) + spec.degree(b) == d
                assert spec.degree(a) >= 1 and spec.degree(b) >= 1


def test_iterates_are_split_independent():
    """Refining the leftmost leg and refining the rightmost leg give the
    same n-fold reduced coproduct."""
    for spec in (ladder_spec(4), faa_di_bruno_spec(4)):
        for m in monomials_up_to(spec):
            for n in (3, 4):
                left = {}
                right = {}
                for (a, b), c in reduced_coproduct_monomial(spec, m).items():
                    for rest, c2 in iterated_reduced_monomial(spec, a, n - 1).items():
                        key = rest + (b,)
                        left[key] = left.get(key, Fraction(0)) + c * c2
                    for rest, c2 in iterated_reduced_monomial(spec, b, n - 1).items():
                        key = (a,) + rest
                        right[key] = right.get(key, Fraction(0)) + c * c2
                left = {k: c for k, c in left.items() if c}
                right = {k: c for k, c in right.items() if c}
                got = dict(iterated_reduced_monomial(spec, m, n))
                assert got == left
                assert got == right


def test_iterates_are_nilpotent_at_the_degree():
    for spec in (ladder_spec(5), faa_di_bruno_spec(5)):
        for m in monomials_up_to(spec):
            d = spec.degree(m)
            assert dict(iterated_reduced_monomial(spec, m, d + 1)) == {}
            if d >= 1:
                assert dict(iterated_reduced_monomial(spec, m, d)) != {}


def test_monomial_enumeration():
    L = ladder_spec(4)
    assert monomials_of_degree(L, 1) == (("l1",),)
    # degree 4 monomials match the partitions of 4
    assert monomials_of_degree(L, 4) == (
        ("l1", "l1", "l1", "l1"),
        ("l1", "l1", "l2"),
        ("l1", "l3"),
        ("l2", "l2"),
        ("l4",),
    )
    assert len(monomials_up_to(L)) == 1 + 2 + 3 + 5
    with pytest.raises(TruncationError):
        monomials_of_degree(L, 5)


def test_truncation_guards_products():
    L = ladder_spec(4)
    assert hopf_monomial_product(("l1",), ("l2", "l1")) == ("l1", "l1", "l2")
    x = HopfElement.monomial(L, ("l2",))
    y = HopfElement.monomial(L, ("l3",))
    with pytest.raises(TruncationError):
        x * y


def test_element_arithmetic_and_rendering():
    L = ladder_spec(4)
    x = HopfElement.monomial(L, ("l1",)) * HopfElement.monomial(L, ("l1", "l2"))
    assert x == HopfElement.monomial(L, ("l1", "l1", "l2"))
    assert x.render() == "l1^2*l2"
    assert render_hopf_monomial(()) == "1"
    two = HopfElement.monomial(L, ("l1",), 2)
    assert two == HopfElement.monomial(L, ("l1",)) + HopfElement.monomial(L, ("l1",))
    assert (two - two).is_zero()


def test_table_dump_is_json_friendly():
    d = coproduct_table_dict(ladder_spec(2))
    assert d["name"] == "ladder"
    assert d["truncation"] == 2
    assert {g["name"] for g in d["generators"]} == {"l1", "l2"}
