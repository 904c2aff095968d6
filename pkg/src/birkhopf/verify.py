"""Named self-check suites, runnable from the CLI.

Each suite re-tests a slice of the algebra on seeded random inputs at
sizes small enough to finish interactively.  Results carry a rendered
counterexample when a check fails; nothing is asserted here, callers
decide what to do with failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from . import closedform, convolution, diffeo, hopf, randgen, scalars, stuffle
from .scalars import AlgebraElement, LAURENT, POLE_PART, SYMBOLS, TRIVIAL_PLUS
from .stuffle import StuffleElement, Word


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.results: list[CheckResult] = []

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append(CheckResult(self.suite, name, bool(ok), "" if ok else detail))


def _first_map_difference(f, g) -> str:
    f = convolution.as_unital_map(f)
    g = convolution.as_unital_map(g)
    for m in hopf.monomials_up_to(f.spec):
        if f(m) != g(m):
            return "at %s: %s vs %s" % (
                hopf.render_hopf_monomial(m),
                f(m).render(),
                g(m).render(),
            )
    return ""


def _maps_equal(rec: _Recorder, name: str, f, g) -> None:
    f = convolution.as_unital_map(f)
    g = convolution.as_unital_map(g)
    rec.check(name, f == g, _first_map_difference(f, g))


def suite_rb_identity(seed: int) -> list[CheckResult]:
    rec = _Recorder("rb-identity")
    rng = Random(seed)
    for split, basis, label in (
        (POLE_PART, LAURENT, "polepart"),
        (TRIVIAL_PLUS, LAURENT, "trivialplus"),
        (TRIVIAL_PLUS, SYMBOLS, "trivialplus-symbols"),
    ):
        ok = True
        detail = ""
        for _ in range(200):
            x = randgen.random_element(rng, basis, terms=3)
            y = randgen.random_element(rng, basis, terms=3)
            if not scalars.rota_baxter_identity_holds(split, x, y):
                ok = False
                detail = "x=%s y=%s" % (x.render(), y.render())
                break
        rec.check("weight-minus-one identity (%s)" % label, ok, detail)
    ok = True
    detail = ""
    for _ in range(100):
        x = randgen.random_element(rng, LAURENT, terms=3)
        pm, pp = POLE_PART.minus(x), POLE_PART.plus(x)
        if pm + pp != x or POLE_PART.minus(pm) != pm or POLE_PART.plus(pp) != pp:
            ok = False
            detail = "x=%s" % x.render()
            break
        if not POLE_PART.plus(pm).is_zero() or not POLE_PART.minus(pp).is_zero():
            ok = False
            detail = "sectors overlap at x=%s" % x.render()
            break
    rec.check("complementary idempotent projections", ok, detail)
    ok = True
    detail = ""
    for _ in range(100):
        x = randgen.random_element(rng, LAURENT, terms=2)
        y = randgen.random_element(rng, LAURENT, terms=2)
        prod_minus = POLE_PART.minus(x) * POLE_PART.minus(y)
        prod_plus = POLE_PART.plus(x) * POLE_PART.plus(y)
        if not POLE_PART.plus(prod_minus).is_zero() or not POLE_PART.minus(prod_plus).is_zero():
            ok = False
            detail = "x=%s y=%s" % (x.render(), y.render())
            break
    rec.check("both sectors are subalgebras", ok, detail)
    return rec.results


def suite_stuffle_axioms(seed: int) -> list[CheckResult]:
    rec = _Recorder("stuffle-axioms")
    rng = Random(seed)

    def rand_word_elt(length: int) -> StuffleElement:
        return StuffleElement.from_word(LAURENT, randgen.random_word(rng, length))

    ok = True
    detail = ""
    for _ in range(30):
        a = rand_word_elt(rng.randint(0, 3))
        b = rand_word_elt(rng.randint(0, 3))
        if stuffle.stuffle_product(a, b) != stuffle.stuffle_product(b, a):
            ok, detail = False, "a=%s b=%s" % (a, b)
            break
    rec.check("commutativity", ok, detail)

    ok = True
    detail = ""
    for _ in range(15):
        a = rand_word_elt(rng.randint(0, 2))
        b = rand_word_elt(rng.randint(0, 2))
        c = rand_word_elt(rng.randint(0, 2))
        lhs = stuffle.stuffle_product(stuffle.stuffle_product(a, b), c)
        rhs = stuffle.stuffle_product(a, stuffle.stuffle_product(b, c))
        if lhs != rhs:
            ok, detail = False, "a=%s b=%s c=%s" % (a, b, c)
            break
    rec.check("associativity", ok, detail)

    ok = True
    detail = ""
    unit = StuffleElement.unit(LAURENT)
    for _ in range(10):
        a = rand_word_elt(rng.randint(0, 3))
        if stuffle.stuffle_product(unit, a) != a or stuffle.stuffle_product(a, unit) != a:
            ok, detail = False, "a=%s" % a
            break
    rec.check("empty word is the unit", ok, detail)

    ok = True
    detail = ""
    for _ in range(20):
        r, s = rng.randint(1, 3), rng.randint(1, 3)
        prod = stuffle.stuffle_product(rand_word_elt(r), rand_word_elt(s))
        lengths = {len(w.letters) for w in prod.terms}
        if lengths and not all(max(r, s) <= L <= r + s for L in lengths):
            ok, detail = False, "lengths %s outside [%d, %d]" % (sorted(lengths), max(r, s), r + s)
            break
    rec.check("product length window", ok, detail)

    ok = True
    detail = ""
    for _ in range(15):
        x = rand_word_elt(rng.randint(0, 4))
        lhs = {}
        for (u, v), c in stuffle.deconcat_coproduct(x).items():
            for (a, b), c2 in stuffle.deconcat_coproduct(StuffleElement.from_word(LAURENT, u)).items():
                key = (a, b, v)
                lhs[key] = lhs.get(key, Fraction(0)) + c * c2
        rhs = {}
        for (u, v), c in stuffle.deconcat_coproduct(x).items():
            for (a, b), c2 in stuffle.deconcat_coproduct(StuffleElement.from_word(LAURENT, v)).items():
                key = (u, a, b)
                rhs[key] = rhs.get(key, Fraction(0)) + c * c2
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            ok, detail = False, "x=%s" % x
            break
    rec.check("coassociativity of deconcatenation", ok, detail)

    ok = True
    detail = ""
    for _ in range(15):
        x = rand_word_elt(rng.randint(1, 3))
        y = rand_word_elt(rng.randint(1, 3))
        lhs = stuffle.deconcat_coproduct(stuffle.stuffle_product(x, y))
        rhs: dict = {}
        for (u1, u2), c in stuffle.deconcat_coproduct(x).items():
            for (v1, v2), c2 in stuffle.deconcat_coproduct(y).items():
                for w1, cw1 in stuffle.stuffle_words(u1, v1, scalars.monomial_product).items():
                    for w2, cw2 in stuffle.stuffle_words(u2, v2, scalars.monomial_product).items():
                        key = (w1, w2)
                        rhs[key] = rhs.get(key, Fraction(0)) + c * c2 * cw1 * cw2
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            ok, detail = False, "x=%s y=%s" % (x, y)
            break
    rec.check("coproduct is an algebra map", ok, detail)

    ok = True
    detail = ""
    for _ in range(12):
        w = randgen.random_word(rng, rng.randint(1, 4))
        x = StuffleElement.from_word(LAURENT, w)
        acc = StuffleElement.zero(LAURENT)
        for (u, v), c in stuffle.deconcat_coproduct(x).items():
            acc = acc + stuffle.stuffle_product(
                stuffle.stuffle_antipode(StuffleElement.from_word(LAURENT, u)),
                StuffleElement.from_word(LAURENT, v),
            ) * c
        if acc != StuffleElement.zero(LAURENT):
            ok, detail = False, "w=%s gives %s" % (x, acc)
            break
    rec.check("antipode axiom on non-empty words", ok, detail)
    return rec.results


def suite_hopf_axioms(seed: int) -> list[CheckResult]:
    rec = _Recorder("hopf-axioms")
    for spec, top in ((hopf.ladder_spec(5), 5), (hopf.faa_di_bruno_spec(4), 4)):
        try:
            hopf.validate_spec(spec, top)
            rec.check("counit and coassociativity (%s)" % spec.name, True)
        except ValueError as e:
            rec.check("counit and coassociativity (%s)" % spec.name, False, str(e))

        ok = True
        detail = ""
        for m in hopf.monomials_up_to(spec, min(top, 4)):
            for n in (3, 4):
                base = hopf.iterated_reduced_monomial(spec, m, n)
                # recompute by splitting the iteration at every position k
                for k in range(1, n):
                    alt = _iterated_by_split(spec, m, n, k)
                    if alt != dict(base):
                        ok = False
                        detail = "%s at n=%d k=%d" % (hopf.render_hopf_monomial(m), n, k)
                        break
                if not ok:
                    break
            if not ok:
                break
        rec.check("iterated reduced coproduct is split-independent (%s)" % spec.name, ok, detail)

        ok = True
        detail = ""
        for m in hopf.monomials_up_to(spec, top):
            d = spec.degree(m)
            if hopf.iterated_reduced_monomial(spec, m, d + 1):
                ok, detail = False, hopf.render_hopf_monomial(m)
                break
            for (m1, m2), c in hopf.coproduct_monomial(spec, m).items():
                if spec.degree(m1) + spec.degree(m2) != d:
                    ok, detail = False, hopf.render_hopf_monomial(m)
                    break
        rec.check("nilpotence and degree additivity (%s)" % spec.name, ok, detail)
    return rec.results


def _iterated_by_split(spec, m, n, k):
    """(reduced Delta^[k] (x) reduced Delta^[n-k]) o reduced Delta, tensor
    slots flattened; equals the straight iteration for every k."""
    out: dict = {}
    for (m1, m2), c in hopf.reduced_coproduct_monomial(spec, m).items():
        for left, cl in hopf.iterated_reduced_monomial(spec, m1, k).items():
            for right, cr in hopf.iterated_reduced_monomial(spec, m2, n - k).items():
                key = left + right
                out[key] = out.get(key, Fraction(0)) + c * cl * cr
    return {key: c for key, c in out.items() if c}


def suite_universal_maps(seed: int) -> list[CheckResult]:
    rec = _Recorder("universal-maps")
    rng = Random(seed)
    split = POLE_PART

    ok = True
    detail = ""
    jinv_route = closedform.functional_inverse(closedform.J, LAURENT)
    for _ in range(25):
        w = randgen.random_word(rng, rng.randint(1, 4))
        closed = closedform.J_INVERSE.on_word(w, LAURENT)
        via_series = jinv_route.on_word(w, LAURENT)
        if closed != via_series:
            ok, detail = False, "w=%s: %s vs %s" % (
                stuffle.render_word(w, scalars.render_monomial), closed, via_series)
            break
    rec.check("closed inverse of J equals its convolution inverse", ok, detail)

    ok = True
    detail = ""
    for _ in range(25):
        w = randgen.random_word(rng, rng.randint(1, 4))
        folded = closedform.JBarFunctional(split).on_word(w, LAURENT)
        generic = closedform.jbar_generic(split, w, LAURENT)
        if folded != generic:
            ok, detail = False, "w=%s" % stuffle.render_word(w, scalars.render_monomial)
            break
    rec.check("preparation recursion equals folded closed form", ok, detail)

    ok = True
    detail = ""
    for _ in range(25):
        w = randgen.random_word(rng, rng.randint(1, 4))
        jbar = closedform.JBarFunctional(split).on_word(w, LAURENT)
        jp = closedform.JPlusFunctional(split).on_word(w, LAURENT)
        jm = closedform.JMinusFunctional(split).on_word(w, LAURENT)
        if jp != split.plus(jbar) or jm != -split.minus(jbar) or jp - jm != jbar:
            ok, detail = False, "w=%s" % stuffle.render_word(w, scalars.render_monomial)
            break
    rec.check("plus/minus functionals are the two shadows of jbar", ok, detail)

    ok = True
    detail = ""
    for _ in range(20):
        u = randgen.random_word(rng, rng.randint(1, 2))
        v = randgen.random_word(rng, rng.randint(1, 2))
        prod = stuffle.stuffle_product(
            StuffleElement.from_word(LAURENT, u), StuffleElement.from_word(LAURENT, v)
        )
        for F in (closedform.JMinusFunctional(split), closedform.JPlusFunctional(split)):
            lhs = closedform.eval_functional(F, prod)
            rhs = F.on_word(u, LAURENT) * F.on_word(v, LAURENT)
            if lhs != rhs:
                ok, detail = False, "u=%s v=%s" % (
                    stuffle.render_word(u, scalars.render_monomial),
                    stuffle.render_word(v, scalars.render_monomial))
                break
        if not ok:
            break
    rec.check("plus/minus functionals are multiplicative", ok, detail)

    ok = True
    detail = ""
    for _ in range(10):
        F = randgen.random_functional(rng)
        for length in range(1, 4):
            w = Word(tuple(randgen.random_monomial(rng) for _ in range(length)))
            lhs = closedform.odot(F, closedform.J, LAURENT).on_word(w, LAURENT)
            rhs = closedform.odot(closedform.J, F, LAURENT).on_word(w, LAURENT)
            fw = F.on_word(w, LAURENT)
            if lhs != fw or rhs != fw:
                ok, detail = False, "w=%s" % stuffle.render_word(w, scalars.render_monomial)
                break
        if not ok:
            break
    rec.check("J is a two-sided identity for the transport product", ok, detail)
    return rec.results


def suite_brb_equivalence(seed: int) -> list[CheckResult]:
    rec = _Recorder("brb-equivalence")
    rng = Random(seed)
    for spec in (hopf.ladder_spec(4), hopf.faa_di_bruno_spec(3)):
        maps = [randgen.random_unital_map(rng, spec) for _ in range(4)]
        chars = [randgen.random_character(rng, spec) for _ in range(2)]
        all_maps = maps + [c.as_map() for c in chars]

        ok = True
        detail = ""
        for f in all_maps:
            closed = closedform.closed_inverse(f)
            rec_route = convolution.inverse_recursive(f)
            series_route = convolution.inverse_series(f)
            if closed != rec_route or closed != series_route:
                ok = False
                detail = _first_map_difference(closed, rec_route) or _first_map_difference(closed, series_route)
                break
            if convolution.convolve(closed, f) != convolution.convolution_unit(spec, f.basis):
                ok, detail = False, "inverse fails to invert"
                break
        rec.check("three inverse engines agree (%s)" % spec.name, ok, detail)

        ok = True
        detail = ""
        for f in all_maps:
            plus_c, minus_c = closedform.closed_brb(f, POLE_PART)
            plus_r, minus_r = convolution.brb_recursive(f, POLE_PART)
            if plus_c != plus_r or minus_c != minus_r:
                ok = False
                detail = _first_map_difference(plus_c, plus_r) or _first_map_difference(minus_c, minus_r)
                break
            if convolution.convolve(minus_c, f) != plus_c:
                ok, detail = False, "minus * f differs from plus"
                break
            for m in hopf.monomials_up_to(spec):
                if POLE_PART.minus(plus_c(m)) != AlgebraElement.zero(LAURENT):
                    ok, detail = False, "plus leaks into the minus sector"
                    break
                if POLE_PART.plus(minus_c(m)) != AlgebraElement.zero(LAURENT):
                    ok, detail = False, "minus leaks into the plus sector"
                    break
            if not ok:
                break
        rec.check("closed and recursive decompositions agree (%s)" % spec.name, ok, detail)

        ok = True
        detail = ""
        for c in chars:
            plus_c, minus_c = closedform.closed_brb(c, POLE_PART)
            if not convolution.is_character(plus_c) or not convolution.is_character(minus_c):
                ok, detail = False, "factor of a character is not a character"
                break
            if not convolution.is_character(closedform.closed_inverse(c)):
                ok, detail = False, "inverse of a character is not a character"
                break
        rec.check("character property survives decomposition (%s)" % spec.name, ok, detail)
    return rec.results


def suite_diffeo(seed: int) -> list[CheckResult]:
    rec = _Recorder("diffeo")
    rng = Random(seed)
    order = 5

    ok = True
    detail = ""
    for _ in range(5):
        f = randgen.random_diffeo(rng, order)
        g = randgen.random_diffeo(rng, order)
        h = randgen.random_diffeo(rng, order)
        if diffeo.compose(diffeo.compose(f, g), h) != diffeo.compose(f, diffeo.compose(g, h)):
            ok, detail = False, "associativity broke"
            break
        inv = diffeo.compositional_inverse(f)
        ident = diffeo.FormalDiffeo.identity(order)
        if diffeo.compose(f, inv) != ident or diffeo.compose(inv, f) != ident:
            ok, detail = False, "inverse roundtrip broke for %s" % f
            break
    rec.check("composition group at order %d" % order, ok, detail)

    ok = True
    detail = ""
    for _ in range(4):
        f = randgen.random_diffeo(rng, order)
        g = randgen.random_diffeo(rng, order)
        phi_f = diffeo.diffeo_to_character(f)
        phi_g = diffeo.diffeo_to_character(g)
        conv = convolution.convolve(phi_f, phi_g)
        comp = diffeo.compose(f, g)
        for m in range(1, order):
            if conv(("a%d" % m,)) != comp.coefficient(m + 1):
                ok, detail = False, "mismatch at a%d" % m
                break
        if not ok:
            break
    rec.check("convolution of characters matches composition of series", ok, detail)

    ok = True
    detail = ""
    for _ in range(3):
        f = randgen.random_diffeo(rng, order)
        plus, minus = diffeo.birkhoff_factorize(f)
        plus_r, minus_r = diffeo.birkhoff_factorize(f, engine="recursive")
        if plus != plus_r or minus != minus_r:
            ok, detail = False, "engines disagree"
            break
        if diffeo.compose(minus, f) != plus:
            ok, detail = False, "minus o f differs from plus for %s" % f
            break
        for n, c in minus.coefficients.items():
            if POLE_PART.plus(c) != AlgebraElement.zero(LAURENT):
                ok, detail = False, "minus coefficient at x^%d leaves the pole sector" % n
                break
        for n, c in plus.coefficients.items():
            if POLE_PART.minus(c) != AlgebraElement.zero(LAURENT):
                ok, detail = False, "plus coefficient at x^%d has poles" % n
                break
        if not ok:
            break
    rec.check("factorization: minus o f = plus with clean sectors", ok, detail)
    return rec.results


SUITES = {
    "rb-identity": suite_rb_identity,
    "stuffle-axioms": suite_stuffle_axioms,
    "hopf-axioms": suite_hopf_axioms,
    "universal-maps": suite_universal_maps,
    "brb-equivalence": suite_brb_equivalence,
    "diffeo": suite_diffeo,
}


def run_suites(names, seed: int = 0) -> list[CheckResult]:
    if isinstance(names, str):
        names = [names]
    expanded: list[str] = []
    for n in names:
        if n == "all":
            expanded.extend(SUITES)
        elif n in SUITES:
            expanded.append(n)
        else:
            raise ValueError(
                "unknown suite %r (available: %s, all)" % (n, ", ".join(SUITES))
            )
    out: list[CheckResult] = []
    for n in expanded:
        out.extend(SUITES[n](seed))
    return out
