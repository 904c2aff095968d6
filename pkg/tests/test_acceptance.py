"""End-to-end acceptance checks, one per shipped guarantee, at fixed
sizes and exact (zero-tolerance) equality.

Each test prints a single ``criterion NN ... PASS/FAIL`` line; with
``pytest -v`` the per-test PASSED/FAILED lines mirror the same verdicts.
"""

from fractions import Fraction
from random import Random
import json
import subprocess
import sys
from pathlib import Path

from birkhopf import (
    AlgebraElement,
    Character,
    HopfElement,
    HopfWordElement,
    J,
    J_INVERSE,
    JBarFunctional,
    JMinusFunctional,
    JPlusFunctional,
    LAURENT,
    POLE_PART,
    SYMBOLS,
    StuffleElement,
    TRIVIAL_PLUS,
    UNIT_MONOMIAL,
    Word,
    birkhoff_factorize,
    brb_recursive,
    closed_brb,
    closed_inverse,
    compose,
    convolution_unit,
    convolve,
    coproduct_monomial,
    counit,
    deconcat_coproduct,
    eval_functional,
    faa_di_bruno_spec,
    functional_convolution,
    functional_inverse,
    hopf_word_stuffle,
    inverse_recursive,
    inverse_series,
    iota,
    iota_monomial,
    iota_via_recursion,
    is_character,
    iterated_coproduct,
    jbar_generic,
    ladder_spec,
    monomials_up_to,
    odot,
    rota_baxter_identity_holds,
    stuffle_antipode,
    stuffle_product,
    transport,
    word,
)
from birkhopf.closedform import hopf_word_deconcat
from birkhopf.hopf import hopf_monomial_product, reduced_coproduct_monomial, render_hopf_monomial
from birkhopf.randgen import (
    random_character,
    random_diffeo,
    random_functional,
    random_unital_map,
    random_word,
)
from birkhopf.scalars import LaurentPower, SymbolProduct, render_monomial
from birkhopf.stuffle import word_deconcat

DATA = Path(__file__).parent / "data"


def sym(name):
    return AlgebraElement.symbolic({name: 1})


def lau(exponents):
    return AlgebraElement.laurent(exponents)


def rand_scalar(rng: Random) -> AlgebraElement:
    """Laurent element with exponents drawn from [-4, 4]."""
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[rng.randint(-4, 4)] = Fraction(rng.choice([n for n in range(-9, 10) if n]),
                                             rng.choice([1, 2, 3]))
    return AlgebraElement.laurent(terms)


def laurent_word(rng: Random, length: int) -> Word:
    return Word(tuple(LaurentPower(rng.randint(-3, 3)) for _ in range(length)))


def welem(w: Word) -> StuffleElement:
    return StuffleElement.from_word(LAURENT, w)


def test_criterion_01_stuffle_product_fidelity(criterion_report):
    failures = []

    def s(*names):
        return SymbolProduct(tuple(sorted(names)))

    a1, a2, b1 = s("a1"), s("a2"), s("b1")
    got = stuffle_product(
        StuffleElement.from_word(SYMBOLS, word(a1, a2)),
        StuffleElement.from_word(SYMBOLS, word(b1)),
    )
    expected = StuffleElement(
        SYMBOLS,
        {
            word(a1, a2, b1): 1,
            word(a1, b1, a2): 1,
            word(b1, a1, a2): 1,
            word(s("a1", "b1"), a2): 1,
            word(a1, s("a2", "b1")): 1,
        },
    )
    if got != expected:
        failures.append("symbolic two-by-one product differs")
    got1 = stuffle_product(
        StuffleElement.from_word(SYMBOLS, word(a1)),
        StuffleElement.from_word(SYMBOLS, word(b1)),
    )
    expected1 = StuffleElement(
        SYMBOLS, {word(a1, b1): 1, word(b1, a1): 1, word(s("a1", "b1")): 1}
    )
    if got1 != expected1:
        failures.append("single-letter product differs")

    rng = Random(101)
    for i in range(200):
        lu = rng.randint(0, 3)
        lv = rng.randint(0, min(3, 6 - lu))
        u, v = laurent_word(rng, lu), laurent_word(rng, lv)
        prod = stuffle_product(welem(u), welem(v))
        if prod != stuffle_product(welem(v), welem(u)):
            failures.append("pair %d not commutative" % i)
            break
        lo, hi = max(lu, lv), lu + lv
        if any(not lo <= len(w) <= hi for w in prod.terms):
            failures.append("pair %d leaves the length window" % i)
            break
    for i in range(200):
        lu = rng.randint(0, 2)
        lv = rng.randint(0, min(2, 6 - lu))
        lw = rng.randint(0, min(2, 6 - lu - lv))
        x, y, z = (welem(laurent_word(rng, k)) for k in (lu, lv, lw))
        if stuffle_product(stuffle_product(x, y), z) != stuffle_product(x, stuffle_product(y, z)):
            failures.append("triple %d not associative" % i)
            break
    criterion_report(1, "stuffle product fidelity and laws", failures)


def hopf_antipode_table(spec):
    """Monomial antipode by the connected-Hopf recursion, memoized."""
    memo = {UNIT_MONOMIAL: {UNIT_MONOMIAL: Fraction(1)}}

    def on_monomial(m):
        if m in memo:
            return memo[m]
        acc = {m: Fraction(-1)}
        for (a, b), c in reduced_coproduct_monomial(spec, m).items():
            for ma, ca in on_monomial(a).items():
                prod = hopf_monomial_product(ma, b)
                acc[prod] = acc.get(prod, Fraction(0)) - c * ca
        memo[m] = {k: v for k, v in acc.items() if v}
        return memo[m]

    return on_monomial


def test_criterion_02_hopf_axioms(criterion_report):
    failures = []
    rng = Random(102)

    # word coalgebra up to length 4
    for i in range(60):
        w = laurent_word(rng, rng.randint(0, 4))
        x = welem(w)
        left = {}
        right = {}
        for (u, v), c in deconcat_coproduct(x).items():
            for (u1, u2) in word_deconcat(u):
                left[(u1, u2, v)] = left.get((u1, u2, v), Fraction(0)) + c
            for (v1, v2) in word_deconcat(v):
                right[(u, v1, v2)] = right.get((u, v1, v2), Fraction(0)) + c
        if left != right or left != iterated_coproduct(x, 3, reduced=False):
            failures.append("word coassociativity fails on %d" % i)
            break
        strip_left = sum((c for (u, v), c in deconcat_coproduct(x).items() if not u.letters and v == w), Fraction(0))
        if strip_left != 1:
            failures.append("word counit fails on %d" % i)
            break
        su = stuffle_antipode(x)
        conv = StuffleElement.zero(LAURENT)
        for (u, v), c in deconcat_coproduct(x).items():
            t = stuffle_product(stuffle_antipode(welem(u)), welem(v))
            conv = conv + StuffleElement(LAURENT, {k: cc * c for k, cc in t.terms.items()})
        unit_eps = StuffleElement(LAURENT, {Word(()): counit(x)})
        if conv != unit_eps:
            failures.append("word antipode identity fails on %d" % i)
            break
    for i in range(40):
        lu = rng.randint(0, 2)
        u, v = laurent_word(rng, lu), laurent_word(rng, rng.randint(0, min(2, 4 - lu)))
        x, y = welem(u), welem(v)
        lhs = deconcat_coproduct(stuffle_product(x, y))
        rhs = {}
        for (u1, u2), c in deconcat_coproduct(x).items():
            for (v1, v2), d in deconcat_coproduct(y).items():
                left = stuffle_product(welem(u1), welem(v1))
                right = stuffle_product(welem(u2), welem(v2))
                for wl, cl in left.terms.items():
                    for wr, cr in right.terms.items():
                        rhs[(wl, wr)] = rhs.get((wl, wr), Fraction(0)) + c * d * cl * cr
        if lhs != {k: c for k, c in rhs.items() if c}:
            failures.append("word bialgebra compatibility fails on %d" % i)
            break

    # both Hopf instances up to degree 6
    for spec in (ladder_spec(6), faa_di_bruno_spec(6)):
        monos = monomials_up_to(spec)
        for m in monos:
            full = dict(coproduct_monomial(spec, m))
            # counit
            if full.get((UNIT_MONOMIAL, m)) != 1 or full.get((m, UNIT_MONOMIAL)) != 1:
                failures.append("%s: counit fails at %s" % (spec.name, render_hopf_monomial(m)))
                break
            # coassociativity
            left = {}
            right = {}
            for (a, b), c in full.items():
                for (a1, a2), c2 in coproduct_monomial(spec, a).items():
                    key = (a1, a2, b)
                    left[key] = left.get(key, Fraction(0)) + c * c2
                for (b1, b2), c2 in coproduct_monomial(spec, b).items():
                    key = (a, b1, b2)
                    right[key] = right.get(key, Fraction(0)) + c * c2
            left = {k: c for k, c in left.items() if c}
            right = {k: c for k, c in right.items() if c}
            if left != right:
                failures.append("%s: coassociativity fails at %s" % (spec.name, render_hopf_monomial(m)))
                break
        antipode = hopf_antipode_table(spec)
        for m in monos:
            for swap in (False, True):
                acc = {}
                for (a, b), c in coproduct_monomial(spec, m).items():
                    if swap:
                        a, b = b, a
                    for ma, ca in antipode(a).items():
                        prod = hopf_monomial_product(ma, b)
                        acc[prod] = acc.get(prod, Fraction(0)) + c * ca
                acc = {k: v for k, v in acc.items() if v}
                if acc != {}:  # counit vanishes on non-unit monomials
                    failures.append("%s: antipode identity fails at %s" % (spec.name, render_hopf_monomial(m)))
                    break
        for g in monos:
            for h in monos:
                if spec.degree(g) + spec.degree(h) > spec.truncation:
                    continue
                gh = hopf_monomial_product(g, h)
                lhs = dict(coproduct_monomial(spec, gh))
                rhs = {}
                for (a1, b1), c in coproduct_monomial(spec, g).items():
                    for (a2, b2), d in coproduct_monomial(spec, h).items():
                        key = (hopf_monomial_product(a1, a2), hopf_monomial_product(b1, b2))
                        rhs[key] = rhs.get(key, Fraction(0)) + c * d
                if lhs != {k: c for k, c in rhs.items() if c}:
                    failures.append("%s: coproduct not multiplicative at %s,%s" % (spec.name, g, h))
                    break
    criterion_report(2, "coalgebra and antipode axioms", failures)


def test_criterion_03_rota_baxter_identity(criterion_report):
    failures = []
    rng = Random(103)
    for i in range(1000):
        x, y = rand_scalar(rng), rand_scalar(rng)
        if not rota_baxter_identity_holds(POLE_PART, x, y):
            failures.append("identity fails on pair %d" % i)
            break
        p, m = POLE_PART.plus(x), POLE_PART.minus(x)
        if p + m != x or not POLE_PART.minus(p).is_zero() or not POLE_PART.plus(m).is_zero():
            failures.append("projectors not complementary idempotents on %d" % i)
            break
        prod_m = m * POLE_PART.minus(y)
        prod_p = p * POLE_PART.plus(y)
        if not POLE_PART.plus(prod_m).is_zero() or not POLE_PART.minus(prod_p).is_zero():
            failures.append("sectors not closed under products on %d" % i)
            break
    criterion_report(3, "Rota-Baxter splitting on 1000 Laurent pairs", failures)


def test_criterion_04_universal_map_closed_forms(criterion_report):
    failures = []
    rng = Random(104)
    j_inv_route = functional_inverse(J, LAURENT)
    folded = JBarFunctional(POLE_PART)
    jplus = JPlusFunctional(POLE_PART)
    jminus = JMinusFunctional(POLE_PART)
    for length in range(1, 6):
        for _ in range(30):
            w = laurent_word(rng, length)
            letters = [AlgebraElement(LAURENT, {m: 1}) for m in w.letters]
            closed = J_INVERSE.on_word(w, LAURENT)
            signed_product = AlgebraElement.one(LAURENT)
            for x in letters:
                signed_product = signed_product * x
            signed_product = signed_product * (Fraction(-1) ** length)
            if closed != signed_product or closed != j_inv_route.on_word(w, LAURENT):
                failures.append("inverse functional differs on %s" % render_monomial(w.letters[0]))
                break
            q = folded.on_word(w, LAURENT)
            if q != jbar_generic(POLE_PART, w, LAURENT):
                failures.append("preparation routes differ at length %d" % length)
                break
            if jplus.on_word(w, LAURENT) != POLE_PART.plus(q) or jminus.on_word(w, LAURENT) != -POLE_PART.minus(q):
                failures.append("plus/minus shadows differ at length %d" % length)
                break
    criterion_report(4, "universal word functionals in closed form", failures)


def test_criterion_05_plus_minus_are_characters(criterion_report):
    failures = []
    rng = Random(105)
    jplus = JPlusFunctional(POLE_PART)
    jminus = JMinusFunctional(POLE_PART)
    for i in range(200):
        lu = rng.randint(1, 4)
        lv = rng.randint(1, max(1, 5 - lu))
        u, v = welem(laurent_word(rng, lu)), welem(laurent_word(rng, lv))
        prod = stuffle_product(u, v)
        for F in (jplus, jminus):
            if eval_functional(F, prod) != eval_functional(F, u) * eval_functional(F, v):
                failures.append("pair %d: functional not multiplicative" % i)
                break
        if failures:
            break
    criterion_report(5, "decomposition functionals respect the product", failures)


def test_criterion_06_embedding_theorem(criterion_report):
    failures = []
    for spec in (ladder_spec(5), faa_di_bruno_spec(5)):
        monos = monomials_up_to(spec)
        for m in monos:
            direct = HopfWordElement(spec, iota_monomial(spec, m))
            if iota_via_recursion(spec, m) != direct:
                failures.append("%s: recursion route differs at %s" % (spec.name, render_hopf_monomial(m)))
                break
            lhs = hopf_word_deconcat(direct)
            rhs = {}
            for (h1, h2), c in coproduct_monomial(spec, m).items():
                for w1, c1 in iota_monomial(spec, h1).items():
                    for w2, c2 in iota_monomial(spec, h2).items():
                        key = (w1, w2)
                        rhs[key] = rhs.get(key, Fraction(0)) + c * c1 * c2
            if lhs != {k: c for k, c in rhs.items() if c}:
                failures.append("%s: not a coalgebra map at %s" % (spec.name, render_hopf_monomial(m)))
                break
        for g in monos:
            for h in monos:
                if spec.degree(g) + spec.degree(h) > spec.truncation:
                    continue
                gh = HopfElement.monomial(spec, g) * HopfElement.monomial(spec, h)
                rhs = hopf_word_stuffle(
                    HopfWordElement(spec, iota_monomial(spec, g)),
                    HopfWordElement(spec, iota_monomial(spec, h)),
                )
                if iota(gh) != rhs:
                    failures.append("%s: not an algebra map at %s,%s" % (spec.name, g, h))
                    break
    criterion_report(6, "word embedding is a Hopf morphism", failures)


def test_criterion_07_transport_action(criterion_report):
    failures = []
    rng = Random(107)
    for spec, count in ((ladder_spec(5), 25), (faa_di_bruno_spec(4), 25)):
        for i in range(count):
            f = random_unital_map(rng, spec)
            if transport(J, f) != f:
                failures.append("%s: transport of J moves map %d" % (spec.name, i))
                break
    small = ladder_spec(3)
    for i in range(10):
        F = random_functional(rng)
        G = random_functional(rng)
        f = random_unital_map(rng, small)
        lhs = transport(functional_convolution(F, G, LAURENT), f)
        if lhs != convolve(transport(F, f), transport(G, f)):
            failures.append("transport does not intertwine convolutions on %d" % i)
            break
    for i in range(10):
        F = random_functional(rng)
        G = random_functional(rng)
        H = random_functional(rng)
        for length in range(1, 4):
            w = laurent_word(rng, length)
            fw = F.on_word(w, LAURENT)
            if odot(F, J, LAURENT).on_word(w, LAURENT) != fw:
                failures.append("right identity fails on %d" % i)
                break
            if odot(J, F, LAURENT).on_word(w, LAURENT) != fw:
                failures.append("left identity fails on %d" % i)
                break
            left = odot(odot(F, G, LAURENT), H, LAURENT).on_word(w, LAURENT)
            right = odot(F, odot(G, H, LAURENT), LAURENT).on_word(w, LAURENT)
            if left != right:
                failures.append("transport product not associative on %d" % i)
                break
        if failures:
            break
    criterion_report(7, "transport action laws", failures)


_DECOMPOSITIONS = []


def _collect_decompositions():
    """Closed and recursive runs at the stated sizes, cached for reuse."""
    if _DECOMPOSITIONS:
        return _DECOMPOSITIONS
    rng = Random(108)
    for spec in (ladder_spec(6), faa_di_bruno_spec(5)):
        subjects = [(random_unital_map(rng, spec), False) for _ in range(50)]
        subjects += [(random_character(rng, spec), True) for _ in range(25)]
        for f, is_char in subjects:
            plus_c, minus_c = closed_brb(f, POLE_PART)
            plus_r, minus_r = brb_recursive(f, POLE_PART)
            inv_c = closed_inverse(f)
            inv_r = inverse_recursive(f)
            _DECOMPOSITIONS.append(
                (spec, f, is_char, plus_c, minus_c, plus_r, minus_r, inv_c, inv_r)
            )
    return _DECOMPOSITIONS


def test_criterion_08_closed_form_equals_recursion(criterion_report):
    failures = []
    for spec, f, is_char, plus_c, minus_c, plus_r, minus_r, inv_c, inv_r in _collect_decompositions():
        if inv_c != inv_r:
            failures.append("%s: inverse engines differ" % spec.name)
            break
        if is_char and inv_c != inverse_series(f):
            failures.append("%s: series route differs on a character" % spec.name)
            break
        if plus_c != plus_r or minus_c != minus_r:
            failures.append("%s: decomposition engines differ" % spec.name)
            break

    # the degree-3 closed inverse, symbolically
    L3 = ladder_spec(3)
    phi = Character(L3, SYMBOLS, {"l1": sym("x1"), "l2": sym("x2"), "l3": sym("x3")})
    x1, x2, x3 = sym("x1"), sym("x2"), sym("x3")
    inv = closed_inverse(phi)
    if inv(("l3",)) != -x3 + x1 * x2 * 2 - x1 * x1 * x1:
        failures.append("symbolic degree-3 inverse differs")
    if inv(("l1", "l2")) != x1 * x2 - x1 * x1 * x1:
        failures.append("symbolic mixed-monomial inverse differs")

    # the degree-3 decomposition pattern with hand-enumerated words
    rng = Random(1080)
    pm = POLE_PART.minus
    cases = [
        (L3, ("l3",), [(1, ("l1",), ("l2",)), (1, ("l2",), ("l1",))],
         [(1, ("l1",), ("l1",), ("l1",))]),
        (faa_di_bruno_spec(3), ("a3",),
         [(1, ("a1",), ("a1", "a1")), (2, ("a1",), ("a2",)), (3, ("a2",), ("a1",))],
         [(6, ("a1",), ("a1",), ("a1",))]),
    ]
    for spec, target, pairs_, triples in cases:
        for _ in range(5):
            phi = random_character(rng, spec)
            prepared = phi(target)
            for c, a, b in pairs_:
                prepared = prepared + (-pm(phi(a))) * phi(b) * c
            for c, a, b, d in triples:
                prepared = prepared + (-pm(-pm(phi(a)) * phi(b))) * phi(d) * c
            plus, minus = closed_brb(phi, POLE_PART)
            if plus(target) != POLE_PART.plus(prepared) or minus(target) != -pm(prepared):
                failures.append("%s: displayed degree-3 formula differs" % spec.name)
                break
    criterion_report(8, "closed form equals Bogoliubov recursion", failures)


def test_criterion_09_decomposition_contract(criterion_report):
    failures = []
    for spec, f, is_char, plus_c, minus_c, _, _, inv_c, _ in _collect_decompositions():
        if convolve(minus_c, f) != plus_c:
            failures.append("%s: minus * phi differs from plus" % spec.name)
            break
        for m in monomials_up_to(spec):
            if not POLE_PART.minus(plus_c(m)).is_zero():
                failures.append("%s: plus factor leaks poles" % spec.name)
                break
            if not POLE_PART.plus(minus_c(m)).is_zero():
                failures.append("%s: minus factor leaves the pole sector" % spec.name)
                break
        if failures:
            break
    rng = Random(109)
    for spec in (ladder_spec(6), faa_di_bruno_spec(5)):
        for _ in range(6):
            phi = random_character(rng, spec)
            plus, minus = closed_brb(phi, POLE_PART)
            if not (is_character(plus) and is_character(minus) and is_character(closed_inverse(phi))):
                failures.append("%s: character property lost" % spec.name)
                break
    criterion_report(9, "decomposition contract and sector discipline", failures)


def test_criterion_10_diffeomorphism_factorization(criterion_report):
    failures = []
    rng = Random(110)
    for i in range(25):
        f = random_diffeo(rng, 8)
        for n in range(2, 9):
            for exponent, _ in f.coefficient(n):
                if not -3 <= exponent.exponent <= 3:
                    failures.append("diffeo %d: coefficient exponent out of range" % i)
        plus, minus = birkhoff_factorize(f, POLE_PART, engine="closed")
        plus_r, minus_r = birkhoff_factorize(f, POLE_PART, engine="recursive")
        if (plus, minus) != (plus_r, minus_r):
            failures.append("diffeo %d: engines disagree" % i)
            break
        if compose(minus, f) != plus:
            failures.append("diffeo %d: minus o f differs from plus" % i)
            break
        for n in range(2, 9):
            if not POLE_PART.plus(minus.coefficient(n)).is_zero():
                failures.append("diffeo %d: minus not purely polar" % i)
                break
            if not POLE_PART.minus(plus.coefficient(n)).is_zero():
                failures.append("diffeo %d: plus not pole free" % i)
                break
        if failures:
            break
    criterion_report(10, "order-8 diffeomorphism factorization", failures)


def test_criterion_11_cli_determinism(criterion_report):
    failures = []
    fixture = str(DATA / "ladder_character.toml")
    argv = [
        sys.executable, "-m", "birkhopf.cli",
        "decompose", "--hopf", "ladder", "--degree", "3", "--config", fixture,
    ]
    first = subprocess.run(argv, capture_output=True, timeout=300)
    second = subprocess.run(argv, capture_output=True, timeout=300)
    if first.returncode != 0 or second.returncode != 0:
        failures.append("decompose exited nonzero")
    if first.stdout != second.stdout:
        failures.append("decompose output differs between runs")
    golden = (DATA / "golden_ladder_decompose.json").read_bytes()
    if first.stdout != golden:
        failures.append("decompose output differs from the golden fixture")

    proc = subprocess.run(
        [sys.executable, "-m", "birkhopf.cli", "verify", "--suite", "all", "--seed", "0"],
        capture_output=True,
        timeout=300,
    )
    if proc.returncode != 0:
        failures.append("verify --suite all --seed 0 exited %d" % proc.returncode)
    else:
        payload = json.loads(proc.stdout)
        if payload.get("ok") is not True:
            failures.append("verify payload reports failure")
    criterion_report(11, "CLI determinism and self checks", failures)
