"""Named verification suites.

Each suite is an ordered list of checks; a check returns a status
("pass", or "witness" when its success consists of exhibiting a
concrete counterexample) together with an optional payload, or raises,
which the runner records as "fail". Reports are deterministic: every
randomized check seeds its own generator from its check id, and output
ordering follows declaration order, never timing.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import maps, parsing, poly, rings, series, structure
from .errors import ConstructionError, ReductionError, SkewringError

SUITE_NAMES = (
    "nuclei",
    "laurent-axioms",
    "associativity",
    "simplicity",
    "finite-order-ideals",
    "hilbert-reduction",
    "series",
    "jordan",
    "quantum-torus",
    "d-structure",
)


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str  # pass | fail | witness
    witness: dict | None = None
    elapsed: float = 0.0


@dataclass
class SuiteReport:
    suite: str
    config_digest: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)


# ---------------------------------------------------------------------------
# standard configurations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cfg_gaussian_q2():
    g = rings.gaussian()
    return poly.RingConfig(g, maps.make_twist(g, "q_twist", q=2), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def cfg_gaussian_qm1():
    g = rings.gaussian()
    return poly.RingConfig(g, maps.make_twist(g, "q_twist", q=-1), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def cfg_gaussian_q(q):
    g = rings.gaussian()
    return poly.RingConfig(g, maps.make_twist(g, "q_twist", q=q), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def cfg_gaussian_conj():
    g = rings.gaussian()
    return poly.RingConfig(g, maps.make_twist(g, "conjugation"), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def cfg_matrix_swap():
    m2 = rings.matrix_algebra(rings.rationals(), 2)
    return poly.RingConfig(m2, maps.make_twist(m2, "diag_swap"), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def cfg_octonion_conj():
    o = rings.octonions()
    return poly.RingConfig(o, maps.make_twist(o, "conjugation"), None, "X", poly.LAURENT)


@lru_cache(maxsize=None)
def ring_poly_rational():
    q = rings.rationals()
    return poly.RingConfig(q, maps.make_twist(q, "identity"), None, "Y", poly.ORE)


@lru_cache(maxsize=None)
def cfg_weyl():
    qy = ring_poly_rational()
    return poly.RingConfig(
        qy,
        maps.make_twist(qy, "identity"),
        maps.make_twist(qy, "derivative"),
        "X",
        poly.ORE,
    )


@lru_cache(maxsize=None)
def cfg_gaussian_ore_q2():
    g = rings.gaussian()
    return poly.RingConfig(g, maps.make_twist(g, "q_twist", q=2), None, "X", poly.ORE)


@lru_cache(maxsize=None)
def cfg_octonion_ore_id():
    o = rings.octonions()
    return poly.RingConfig(o, maps.make_twist(o, "identity"), None, "X", poly.ORE)


@lru_cache(maxsize=None)
def cfg_torus_octonion():
    return poly.quantum_torus(rings.octonions(), 2)


@lru_cache(maxsize=None)
def cfg_torus_rational(q=1):
    return poly.quantum_torus(rings.rationals(), q)


def _rng(check_id):
    return random.Random(zlib.crc32(check_id.encode()))


def _cfg_label(config):
    return config.describe()


def _fmt(value):
    if isinstance(value, poly.SkewPoly):
        return parsing.format_poly(value)
    if isinstance(value, series.TruncatedSeries):
        return parsing.format_series(value)
    return parsing.format_element(value)


def _triple_payload(witness):
    a, b, c, value = witness
    return {
        "triple": [_fmt(a), _fmt(b), _fmt(c)],
        "associator": _fmt(value),
    }


def _require(condition, message):
    if not condition:
        raise AssertionError(message)


# ---------------------------------------------------------------------------
# laurent-axioms suite
# ---------------------------------------------------------------------------

ANCHOR_PI = (
    "pi(1,3) equals sigma∘delta∘delta + delta∘sigma∘delta + delta∘delta∘sigma; "
    "the recursion matches word enumeration"
)
ANCHOR_WEYL = "X·Y − Y·X = 1 in Q[Y][X; id, d/dY]"
ANCHOR_NS = "(S,S,x) = (S,x,S) = 0 and xR = Rx for the twisted variable"
ANCHOR_RING_LAWS = "twisted products are biadditive and unital with bounded degree growth"


def _pi_families():
    qy = ring_poly_rational()
    weyl = (
        "weyl",
        qy,
        maps.PiFamily(maps.make_twist(qy, "identity"), maps.make_twist(qy, "derivative")),
    )
    o = rings.octonions()
    oct_fam = (
        "octonion",
        o,
        maps.PiFamily(
            maps.make_twist(o, "conjugation"),
            maps.standard_derivation(o.basis_element(1), o.basis_element(2)),
        ),
    )
    return [weyl, oct_fam]


def _check_pi_word_sum():
    for label, ring, fam in _pi_families():
        rng = _rng(f"pi-words-{label}")
        for _ in range(25):
            s = ring.random_element(rng)
            by_recursion = maps.pi_apply(fam, 1, 3, s)
            by_words = maps.pi_word_sum(fam, 1, 3, s)
            _require(by_recursion == by_words, f"pi(1,3) mismatch over {label}")
        words = maps.pi_words(1, 3)
        _require(words == [
            ("sigma", "delta", "delta"),
            ("delta", "sigma", "delta"),
            ("delta", "delta", "sigma"),
        ], "unexpected word enumeration for pi(1,3)")
    return "pass", None


def _check_pi_recursion_enumeration():
    for label, ring, fam in _pi_families():
        rng = _rng(f"pi-enum-{label}")
        elements = [ring.random_element(rng) for _ in range(25)]
        for m in range(0, 7):
            for i in range(0, m + 1):
                for s in elements:
                    _require(
                        maps.pi_apply(fam, i, m, s) == maps.pi_word_sum(fam, i, m, s),
                        f"pi({i},{m}) recursion != enumeration over {label}",
                    )
        zero_above = ring.random_element(rng)
        _require(not maps.pi_apply(fam, 3, 2, zero_above), "pi must vanish for i > m")
    return "pass", None


def _check_weyl_relation():
    weyl = cfg_weyl()
    x = weyl.gen
    y = weyl.constant(ring_poly_rational().gen)
    _require(x * y - y * x == weyl.one, "Weyl relation fails")
    _require(x * y == weyl.one + y * x, "X·Y != 1 + YX")
    return "pass", None


def _laurent_roster():
    return [cfg_gaussian_q2(), cfg_matrix_swap(), cfg_octonion_conj()]


def _check_variable_coefficient_pass(configs):
    for config in configs:
        if config.shape != poly.LAURENT:
            continue
        sigma = config.sigma
        x = config.gen
        for b in config.coefficients.spanning_set(2):
            bc = config.constant(b)
            _require(x * bc == config.monomial(sigma(b), 1), "X·r != sigma(r)·X")
            _require(
                bc * x == poly.poly_mul(x, config.constant(sigma.power_apply(-1, b))),
                "r·X != X·sigma^{-1}(r)",
            )
    for config in (cfg_weyl(),):
        sigma, delta = config.sigma, config.delta
        x = config.gen
        for b in config.coefficients.spanning_set(2):
            expected = config.constant(delta(b)) + config.monomial(sigma(b), 1)
            _require(x * config.constant(b) == expected, "X·r != delta(r) + sigma(r)·X")
    return "pass", None


def _check_variable_associators(configs):
    ore_extra = [cfg_weyl(), cfg_gaussian_ore_q2()]
    for config in list(configs) + ore_extra:
        rng = _rng(f"ns3-{_cfg_label(config)}")
        x = config.gen
        for _ in range(20):
            p = config.random_element(rng, max_degree=4)
            q = config.random_element(rng, max_degree=4)
            _require(
                not rings.associator(p, q, x), "(p,q,X) != 0"
            )
            _require(
                not rings.associator(p, x, q), "(p,X,q) != 0"
            )
    return "pass", None


def _check_ring_laws(configs):
    for config in configs:
        rng = _rng(f"laws-{_cfg_label(config)}")
        one = config.one
        for _ in range(50):
            p = config.random_element(rng)
            q = config.random_element(rng)
            r = config.random_element(rng)
            _require((p + q) * r == p * r + q * r, "left biadditivity fails")
            _require(p * (q + r) == p * q + p * r, "right biadditivity fails")
            _require(one * p == p and p * one == p, "unit law fails")
    return "pass", None


def _check_degree_growth():
    division_cfg = cfg_gaussian_q2()
    rng = _rng("degree-growth")
    for _ in range(40):
        p = division_cfg.random_element(rng)
        q = division_cfg.random_element(rng)
        if not p or not q:
            continue
        prod = p * q
        _require(prod, "division coefficients cannot produce zero divisors")
        _require(
            prod.degree == p.degree + q.degree,
            "degree must be additive over division coefficients",
        )
    zero_div_cfg = cfg_matrix_swap()
    for _ in range(40):
        p = zero_div_cfg.random_element(rng)
        q = zero_div_cfg.random_element(rng)
        if not p or not q:
            continue
        prod = p * q
        if prod:
            _require(
                prod.degree <= p.degree + q.degree,
                "degree exceeded the sum bound",
            )
    return "pass", None


def _check_canonical_form(configs):
    for config in configs:
        x2 = config.variable_power(2)
        x3 = config.variable_power(3)
        _require(x2 * x3 == config.variable_power(5), "X^m·X^n != X^{m+n}")
        cancel = x2 - x2
        _require(not cancel.terms, "cancellation must drop zero coefficients")
        _require(
            not config.from_terms({1: config.coefficients.zero}).terms,
            "zero coefficients must not be stored",
        )
    return "pass", None


def _laurent_axioms_suite(configs=None):
    roster = configs or _laurent_roster()
    return [
        ("axioms/pi-1-3-word-sum", ANCHOR_PI, _check_pi_word_sum),
        ("axioms/pi-recursion-vs-enumeration", ANCHOR_PI, _check_pi_recursion_enumeration),
        ("axioms/weyl-relation", ANCHOR_WEYL, _check_weyl_relation),
        ("axioms/variable-coefficient-pass", ANCHOR_NS,
         lambda: _check_variable_coefficient_pass(roster)),
        ("axioms/variable-associators", ANCHOR_NS,
         lambda: _check_variable_associators(roster)),
        ("axioms/ring-laws", ANCHOR_RING_LAWS, lambda: _check_ring_laws(roster)),
        ("axioms/degree-growth", ANCHOR_RING_LAWS, _check_degree_growth),
        ("axioms/canonical-form", ANCHOR_RING_LAWS,
         lambda: _check_canonical_form(roster)),
    ]


# ---------------------------------------------------------------------------
# nuclei suite
# ---------------------------------------------------------------------------

ANCHOR_NUCLEI = "X^n lies in N_m(S) and N_r(S) for S = R[X±; sigma], any n"
ANCHOR_LEFT = "X lies in N_l(S) iff sigma is an automorphism"
ANCHOR_NUCLEAR_INV = (
    "nuclear inverses: x in N_l∩N_m gives x⁻¹ in N_l; x in N gives x⁻¹ in N_m; "
    "x in N_m∩N_r gives x⁻¹ in N_r"
)


def _check_power_nuclear(config, n, side, bound=4):
    def run():
        query = structure.NucleusQuery(config.variable_power(n), side, bound)
        outcome = structure.nucleus_membership(query)
        _require(outcome.passed, f"X^{n} must be {side}-nuclear")
        return "pass", None
    return run


def _check_left_witness(config):
    def run():
        tags = maps.classify_multiplicativity(config.sigma)
        outcome = structure.nucleus_membership(
            structure.NucleusQuery(config.gen, "left", 4)
        )
        if "automorphism" in tags:
            _require(outcome.passed, "automorphism twist must put X in N_l")
            return "pass", None
        _require(not outcome.passed, "non-automorphism twist must exclude X from N_l")
        return "witness", _triple_payload(outcome.witness)
    return run


def _unit_for(config):
    ring = config.coefficients
    if isinstance(ring, rings.MatrixRing):
        return ring.unit_matrix(0, 1) + ring.unit_matrix(1, 0)
    return ring.basis_element(min(1, ring.qdim - 1))


def _check_nuclear_inverse(config, element_key, hypothesis):
    def run():
        if element_key == "X":
            x = config.gen
        elif element_key == "X^2":
            x = config.variable_power(2)
        else:
            x = config.constant(_unit_for(config))
        report = structure.nuclear_inverse_check(x, hypothesis, 3)
        _require(report.ok, f"nuclear inverse clause {hypothesis} violated")
        payload = None
        if not report.hypothesis_satisfied:
            failing = [
                side for side, outcome in report.hypothesis_checks.items()
                if not outcome.passed
            ]
            payload = {"hypothesis": "not satisfied", "failing_sides": failing}
        return "pass", payload
    return run


def _nuclei_suite(configs=None):
    roster = configs or _laurent_roster()
    checks = []
    for config in roster:
        label = _cfg_label(config)
        for n in range(-4, 5):
            for side in ("middle", "right"):
                checks.append((
                    f"nuclei/{label}/X^{n}/{side}",
                    ANCHOR_NUCLEI,
                    _check_power_nuclear(config, n, side),
                ))
        checks.append((
            f"nuclei/{label}/X/left",
            ANCHOR_LEFT,
            _check_left_witness(config),
        ))
    inverse_roster = configs or (_laurent_roster() + [cfg_gaussian_qm1()])
    for config in inverse_roster:
        if config.shape != poly.LAURENT:
            continue
        label = _cfg_label(config)
        for element_key in ("X", "X^2", "unit"):
            for hypothesis in ("lm", "full", "mr"):
                checks.append((
                    f"nuclei/inverse/{label}/{element_key}/{hypothesis}",
                    ANCHOR_NUCLEAR_INV,
                    _check_nuclear_inverse(config, element_key, hypothesis),
                ))
    return checks


# ---------------------------------------------------------------------------
# associativity suite
# ---------------------------------------------------------------------------

ANCHOR_ASSOC = (
    "S = R[X±; sigma] is associative iff R is associative and sigma is an automorphism"
)
ANCHOR_ANTI = (
    "for an antiautomorphism twist, S is associative iff R is associative and commutative"
)


def _check_associativity(config, expect_pass):
    def run():
        outcome = structure.associativity_certificate(config, 3)
        predicted = structure.associativity_prediction(config)
        _require(
            outcome.passed == predicted,
            "certificate disagrees with the classification criterion",
        )
        if expect_pass:
            _require(outcome.passed, "expected an associative ring")
            return "pass", None
        _require(not outcome.passed, "expected a non-associativity witness")
        return "witness", _triple_payload(outcome.witness)
    return run


def _associativity_suite(configs=None):
    if configs:
        checks = []
        for config in configs:
            label = _cfg_label(config)
            def run(config=config):
                outcome = structure.associativity_certificate(config, 3)
                predicted = structure.associativity_prediction(config)
                _require(outcome.passed == predicted,
                         "certificate disagrees with the classification criterion")
                if outcome.passed:
                    return "pass", None
                return "witness", _triple_payload(outcome.witness)
            checks.append((f"assoc/{label}", ANCHOR_ASSOC, run))
        return checks
    checks = []
    for q in (1, -1):
        checks.append((
            f"assoc/gaussian-q{q}",
            ANCHOR_ASSOC,
            _check_associativity(cfg_gaussian_q(q), expect_pass=True),
        ))
    for q in (2, Fraction(1, 2), 3):
        checks.append((
            f"assoc/gaussian-q{q}",
            ANCHOR_ASSOC,
            _check_associativity(cfg_gaussian_q(q), expect_pass=False),
        ))
    checks.append((
        "assoc/matrix-diag-swap",
        ANCHOR_ANTI,
        _check_associativity(cfg_matrix_swap(), expect_pass=False),
    ))
    checks.append((
        "assoc/octonion-conjugation",
        ANCHOR_ANTI,
        _check_associativity(cfg_octonion_conj(), expect_pass=False),
    ))

    def run_classification():
        for q, expected in ((1, True), (-1, True), (2, False), (Fraction(3, 5), False)):
            g = rings.gaussian()
            tm = maps.make_twist(g, "q_twist", q=q)
            tags = maps.classify_multiplicativity(tm)
            _require(("automorphism" in tags) == expected,
                     f"q={q} classification wrong")
        swap_tags = maps.classify_multiplicativity(cfg_matrix_swap().sigma)
        _require("automorphism" not in swap_tags, "diag swap is not multiplicative")
        _require("antiautomorphism" in swap_tags and "involution" in swap_tags,
                 "diag swap is an involutive antiautomorphism")
        conj_tags = maps.classify_multiplicativity(cfg_octonion_conj().sigma)
        _require("automorphism" not in conj_tags and "involution" in conj_tags,
                 "octonion conjugation is an involution, not an automorphism")
        return "pass", None

    checks.append((
        "assoc/twist-classification",
        "the q-scaling twist is an automorphism iff q = ±1; conjugations are involutions",
        run_classification,
    ))
    return checks


# ---------------------------------------------------------------------------
# simplicity suite
# ---------------------------------------------------------------------------

ANCHOR_SIMPLE = (
    "over a commutative division ring, infinite twist order makes R[X±; sigma] simple"
)
ANCHOR_NONSIMPLE = "finite twist order yields the proper nonzero ideal of 1 + X^(m²)"


def _check_shrink_example():
    config = cfg_gaussian_q2()
    i = rings.gaussian().basis_element(1)
    p = config.gen + config.one
    result = structure.shrink(p, i)
    _require(result == config.constant(-i), "shrink(X+1, i) must equal -i")
    probe = structure.simplicity_probe(config, p, 3)
    _require(probe.reached_unit and len(probe.steps) == 1, "X+1 must shrink in one step")
    _require(probe.unit == -i, "unit certificate must be -i")
    return "pass", None


def _check_probe_random():
    config = cfg_gaussian_q2()
    reason = maps.infinite_order_reason(config.sigma)
    _require(reason is not None, "q=2 twist must certify infinite order")
    rng = _rng("probe-random")
    ring = config.coefficients
    count = 0
    while count < 25:
        terms = {}
        for e in rng.sample(range(0, 5), k=rng.randint(1, 3)):
            c = ring.random_element(rng)
            if c:
                terms[e] = c
        p = config.from_terms(terms)
        if not p:
            continue
        count += 1
        budget = p.degree + 1
        probe = structure.simplicity_probe(config, p, budget)
        _require(probe.reached_unit, "probe must reach a unit")
        _require(len(probe.steps) <= budget, "probe exceeded deg(p)+1 shrink steps")
    return "pass", None


def _check_probe_inconclusive():
    config = cfg_gaussian_conj()
    p = config.one + config.variable_power(4)
    for d in config.coefficients.basis_elements():
        _require(not structure.shrink(p, d), "all shrinks of 1+X^4 must vanish")
    probe = structure.simplicity_probe(config, p, 8)
    _require(probe.status == "inconclusive", "probe must be inconclusive")
    _require(probe.note == "all shrinks vanish", "probe note must report vanishing shrinks")
    return "pass", None


def _check_probe_constant():
    config = cfg_gaussian_q2()
    probe = structure.simplicity_probe(config, config.scalar(5), 3)
    _require(probe.reached_unit and not probe.steps, "constants are already units")
    return "pass", None


def _check_probe_hypotheses():
    try:
        structure.shrink(cfg_octonion_conj().one, rings.octonions().basis_element(1))
    except ReductionError as exc:
        _require("commutative division ring" in str(exc), "wrong rejection message")
        return "pass", None
    raise AssertionError("non-commutative coefficients must be rejected")


def _simplicity_suite(configs=None):
    return [
        ("simplicity/shrink-example", ANCHOR_SIMPLE, _check_shrink_example),
        ("simplicity/random-probes", ANCHOR_SIMPLE, _check_probe_random),
        ("simplicity/conjugation-inconclusive", ANCHOR_NONSIMPLE, _check_probe_inconclusive),
        ("simplicity/constant-unit", ANCHOR_SIMPLE, _check_probe_constant),
        ("simplicity/hypothesis-guard", ANCHOR_SIMPLE, _check_probe_hypotheses),
    ]


# ---------------------------------------------------------------------------
# finite-order ideals suite
# ---------------------------------------------------------------------------


def _check_finite_order_detected():
    _require(maps.detect_finite_order(cfg_gaussian_conj().sigma, 8) == 2,
             "conjugation must have order 2")
    _require(maps.detect_finite_order(cfg_matrix_swap().sigma, 8) == 2,
             "diag swap must have order 2")
    _require(maps.detect_finite_order(cfg_gaussian_q2().sigma, 8) is None,
             "q=2 twist has no finite order")
    return "pass", None


def _check_generator_nuclear():
    config = cfg_gaussian_conj()
    for element in (config.variable_power(4), config.one + config.variable_power(4)):
        for side in ("left", "middle", "right"):
            outcome = structure.nucleus_membership(
                structure.NucleusQuery(element, side, 4)
            )
            _require(outcome.passed, f"{side} nuclearity of the ideal generator fails")
    return "pass", None


def _check_multiples_vanish(config_fn, label, count):
    def run():
        config = config_fn()
        generator = config.one + config.variable_power(4)
        rng = _rng(f"ideal-{label}")
        done = 0
        while done < count:
            q = config.random_element(rng, max_degree=4)
            if not q:
                continue
            done += 1
            product = poly.poly_mul(q, generator)
            _require(
                not structure.central_reduction(product, 2),
                "multiples of 1 + X^4 must reduce to zero",
            )
        one_image = structure.central_reduction(config.one, 2)
        _require(one_image == config.one, "1 must reduce to itself (proper ideal)")
        return "pass", None
    return run


def _check_reduction_values():
    config = cfg_gaussian_conj()
    _require(structure.central_reduction(config.variable_power(8), 2) == config.one,
             "X^8 must reduce to 1")
    _require(not structure.central_reduction(config.one + config.variable_power(4), 2),
             "the generator must reduce to zero")
    _require(structure.central_reduction(config.variable_power(-1), 2)
             == -config.variable_power(3), "X^-1 must reduce to -X^3")
    return "pass", None


def _check_order_hypothesis_guard():
    try:
        structure.central_reduction(cfg_gaussian_q2().one, 2)
    except ReductionError as exc:
        _require(str(exc) == "finite order hypothesis fails", "wrong guard message")
        return "pass", None
    raise AssertionError("central reduction must reject infinite-order twists")


def _finite_order_suite(configs=None):
    return [
        ("ideal/finite-order-detected", ANCHOR_NONSIMPLE, _check_finite_order_detected),
        ("ideal/generator-nuclear", ANCHOR_NONSIMPLE, _check_generator_nuclear),
        ("ideal/gaussian-multiples-vanish", ANCHOR_NONSIMPLE,
         _check_multiples_vanish(cfg_gaussian_conj, "gaussian", 50)),
        ("ideal/matrix-multiples-vanish", ANCHOR_NONSIMPLE,
         _check_multiples_vanish(cfg_matrix_swap, "matrix", 20)),
        ("ideal/octonion-multiples-vanish", ANCHOR_NONSIMPLE,
         _check_multiples_vanish(cfg_octonion_conj, "octonion", 20)),
        ("ideal/reduction-values", ANCHOR_NONSIMPLE, _check_reduction_values),
        ("ideal/order-hypothesis-guard", ANCHOR_NONSIMPLE, _check_order_hypothesis_guard),
    ]


# ---------------------------------------------------------------------------
# hilbert-reduction suite
# ---------------------------------------------------------------------------

ANCHOR_RIGHT_FORM = "sum_{i<=m} X^i·R equals sum_{i<=m} R·X^i as sets"
ANCHOR_MONIC = "subtracting r·X^(n-m)·p strictly drops the degree below deg p"
ANCHOR_RIGHT_REDUCE = (
    "leading-coefficient matching right reduction; replaying the record "
    "reconstructs the input exactly"
)


def _right_form_configs():
    return [cfg_gaussian_q2(), cfg_octonion_conj(), cfg_weyl(), cfg_gaussian_ore_q2()]


def _check_right_form_round_trip():
    for config in _right_form_configs():
        rng = _rng(f"right-form-{_cfg_label(config)}")
        for _ in range(25):
            p = config.random_element(rng, max_degree=8)
            pairs = poly.to_right_form(p)
            _require(poly.from_right_form(config, pairs) == p,
                     "right-form round trip failed")
        for _ in range(10):
            exps = rng.sample(
                range(0 if config.shape == poly.ORE else -4, 5),
                k=rng.randint(1, 3),
            )
            pairs = []
            for e in sorted(exps):
                c = config.coefficients.random_element(rng)
                if c:
                    pairs.append((e, c))
            rebuilt = poly.to_right_form(poly.from_right_form(config, pairs))
            _require(rebuilt == pairs, "right-form pairs round trip failed")
    return "pass", None


def _check_monic_left_example():
    config = cfg_octonion_ore_id()
    e1 = rings.octonions().basis_element(1)
    p = config.variable_power(2) + config.monomial(e1, 1)
    f = config.monomial(e1, 3)
    result = structure.monic_left_reduce(f, p)
    _require(result.remainder == config.monomial(-e1, 1), "remainder must be -e1·X")
    _require([(s.coeff, s.exponent) for s in result.steps]
             == [(e1, 1), (rings.octonions().one, 0)], "unexpected quotient record")
    _require(structure.replay_reduction(result, [p]) == f, "replay must rebuild f")
    return "pass", None


def _check_monic_left_random(config_fn, label):
    def run():
        config = config_fn()
        rng = _rng(f"monic-{label}")
        done = 0
        while done < 50:
            p = config.random_element(rng, max_degree=3)
            f = config.random_element(rng, max_degree=6)
            if not p:
                continue
            done += 1
            result = structure.monic_left_reduce(f, p)
            if result.remainder:
                _require(result.remainder.degree < p.degree,
                         "remainder degree must drop below deg p")
            _require(structure.replay_reduction(result, [p]) == f,
                     "replay must rebuild the input")
            again = structure.monic_left_reduce(result.remainder, p)
            _require(again.remainder == result.remainder and not again.steps,
                     "reducing the remainder must be idempotent")
        return "pass", None
    return run


def _check_right_reduce_poly():
    config = cfg_gaussian_ore_q2()
    i = rings.gaussian().basis_element(1)
    gens = structure.GeneratorSet(config, [config.gen - config.constant(i)], "right")
    f = config.variable_power(2)
    result = structure.right_reduce(f, gens)
    _require(not result.irreducible, "division coefficients always match")
    _require(result.remainder == config.scalar(Fraction(-1, 2)),
             "X² must reduce to -1/2 against X - i")
    _require(structure.replay_reduction(result, gens) == f, "replay must rebuild X²")

    member = structure.right_reduce(gens.generators[0], gens)
    _require(not member.remainder and len(member.steps) == 1,
             "a generator must reduce to zero in one step")

    rng = _rng("right-reduce-random")
    done = 0
    while done < 25:
        gen_count = rng.randint(1, 2)
        generators = []
        for _ in range(gen_count):
            g = config.random_element(rng, max_degree=3)
            if g:
                generators.append(g)
        f = config.random_element(rng, max_degree=6)
        if not generators:
            continue
        done += 1
        gset = structure.GeneratorSet(config, generators, "right")
        result = structure.right_reduce(f, gset)
        min_deg = min(g.degree for g in generators)
        if result.remainder:
            _require(result.remainder.degree < min_deg,
                     "remainder must fall below the least generator degree")
        _require(structure.replay_reduction(result, gset) == f,
                 "replay must rebuild the input")
    return "pass", None


def _check_right_reduce_irreducible():
    weyl = cfg_weyl()
    y = ring_poly_rational().gen
    gen = weyl.monomial(y, 1)
    gset = structure.GeneratorSet(weyl, [gen], "right")
    f = weyl.gen
    result = structure.right_reduce(f, gset)
    _require(result.irreducible, "no single-step match exists: Y does not divide 1")
    _require(result.remainder == f and not result.steps,
             "irreducible results leave the remainder unchanged")
    f2 = weyl.monomial(y * y, 1)
    result2 = structure.right_reduce(f2, gset)
    _require(structure.replay_reduction(result2, gset) == f2,
             "solvable single-step match must replay")
    return "pass", None


def _check_right_reduce_series():
    q = rings.rationals()
    config = poly.RingConfig(q, maps.make_twist(q, "identity"), None, "X", poly.LAURENT)
    one = series.series(config, {0: q.one}, 5)
    gen = series.series(config, {0: q.one, 1: -q.one}, 5)
    gset = structure.GeneratorSet(config, [gen], "right")
    result = structure.right_reduce(one, gset)
    _require(len(result.steps) == 6, "the geometric reduction takes six steps")
    _require(not result.remainder.coeffs,
             "remainder order must exceed the precision window")
    _require([s.exponent for s in result.steps] == list(range(6)),
             "partial sums record expected")
    replay = structure.replay_reduction(result, gset)
    _require(series.equal_to_precision(replay, one), "series replay must rebuild 1")

    g = rings.gaussian()
    config2 = poly.RingConfig(g, maps.make_twist(g, "conjugation"), None, "X", poly.LAURENT)
    rng = _rng("series-reduce-random")
    done = 0
    while done < 15:
        lead = g.random_element(rng)
        if not lead:
            continue
        gen_terms = {0: lead}
        for e in range(1, 4):
            c = g.random_element(rng)
            if c:
                gen_terms[e] = c
        f_terms = {}
        for e in range(0, 5):
            c = g.random_element(rng)
            if c:
                f_terms[e] = c
        if not f_terms:
            continue
        done += 1
        gset2 = structure.GeneratorSet(
            config2, [series.series(config2, gen_terms, 6)], "right"
        )
        f = series.series(config2, f_terms, 6)
        result = structure.right_reduce(f, gset2, max_steps=12)
        replay = structure.replay_reduction(result, gset2)
        _require(series.equal_to_precision(replay, f, result.remainder.precision),
                 "series replay must rebuild the input within precision")
    return "pass", None


def _hilbert_suite(configs=None):
    return [
        ("hilbert/right-form-round-trip", ANCHOR_RIGHT_FORM, _check_right_form_round_trip),
        ("hilbert/monic-left-example", ANCHOR_MONIC, _check_monic_left_example),
        ("hilbert/monic-left-octonion", ANCHOR_MONIC,
         _check_monic_left_random(cfg_octonion_ore_id, "octonion")),
        ("hilbert/monic-left-gaussian", ANCHOR_MONIC,
         _check_monic_left_random(cfg_gaussian_ore_q2, "gaussian")),
        ("hilbert/right-reduce-polynomials", ANCHOR_RIGHT_REDUCE, _check_right_reduce_poly),
        ("hilbert/right-reduce-irreducible", ANCHOR_RIGHT_REDUCE,
         _check_right_reduce_irreducible),
        ("hilbert/right-reduce-series", ANCHOR_RIGHT_REDUCE, _check_right_reduce_series),
    ]


# ---------------------------------------------------------------------------
# series suite
# ---------------------------------------------------------------------------

ANCHOR_SERIES = (
    "truncated skew series: order, leading coefficient, and unit inversion "
    "by triangular recurrences"
)


def _check_series_frozen_inverse():
    g = rings.gaussian()
    config = cfg_gaussian_q2()
    i = g.basis_element(1)
    a = series.series(config, {0: g.one, 1: -i}, 4)
    b = series.series_invert(a)
    expected = series.series(
        config,
        {0: g.one, 1: i, 2: g.scalar(-2), 3: i.scale(-2), 4: g.scalar(4)},
        4,
    )
    _require(b == expected, "inverse of 1 - iX must match the frozen coefficients")
    product = a * b
    _require(series.equal_to_precision(product, series.series_one(config, 4)),
             "multiply-back must give 1 through X^4")
    return "pass", None


def _check_series_one_sided():
    g = rings.gaussian()
    config = cfg_gaussian_q2()
    i = g.basis_element(1)
    a = series.series(config, {0: g.one, 1: -i}, 4)
    left = series.series_invert(a, side="left")
    _require(series.equal_to_precision(left * a, series.series_one(config, 4)),
             "left inverse must satisfy b·a = 1")
    _require(left.coefficient(3) == i.scale(-8),
             "left inverse differs from the right inverse at X^3")
    try:
        series.series_invert(a, side="both")
    except SkewringError:
        return "pass", None
    raise AssertionError("two-sided inversion must fail for this series")


def _check_series_two_sided_roundtrip():
    config = cfg_gaussian_conj()
    g = rings.gaussian()
    rng = _rng("series-two-sided")
    done = 0
    while done < 50:
        lead = g.random_element(rng)
        if not lead:
            continue
        terms = {0: lead}
        for e in range(1, 5):
            c = g.random_element(rng)
            if c:
                terms[e] = c
        done += 1
        a = series.series(config, terms, 6)
        b = series.series_invert(a, side="both")
        _require(series.equal_to_precision(a * b, series.series_one(config, 6)),
                 "a·a⁻¹ must be 1")
        _require(series.equal_to_precision(b * a, series.series_one(config, 6)),
                 "a⁻¹·a must be 1")
    return "pass", None


def _check_series_order_additivity():
    config = cfg_gaussian_q2()
    g = rings.gaussian()
    rng = _rng("series-order-add")
    done = 0
    while done < 50:
        def random_series():
            start = rng.randint(-3, 2)
            terms = {}
            for e in range(start, start + 3):
                c = g.random_element(rng)
                if c:
                    terms[e] = c
            return series.series(config, terms, start + 6) if terms else None
        a = random_series()
        b = random_series()
        if a is None or b is None:
            continue
        done += 1
        product = a * b
        _require(product.order == a.order + b.order,
                 "order must be additive over division coefficients")
    return "pass", None


def _check_series_poly_oracle():
    config = cfg_gaussian_q2()
    rng = _rng("series-poly-oracle")
    for _ in range(25):
        p = config.random_element(rng, max_degree=3)
        q = config.random_element(rng, max_degree=3)
        sp = series.from_poly(p, 8, window_start=-4)
        sq = series.from_poly(q, 8, window_start=-4)
        product = sp * sq
        expected = poly.poly_mul(p, q)
        for e in range(product.window_start, product.precision + 1):
            _require(product.coefficient(e) == expected.coefficient(e),
                     "series product must match the polynomial product")
    return "pass", None


def _check_series_values():
    q = rings.rationals()
    config = poly.RingConfig(q, maps.make_twist(q, "identity"), None, "X", poly.LAURENT)
    geo = series.series_invert(series.series(config, {0: q.one, 1: -q.one}, 4))
    _require(geo == series.series(config, {e: q.one for e in range(5)}, 4),
             "the geometric series inverse must be 1 + X + ... + X^4")
    g = rings.gaussian()
    config2 = cfg_gaussian_q2()
    i = g.basis_element(1)
    prod = series.series(config2, {1: i}, 4) * series.series(config2, {1: i}, 4)
    _require(prod.coefficient(2) == g.scalar(-2), "(iX)(iX) must be -2X²")
    sample = series.series(config2, {3: g.one, 5: -g.one}, 6)
    _require(series.series_order_leading(sample) == (3, g.one), "order of X³ - X⁵")
    laurent = series.series(config2, {-2: g.one, 0: g.one}, 3)
    _require(series.series_order_leading(laurent) == (-2, g.one), "order of X⁻² + 1")
    unit = series.series(config2, {0: i}, 4)
    inv = series.series_invert(unit, side="both")
    _require(inv.coefficient(0) == -i, "constant units invert coefficient-wise")
    try:
        series.series_order_leading(series.series(config2, {}, 4))
    except SkewringError as exc:
        _require(str(exc) == "order undefined at this precision", "wrong error")
        return "pass", None
    raise AssertionError("the zero window has no order")


def _series_suite(configs=None):
    return [
        ("series/frozen-inverse", ANCHOR_SERIES, _check_series_frozen_inverse),
        ("series/one-sided-asymmetry", ANCHOR_SERIES, _check_series_one_sided),
        ("series/two-sided-round-trip", ANCHOR_SERIES, _check_series_two_sided_roundtrip),
        ("series/order-additivity", ANCHOR_SERIES, _check_series_order_additivity),
        ("series/polynomial-oracle", ANCHOR_SERIES, _check_series_poly_oracle),
        ("series/worked-values", ANCHOR_SERIES, _check_series_values),
    ]


# ---------------------------------------------------------------------------
# jordan suite
# ---------------------------------------------------------------------------

ANCHOR_JORDAN = (
    "H+ under {a,b} = (ab+ba)/2 is a Jordan algebra; its associator (i,i,j) is -j"
)
ANCHOR_DERIVATION = (
    "c -> [[a,b],c] - 3(a,b,c) is a derivation of the octonions"
)


def _jordan():
    return rings.jordan_algebra(rings.quaternions())


def _check_jordan_values():
    hp = _jordan()
    i, j = hp.basis_element(1), hp.basis_element(2)
    _require(rings.associator(i, i, j) == -j, "(i,i,j) must be -j in H+")
    _require(i * j == hp.zero, "{i,j} must vanish")
    _require(i * i == -hp.one, "{i,i} must be -1")
    _require(hp.is_commutative, "the plus algebra is commutative")
    _require(not hp.is_associative, "H+ is not associative")
    return "pass", None


def _jordan_identity_holds(a, b):
    asq = a * a
    return (a * b) * asq == a * (b * asq)


def _check_jordan_identity():
    hp = _jordan()
    basis = hp.basis_elements()
    for a in basis:
        for b in basis:
            _require(_jordan_identity_holds(a, b), "Jordan identity fails on basis pair")
            _require(a * hp.one == a, "unit must be preserved")
    rng = _rng("jordan-random")
    for _ in range(100):
        a = hp.random_element(rng)
        b = hp.random_element(rng)
        _require(_jordan_identity_holds(a, b), "Jordan identity fails on random pair")
    return "pass", None


def _check_jordan_guard():
    try:
        rings.jordan_algebra(rings.octonions())
    except ConstructionError as exc:
        _require(str(exc) == "Jordan construction requires associative input",
                 "wrong guard message")
        return "pass", None
    raise AssertionError("the octonions must be rejected")


def _check_derivations():
    o = rings.octonions()
    basis = o.basis_elements()
    rng = _rng("derivations")
    for _ in range(10):
        a = o.random_element(rng)
        b = o.random_element(rng)
        der = maps.standard_derivation(a, b)
        _require(not der(o.one), "derivations kill 1")
        for x in basis:
            dx = der(x)
            for y in basis:
                _require(der(x * y) == dx * y + x * der(y),
                         "derivation law fails on a basis pair")
    a = o.random_element(rng)
    same = maps.standard_derivation(a, a)
    _require(all(not same(x) for x in basis), "delta_{a,a} must vanish")
    return "pass", None


def _check_jordan_twisted_ring():
    hp = _jordan()
    h = rings.quaternions()
    inner = maps.make_twist(h, "inner", u=h.basis_element(1))
    tm = maps.make_twist(hp, "matrix",
                         matrix=[[inner.images[j][i] for j in range(4)] for i in range(4)])
    tags = maps.classify_multiplicativity(tm)
    _require("automorphism" in tags, "inner maps act as automorphisms of H+")
    config = poly.RingConfig(hp, tm, None, "X", poly.LAURENT)
    rng = _rng("jordan-ring")
    for _ in range(20):
        p = config.random_element(rng)
        pairs = poly.to_right_form(p)
        _require(poly.from_right_form(config, pairs) == p,
                 "right form round trip over H+ fails")
    return "pass", None


def _jordan_suite(configs=None):
    return [
        ("jordan/worked-values", ANCHOR_JORDAN, _check_jordan_values),
        ("jordan/identity", ANCHOR_JORDAN, _check_jordan_identity),
        ("jordan/associative-guard", ANCHOR_JORDAN, _check_jordan_guard),
        ("jordan/derivation-law", ANCHOR_DERIVATION, _check_derivations),
        ("jordan/twisted-plus-ring", ANCHOR_JORDAN, _check_jordan_twisted_ring),
    ]


# ---------------------------------------------------------------------------
# quantum torus suite
# ---------------------------------------------------------------------------

ANCHOR_TORUS = (
    "the quantum torus satisfies X·Y = q·Y·X; coefficients commute with the "
    "variables and Y^m, X^n are middle and right nuclear"
)


def _check_torus_relation():
    torus = cfg_torus_octonion()
    x = torus.gen
    y = torus.constant(torus.coefficients.gen)
    _require(x * y == (y * x).scale(2), "X·Y must equal 2·Y·X")
    trivial = cfg_torus_rational(1)
    xt, yt = trivial.gen, trivial.constant(trivial.coefficients.gen)
    _require(xt * yt == yt * xt, "q = 1 variables must commute")
    try:
        poly.quantum_torus(rings.rationals(), 0)
    except ConstructionError:
        pass
    else:
        raise AssertionError("q = 0 must be rejected")
    return "pass", None


def _check_torus_coefficients_commute():
    torus = cfg_torus_octonion()
    inner = torus.coefficients
    x = torus.gen
    y = torus.constant(inner.gen)
    for b in rings.octonions().basis_elements():
        cb = torus.constant(inner.constant(b))
        _require(cb * x == x * cb, "octonion coefficients must commute with X")
        _require(cb * y == y * cb, "octonion coefficients must commute with Y")
    return "pass", None


def _check_torus_monomial_rule():
    torus = cfg_torus_octonion()
    inner = torus.coefficients
    o = rings.octonions()
    rng = _rng("torus-monomials")
    q = Fraction(2)
    for _ in range(30):
        p_idx, q_idx = rng.randint(0, 7), rng.randint(0, 7)
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        mp, np_ = rng.randint(-3, 3), rng.randint(-3, 3)
        left = torus.monomial(inner.monomial(o.basis_element(p_idx), m), n)
        right = torus.monomial(inner.monomial(o.basis_element(q_idx), mp), np_)
        product = left * right
        scalar = q ** (n * mp)
        expected = torus.monomial(
            inner.monomial(
                (o.basis_element(p_idx) * o.basis_element(q_idx)).scale(scalar),
                m + mp,
            ),
            n + np_,
        )
        _require(product == expected,
                 "monomial products must follow the q^(n·m') tensor rule")
    span = torus.spanning_set(1)
    _require(len(span) == len(set(span)) == 8 * 3 * 3,
             "rank-eight spanning monomials must be distinct")
    return "pass", None


def _check_torus_nuclearity():
    torus = cfg_torus_octonion()
    inner = torus.coefficients
    for n in (1, 2, 3):
        for element, name in (
            (torus.variable_power(n), f"X^{n}"),
            (torus.constant(inner.variable_power(n)), f"Y^{n}"),
        ):
            for side in ("middle", "right"):
                outcome = structure.nucleus_membership(
                    structure.NucleusQuery(element, side, 3)
                )
                _require(outcome.passed, f"{name} must be {side}-nuclear")
    return "pass", None


def _check_torus_iterated_guard():
    h = rings.quaternions()
    one = h.one
    first = maps.make_twist(h, "inner", u=one + h.basis_element(1))
    second = maps.make_twist(h, "inner", u=one + h.basis_element(2))
    inner_ring = poly.RingConfig(h, first, None, "Y", poly.LAURENT)
    commuting = poly.iterated_extend(
        inner_ring, "X", {"kind": "coefficientwise", "base": first}
    )
    _require(commuting.shape == poly.LAURENT, "commuting lifts must build")
    try:
        poly.iterated_extend(
            inner_ring, "X", {"kind": "coefficientwise", "base": second}
        )
    except ConstructionError as exc:
        _require("commuting" in str(exc), "wrong guard message")
        return "pass", None
    raise AssertionError("non-commuting twists must be rejected")


def _torus_suite(configs=None):
    return [
        ("torus/defining-relation", ANCHOR_TORUS, _check_torus_relation),
        ("torus/coefficients-commute", ANCHOR_TORUS, _check_torus_coefficients_commute),
        ("torus/monomial-rule", ANCHOR_TORUS, _check_torus_monomial_rule),
        ("torus/variable-nuclearity", ANCHOR_TORUS, _check_torus_nuclearity),
        ("torus/commuting-guard", ANCHOR_TORUS, _check_torus_iterated_guard),
    ]


# ---------------------------------------------------------------------------
# d-structure suite
# ---------------------------------------------------------------------------

ANCHOR_DSTRUCT = (
    "the Laurent family (sigma^a on the diagonal) and the Ore word family "
    "satisfy axioms D0-D4; corrupting the identity breaks D1"
)


def _check_laurent_family(config):
    def run():
        family = poly.laurent_d_structure(config.sigma)
        rng = _rng(f"dstruct-{_cfg_label(config)}")
        elements = [config.coefficients.random_element(rng) for _ in range(5)]
        report = poly.validate_d_structure(family, list(range(-4, 5)), elements)
        _require(report.ok, f"laurent family fails: {report.entries}")
        return "pass", None
    return run


def _ore_families():
    qy = ring_poly_rational()
    g = rings.gaussian()
    o = rings.octonions()
    return [
        ("weyl", qy,
         maps.make_twist(qy, "identity"), maps.make_twist(qy, "derivative"), 5),
        ("gaussian", g,
         maps.make_twist(g, "q_twist", q=2), maps.make_twist(g, "zero"), 5),
        ("octonion", o,
         maps.make_twist(o, "conjugation"),
         maps.standard_derivation(o.basis_element(1), o.basis_element(2)), 5),
    ]


def _check_ore_family(label, ring, sigma, delta, bound):
    def run():
        family = poly.ore_d_structure(sigma, delta)
        rng = _rng(f"dstruct-ore-{label}")
        elements = [ring.random_element(rng) for _ in range(3)]
        report = poly.validate_d_structure(family, list(range(0, bound + 1)), elements)
        _require(report.ok, f"ore family fails: {report.entries}")
        return "pass", None
    return run


def _check_corrupted_family():
    config = cfg_gaussian_q2()
    family = poly.corrupted_d_structure(poly.laurent_d_structure(config.sigma))
    rng = _rng("dstruct-corrupt")
    elements = [config.coefficients.random_element(rng) for _ in range(4)]
    report = poly.validate_d_structure(family, list(range(-2, 3)), elements)
    _require(not report.ok, "the corrupted family must fail")
    failed = [axiom for axiom, passed, _ in report.entries if not passed]
    _require("D1" in failed, "the corruption must surface as a D1 failure")
    return "pass", None


def _check_d4_is_pi_composition():
    qy = ring_poly_rational()
    sigma = maps.make_twist(qy, "identity")
    delta = maps.make_twist(qy, "derivative")
    fam = maps.PiFamily(sigma, delta)
    rng = _rng("d4-pi")
    elements = [qy.random_element(rng) for _ in range(5)]
    for a in range(0, 4):
        for b in range(0, 4):
            for c in range(0, a + b + 1):
                for r in elements:
                    total = qy.zero
                    for d in range(0, a + 1):
                        e = c - d
                        if 0 <= e <= b:
                            total = total + maps.pi_apply(
                                fam, d, a, maps.pi_apply(fam, e, b, r)
                            )
                    _require(total == maps.pi_word_sum(fam, c, a + b, r),
                             "D4 must match the enumeration oracle")
    return "pass", None


def _d_structure_suite(configs=None):
    roster = configs or _laurent_roster()
    checks = []
    for config in roster:
        if config.shape != poly.LAURENT:
            continue
        checks.append((
            f"dstruct/laurent/{_cfg_label(config)}",
            ANCHOR_DSTRUCT,
            _check_laurent_family(config),
        ))
    for label, ring, sigma, delta, bound in _ore_families():
        checks.append((
            f"dstruct/ore/{label}",
            ANCHOR_DSTRUCT,
            _check_ore_family(label, ring, sigma, delta, bound),
        ))
    checks.append(("dstruct/corrupted-d1", ANCHOR_DSTRUCT, _check_corrupted_family))
    checks.append(("dstruct/d4-pi-composition", ANCHOR_DSTRUCT, _check_d4_is_pi_composition))
    return checks


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

_SUITE_BUILDERS = {
    "nuclei": _nuclei_suite,
    "laurent-axioms": _laurent_axioms_suite,
    "associativity": _associativity_suite,
    "simplicity": _simplicity_suite,
    "finite-order-ideals": _finite_order_suite,
    "hilbert-reduction": _hilbert_suite,
    "series": _series_suite,
    "jordan": _jordan_suite,
    "quantum-torus": _torus_suite,
    "d-structure": _d_structure_suite,
}

# suites whose checks can target a user-provided configuration
CONFIGURABLE_SUITES = ("nuclei", "laurent-axioms", "associativity", "d-structure")


def run_suite(name, cli_config=None):
    """Execute one named suite (or "all") and return its report."""
    if name == "all":
        names = SUITE_NAMES
    elif name in _SUITE_BUILDERS:
        names = (name,)
    else:
        raise ConstructionError(f"unknown suite name: {name}")

    configs = None
    if cli_config is not None:
        configs = [cli_config.ring_config]
    checks = []
    for suite_name in names:
        builder = _SUITE_BUILDERS[suite_name]
        if configs is not None and suite_name in CONFIGURABLE_SUITES:
            checks.extend(builder(configs))
        else:
            checks.extend(builder())

    if cli_config is not None:
        digest_source = {"suite": name, "config": cli_config.source}
    else:
        digest_source = {"suite": name, "configs": "builtin"}
    digest = hashlib.sha256(
        json.dumps(digest_source, sort_keys=True).encode()
    ).hexdigest()[:16]

    report = SuiteReport(suite=name, config_digest=digest)
    for check_id, anchor, fn in checks:
        start = time.perf_counter()
        try:
            status, witness = fn()
        except SkewringError as exc:
            status, witness = "fail", {"error": str(exc)}
        except AssertionError as exc:
            status, witness = "fail", {"error": str(exc)}
        elapsed = time.perf_counter() - start
        report.checks.append(
            CheckRecord(check_id, anchor, status, witness, round(elapsed, 6))
        )
    return report


def emit_report(report, fmt="json"):
    """Render a report; JSON field order is fixed across runs."""
    if fmt == "json":
        doc = {
            "suite": report.suite,
            "config_digest": report.config_digest,
            "summary": {
                "total": len(report.checks),
                "passed": sum(1 for c in report.checks if c.status == "pass"),
                "witnesses": sum(1 for c in report.checks if c.status == "witness"),
                "failed": sum(1 for c in report.checks if c.status == "fail"),
            },
            "checks": [
                {
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status,
                    **({"witness": c.witness} if c.witness is not None else {}),
                    "elapsed": c.elapsed,
                }
                for c in report.checks
            ],
        }
        return json.dumps(doc, indent=2)
    if fmt == "markdown":
        lines = [
            f"# Suite `{report.suite}`",
            "",
            f"Config digest: `{report.config_digest}`",
            "",
        ]
        for c in report.checks:
            mark = {"pass": "PASS", "witness": "WITNESS", "fail": "FAIL"}[c.status]
            lines.append(f"- [{mark}] `{c.id}` — {c.anchor} ({c.elapsed:.3f}s)")
            if c.witness is not None:
                lines.append(f"  - payload: `{json.dumps(c.witness)}`")
        failed = sum(1 for c in report.checks if c.status == "fail")
        lines.append("")
        lines.append(
            f"{len(report.checks)} checks, {failed} failed."
        )
        return "\n".join(lines)
    raise ConstructionError(f"unknown report format: {fmt}")
