import random
from fractions import Fraction

import pytest

from skewring import maps, poly, rings
from skewring.errors import (
    ConstructionError,
    NotInvertibleError,
    RingMismatchError,
    ZeroElementError,
)

G = rings.gaussian()
O = rings.octonions()
Q = rings.rationals()


def laurent_q2():
    return poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.LAURENT)


def rational_poly_ring():
    return poly.RingConfig(Q, maps.make_twist(Q, "identity"), None, "Y", poly.ORE)


def weyl():
    qy = rational_poly_ring()
    return poly.RingConfig(
        qy, maps.make_twist(qy, "identity"), maps.make_twist(qy, "derivative"),
        "X", poly.ORE,
    )


def test_config_validation():
    with pytest.raises(ConstructionError, match="does not respect one"):
        poly.RingConfig(G, maps.make_twist(G, "zero"), None, "X", poly.ORE)
    qy = rational_poly_ring()
    projector = maps.make_twist(G, "matrix", matrix=[[1, 0], [0, 0]])
    with pytest.raises(ConstructionError, match="bijective"):
        poly.RingConfig(G, projector, None, "X", poly.ORE)
    with pytest.raises(ConstructionError, match="laurent shape admits no delta"):
        poly.RingConfig(
            qy, maps.make_twist(qy, "identity"), maps.make_twist(qy, "derivative"),
            "X", poly.LAURENT,
        )
    with pytest.raises(ConstructionError, match="kill one"):
        poly.RingConfig(
            G, maps.make_twist(G, "identity"), maps.make_twist(G, "identity"),
            "X", poly.ORE,
        )


def test_weyl_relation():
    w = weyl()
    x = w.gen
    y = w.constant(rational_poly_ring().gen)
    assert x * y - y * x == w.one
    assert x * y == w.one + y * x


def test_laurent_monomial_products():
    cfg = laurent_q2()
    i = G.basis_element(1)
    assert cfg.monomial(i, 1) * cfg.monomial(i, -1) == cfg.scalar(-2)
    assert cfg.variable_power(3) * cfg.variable_power(-5) == cfg.variable_power(-2)


def test_negative_exponent_rejected_in_ore():
    cfg = poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.ORE)
    with pytest.raises(ConstructionError, match="negative exponent"):
        cfg.monomial(G.one, -1)


def test_degree_order_leading():
    cfg = laurent_q2()
    i = G.basis_element(1)
    p = cfg.monomial(G.scalar(2), 3) + cfg.monomial(i, 1)
    assert poly.degree_order_leading(p) == (3, 1, G.scalar(2))
    q = cfg.variable_power(-2) + cfg.variable_power(5)
    assert poly.degree_order_leading(q) == (5, -2, G.one)
    assert poly.degree_order_leading(cfg.scalar(7)) == (0, 0, G.scalar(7))
    with pytest.raises(ZeroElementError, match="zero polynomial has no degree"):
        poly.degree_order_leading(cfg.zero)


def test_config_mismatch():
    with pytest.raises(RingMismatchError, match="incompatible rings"):
        laurent_q2().one * weyl().one


def test_right_form_laurent():
    cfg = laurent_q2()
    i = G.basis_element(1)
    p = cfg.monomial(i, 2)
    pairs = poly.to_right_form(p)
    assert pairs == [(2, i.scale(Fraction(1, 4)))]
    assert poly.from_right_form(cfg, pairs) == p


def test_right_form_weyl():
    w = weyl()
    y = rational_poly_ring().gen
    p = w.monomial(y, 1)
    pairs = poly.to_right_form(p)
    assert pairs == [(0, -rational_poly_ring().one), (1, y)]
    assert poly.from_right_form(w, pairs) == p


def test_right_form_constant():
    cfg = laurent_q2()
    i = G.basis_element(1)
    assert poly.to_right_form(cfg.constant(i)) == [(0, i)]


def test_right_form_round_trip_random():
    rng = random.Random(13)
    for cfg in (laurent_q2(), weyl()):
        for _ in range(50):
            p = cfg.random_element(rng, max_degree=8)
            assert poly.from_right_form(cfg, poly.to_right_form(p)) == p


def test_biadditivity_and_unit_random():
    rng = random.Random(17)
    for cfg in (laurent_q2(), weyl()):
        for _ in range(50):
            p, q, r = (cfg.random_element(rng) for _ in range(3))
            assert (p + q) * r == p * r + q * r
            assert p * (q + r) == p * q + p * r
            assert cfg.one * p == p
            assert p * cfg.one == p


def test_variable_associators_random():
    rng = random.Random(19)
    for cfg in (laurent_q2(), weyl()):
        x = cfg.gen
        for _ in range(25):
            p = cfg.random_element(rng, max_degree=4)
            q = cfg.random_element(rng, max_degree=4)
            assert (p * q) * x == p * (q * x)
            assert (p * x) * q == p * (x * q)


def test_degree_bound_and_division_equality():
    rng = random.Random(23)
    cfg = laurent_q2()
    for _ in range(40):
        p, q = cfg.random_element(rng), cfg.random_element(rng)
        if not p or not q:
            continue
        prod = p * q
        assert prod
        assert prod.degree == p.degree + q.degree


def test_monomial_inverse():
    cfg = laurent_q2()
    i = G.basis_element(1)
    # variable powers and constants are two-sided units under any twist
    for el in (cfg.variable_power(3), cfg.variable_power(-2), cfg.constant(i)):
        inv = cfg.invert(el)
        assert el * inv == cfg.one
        assert inv * el == cfg.one
    # i·X² has distinct one-sided inverses under the non-multiplicative
    # q=2 twist, hence no two-sided inverse at all
    with pytest.raises(NotInvertibleError):
        cfg.invert(cfg.monomial(i, 2))
    conj_cfg = poly.RingConfig(G, maps.make_twist(G, "conjugation"), None, "X", poly.LAURENT)
    p = conj_cfg.monomial(i, 2)
    inv = conj_cfg.invert(p)
    assert p * inv == conj_cfg.one
    assert inv * p == conj_cfg.one
    with pytest.raises(NotInvertibleError):
        cfg.invert(cfg.one + cfg.gen)
    ore = poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.ORE)
    with pytest.raises(NotInvertibleError):
        ore.invert(ore.gen)


def test_quantum_torus_relation():
    torus = poly.quantum_torus(O, 2)
    x = torus.gen
    y = torus.constant(torus.coefficients.gen)
    assert x * y == (y * x).scale(2)


def test_quantum_torus_trivial_q():
    torus = poly.quantum_torus(Q, 1)
    x = torus.gen
    y = torus.constant(torus.coefficients.gen)
    assert x * y == y * x


def test_quantum_torus_coefficient_products():
    torus = poly.quantum_torus(O, 3)
    inner = torus.coefficients
    e1, e2 = O.basis_element(1), O.basis_element(2)
    left = torus.monomial(inner.constant(e1), 0) * torus.monomial(inner.constant(e2), 1)
    assert left == torus.monomial(inner.constant(e1 * e2), 1)
    # Y-crossing picks up the scaling factor
    a = torus.monomial(inner.monomial(e1, 1), 1)
    b = torus.monomial(inner.constant(e2), 0)
    assert a * b == torus.monomial(inner.monomial(e1 * e2, 1), 1)
    c = torus.monomial(inner.monomial(e2, 1), 0)
    assert torus.gen * c == torus.monomial(inner.monomial(e2.scale(3), 1), 1)


def test_quantum_torus_rejects_zero():
    with pytest.raises(ConstructionError):
        poly.quantum_torus(Q, 0)


def test_iterated_extend_requires_commuting():
    h = rings.quaternions()
    first = maps.make_twist(h, "inner", u=h.one + h.basis_element(1))
    second = maps.make_twist(h, "inner", u=h.one + h.basis_element(2))
    base = poly.RingConfig(h, first, None, "Y", poly.LAURENT)
    with pytest.raises(ConstructionError, match="commuting automorphisms"):
        poly.iterated_extend(base, "X", {"kind": "coefficientwise", "base": second})
    lifted = poly.iterated_extend(base, "X", {"kind": "coefficientwise", "base": first})
    assert lifted.coefficients is base


def test_iterated_identity_twists():
    base = poly.RingConfig(Q, maps.make_twist(Q, "identity"), None, "Y", poly.LAURENT)
    outer = poly.iterated_extend(base, "X", {"kind": "identity"})
    x = outer.gen
    y = outer.constant(base.gen)
    assert x * y == y * x


def test_d_structure_laurent_family():
    cfg = laurent_q2()
    family = poly.laurent_d_structure(cfg.sigma)
    rng = random.Random(29)
    elements = [G.random_element(rng) for _ in range(5)]
    report = poly.validate_d_structure(family, list(range(-4, 5)), elements)
    assert report.ok


def test_d_structure_ore_family():
    qy = rational_poly_ring()
    family = poly.ore_d_structure(
        maps.make_twist(qy, "identity"), maps.make_twist(qy, "derivative")
    )
    rng = random.Random(31)
    elements = [qy.random_element(rng) for _ in range(4)]
    report = poly.validate_d_structure(family, list(range(0, 6)), elements)
    assert report.ok


def test_d_structure_corruption_fails_d1():
    cfg = laurent_q2()
    family = poly.corrupted_d_structure(poly.laurent_d_structure(cfg.sigma))
    rng = random.Random(37)
    elements = [G.random_element(rng) for _ in range(3)]
    report = poly.validate_d_structure(family, list(range(-2, 3)), elements)
    assert not report.ok
    assert any(axiom == "D1" and not passed for axiom, passed, _ in report.entries)


def test_power_operator():
    cfg = laurent_q2()
    assert cfg.gen ** 3 == cfg.variable_power(3)
    assert cfg.gen ** 0 == cfg.one
