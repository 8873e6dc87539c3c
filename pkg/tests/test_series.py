import random

import pytest

from skewring import maps, poly, rings, series
from skewring.errors import NotInvertibleError, ZeroElementError

G = rings.gaussian()
Q = rings.rationals()


def cfg_q2():
    return poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.LAURENT)


def cfg_conj():
    return poly.RingConfig(G, maps.make_twist(G, "conjugation"), None, "X", poly.LAURENT)


def cfg_rational():
    return poly.RingConfig(Q, maps.make_twist(Q, "identity"), None, "X", poly.LAURENT)


def test_commutative_product():
    cfg = cfg_rational()
    a = series.series(cfg, {0: Q.one, 1: Q.one}, 4)
    b = series.series(cfg, {0: Q.one, 1: -Q.one}, 4)
    product = a * b
    assert product.coefficient(0) == Q.one
    assert not product.coefficient(1)
    assert product.coefficient(2) == -Q.one


def test_twisted_square():
    cfg = cfg_q2()
    i = G.basis_element(1)
    s = series.series(cfg, {1: i}, 4)
    assert (s * s).coefficient(2) == G.scalar(-2)


def test_unit_multiplication():
    cfg = cfg_q2()
    rng = random.Random(3)
    one = series.series_one(cfg, 5)
    for _ in range(10):
        terms = {e: G.random_element(rng) for e in range(-2, 3)}
        a = series.series(cfg, terms, 5)
        assert series.equal_to_precision(one * a, a)
        assert series.equal_to_precision(a * one, a)


def test_order_and_leading():
    cfg = cfg_rational()
    s = series.series(cfg, {3: Q.one, 5: -Q.one}, 6)
    assert series.series_order_leading(s) == (3, Q.one)
    laurent = series.series(cfg, {-2: Q.one, 0: Q.one}, 4)
    assert series.series_order_leading(laurent) == (-2, Q.one)
    with pytest.raises(ZeroElementError, match="order undefined at this precision"):
        series.series_order_leading(series.series(cfg, {}, 4))


def test_geometric_inverse():
    cfg = cfg_rational()
    g = series.series(cfg, {0: Q.one, 1: -Q.one}, 4)
    inv = series.series_invert(g, side="both")
    assert inv == series.series(cfg, {e: Q.one for e in range(5)}, 4)


def test_frozen_twisted_inverse():
    cfg = cfg_q2()
    i = G.basis_element(1)
    a = series.series(cfg, {0: G.one, 1: -i}, 4)
    b = series.series_invert(a)
    expected = series.series(
        cfg, {0: G.one, 1: i, 2: G.scalar(-2), 3: i.scale(-2), 4: G.scalar(4)}, 4
    )
    assert b == expected
    assert series.equal_to_precision(a * b, series.series_one(cfg, 4))


def test_one_sided_inverses_differ():
    cfg = cfg_q2()
    i = G.basis_element(1)
    a = series.series(cfg, {0: G.one, 1: -i}, 4)
    right = series.series_invert(a, side="right")
    left = series.series_invert(a, side="left")
    assert series.equal_to_precision(a * right, series.series_one(cfg, 4))
    assert series.equal_to_precision(left * a, series.series_one(cfg, 4))
    assert right.coefficient(3) == i.scale(-2)
    assert left.coefficient(3) == i.scale(-8)
    with pytest.raises(NotInvertibleError, match="series is not a unit"):
        series.series_invert(a, side="both")


def test_two_sided_round_trip_with_automorphism():
    cfg = cfg_conj()
    rng = random.Random(5)
    done = 0
    while done < 50:
        lead = G.random_element(rng)
        if not lead:
            continue
        terms = {0: lead}
        for e in range(1, 5):
            c = G.random_element(rng)
            if c:
                terms[e] = c
        done += 1
        a = series.series(cfg, terms, 6)
        b = series.series_invert(a, side="both")
        assert series.equal_to_precision(a * b, series.series_one(cfg, 6))
        assert series.equal_to_precision(b * a, series.series_one(cfg, 6))


def test_constant_unit_inverse():
    cfg = cfg_q2()
    i = G.basis_element(1)
    inv = series.series_invert(series.series(cfg, {0: i}, 4), side="both")
    assert inv.coefficient(0) == -i


def test_shifted_order_inverse():
    cfg = cfg_conj()
    i = G.basis_element(1)
    a = series.series(cfg, {-2: i, 0: G.one}, 3)
    b = series.series_invert(a, side="both")
    assert b.order == 2
    product = a * b
    assert series.equal_to_precision(product, series.series_one(cfg, product.precision))


def test_non_unit_rejected():
    cfg = cfg_rational()
    with pytest.raises(NotInvertibleError, match="series is not a unit"):
        series.series_invert(series.series(cfg, {}, 4))


def test_order_additivity():
    cfg = cfg_q2()
    rng = random.Random(7)
    done = 0
    while done < 50:
        def rand_series():
            start = rng.randint(-3, 2)
            terms = {}
            for e in range(start, start + 3):
                c = G.random_element(rng)
                if c:
                    terms[e] = c
            if not terms:
                return None
            return series.series(cfg, terms, start + 6)
        a, b = rand_series(), rand_series()
        if a is None or b is None:
            continue
        done += 1
        assert (a * b).order == a.order + b.order


def test_precision_propagation():
    cfg = cfg_rational()
    a = series.series(cfg, {0: Q.one}, 5)
    b = series.series(cfg, {0: Q.one}, 3)
    assert (a + b).precision == 3
    assert (a * b).precision == 3
    shifted = series.series(cfg, {2: Q.one}, 5, window_start=2)
    assert (a * shifted).precision == 5 + 2 - 2  # min(5+2, 5+0)
    assert (a * shifted).window_start == 2


def test_poly_embedding_cross_oracle():
    cfg = cfg_q2()
    rng = random.Random(11)
    for _ in range(25):
        p = cfg.random_element(rng, max_degree=3)
        q = cfg.random_element(rng, max_degree=3)
        sp = series.from_poly(p, 8, window_start=-4)
        sq = series.from_poly(q, 8, window_start=-4)
        expected = p * q
        product = sp * sq
        for e in range(product.window_start, product.precision + 1):
            assert product.coefficient(e) == expected.coefficient(e)


def test_times_monomial():
    cfg = cfg_q2()
    i = G.basis_element(1)
    a = series.series(cfg, {0: G.one, 1: i}, 4)
    shifted = series.times_monomial(a, i, 2)
    assert shifted.precision == 6
    assert shifted.coefficient(2) == i
    assert shifted.coefficient(3) == i * i.scale(2)
