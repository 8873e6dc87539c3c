import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewring import maps, parsing, poly, rings, series
from skewring.errors import ParseError

G = rings.gaussian()
Q = rings.rationals()
O = rings.octonions()


def cfg_laurent():
    return poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.LAURENT)


def cfg_ore():
    return poly.RingConfig(G, maps.make_twist(G, "q_twist", q=2), None, "X", poly.ORE)


def test_vector_literals():
    cfg = cfg_laurent()
    p = parsing.parse_poly("[0,1]X^2 + [1,0]", cfg)
    assert p == cfg.monomial(G.basis_element(1), 2) + cfg.one


def test_basis_aliases():
    cfg = cfg_laurent()
    assert parsing.parse_poly("iX^2 + 1", cfg) == \
        parsing.parse_poly("[0,1]X^2 + [1,0]", cfg)
    h = rings.quaternions()
    hc = poly.RingConfig(h, maps.make_twist(h, "identity"), None, "X", poly.LAURENT)
    p = parsing.parse_poly("jX - k", hc)
    assert p == hc.monomial(h.basis_element(2), 1) - hc.constant(h.basis_element(3))


def test_rational_coefficients():
    cfg = cfg_laurent()
    p = parsing.parse_poly("3/4X^-2 - 2", cfg)
    assert p.coefficient(-2) == G.scalar("3/4")
    assert p.coefficient(0) == G.scalar(-2)


def test_negative_exponent_rejected_in_ore():
    with pytest.raises(ParseError, match="negative exponent"):
        parsing.parse_poly("X^-1", cfg_ore())


def test_unknown_identifiers():
    with pytest.raises(ParseError, match="unknown identifier"):
        parsing.parse_poly("zX", cfg_laurent())


def test_syntax_error_positions():
    with pytest.raises(ParseError) as err:
        parsing.parse_poly("1 + + 2", cfg_laurent())
    assert err.value.column > 0


def test_series_marker_required():
    cfg = cfg_laurent()
    with pytest.raises(ParseError, match="missing O"):
        parsing.parse_series("1 - iX", cfg)
    s = parsing.parse_series("1 - [0,1]X + O(X^4)", cfg, power=True)
    assert s.precision == 4
    assert s.coefficient(1) == -G.basis_element(1)


def test_series_power_shape_rejects_negative():
    cfg = cfg_laurent()
    with pytest.raises(ParseError, match="negative exponent"):
        parsing.parse_series("X^-1 + O(X^3)", cfg, power=True)
    laurent = parsing.parse_series("X^-1 + O(X^3)", cfg, power=False)
    assert laurent.window_start == -1


def test_iterated_coefficients():
    torus = poly.quantum_torus(O, 2)
    p = parsing.parse_poly("(e1Y^2)X^3 + YX - 2", torus)
    inner = torus.coefficients
    expected = (
        torus.monomial(inner.monomial(O.basis_element(1), 2), 3)
        + torus.monomial(inner.gen, 1)
        - torus.scalar(2)
    )
    assert p == expected
    assert parsing.parse_poly(parsing.format_poly(p), torus) == p


def test_format_zero():
    cfg = cfg_laurent()
    assert parsing.format_poly(cfg.zero) == "0"
    assert parsing.format_series(series.series(cfg, {}, 4)) == "0 + O(X^4)"


def test_scalar_formatting():
    cfg = cfg_laurent()
    assert parsing.format_poly(cfg.scalar(-2)) == "-2"
    assert parsing.format_poly(cfg.monomial(G.basis_element(1), 1)) == "iX"
    assert parsing.format_poly(-cfg.monomial(G.basis_element(1), 1)) == "-iX"


def test_round_trip_random_polys():
    rng = random.Random(71)
    m2 = rings.matrix_algebra(Q, 2)
    configs = [
        cfg_laurent(),
        cfg_ore(),
        poly.RingConfig(O, maps.make_twist(O, "conjugation"), None, "X", poly.LAURENT),
        poly.RingConfig(m2, maps.make_twist(m2, "diag_swap"), None, "X", poly.LAURENT),
        poly.quantum_torus(O, 2),
    ]
    for cfg in configs:
        for _ in range(100):
            p = cfg.random_element(rng)
            text = parsing.format_poly(p)
            assert parsing.parse_poly(text, cfg) == p, text


def test_round_trip_random_series():
    rng = random.Random(73)
    cfg = poly.RingConfig(G, maps.make_twist(G, "conjugation"), None, "X", poly.LAURENT)
    for _ in range(100):
        terms = {}
        for e in range(rng.randint(-3, 0), rng.randint(1, 5)):
            c = G.random_element(rng)
            if c:
                terms[e] = c
        s = series.series(cfg, terms, 6)
        text = parsing.format_series(s)
        assert parsing.parse_series(text, cfg) == s, text


@settings(max_examples=50, deadline=None)
@given(
    st.dictionaries(
        st.integers(min_value=-5, max_value=5),
        st.tuples(
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
        ),
        max_size=4,
    )
)
def test_round_trip_property(terms):
    cfg = cfg_laurent()
    p = cfg.from_terms({e: G.element(c) for e, c in terms.items()})
    assert parsing.parse_poly(parsing.format_poly(p), cfg) == p


def test_whitespace_insensitive():
    cfg = cfg_laurent()
    assert parsing.parse_poly("1+iX^2", cfg) == parsing.parse_poly(" 1 + i X ^ 2 ", cfg)
