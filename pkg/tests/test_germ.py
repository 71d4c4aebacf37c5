import pytest
from hypothesis import given, strategies as st

from cablowup import GermModel, deg_min, parse_germ, weighted_mult
from cablowup.errors import GermParseError, InvalidInput


@pytest.mark.parametrize("text, terms", [
    ("xy + z^3 + u^4", {(3, 0), (0, 4)}),
    ("xy + z^3 + u^3", {(3, 0), (0, 3)}),
    ("xy + z^2", {(2, 0)}),
    ("xy+zu+z^5", {(1, 1), (5, 0)}),
    ("  x y + z u^5 ", {(1, 5)}),
])
def test_parse(text, terms):
    assert set(parse_germ(text).terms) == terms


@pytest.mark.parametrize("text, pos", [
    ("xy + z^", 7),
    ("xy + z", 5),
    ("xy + z^2 + z^2", 11),
    ("xy", 2),
    ("yx + z^2", 0),
    ("xy + z^2 + w^3", 11),
    ("xy + u z^2", 7),
    ("xy + z^0u^3", 7),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(GermParseError) as err:
        parse_germ(text)
    assert err.value.position == pos


def test_model_validation():
    with pytest.raises(InvalidInput):
        GermModel(())
    with pytest.raises(InvalidInput):
        GermModel(((1, 0),))
    with pytest.raises(InvalidInput):
        GermModel(((2, 0), (2, 0)))


def test_render_order():
    assert parse_germ("xy + u^4 + z^3").render() == "xy + z^3 + u^4"
    assert parse_germ("xy + z^4 + u^4").render() == "xy + z^4 + u^4"
    assert parse_germ("xy + zu^5 + z^2").render() == "xy + z^2 + z u^5"


monomial = st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda t: sum(t) >= 2)


@given(st.sets(monomial, min_size=1, max_size=5))
def test_render_roundtrip(terms):
    g = GermModel(tuple(terms))
    assert parse_germ(g.render()) == g
    assert g.swap_zu().swap_zu() == g


def test_symmetry():
    assert parse_germ("xy + z^3 + u^3").is_zu_symmetric
    assert not parse_germ("xy + z^3 + u^4").is_zu_symmetric


def test_deg_min():
    assert deg_min(parse_germ("xy + z^4 + u^4")) == 4
    assert deg_min(parse_germ("xy + z^3 + u^4")) == 3
    assert deg_min(GermModel(((2, 0), (1, 5)))) == 2


def test_weighted_mult():
    assert weighted_mult(parse_germ("xy + z^3 + u^4"), (1, 2, 1, 1)) == 3
    for n in range(3, 9):
        assert weighted_mult(parse_germ(f"xy + z^{n} + u^{n}"), (1, n - 1, 1, 1)) == n
    assert weighted_mult(parse_germ("xy + z^2"), (1, 1, 1, 1)) == 2
