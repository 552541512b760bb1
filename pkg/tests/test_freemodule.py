import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from immaculate import Element, parse, parse_in
from immaculate.combinat import DomainError
from immaculate.freemodule import from_json

keys = st.lists(st.integers(1, 3), max_size=4).map(tuple)
elements = st.dictionaries(keys, st.integers(-5, 5), max_size=5).map(lambda d: Element("S", d))


def test_render_is_canonical():
    x = parse("-S[3] - S[1,2] + 3*S[1,2] + S[]")
    assert x.render() == "S[] + 2*S[1,2] - S[3]"
    assert str(parse_in("S", "0")) == "0"


def test_zero_coefficients_are_dropped():
    x = Element("H", {(1,): 0, (2,): 1})
    assert list(x.keys()) == [(2,)]
    assert (x - x).is_zero()
    assert not (x - x)


@given(elements)
def test_render_parse_round_trip(x):
    assert parse_in("S", x.render()) == x


@given(elements)
def test_json_round_trip(x):
    assert from_json(json.loads(json.dumps(x.to_json()))) == x


@given(elements, elements, elements)
def test_additive_group_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x - x == Element.zero("S")
    assert x.scale(3) == x + x + x


def test_mixed_bases_rejected():
    with pytest.raises(DomainError):
        parse("S[1] + H[1]")
    with pytest.raises(DomainError):
        Element.monomial("S", (1,)) + Element.monomial("H", (1,))


@pytest.mark.parametrize("text", ["S[1,", "Q[1]", "2*", "0"])
def test_parse_errors(text):
    with pytest.raises(DomainError):
        parse(text)


def test_degree():
    x = parse("S[1,2] + 4*S[1,1,1]")
    assert x.degree() == 3
    assert parse("S[1] + S[1,1]").max_degree() == 2
