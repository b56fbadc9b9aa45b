"""Exact-factorization arithmetic: unit oracles plus algebraic properties."""
import pytest
from hypothesis import given, strategies as st

from codegree.factored_int import FactoredInteger, factorize, parse_factored

ints = st.integers(min_value=1, max_value=10**9)


def test_factorize_known_values():
    assert factorize(979200).factors == {2: 8, 3: 2, 5: 2, 17: 1}
    assert factorize(1).is_one()
    assert factorize(2**11 * 3**3 * 5**2 * 13).to_int() == 17971200


def test_parse_round_trip():
    fi = parse_factored("2^8*3^2*5^2*17")
    assert fi.to_int() == 979200
    assert parse_factored(str(fi)) == fi


def test_divides_and_div_exact():
    a, b = factorize(360), factorize(360 * 49)
    assert a.divides(b) and not b.divides(a)
    assert b.div_exact(a).to_int() == 49
    with pytest.raises(Exception):
        a.div_exact(factorize(7))


def test_valuation_and_p_part():
    fi = factorize(2**9 * 3**4 * 5)
    assert fi.valuation(2) == 9 and fi.valuation(7) == 0
    assert fi.p_part(3).to_int() == 81
    assert fi.is_prime_power() is False
    assert factorize(243).is_prime_power() is True


@given(ints, ints)
def test_mul_matches_integer_product(a, b):
    assert factorize(a).mul(factorize(b)).to_int() == a * b


@given(ints)
def test_square_and_parity(a):
    fi = factorize(a)
    assert fi.square().to_int() == a * a
    assert fi.is_odd() == (a % 2 == 1)


@given(ints, ints)
def test_divides_matches_modulo(a, b):
    assert factorize(a).divides(factorize(b)) == (b % a == 0)


@given(ints)
def test_str_round_trip(a):
    fi = factorize(a)
    assert parse_factored(str(fi)) == fi and fi.to_int() == a


@given(ints)
def test_ordering_matches_integers(a):
    assert (factorize(a) < factorize(a + 1)) is True
