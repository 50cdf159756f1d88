import pytest
from hypothesis import given, strategies as st

from asmprism.algebra import (
    Monomial,
    Polynomial,
    ZeroPolynomialError,
    poly_add,
    poly_from_monomials,
    poly_min_total_degree,
)

X1X1X2X3 = Monomial((3, 1, 1))   # x1^3 x2 x3
X1X2SQ = Monomial((3, 2))        # x1^3 x2^2


def test_monomial_normalizes_trailing_zeros():
    assert Monomial((1, 0, 2, 0, 0)).exponents == (1, 0, 2)
    assert Monomial(()).exponents == ()
    assert Monomial((0, 0)) == Monomial.one()


def test_monomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_monomial_product_and_accessors():
    m = Monomial.variable(1, 3) * Monomial.variable(2) * Monomial.variable(3)
    assert m == X1X1X2X3
    assert m.total_degree == 5
    assert m.exponent(2) == 1
    assert m.exponent(9) == 0
    assert Monomial.from_powers({1: 3, 2: 2}) == X1X2SQ


def test_from_monomials_empty_is_zero():
    assert poly_from_monomials([]).is_zero


def test_from_monomials_paper_pair():
    p = poly_from_monomials([X1X1X2X3, X1X2SQ])
    assert p.coefficient(X1X1X2X3) == 1
    assert p.coefficient(X1X2SQ) == 1
    assert len(p.terms) == 2


def test_from_monomials_duplicates_count():
    p = poly_from_monomials([Monomial.variable(1), Monomial.variable(1)])
    assert p == Polynomial({Monomial.variable(1): 2})


def test_add_identity_and_cancellation():
    p = poly_from_monomials([X1X2SQ])
    assert poly_add(p, Polynomial.zero()) == p
    x1 = Polynomial({Monomial.variable(1): 1})
    neg = Polynomial({Monomial.variable(1): -1})
    assert poly_add(x1, neg).is_zero


def test_add_builds_the_two_term_example():
    p = poly_add(poly_from_monomials([X1X2SQ]), poly_from_monomials([X1X1X2X3]))
    assert p == poly_from_monomials([X1X1X2X3, X1X2SQ])


def test_min_total_degree():
    assert poly_min_total_degree(poly_from_monomials([X1X1X2X3, X1X2SQ])) == 5
    assert poly_min_total_degree(Polynomial.one()) == 0
    p = poly_from_monomials([Monomial.variable(1), Monomial.variable(1, 2)])
    assert poly_min_total_degree(p) == 1


def test_min_total_degree_of_zero_raises():
    with pytest.raises(ZeroPolynomialError):
        poly_min_total_degree(Polynomial.zero())


def test_render_format():
    p = poly_from_monomials([X1X1X2X3, X1X2SQ])
    assert p.render() == "x1^3*x2^2 + x1^3*x2*x3"
    assert Polynomial.zero().render() == "0"
    assert Polynomial.one().render() == "1"
    assert Polynomial({Monomial.variable(2): 3}).render() == "3*x2"
    assert Polynomial({Monomial.one(): 2, Monomial.variable(1): 1}).render() == "x1 + 2"


monomials = st.lists(
    st.lists(st.integers(min_value=0, max_value=4), max_size=4).map(tuple).map(Monomial),
    max_size=8,
)


@given(monomials, monomials, monomials)
def test_add_commutative_associative(ms1, ms2, ms3):
    p, q, r = (poly_from_monomials(ms) for ms in (ms1, ms2, ms3))
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_add(poly_add(p, q), r) == poly_add(p, poly_add(q, r))


@given(monomials)
def test_from_monomials_at_all_ones_counts(ms):
    p = poly_from_monomials(ms)
    assert sum(p.terms.values()) == len(ms)
