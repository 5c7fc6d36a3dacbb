from fractions import Fraction

from hypothesis import given, strategies as st

from limitstab import poly


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)
polys = st.lists(rationals, max_size=6).map(poly.poly)


def test_normalization_strips_trailing_zeros():
    assert poly.poly([1, 0, 0]) == (Fraction(1),)
    assert poly.poly([0, 0]) == ()
    assert poly.degree(poly.poly([])) == -1


@given(polys, polys)
def test_add_matches_pointwise_evaluation(p, q):
    s = poly.add(p, q)
    for x in (Fraction(0), Fraction(2, 3), Fraction(-5)):
        assert poly.evaluate(s, x) == poly.evaluate(p, x) + poly.evaluate(q, x)


@given(polys, polys)
def test_mul_matches_pointwise_evaluation(p, q):
    m = poly.mul(p, q)
    for x in (Fraction(1), Fraction(-7, 2)):
        assert poly.evaluate(m, x) == poly.evaluate(p, x) * poly.evaluate(q, x)


@given(polys)
def test_sign_at_infinity_matches_large_evaluation(p):
    sign = poly.sign_at_infinity(p)
    value = poly.evaluate(p, Fraction(10**9))
    assert ((value > 0) - (value < 0)) == sign
