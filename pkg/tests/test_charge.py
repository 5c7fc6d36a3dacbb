from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from limitstab import poly
from limitstab.charge import (
    POINT_SLOPE,
    ChernCharacter,
    PointSlope,
    ch_of_pair,
    ch_of_points,
    ch_of_sheaf,
    charge_polynomial,
    dual,
    shape,
    slope,
    twisted_invariants,
)
from limitstab.geometry import CurveClass, NumericalThreefold

F = Fraction


def model(omega_cubed=6, c2_omega=0, degrees=(1,)):
    return NumericalThreefold(
        basis=tuple((f"C{i+1}", F(d)) for i, d in enumerate(degrees)),
        omega_cubed=F(omega_cubed),
        c2_omega=F(c2_omega),
    )


# ---------------------------------------------------------------------------
# independent oracle: multiply out exp(-k*omega) * ch * sqrt_td in the graded
# ring H^0 + H^2 + H^4 + H^6, where H^2 = x*omega and H^4 is spanned by the
# curve lattice, omega^2 and the second Chern class.
# ---------------------------------------------------------------------------


class Graded:
    def __init__(self, a, x, gamma, y, t, z):
        self.a, self.x, self.gamma, self.y, self.t, self.z = a, x, gamma, y, t, z

    def mul(self, other, X):
        deg = X.degree_vector
        w3, c2w = X.omega_cubed, X.c2_omega
        a = self.a * other.a
        x = self.a * other.x + self.x * other.a
        gamma = tuple(
            self.a * g2 + other.a * g1 for g1, g2 in zip(self.gamma, other.gamma)
        )
        y = self.a * other.y + other.a * self.y + self.x * other.x
        t = self.a * other.t + other.a * self.t
        z = (
            self.a * other.z
            + other.a * self.z
            + self.x * (deg(other.gamma) + other.y * w3 + other.t * c2w)
            + other.x * (deg(self.gamma) + self.y * w3 + self.t * c2w)
        )
        return Graded(a, x, gamma, y, t, z)


def oracle_invariants(X, ch, k):
    k = F(k)
    rank = X.rank
    zero = (F(0),) * rank
    exp = Graded(F(1), -k, zero, k * k / 2, F(0), -(k**3) * X.omega_cubed / 6)
    chern = Graded(ch.r, ch.c, ch.gamma, F(0), F(0), ch.n)
    sqrt_td = Graded(F(1), F(0), zero, F(0), F(1, 24), F(0))
    v = exp.mul(chern, X).mul(sqrt_td, X)
    w2 = X.degree_vector(v.gamma) + v.y * X.omega_cubed + v.t * X.c2_omega
    return v.a, v.x * X.omega_cubed, w2, v.z


rational = st.fractions(min_value=F(-10), max_value=F(10), max_denominator=6)


@settings(max_examples=300, deadline=None)
@given(
    r=st.integers(-2, 2),
    c=st.integers(-3, 3),
    g=st.tuples(rational, rational),
    n=rational,
    k=rational,
    w3=st.integers(1, 12),
    c2w=st.integers(-12, 12),
)
def test_twisted_invariants_match_graded_expansion(r, c, g, n, k, w3, c2w):
    X = model(w3, c2w, degrees=(1, 3))
    ch = ChernCharacter(F(r), F(c), g, n)
    got = twisted_invariants(X, ch, k)
    assert (got.v0, got.w1, got.w2, got.v3) == oracle_invariants(X, ch, k)


def test_twisted_invariants_examples():
    X = model(6, 0)
    ch = ch_of_pair(CurveClass((1,)), 1)
    t0 = twisted_invariants(X, ch, 0)
    assert (t0.v0, t0.w1, t0.w2, t0.v3) == (-1, 0, 1, 1)
    tp = twisted_invariants(X, ch_of_points(1, 1), F(7, 3))
    assert (tp.v0, tp.w1, tp.w2, tp.v3) == (0, 0, 0, 1)
    t1 = twisted_invariants(X, ch, 1)
    assert (t1.v0, t1.w1, t1.w2, t1.v3) == (-1, 6, -2, 1)


def test_ch_of_pair_examples():
    ch = ch_of_pair(CurveClass((1,)), 1)
    assert (ch.r, ch.c, ch.gamma, ch.n) == (-1, 0, (F(1),), 1)
    ox1 = ch_of_pair(CurveClass((0,)), 0)
    assert shape(ox1) == "pair" and ox1.gamma == (F(0),) and ox1.n == 0
    ch2 = ch_of_pair(CurveClass((2,)), 4)
    assert (ch2.r, ch2.gamma, ch2.n) == (-1, (F(2),), 4)


def test_charge_polynomial_examples():
    X = model(6, 0)
    zp = charge_polynomial(X, ch_of_points(1, 1), F(5, 7))
    assert zp.re == poly.poly([-1]) and zp.im == ()
    zf = charge_polynomial(X, ch_of_sheaf(CurveClass((1,)), 1), 0)
    assert zf.re == poly.poly([-1]) and zf.im == poly.poly([0, 1])
    ze = charge_polynomial(X, ch_of_pair(CurveClass((1,)), 1), 0)
    assert ze.re == poly.poly([-1]) and ze.im == poly.poly([0, 1, 0, 1])


@settings(max_examples=200, deadline=None)
@given(
    r=st.integers(-2, 2),
    c=st.integers(-3, 3),
    g=st.tuples(rational, rational),
    n=rational,
    k=rational,
)
def test_charge_polynomial_degree_bounds(r, c, g, n, k):
    X = model(6, 4, degrees=(1, 3))
    z = charge_polynomial(X, ChernCharacter(F(r), F(c), g, n), k)
    assert poly.degree(z.re) <= 2
    assert poly.degree(z.im) <= 3


@settings(max_examples=150, deadline=None)
@given(
    n1=rational,
    n2=rational,
    g1=st.tuples(rational),
    g2=st.tuples(rational),
    k=rational,
)
def test_charge_polynomial_is_additive(n1, n2, g1, g2, k):
    X = model(6, 2)
    a = ChernCharacter(F(-1), F(0), g1, n1)
    b = ChernCharacter(F(0), F(0), g2, n2)
    direct = charge_polynomial(X, a + b, k)
    summed = charge_polynomial(X, a, k) + charge_polynomial(X, b, k)
    assert direct.re == summed.re and direct.im == summed.im


def test_dual_is_an_involution_and_flips_n():
    ch = ch_of_pair(CurveClass((2,)), 3)
    assert dual(ch) == ChernCharacter(F(-1), F(0), (F(2),), F(-3))
    assert dual(dual(ch)) == ch
    sheaf = ch_of_sheaf(CurveClass((1,)), 5)
    assert dual(sheaf) == ChernCharacter(F(0), F(0), (F(1),), F(-5))


@settings(max_examples=200, deadline=None)
@given(
    r=st.integers(-2, 2),
    c=st.integers(-3, 3),
    g=st.tuples(rational),
    n=rational,
    k=rational,
)
def test_dual_charge_is_minus_conjugate(r, c, g, n, k):
    """Z at (-k) of the dual class equals -conj(Z at k): re flips, im stays."""
    X = model(6, 4)
    ch = ChernCharacter(F(r), F(c), g, n)
    z = charge_polynomial(X, ch, k)
    zd = charge_polynomial(X, dual(ch), -F(k))
    assert zd.re == poly.neg(z.re)
    assert zd.im == z.im


def test_slope_examples():
    X = model(6, 0)
    assert slope(X, ch_of_sheaf(CurveClass((1,)), 1), 0) == 1
    assert slope(X, ch_of_sheaf(CurveClass((1,)), 1), -1) == 2
    assert slope(X, ch_of_points(1, 1), 2) is POINT_SLOPE


def test_point_slope_dominates_every_rational():
    assert POINT_SLOPE > F(10**9)
    assert not POINT_SLOPE < F(10**9)
    assert POINT_SLOPE <= PointSlope()


def test_slope_rejects_bad_classes():
    X = model(6, 0)
    with pytest.raises(ValueError):
        slope(X, ch_of_pair(CurveClass((1,)), 1), 0)
    with pytest.raises(ValueError, match="not a nonzero sheaf class"):
        slope(X, ChernCharacter(F(0), F(0), (F(0),), F(-2)), 0)


def test_shape_classification():
    assert shape(ch_of_points(2, 3)) == "point"
    assert shape(ch_of_sheaf(CurveClass((0, 1)), -7)) == "sheaf"
    assert shape(ch_of_pair(CurveClass((0, 0)), 0)) == "pair"
    assert shape(ChernCharacter(F(0), F(0), (F(0),), F(0))) is None
    assert shape(ChernCharacter(F(2), F(0), (F(0),), F(0))) is None
    assert shape(ChernCharacter(F(0), F(0), (F(-1),), F(0))) is None
