"""Chern-character arithmetic and the central charge as a polynomial in m.

Classes are scalar-reduced: since the twist direction is locked to the ample
ray, a class is determined for our purposes by

    r      (rank / ch0),
    c      (the ample-ray coefficient of ch1, i.e. ch1 = c * omega),
    gamma  (ch2 as a rational curve vector over the model basis),
    n      (ch3, a number).

For the twist B = k * omega the square-root Todd correction of a Calabi-Yau
3-fold is (1, 0, c2/24, 0), so only the scalar c2_omega enters.  The four
scalars (v0, w1, w2, v3) below determine the central charge completely:

    Z(m) = (-v3 + w1 * m^2 / 2)  +  i * (w2 * m - omega^3 * v0 * m^3 / 6).

Everything is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import poly
from .geometry import CurveClass, NumericalThreefold
from .poly import Poly


@dataclass(frozen=True)
class ChernCharacter:
    """Scalar-reduced class (ch0, ch1, ch2, ch3) = (r, c*omega, gamma, n)."""

    r: Fraction
    c: Fraction
    gamma: Tuple[Fraction, ...]
    n: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "gamma", tuple(Fraction(g) for g in self.gamma))
        object.__setattr__(self, "n", Fraction(self.n))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        if len(self.gamma) != len(other.gamma):
            raise ValueError("rank mismatch between Chern characters")
        return ChernCharacter(
            self.r + other.r,
            self.c + other.c,
            tuple(a + b for a, b in zip(self.gamma, other.gamma)),
            self.n + other.n,
        )

    def is_zero(self) -> bool:
        return (
            self.r == 0
            and self.c == 0
            and all(g == 0 for g in self.gamma)
            and self.n == 0
        )

    def __str__(self) -> str:
        gam = ",".join(str(g) for g in self.gamma)
        return f"({self.r}, {self.c}, [{gam}], {self.n})"


class PointSlope:
    """Distinguished slope of a zero-dimensional class; above every rational."""

    _instance: Optional["PointSlope"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PointSlope"

    def __gt__(self, other) -> bool:
        return not isinstance(other, PointSlope)

    def __lt__(self, other) -> bool:
        return False

    def __ge__(self, other) -> bool:
        return True

    def __le__(self, other) -> bool:
        return isinstance(other, PointSlope)


POINT_SLOPE = PointSlope()


def ch_of_pair(beta: CurveClass, n: int) -> ChernCharacter:
    """The class (-1, 0, beta, n) of a rank-(-1) pair-type object."""
    if not beta.is_effective():
        raise ValueError(f"{beta} is not effective")
    return ChernCharacter(
        Fraction(-1), Fraction(0), tuple(Fraction(c) for c in beta.coeffs), Fraction(n)
    )


def ch_of_sheaf(gamma: CurveClass, n) -> ChernCharacter:
    """The class (0, 0, gamma, n) of a one-dimensional sheaf."""
    return ChernCharacter(
        Fraction(0), Fraction(0), tuple(Fraction(c) for c in gamma.coeffs), Fraction(n)
    )


def ch_of_points(rank: int, n) -> ChernCharacter:
    """The class (0, 0, 0, n) of a zero-dimensional sheaf, n > 0."""
    return ChernCharacter(Fraction(0), Fraction(0), (Fraction(0),) * rank, Fraction(n))


def shape(ch: ChernCharacter) -> Optional[str]:
    """Classify an in-scope class: 'pair', 'sheaf' or 'point'; None otherwise.

    'pair' covers the rank-(-1) shapes including the shifted structure sheaf
    (gamma = 0, n = 0).  'sheaf' needs a nonzero effective gamma, 'point'
    needs gamma = 0 and n > 0.  The zero class and anything else (e.g.
    two-dimensional shifts) are out of scope and classify as None.
    """
    if ch.r == -1 and ch.c == 0 and all(g >= 0 for g in ch.gamma):
        return "pair"
    if ch.r == 0 and ch.c == 0:
        if any(g != 0 for g in ch.gamma):
            if all(g >= 0 for g in ch.gamma):
                return "sheaf"
            return None
        if ch.n > 0:
            return "point"
    return None


@dataclass(frozen=True)
class TwistedInvariants:
    """The four scalars (v0, omega^2*v1, omega*v2, v3) of the twisted vector."""

    v0: Fraction
    w1: Fraction
    w2: Fraction
    v3: Fraction


def twisted_invariants(
    model: NumericalThreefold, ch: ChernCharacter, k
) -> TwistedInvariants:
    """Expand exp(-k*omega) * ch * (1, 0, c2/24, 0) and keep the four scalars."""
    k = Fraction(k)
    w3 = model.omega_cubed
    c2w = model.c2_omega
    deg = model.degree_vector(ch.gamma)
    v0 = ch.r
    w1 = (ch.c - k * ch.r) * w3
    w2 = deg - k * ch.c * w3 + Fraction(k * k, 2) * ch.r * w3 + ch.r * c2w / 24
    v3 = (
        ch.n
        - k * deg
        + Fraction(k * k, 2) * ch.c * w3
        - Fraction(k**3, 6) * ch.r * w3
        + (ch.c - k * ch.r) * c2w / 24
    )
    return TwistedInvariants(v0, w1, w2, v3)


@dataclass(frozen=True)
class ChargePolynomial:
    """Real and imaginary parts of the central charge, as polynomials in m.

    deg(re) <= 2 and deg(im) <= 3, always.
    """

    re: Poly
    im: Poly

    def evaluate(self, m) -> Tuple[Fraction, Fraction]:
        return poly.evaluate(self.re, m), poly.evaluate(self.im, m)

    def __add__(self, other: "ChargePolynomial") -> "ChargePolynomial":
        return ChargePolynomial(
            poly.add(self.re, other.re), poly.add(self.im, other.im)
        )


def charge_polynomial(
    model: NumericalThreefold, ch: ChernCharacter, k
) -> ChargePolynomial:
    """Z(m) = (-v3 + w1 m^2/2) + i (w2 m - omega^3 v0 m^3/6) for B = k*omega."""
    t = twisted_invariants(model, ch, k)
    re = poly.poly([-t.v3, 0, Fraction(t.w1, 2)])
    im = poly.poly([0, t.w2, 0, -Fraction(model.omega_cubed * t.v0, 6)])
    return ChargePolynomial(re, im)


def dual(ch: ChernCharacter) -> ChernCharacter:
    """Numerical shadow of the dualizing involution: (r,c,gamma,n) -> (r,-c,gamma,-n).

    Involutive; exchanges the twist parameter k with -k downstream.
    """
    return ChernCharacter(ch.r, -ch.c, ch.gamma, -ch.n)


def slope(model: NumericalThreefold, ch: ChernCharacter, k):
    """Twisted slope (n - k*deg)/deg of a sheaf class; PointSlope for points.

    Only r = c = 0 classes carry a slope.  A class with gamma = 0 and n <= 0
    is not a nonzero sheaf class and is rejected.
    """
    if ch.r != 0 or ch.c != 0:
        raise ValueError("slope is defined only for r = c = 0 classes")
    deg = model.degree_vector(ch.gamma)
    if any(g != 0 for g in ch.gamma):
        if deg <= 0:
            raise ValueError("sheaf class must have positive degree")
        return Fraction(ch.n, 1) / deg - Fraction(k)
    if ch.n > 0:
        return POINT_SLOPE
    raise ValueError("class with gamma = 0, n <= 0 is not a nonzero sheaf class")


def untwisted_slope(model: NumericalThreefold, ch: ChernCharacter):
    """Slope at k = 0; the quantity whose half fixes every wall position."""
    return slope(model, ch, 0)
