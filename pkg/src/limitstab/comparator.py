"""Asymptotic phase comparison of central charges for m -> infinity.

Two independent routes decide whether the phase of F eventually sits below,
at, or above the phase of E:

* ``compare_phases`` works for any pair of in-scope classes.  It forms the
  cross polynomial W(m) = re_F*im_E - im_F*re_E (degree <= 5) and reads the
  sign of its leading coefficient.  Both phases lie in an open window of
  width < 1 for large m, so sin(pi*(phi_E - phi_F)) has the sign of
  phi_E - phi_F, and |Z_E||Z_F| sin(pi*(phi_E - phi_F)) = W(m).
* ``compare_phases_closed`` is the closed-form route for a sheaf- or
  point-type F against a pair-type E: an inequality between the twisted
  slope of F and -2k, with a tie-break on the linear charge data of E.

The two must agree everywhere; that agreement is the primary oracle pair of
the test suite.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from . import poly
from .charge import (
    ChernCharacter,
    charge_polynomial,
    shape,
    slope,
    twisted_invariants,
    untwisted_slope,
)
from .geometry import NumericalThreefold
from .poly import Poly


class PhaseOrder(enum.Enum):
    PRECEDES = -1
    EQUAL = 0
    SUCCEEDS = 1

    def reversed(self) -> "PhaseOrder":
        return PhaseOrder(-self.value)


def _require_in_scope(ch: ChernCharacter, label: str) -> str:
    s = shape(ch)
    if s is None:
        raise ValueError(f"{label} class {ch} is zero or not of an in-scope shape")
    return s


def cross_polynomial(
    model: NumericalThreefold, ch_f: ChernCharacter, ch_e: ChernCharacter, k
) -> Poly:
    """W(m) = re_F(m) im_E(m) - im_F(m) re_E(m); positive for large m iff F precedes E."""
    zf = charge_polynomial(model, ch_f, k)
    ze = charge_polynomial(model, ch_e, k)
    return poly.sub(poly.mul(zf.re, ze.im), poly.mul(zf.im, ze.re))


def compare_phases(
    model: NumericalThreefold, ch_f: ChernCharacter, ch_e: ChernCharacter, k
) -> PhaseOrder:
    """Asymptotic order of phases via the sign at infinity of W."""
    _require_in_scope(ch_f, "F")
    _require_in_scope(ch_e, "E")
    sign = poly.sign_at_infinity(cross_polynomial(model, ch_f, ch_e, k))
    if sign > 0:
        return PhaseOrder.PRECEDES
    if sign < 0:
        return PhaseOrder.SUCCEEDS
    return PhaseOrder.EQUAL


def compare_phases_closed(
    model: NumericalThreefold, ch_f: ChernCharacter, ch_e: ChernCharacter, k
) -> PhaseOrder:
    """Closed-form order for sheaf/point-type F against pair-type E.

    With B = k*omega:  F precedes E  iff  mu_0(F) < -2k, or mu_0(F) = -2k and
    w2(E) * mu(F) < v3(E), where mu_0 is the untwisted slope and mu = mu_0 - k
    the twisted one.  A point-type F always succeeds: its phase is exactly 1
    and dominates the pair-type window.
    """
    sf = _require_in_scope(ch_f, "F")
    if sf not in ("sheaf", "point"):
        raise ValueError("closed comparison needs a sheaf- or point-type F")
    if _require_in_scope(ch_e, "E") != "pair":
        raise ValueError("closed comparison needs a pair-type E")
    if sf == "point":
        return PhaseOrder.SUCCEEDS
    k = Fraction(k)
    mu0 = untwisted_slope(model, ch_f)
    if mu0 < -2 * k:
        return PhaseOrder.PRECEDES
    if mu0 > -2 * k:
        return PhaseOrder.SUCCEEDS
    te = twisted_invariants(model, ch_e, k)
    lhs = te.w2 * slope(model, ch_f, k)
    if lhs < te.v3:
        return PhaseOrder.PRECEDES
    if lhs > te.v3:
        return PhaseOrder.SUCCEEDS
    return PhaseOrder.EQUAL


def phase_limit(model: NumericalThreefold, ch: ChernCharacter) -> Fraction:
    """Limit of the normalized phase for m -> infinity: 1 for points, 1/2 otherwise."""
    s = _require_in_scope(ch, "the")
    if s == "point":
        return Fraction(1)
    return Fraction(1, 2)


def destabilizing_threshold(model: NumericalThreefold, ch_f: ChernCharacter) -> Fraction:
    """The twist k0 = -mu_0(F)/2 below which F precedes every pair-type class.

    For k < k0 the slope inequality of the closed comparison is strict, so
    compare_phases(F, E, k) is PRECEDES for every pair-type E; at and above
    k0 it never is.  Point-type classes have no finite threshold.
    """
    if shape(ch_f) != "sheaf":
        raise ValueError("threshold is defined for sheaf-type classes only")
    return -untwisted_slope(model, ch_f) / 2
