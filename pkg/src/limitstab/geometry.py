"""Numerical model of a Calabi-Yau 3-fold for limit-stability computations.

The geometry is reduced to exactly the numbers the engine consumes: a basis
of curve classes with positive rational degrees ("degree" = pairing with the
fixed ample class), the triple self-intersection of that ample class, the
second-Chern pairing, and three model tables:

* ``m_table`` -- for a nonzero class gamma, the minimal third Chern character
  of a structure sheaf of a one-dimensional subscheme in class gamma;
* ``n_table`` -- the (conjectural) virtual counts of one-dimensional
  semistable sheaves, consumed at walls;
* ``p_seed`` -- stable-pair counts, seeding the crossing recursion far below
  every wall.

The effectivity cone is simplicial over the basis: a class is effective iff
all its coordinates are >= 0.  That is a deliberate toy restriction; it keeps
every enumeration finite and exact.

All arithmetic is exact rational.  No floating point enters the core.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

from .errors import ModelDataError


@dataclass(frozen=True, order=True)
class CurveClass:
    """An integral class in the curve lattice, one coordinate per basis class."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        if self.rank != other.rank:
            raise ValueError("rank mismatch between curve classes")
        return CurveClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        if self.rank != other.rank:
            raise ValueError("rank mismatch between curve classes")
        return CurveClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def zero_class(rank: int) -> CurveClass:
    return CurveClass((0,) * rank)


@dataclass(frozen=True)
class NumericalThreefold:
    """Immutable numerical model; all operations on it are pure functions.

    ``n_table`` keys are (n, CurveClass); ``p_seed`` keys likewise;
    ``m_table`` keys are nonzero effective classes.  m(0) = 0 is a hard-wired
    convention (empty subscheme) and is never stored.
    """

    basis: Tuple[Tuple[str, Fraction], ...]
    omega_cubed: Fraction
    c2_omega: Fraction = Fraction(0)
    m_table: Mapping[CurveClass, Fraction] = field(default_factory=dict)
    n_table: Mapping[Tuple[int, CurveClass], Fraction] = field(default_factory=dict)
    p_seed: Mapping[Tuple[int, CurveClass], Fraction] = field(default_factory=dict)
    name: str = "custom"

    def __post_init__(self):
        if not self.basis:
            raise ValueError("model needs at least one basis curve class")
        object.__setattr__(
            self, "basis", tuple((nm, Fraction(d)) for nm, d in self.basis)
        )
        object.__setattr__(self, "omega_cubed", Fraction(self.omega_cubed))
        object.__setattr__(self, "c2_omega", Fraction(self.c2_omega))
        for nm, d in self.basis:
            if d <= 0:
                raise ValueError(f"basis degree for {nm!r} must be > 0, got {d}")
        if self.omega_cubed <= 0:
            raise ValueError("omega_cubed must be > 0")
        for gamma in self.m_table:
            if gamma.is_zero():
                raise ValueError("m(0) = 0 is a convention, never stored")
            if gamma.rank != self.rank:
                raise ValueError(f"m_table class {gamma} has wrong rank")
        for table, label in ((self.n_table, "n_table"), (self.p_seed, "p_seed")):
            for n, gamma in table:
                if gamma.rank != self.rank:
                    raise ValueError(f"{label} class {gamma} has wrong rank")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def degrees(self) -> Tuple[Fraction, ...]:
        return tuple(d for _, d in self.basis)

    def check_rank(self, gamma: CurveClass) -> None:
        if gamma.rank != self.rank:
            raise ValueError(
                f"class {gamma} has rank {gamma.rank}, model has rank {self.rank}"
            )

    def degree_vector(self, coeffs: Iterable[Fraction]) -> Fraction:
        """Degree of a rational curve vector (used for ch2 of sheaf classes)."""
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise ValueError("rank mismatch in degree pairing")
        return sum((Fraction(c) * d for c, d in zip(coeffs, self.degrees)), Fraction(0))


def degree(model: NumericalThreefold, gamma: CurveClass) -> Fraction:
    """Pairing of a curve class with the ample class; linear in gamma."""
    model.check_rank(gamma)
    return model.degree_vector(Fraction(c) for c in gamma.coeffs)


def effective_below(model: NumericalThreefold, beta: CurveClass) -> List[CurveClass]:
    """All effective classes of degree <= deg(beta), the zero class included.

    Bounded lattice walk over the simplicial cone; finite because every basis
    degree is positive.  Returned sorted by (degree, coordinates).
    """
    model.check_rank(beta)
    if not beta.is_effective():
        raise ValueError(f"{beta} is not effective")
    bound = degree(model, beta)
    ranges = [range(int(bound / d) + 1) for d in model.degrees]
    found = []
    for coeffs in itertools.product(*ranges):
        gamma = CurveClass(coeffs)
        if degree(model, gamma) <= bound:
            found.append(gamma)
    found.sort(key=lambda g: (degree(model, g), g.coeffs))
    return found


def min_ch3(model: NumericalThreefold, beta: CurveClass) -> Fraction:
    """m(beta): minimum of the m-table over nonzero classes of degree <= deg(beta).

    m(0) = 0 by the empty-subscheme convention.  A missing table entry for a
    needed nonzero class is a hard error, never a silent default.
    """
    model.check_rank(beta)
    if not beta.is_effective():
        raise ValueError(f"{beta} is not effective")
    if beta.is_zero():
        return Fraction(0)
    values = []
    for gamma in effective_below(model, beta):
        if gamma.is_zero():
            continue
        try:
            values.append(model.m_table[gamma])
        except KeyError:
            raise ModelDataError(
                f"m_table has no entry for class {gamma} (needed for m({beta}))"
            ) from None
    return min(values)


def decompositions(
    model: NumericalThreefold, beta: CurveClass
) -> List[Tuple[CurveClass, CurveClass]]:
    """All ordered effective splittings beta = beta1 + beta2 with beta1 != 0.

    beta2 = 0 is allowed.  Sorted by (deg beta1, coordinates of beta1).
    """
    model.check_rank(beta)
    if not beta.is_effective():
        raise ValueError(f"{beta} is not effective")
    ranges = [range(c + 1) for c in beta.coeffs]
    pairs = []
    for coeffs in itertools.product(*ranges):
        beta1 = CurveClass(coeffs)
        if beta1.is_zero():
            continue
        pairs.append((beta1, beta - beta1))
    pairs.sort(key=lambda p: (degree(model, p[0]), p[0].coeffs))
    return pairs
