"""Model files: a line-oriented key-value format with sectioned blocks.

Example::

    # two intersecting rigid curves
    omega_cubed = 6
    c2_omega = 0

    [basis]
    C1 = 3
    C2 = 2

    [m_table]
    (1,0) = 1
    (0,1) = 1

    [n_table]
    1 (0,1) = 1

    [p_seed]
    1 (1,1) = 1
    -1 (1,1) = 0

Classes are integer coefficient tuples ``(a,b,...)`` over the basis order;
rationals are ``p/q`` strings (or bare integers) and render in lowest terms.
``[n_table]`` and ``[p_seed]`` lines carry the integer n before the class.
Parse errors name the offending line; validation errors name the violated
invariant.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Tuple

from .errors import ModelParseError
from .geometry import CurveClass, NumericalThreefold

_SECTIONS = ("basis", "m_table", "n_table", "p_seed")


def parse_rational(text: str, line: int | None = None) -> Fraction:
    text = text.strip()
    m = re.fullmatch(r"(-?\d+)\s*(?:/\s*(-?\d+))?", text)
    if not m:
        raise ModelParseError(f"malformed rational {text!r}", line)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ModelParseError(f"malformed rational {text!r} (zero denominator)", line)
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_class(text: str, line: int | None = None) -> CurveClass:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if text == "":
        raise ModelParseError("empty class tuple", line)
    try:
        coeffs = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise ModelParseError(f"malformed class tuple {text!r}", line) from None
    return CurveClass(coeffs)


def format_class(gamma: CurveClass) -> str:
    return "(" + ",".join(str(c) for c in gamma.coeffs) + ")"


def _split_kv(raw: str, line: int) -> Tuple[str, str]:
    if "=" not in raw:
        raise ModelParseError(f"expected 'key = value', got {raw!r}", line)
    key, _, value = raw.partition("=")
    return key.strip(), value.strip()


def parse_model(text: str, name: str = "custom") -> NumericalThreefold:
    scalars: Dict[str, Fraction] = {}
    basis = []
    m_table: Dict[CurveClass, Fraction] = {}
    n_table: Dict[Tuple[int, CurveClass], Fraction] = {}
    p_seed: Dict[Tuple[int, CurveClass], Fraction] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("[") and stripped.endswith("]"):
            section = stripped[1:-1].strip()
            if section not in _SECTIONS:
                raise ModelParseError(f"unknown section [{section}]", lineno)
            continue
        key, value = _split_kv(stripped, lineno)
        if section is None:
            if key not in ("omega_cubed", "c2_omega"):
                raise ModelParseError(f"unknown top-level key {key!r}", lineno)
            scalars[key] = parse_rational(value, lineno)
        elif section == "basis":
            basis.append((key, parse_rational(value, lineno)))
        elif section == "m_table":
            m_table[parse_class(key, lineno)] = parse_rational(value, lineno)
        else:
            m = re.fullmatch(r"(-?\d+)\s+(\(.*\))", key)
            if not m:
                raise ModelParseError(
                    f"expected 'n (class) = value' in [{section}], got {stripped!r}",
                    lineno,
                )
            entry = (int(m.group(1)), parse_class(m.group(2), lineno))
            target = n_table if section == "n_table" else p_seed
            target[entry] = parse_rational(value, lineno)
    if "omega_cubed" not in scalars:
        raise ModelParseError("model is missing omega_cubed")
    try:
        return NumericalThreefold(
            basis=tuple(basis),
            omega_cubed=scalars["omega_cubed"],
            c2_omega=scalars.get("c2_omega", Fraction(0)),
            m_table=m_table,
            n_table=n_table,
            p_seed=p_seed,
            name=name,
        )
    except ValueError as exc:
        raise ModelParseError(f"invalid model: {exc}") from None


def load_model(path: str) -> NumericalThreefold:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read(), name=path)


def serialize_model(model: NumericalThreefold) -> str:
    """Canonical text form; parsing it back reproduces the model exactly."""
    lines = [
        f"omega_cubed = {format_rational(model.omega_cubed)}",
        f"c2_omega = {format_rational(model.c2_omega)}",
        "",
        "[basis]",
    ]
    for nm, d in model.basis:
        lines.append(f"{nm} = {format_rational(d)}")
    lines += ["", "[m_table]"]
    for gamma in sorted(model.m_table, key=lambda g: g.coeffs):
        lines.append(f"{format_class(gamma)} = {format_rational(model.m_table[gamma])}")
    for section, table in (("n_table", model.n_table), ("p_seed", model.p_seed)):
        lines += ["", f"[{section}]"]
        for n, gamma in sorted(table, key=lambda e: (e[1].coeffs, e[0])):
            lines.append(
                f"{n} {format_class(gamma)} = {format_rational(table[(n, gamma)])}"
            )
    return "\n".join(lines) + "\n"


def save_model(model: NumericalThreefold, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_model(model))
