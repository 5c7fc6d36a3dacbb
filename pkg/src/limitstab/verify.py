"""End-to-end verification of the three presets against the bundled tables.

Every check recomputes a published chamber table, crossing report, or
dual-count relation from the seeds alone and diffs it against the frozen
expected values.  Exact comparison, no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .crossing import TableCache, chamber_table, enumerate_wall_data, pt_symmetry_check
from .geometry import CurveClass
from .presets import conifold_double, conifold_pair, conifold_single


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check_table(results, model, beta, n, lo, hi, expected_values, expected_walls):
    table = chamber_table(model, beta, n, lo, hi)
    got_values = tuple(v for _, _, v in table.merged())
    got_walls = table.effective_walls()
    ok = got_values == expected_values and got_walls == expected_walls
    results.append(
        CheckResult(
            f"{model.name}: table beta={beta} n={n}",
            ok,
            f"values {tuple(map(str, got_values))} walls {tuple(map(str, got_walls))}",
        )
    )
    return table


def run_verification() -> List[CheckResult]:
    results: List[CheckResult] = []
    F = Fraction

    single = conifold_single(1)
    c = CurveClass((1,))
    for n in range(1, 5):
        _check_table(
            results,
            single,
            c,
            n,
            F(-n, 2) - 1,
            0 if n > 1 else F(1, 4),
            (F((-1) ** (n - 1) * n), F(0)),
            (F(-n, 2),),
        )
    report = pt_symmetry_check(single, c, 4)
    ok = all(r.p_minus_derived == 0 and r.relation_defect == 0 for r in report.rows)
    results.append(
        CheckResult(f"{single.name}: dual counts vanish with zero defect", ok)
    )

    pair = conifold_pair(3, 2)
    beta = CurveClass((1, 1))
    _check_table(results, pair, beta, 1, F(-1, 2), F(0), (F(1), F(0)), (F(-1, 10),))
    t2 = _check_table(
        results,
        pair,
        beta,
        2,
        F(-1, 2),
        F(0),
        (F(-1), F(-2), F(0)),
        (F(-1, 4), F(-1, 5)),
    )
    quarter = [r for r in t2.reports if r.k0 == F(-1, 4)]
    ok = (
        len(quarter) == 1
        and len(quarter[0].terms) == 1
        and quarter[0].terms[0].datum.beta1 == CurveClass((0, 1))
        and quarter[0].terms[0].datum.n1 == 1
        and quarter[0].terms[0].datum.beta2 == CurveClass((1, 0))
        and quarter[0].terms[0].datum.n2 == 1
        and quarter[0].terms[0].contribution == 1
    )
    results.append(CheckResult(f"{pair.name}: crossing datum at -1/4", ok))

    double = conifold_double(1)
    cc = CurveClass((2,))
    _check_table(results, double, cc, 3, F(-2), F(0), (F(-2), F(0)), (F(-1),))
    ok = enumerate_wall_data(double, cc, 3, F(-3, 2)) == []
    results.append(
        CheckResult(f"{double.name}: no admissible data at -3/2 for n=3", ok)
    )
    t4 = _check_table(
        results, double, cc, 4, F(-2), F(0), (F(4), F(1), F(0)), (F(-3, 2), F(-1))
    )
    at_minus_1 = [r for r in t4.reports if r.k0 == F(-1)][0]
    by_datum = {
        (t.datum.beta1, t.datum.n1): t.contribution for t in at_minus_1.terms
    }
    ok = by_datum.get((cc, 4)) == 1 and by_datum.get((CurveClass((1,)), 2)) == 0
    results.append(
        CheckResult(f"{double.name}: contributions at the -1 crossing", ok)
    )

    for model, beta_, pairs in (
        (single, c, [(n, F(-n, 2) - 1, F(1, 4) if n == 1 else F(0)) for n in range(1, 5)]),
        (pair, beta, [(1, F(-1, 2), F(0)), (2, F(-1, 2), F(0))]),
        (double, cc, [(3, F(-2), F(0)), (4, F(-2), F(0))]),
    ):
        cache = TableCache()
        ok = True
        for n, lo, hi in pairs:
            plus = chamber_table(model, beta_, n, lo, hi, cache)
            minus = chamber_table(model, beta_, -n, -hi, -lo, cache)
            for chamber, value in plus.entries:
                span = chamber.hi - chamber.lo
                for t in (F(1, 4), F(1, 2), F(3, 4)):
                    point = chamber.lo + span * t
                    if minus.value_at(-point) != value:
                        ok = False
        results.append(CheckResult(f"{model.name}: tables mirror under (n,k) -> (-n,-k)", ok))
    return results
