#!/usr/bin/env python3
"""Standalone fuzz harness for the two phase-comparison routes.

Draws random (model, F, E, k) cases, checks that the polynomial comparator
and the closed-form comparator agree, that the order is antisymmetric, that
the sign of W(10^6) matches, and that nothing beats the destabilizing
threshold from below.  Exits nonzero on the first violation.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from limitstab import poly
from limitstab.charge import untwisted_slope
from limitstab.comparator import PhaseOrder, compare_phases, compare_phases_closed, cross_polynomial

from _fuzz import comparator_case


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    tally = {order: 0 for order in PhaseOrder}
    for i in range(args.cases):
        model, f, e, k = comparator_case(rng)
        order = compare_phases(model, f, e, k)
        tally[order] += 1
        closed = compare_phases_closed(model, f, e, k)
        if order is not closed:
            print(f"case {i}: disagreement {order} vs {closed} for F={f} E={e} k={k}")
            return 1
        if compare_phases(model, e, f, k) is not order.reversed():
            print(f"case {i}: antisymmetry broken for F={f} E={e} k={k}")
            return 1
        if order is not PhaseOrder.EQUAL:
            w = poly.evaluate(cross_polynomial(model, f, e, k), 10**6)
            if (w > 0) != (order is PhaseOrder.PRECEDES):
                print(f"case {i}: W(10^6) sign mismatch for F={f} E={e} k={k}")
                return 1
        if (
            order in (PhaseOrder.SUCCEEDS, PhaseOrder.EQUAL)
            and f.r == 0
            and any(g != 0 for g in f.gamma)
            and k < -untwisted_slope(model, f) / 2
        ):
            print(f"case {i}: threshold violated for F={f} E={e} k={k}")
            return 1
    print(
        f"{args.cases} cases, zero violations "
        f"(precedes={tally[PhaseOrder.PRECEDES]}, equal={tally[PhaseOrder.EQUAL]}, "
        f"succeeds={tally[PhaseOrder.SUCCEEDS]})"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
