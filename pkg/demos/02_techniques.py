"""
Watching how a number is set
============================

The same final inscription of 8 can be reached many ways, and the gesture
trace tells them apart: each route gets its own technique label, reasoning
tags and decomposition formula.
"""

from suanpan import (
    ClickLower,
    ClickUpper,
    CompoundMove,
    ExchangeFive,
    IconSeeNumber,
    MoveLower,
    MoveUpper,
    Register,
    Trace,
    classify,
)

M = Register.MATERIAL_ABACUS
V = Register.VIRTUAL_ABACUS
one = MoveLower(0, +1)

routes_to_eight = {
    "five then a block of three": Trace(M, (MoveUpper(0, +1), MoveLower(0, +3))),
    "five then one-by-one": Trace(M, (MoveUpper(0, +1), one, one, one)),
    "count five, trade, count on": Trace(M, (one,) * 5 + (ExchangeFive(0), one, one, one)),
    "count five, trade, block": Trace(M, (one,) * 5 + (ExchangeFive(0), MoveLower(0, +3))),
    "both parts in one motion": Trace(M, (CompoundMove(0, lower_delta=+3, upper_delta=+1),)),
    "peek at the number and fix": Trace(
        V, (IconSeeNumber(on=True), ClickLower(0, 5), ClickUpper(0, 1), ClickLower(0, 4))
    ),
}

for label, trace in routes_to_eight.items():
    report = classify(trace, target=8)
    tags = ", ".join(sorted(t.value for t in report.tags))
    print(f"{label:30s} {report.technique_id or '-':8s} [{tags}]")
    print(f"{'':30s} {report.formula}")

# A two-rod attempt gets per-rod sub-reports
print("\nsetting 25 by counting tens, then the five-unit counter:")
trace25 = Trace(V, (ClickLower(1, 1), ClickLower(1, 2), ClickUpper(0, 1)))
report = classify(trace25, target=25)
print("  formula:", report.formula)
for sub in report.sub_reports:
    print(f"  rod {sub.rod}: {sub.formula} [{', '.join(sorted(t.value for t in sub.tags))}]")
