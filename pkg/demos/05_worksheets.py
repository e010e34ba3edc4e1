"""
Printable worksheets
====================

Inscriptions can be drawn three ways: every bead, only the activated
beads, or one stroke per run. Drawings carry a structural description that
parses back to the exact configuration, which is what makes worksheet
answers gradable.
"""

from pathlib import Path

from suanpan import (
    DrawingStyle,
    WorksheetSpec,
    parse_drawing,
    render,
    set_economical,
    worksheet_generate,
)
from suanpan.worksheet import WorksheetItem

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

config = set_economical(73, rod_count=2)
for style in DrawingStyle:
    drawing = render(config, style)
    path = out / f"73_{style.value}.svg"
    path.write_text(drawing.svg, encoding="utf-8")
    assert parse_drawing(drawing.structure) == config  # grading roundtrip
    print(f"{style.value:15s} -> {path}")

spec = WorksheetSpec(
    items=(
        WorksheetItem(kind="set", style=DrawingStyle.FULL_BEADS, target=8),
        WorksheetItem(kind="read", style=DrawingStyle.FULL_BEADS, config=set_economical(25, 2)),
        WorksheetItem(kind="set", style=DrawingStyle.SYMBOLIC, target=73),
        WorksheetItem(kind="read", style=DrawingStyle.ACTIVATED_ONLY, config=set_economical(40, 2)),
    ),
    rod_count=2,
    seed=2026,
)
document = worksheet_generate(spec)
for i, page in enumerate(document.pages, start=1):
    (out / f"worksheet_page{i}.svg").write_text(page, encoding="utf-8")
print(f"\nworksheet: {len(document.pages)} page(s) in {out}")
print("answer key:", document.key)
