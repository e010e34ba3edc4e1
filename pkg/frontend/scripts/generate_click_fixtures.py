"""Regenerate test/fixtures/click_rule_cases.json from the Python engine.

The cases pin the client-side click mirror to the server's semantics:
every (state, click) pair on one rod, plus a batch of random click
sequences with their final configurations.

Run from frontend/: python3 scripts/generate_click_fixtures.py
"""

import json
import random
from pathlib import Path

from suanpan.core import AbacusConfig
from suanpan.gestures import ClickLower, ClickUpper, Register, Trace, replay

cases = {"single_clicks": [], "sequences": []}

for part, limit in (("lower", 5), ("upper", 2)):
    for start in range(limit + 1):
        for index in range(1, limit + 1):
            config = AbacusConfig.of((start, 0) if part == "lower" else (0, start))
            gesture = ClickLower(0, index) if part == "lower" else ClickUpper(0, index)
            final = replay(Trace(Register.VIRTUAL_ABACUS, (gesture,)), config).final
            cases["single_clicks"].append(
                {
                    "part": part,
                    "start": start,
                    "index": index,
                    "result": final.rods[0].lower if part == "lower" else final.rods[0].upper,
                }
            )

rng = random.Random(73)
for _ in range(60):
    rods = rng.choice([1, 2, 3])
    clicks = []
    gestures = []
    for _ in range(rng.randrange(1, 12)):
        rod = rng.randrange(rods)
        if rng.random() < 0.7:
            index = rng.randint(1, 5)
            clicks.append({"rod": rod, "part": "lower", "index": index})
            gestures.append(ClickLower(rod, index))
        else:
            index = rng.randint(1, 2)
            clicks.append({"rod": rod, "part": "upper", "index": index})
            gestures.append(ClickUpper(rod, index))
    final = replay(Trace(Register.VIRTUAL_ABACUS, tuple(gestures)), AbacusConfig.zeros(rods)).final
    cases["sequences"].append({"rods": rods, "clicks": clicks, "final": final.to_json()})

out = Path(__file__).resolve().parent.parent / "test" / "fixtures" / "click_rule_cases.json"
out.parent.mkdir(parents=True, exist_ok=True)
out.write_text(json.dumps(cases, indent=1) + "\n", encoding="utf-8")
print(f"wrote {out}: {len(cases['single_clicks'])} single clicks, {len(cases['sequences'])} sequences")
