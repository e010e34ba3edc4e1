"""
Numbers on two hands
====================

Two hands give several splits of the same number, and which fingers rise
is cultural: France counts from the thumb, the chambaa build from pairs,
the makonde fold from the little finger.
"""

from suanpan import (
    CHAMBAA,
    FRENCH_STANDARD,
    MAKONDE,
    cultural_decomposition,
    enumerate_hand_decompositions,
    render_terms,
)

for n in (3, 8):
    pairs = sorted(enumerate_hand_decompositions(n))
    print(f"ways to show {n}: ", ", ".join(f"{a}+{b}" for a, b in pairs))

print()
for system in (FRENCH_STANDARD, CHAMBAA, MAKONDE):
    print(f"{system.name}: {system.description}")
    for n in sorted(system.supported_values):
        terms = cultural_decomposition(n, system)
        print(f"  {n} = {render_terms(terms) if terms else '(no fingers)'}")
    print()
