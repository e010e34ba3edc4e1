"""
The many ways to write 25 on a suan-pan
=======================================

Every rod carries five one-unit counters and two five-unit counters, so a
number usually has several inscriptions; the "economical" one moves the
fewest beads.
"""

from suanpan import (
    bead_count,
    enumerate_inscriptions,
    normalize,
    read_value,
    set_economical,
)

# The canonical inscription of 25: two tens counters, one five-unit counter
economical = set_economical(25, rod_count=2)
print("economical inscription of 25:", economical.to_json())
print("value:", read_value(economical), "- beads moved:", bead_count(economical))

# But 25 can be written three different ways on two rods
print("\nall inscriptions of 25:")
for config in enumerate_inscriptions(25, rod_count=2):
    print(f"  {config.to_json()}  beads={bead_count(config)}")

# The software's "positioning" icon rewrites any of them into the economical one
messy = enumerate_inscriptions(25, rod_count=2)[-1]
print("\npositioning on", messy.to_json())
print("        gives", normalize(messy).to_json())

# Some values simply do not fit: 166 needs sixteen tens
print("\ninscriptions of 166 on two rods:", enumerate_inscriptions(166, rod_count=2))
