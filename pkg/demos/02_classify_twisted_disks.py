"""
Sorting compressing disks into classes
======================================

Start from the reference disks, push them around with half twists that
extend over the tangle, and watch every resulting disk land in exactly one
class C_i^±.
"""

from collections import Counter

from bridgedisks import build_layout, classify, peripheral_word, twist_orbit

layout = build_layout(2)
orbit = twist_orbit(layout, 3)
print(f"{len(orbit)} vertices after three rounds of side-preserving moves")

# the heaviest curve in the orbit, with its word in pi_1 of the punctured sphere
heavy = max(orbit, key=lambda v: v.curve.total_weight)
print("heaviest:", list(heavy.curve.weights), heavy.side.value)
print("  word:", peripheral_word(heavy.curve))
print("  class:", classify(heavy))

counts = Counter(classify(v) for v in orbit)
for label, k in sorted(counts.items()):
    print(f"C_{label.i}^{label.side}: {k}")
# singletons stay singletons: C_1^+ and C_2^- hold only the reference disks
