"""
The bridge picture and its reference disks
==========================================

Lay out the 3-bridge unknot (n = 2), list the shadow segments, and draw the
four reference curves as weight vectors.  Antipodal pairs meet twice, every
other pair is disjoint.
"""

from bridgedisks import build_layout, geometric_intersection, reference_curve, reference_region

layout = build_layout(2)
print("segments:", layout.labels)

# reference curves: boundaries of neighbourhoods of growing shadow arcs
refs = {(i, s): reference_curve(layout, i, s) for i in (1, 2) for s in "+-"}
for (i, s), c in refs.items():
    region = reference_region(layout, i, s)
    print(f"D_{i}^{s}: weights {list(c.weights)}, encloses punctures {region.punctures_inside}")

# the intersection matrix is the 1-skeleton of a square (the 1-sphere)
names = sorted(refs)
print("       " + "  ".join(f"{i}{s}" for i, s in names))
for a in names:
    row = [geometric_intersection(refs[a], refs[b]) for b in names]
    print(f"{a[0]}{a[1]}    " + "   ".join(str(x) for x in row))
