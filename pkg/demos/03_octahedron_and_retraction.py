"""
The octahedral sphere and the retraction
========================================

The reference disks span an (n-1)-sphere inside the disk complex.  Build a
finite piece of the complex, check that no edge joins C_i^+ to C_i^-, and
compute homology of both the sphere and the piece.
"""

from bridgedisks import build_complex, build_layout, classify, homology_ranks, octahedron
from bridgedisks.classifier import antipodal
from bridgedisks.complex import enumerate_vertices, merge_vertices, twist_orbit

for n in (2, 3, 4):
    sphere = octahedron(build_layout(n))
    h = homology_ranks(sphere)
    print(f"n={n}: f-vector {sphere.f_vector()}, reduced Betti {h.reduced_betti}")

layout = build_layout(2)
vertices = merge_vertices(enumerate_vertices(layout, 8), twist_orbit(layout, 2))
cx = build_complex(vertices, dim_cap=2)
labels = [classify(v) for v in cx.vertices]
bad = [(k, l) for k, l in cx.edges if antipodal(labels[k], labels[l])]
print(f"truncated complex: f-vector {cx.f_vector()}, antipodal edges: {len(bad)}")

# the truncation itself need not be a sphere; its homology is just reported
print("reduced Betti of the truncation:", homology_ranks(cx).reduced_betti)
