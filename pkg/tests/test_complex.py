import itertools

import pytest

from bridgedisks.classifier import ClassLabel, antipodal, classify
from bridgedisks.complex import (
    DimensionCapExceeded,
    build_complex,
    disjointness_edges,
    enumerate_vertices,
    homology_ranks,
    octahedron,
    twist_orbit,
)
from bridgedisks.curve import reference_curves
from bridgedisks.intersection import are_disjoint, geometric_intersection
from bridgedisks.layout import build_layout
from bridgedisks.tangle import compression_side
from bridgedisks.vertices import ResourceCapExceeded, merge_vertices


def test_n1_enumeration():
    vs = enumerate_vertices(build_layout(1), 12)
    assert len(vs) == 2
    assert {v.key for v in vs} == {c.key for c in reference_curves(build_layout(1)).values()}


def test_n2_weight2_contains_references():
    layout = build_layout(2)
    keys = {v.key for v in enumerate_vertices(layout, 2)}
    assert {c.key for c in reference_curves(layout).values()} <= keys
    for v in enumerate_vertices(layout, 6):
        assert compression_side(v.curve) is v.side


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_vertices(build_layout(2), 1)
    with pytest.raises(ResourceCapExceeded):
        enumerate_vertices(build_layout(2), 10, cap=100)


def test_enumeration_sorted_and_deterministic():
    a = enumerate_vertices(build_layout(2), 8)
    assert [v.key for v in a] == sorted(v.key for v in a)
    assert a == enumerate_vertices(build_layout(2), 8)


def test_twist_orbit():
    layout = build_layout(2)
    assert {v.key for v in twist_orbit(layout, 0)} == {c.key for c in reference_curves(layout).values()}
    sizes = [len(twist_orbit(layout, d)) for d in range(4)]
    assert sizes == sorted(sizes) and sizes[-1] > sizes[0]
    for v in twist_orbit(layout, 3):
        assert compression_side(v.curve) is v.side
        classify(v)
    with pytest.raises(ValueError):
        twist_orbit(layout, -1)


@pytest.mark.parametrize("n, f", [(2, [4, 4]), (3, [6, 12, 8]), (4, [8, 24, 32, 16])])
def test_octahedron(n, f):
    cx = octahedron(build_layout(n))
    assert cx.f_vector() == f
    labels = [classify(v) for v in cx.vertices]
    non_antipodal = {(k, l) for k, l in itertools.combinations(range(2 * n), 2)
                     if not antipodal(labels[k], labels[l])}
    assert set(cx.edges) == non_antipodal
    h = homology_ranks(cx)
    assert h.reduced_betti == tuple([0] * (n - 1) + [1])
    assert h.reduced_betti_mod2 == h.reduced_betti
    assert cx.boundary_squares_vanish()


def test_antipodal_references_meet():
    for n in (2, 3):
        cx = octahedron(build_layout(n))
        for a in cx.vertices:
            for b in cx.vertices:
                if antipodal(classify(a), classify(b)):
                    assert geometric_intersection(a.curve, b.curve) == 2


def test_n1_complex_disconnected():
    cx = build_complex(enumerate_vertices(build_layout(1), 12), 1)
    assert cx.edges == [] and cx.components() == 2
    assert homology_ranks(cx).reduced_betti == (1,)


def test_flag_and_edge_properties():
    layout = build_layout(2)
    vs = merge_vertices(enumerate_vertices(layout, 6), twist_orbit(layout, 2))
    cx = build_complex(vs, 3)
    edges = set(cx.edges)
    for k, l in itertools.combinations(range(len(cx.vertices)), 2):
        d = are_disjoint(cx.vertices[k].curve, cx.vertices[l].curve)
        assert ((k, l) in edges) == d
        assert d == are_disjoint(cx.vertices[l].curve, cx.vertices[k].curve)
    # every clique is a simplex and every face of a simplex is present
    for dim, simplices in enumerate(cx.simplices):
        present = set(simplices)
        for s in simplices:
            assert all(pair in edges for pair in itertools.combinations(s, 2))
            if dim:
                lower = set(cx.simplices[dim - 1])
                assert all(f in lower for f in itertools.combinations(s, dim))
    triangles = {t for t in itertools.combinations(range(len(cx.vertices)), 3)
                 if all(p in edges for p in itertools.combinations(t, 2))}
    assert triangles == set(cx.simplices[2]) if len(cx.simplices) > 2 else not triangles
    assert cx.boundary_squares_vanish()
    h = homology_ranks(cx)
    assert h.consistent()


def test_dimension_cap():
    cx = octahedron(build_layout(3))
    small = build_complex(cx.vertices, 1)
    assert small.truncated
    with pytest.raises(DimensionCapExceeded):
        homology_ranks(small, 1)
    assert homology_ranks(small, 0).reduced_betti == (0,)


def test_jobs_do_not_change_edges():
    layout = build_layout(2)
    vs = sorted(twist_orbit(layout, 2), key=lambda v: v.key)
    assert disjointness_edges(vs, jobs=2) == disjointness_edges(vs, jobs=1)


def test_duplicates_rejected():
    cx = octahedron(build_layout(2))
    with pytest.raises(ValueError):
        build_complex(cx.vertices + cx.vertices[:1], 2)


def test_slice_json():
    cx = octahedron(build_layout(2))
    data = cx.to_json(homology_ranks(cx).reduced_betti)
    assert data["edges"] == [list(e) for e in cx.edges]
    assert data["betti"] == [0, 1]
    assert data["vertices"][0]["side"] in ("above", "below")
