import random

import pytest

from bridgedisks.classifier import (
    ClassLabel,
    EdgeVerdict,
    antipodal,
    check_edge,
    claim_instances,
    classify,
    reference_vertex,
    retraction_image,
)
from bridgedisks.curve import finger_move, reference_curve
from bridgedisks.intersection import geometric_intersection
from bridgedisks.layout import build_layout
from bridgedisks.tangle import DiskVertex, Side, compression_side
from bridgedisks.vertices import enumerate_vertices, twist_orbit


def refv(n, i, s):
    return reference_vertex(n, ClassLabel(i, s))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_references_classify_to_themselves(n):
    for i in range(1, n + 1):
        for s in "+-":
            v = DiskVertex(reference_curve(build_layout(n), i, s), Side.of_sign(s))
            assert classify(v) == ClassLabel(i, s)
            assert retraction_image(v).key == v.key


def test_intersecting_class():
    assert geometric_intersection(refv(2, 2, "+").curve, refv(2, 2, "-").curve) == 2
    assert classify(refv(2, 2, "+")) == ClassLabel(2, "+")


def test_n1_below_vertices():
    for v in enumerate_vertices(build_layout(1), 12):
        if v.side is Side.BELOW:
            assert classify(v) == ClassLabel(1, "-")


def test_singleton_flags():
    assert ClassLabel(1, "+").singleton and ClassLabel(2, "-").singleton
    assert not ClassLabel(2, "+").singleton and not ClassLabel(1, "-").singleton


def test_antipodal_and_edges():
    assert antipodal(ClassLabel(2, "+"), ClassLabel(2, "-"))
    assert not antipodal(ClassLabel(1, "+"), ClassLabel(2, "-"))
    assert check_edge(refv(2, 1, "+"), refv(2, 2, "-")) is EdgeVerdict.SIMPLICIAL
    with pytest.raises(ValueError):
        check_edge(refv(2, 1, "+"), refv(2, 1, "-"))
    with pytest.raises(ValueError):
        check_edge(refv(2, 1, "+"), refv(2, 1, "+"))


def test_retraction_on_orbit():
    layout = build_layout(2)
    d1 = refv(2, 1, "+").curve
    for v in twist_orbit(layout, 3):
        r = retraction_image(v)
        assert retraction_image(r).key == r.key
        if v.side is Side.BELOW and geometric_intersection(v.curve, d1) == 0:
            assert r.key == refv(2, 2, "-").key


def test_label_independent_of_representative():
    rng = random.Random(7)
    for v in twist_orbit(build_layout(2), 2):
        moved = finger_move(v.curve, rng.randrange(v.curve.size))
        assert classify(DiskVertex(moved, compression_side(moved))) == classify(v)


def test_claim_instances():
    inst = claim_instances(refv(2, 1, "+"))
    assert [(c.index, c.expected, c.holds) for c in inst] == [(2, (1, "+"), True)]
    # D_3^+ at n=3 passes D_2^- and lands in the terminal case
    inst = claim_instances(refv(3, 3, "+"))
    assert [(c.index, c.expected, c.holds) for c in inst] == [(3, (3, "+"), True)]
    # an intersecting disk triggers no claim
    assert claim_instances(refv(2, 2, "+")) == []
