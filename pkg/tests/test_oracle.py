import pytest
from hypothesis import given, strategies as st

from bridgedisks.curve import reference_curve
from bridgedisks.intersection import geometric_intersection
from bridgedisks.layout import build_layout
from bridgedisks.oracle import (
    ArcInterval,
    arc_pair_intersection,
    arc_pair_trials,
    equivariance_suite,
    reference_matrix_agreement,
)


def test_closed_form_examples():
    assert arc_pair_intersection(ArcInterval(2, 0, 2), ArcInterval(2, 1, 2)) == 2
    assert arc_pair_intersection(ArcInterval(2, 0, 2), ArcInterval(2, 5, 4)) == 0
    # {v0..v3} and {v3,v4,v5,v0} together cover the circle: the curves are disjoint
    a, b = ArcInterval(2, 0, 4), ArcInterval(2, 3, 4)
    assert arc_pair_intersection(a, b) == 0
    assert geometric_intersection(a.curve(), b.curve()) == 0


def test_improper_interval():
    with pytest.raises(ValueError):
        ArcInterval(2, 0, 1)
    with pytest.raises(ValueError):
        ArcInterval(2, 0, 5)


intervals = st.builds(lambda s, l: ArcInterval(3, s, l), st.integers(0, 7), st.integers(2, 6))


@given(intervals, intervals)
def test_symmetric_and_complement_invariant(a, b):
    v = arc_pair_intersection(a, b)
    assert v == arc_pair_intersection(b, a)
    assert v == arc_pair_intersection(a.complement(), b)
    assert v == arc_pair_intersection(a, b.complement())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reference_matrix(n):
    assert reference_matrix_agreement(n) == []


def test_random_arc_pairs():
    assert arc_pair_trials(3, 300, seed=1) == []


def test_equivariance_small():
    res = equivariance_suite(2, 60, seed=3)
    assert res["counterexamples"] == []
    assert res == equivariance_suite(2, 60, seed=3)


def test_empty_twist_word_trivial():
    res = equivariance_suite(2, 20, seed=0, max_twists=0)
    assert res["counterexamples"] == []


def test_twisted_references_keep_matrix():
    from bridgedisks.curve import apply_twists

    layout = build_layout(3)
    word = [(1, 1), (4, -1), (2, 1)]
    refs = [reference_curve(layout, i, s) for i in range(1, 4) for s in "+-"]
    moved = [apply_twists(c, word) for c in refs]
    for a, b in zip(refs, moved):
        for c, d in zip(refs, moved):
            assert geometric_intersection(a, c) == geometric_intersection(b, d)


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        equivariance_suite(2, 0)
