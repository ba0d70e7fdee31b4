import pytest
from hypothesis import given, settings, strategies as st

from bridgedisks.curve import (
    CrossingChords,
    EmptyCurve,
    MalformedCurve,
    MultiComponent,
    UnmatchedPoint,
    apply_half_twist,
    apply_twists,
    finger_move,
    from_matchings,
    is_essential,
    peripheral_curve,
    peripheral_word,
    puncture_partition,
    raw_peripheral_word,
    reference_curve,
    tighten,
    trace,
    validate,
)
from bridgedisks.layout import build_layout
from bridgedisks.oracle import abelianization_consistent, random_curve
from bridgedisks.words import word

D1_PLUS = {"n": 2, "weights": [0, 1, 0, 0, 0, 1], "inner": [[[1, 0], [5, 0]]], "outer": [[[1, 0], [5, 0]]]}


def ref(n, i, s):
    return reference_curve(build_layout(n), i, s)


def test_validate_reference_encoding():
    c = validate(D1_PLUS)
    assert c == ref(2, 1, "+")
    assert c.to_json() == D1_PLUS
    assert validate(c.to_json()) == c


@pytest.mark.parametrize(
    "raw, error",
    [
        ({"n": 2, "weights": [0, 1, 0, 0, 0, 0], "inner": [], "outer": []}, UnmatchedPoint),
        ({"n": 2, "weights": [0] * 6, "inner": [], "outer": []}, EmptyCurve),
        ({"n": 2, "weights": [0, 1, 0, 0, 0], "inner": [], "outer": []}, MalformedCurve),
        ({"n": 2, "weights": [0, 1, 0, 0, 0, 1]}, MalformedCurve),
        (
            {"n": 2, "weights": [1, 1, 1, 1, 0, 0],
             "inner": [[[0, 0], [2, 0]], [[1, 0], [3, 0]]],
             "outer": [[[0, 0], [1, 0]], [[2, 0], [3, 0]]]},
            CrossingChords,
        ),
        (
            {"n": 2, "weights": [1, 1, 1, 1, 0, 0],
             "inner": [[[0, 0], [1, 0]], [[2, 0], [3, 0]]],
             "outer": [[[0, 0], [1, 0]], [[2, 0], [3, 0]]]},
            MultiComponent,
        ),
        (
            {"n": 2, "weights": [0, 1, 0, 0, 0, 1], "inner": [[[1, 0], [5, 1]]], "outer": [[[1, 0], [5, 0]]]},
            UnmatchedPoint,
        ),
    ],
)
def test_validate_errors(raw, error):
    with pytest.raises(error) as info:
        validate(raw)
    assert info.value.to_json()["error"] == error.code


def test_unpunctured_disk_is_empty():
    # the two points on s_0 joined by the same chord in both faces
    c = {"n": 1, "weights": [2, 0, 0, 0], "inner": [[[0, 0], [0, 1]]], "outer": [[[0, 0], [0, 1]]]}
    with pytest.raises(EmptyCurve):
        validate(c)
    assert validate(c, taut=False).weights == (2, 0, 0, 0)


def test_finger_move_then_tighten():
    c = ref(2, 1, "+")
    pushed = finger_move(c, 0)
    assert not pushed.is_taut()
    assert pushed.total_weight == c.total_weight + 2
    assert tighten(pushed) == c
    assert tighten(tighten(pushed)) == tighten(pushed)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_references_are_taut(n):
    for i in range(1, n + 1):
        for s in "+-":
            c = ref(n, i, s)
            assert tighten(c) == c and c.is_taut()
            assert len(trace(c)) == c.size
            assert is_essential(c)


def test_puncture_partitions():
    assert puncture_partition(ref(2, 1, "+")) == ((0, 1), (2, 3, 4, 5))
    assert set(map(frozenset, puncture_partition(ref(2, 2, "-")))) == {frozenset({5, 0, 1, 2}), frozenset({3, 4})}
    # v_0 side first; the example pair ({v1,v2},{v3,v0}) matches as an unordered pair
    assert set(map(frozenset, puncture_partition(ref(1, 1, "-")))) == {frozenset({1, 2}), frozenset({3, 0})}


def test_essentiality():
    assert not is_essential(peripheral_curve(2, 3))
    for n in (1, 2, 3):
        assert is_essential(ref(n, 1, "+")) and is_essential(ref(n, n, "-"))


def test_peripheral_words():
    assert peripheral_word(ref(2, 1, "+")).equivalent(word("x", 0, 1))
    assert raw_peripheral_word(ref(2, 2, "-")).equivalent(word("x", 5, 0, 1, 2))
    # with x5 eliminated, x5 x0 x1 x2 is conjugate to (x3 x4)^-1
    assert peripheral_word(ref(2, 2, "-")).equivalent(word("x", 3, 4))
    assert peripheral_word(peripheral_curve(2, 3)).equivalent(word("x", 3))


def test_half_twist_examples():
    c = ref(2, 1, "+")
    assert apply_half_twist(c, 0, 1) == c
    d = ref(2, 2, "-")
    # s_3 joins v3, v4, both outside the curve; s_2 straddles it
    assert apply_half_twist(d, 3, 1) == d
    assert apply_half_twist(d, 2, 1) != d
    assert apply_half_twist(apply_half_twist(d, 2, 1), 2, -1) == d
    with pytest.raises(ValueError):
        apply_half_twist(c, 0, 2)


twist_words = st.lists(st.tuples(st.integers(0, 5), st.sampled_from((1, -1))), max_size=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), twist_words)
def test_twist_inverse_is_identity(seed, w):
    import random

    c = random_curve(random.Random(seed), 2)
    inv = [(j, -d) for j, d in reversed(w)]
    assert apply_twists(apply_twists(c, w), inv) == c


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 40))
def test_tighten_preserves_class_data(seed, t):
    import random

    c = random_curve(random.Random(seed), 2)
    pushed = finger_move(c, t % c.size)
    assert tighten(pushed) == c
    assert puncture_partition(pushed) == puncture_partition(c)
    assert peripheral_word(pushed).equivalent(peripheral_word(c))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_abelianized_word_is_one_side(seed):
    import random

    assert abelianization_consistent(random_curve(random.Random(seed), 3))


@given(st.integers(1, 6), st.data())
def test_reference_curves_all_n(n, data):
    i = data.draw(st.integers(1, n))
    c = ref(n, i, data.draw(st.sampled_from("+-")))
    assert validate(c.to_json()) == c
    assert is_essential(c)


def test_from_matchings_round_trip():
    c = ref(3, 2, "+")
    assert from_matchings(3, c.weights, c.inner, c.outer) == c
