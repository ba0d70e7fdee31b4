import pytest

from bridgedisks.curve import interval_curve, peripheral_curve, peripheral_word, reference_curve
from bridgedisks.layout import build_layout
from bridgedisks.tangle import (
    DiskVertex,
    InessentialCurve,
    NoCompression,
    Side,
    compression_side,
    make_vertex,
    meridian_image,
)
from bridgedisks.vertices import enumerate_curves
from bridgedisks.words import word
from bridgedisks.curve import is_essential


def ref(n, i, s):
    return reference_curve(build_layout(n), i, s)


def test_meridian_images():
    layout = build_layout(2)
    w = peripheral_word(ref(2, 1, "+"))
    assert meridian_image(w, layout, Side.ABOVE).is_cyclically_trivial()
    low = meridian_image(w, layout, Side.BELOW)
    assert not low.is_cyclically_trivial()
    assert low.equivalent(word("l", ~2, 1))
    assert meridian_image(peripheral_word(ref(2, 2, "-")), layout, Side.BELOW).is_cyclically_trivial()


def test_meridian_image_needs_puncture_word():
    with pytest.raises(ValueError):
        meridian_image(word("m", 1), build_layout(2), Side.ABOVE)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reference_sides(n):
    for i in range(1, n + 1):
        assert compression_side(ref(n, i, "+")) is Side.ABOVE
        assert compression_side(ref(n, i, "-")) is Side.BELOW


def test_no_compression_and_inessential():
    c = interval_curve(2, 1, 3)  # ∂N(s_1 ∪ s_2): v1, v2, v3
    assert compression_side(c) is None
    with pytest.raises(NoCompression):
        make_vertex(c)
    with pytest.raises(InessentialCurve):
        compression_side(peripheral_curve(2, 0))


def test_make_vertex():
    v = make_vertex(ref(2, 1, "+"))
    assert v == DiskVertex(ref(2, 1, "+"), Side.ABOVE)
    assert v.to_json()["side"] == "above"
    assert make_vertex(ref(2, 2, "-")).side is Side.BELOW


def test_never_both_sides_on_enumerated_curves():
    # compression_side asserts exclusivity; run it over everything essential
    sides = [compression_side(c) for c in enumerate_curves(build_layout(2), 8) if is_essential(c)]
    assert Side.ABOVE in sides and Side.BELOW in sides and None in sides
