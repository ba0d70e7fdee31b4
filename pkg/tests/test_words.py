from hypothesis import given, strategies as st

from bridgedisks.words import FreeWord, cyclic_reduce, free_reduce, word

letters = st.lists(st.tuples(st.integers(0, 3), st.sampled_from((1, -1))), max_size=12)


def test_reduction():
    assert word("x", 0, ~0, 1).letters == ((1, 1),)
    assert cyclic_reduce(word("x", 2, 0, 1, ~2).letters) == ((0, 1), (1, 1))
    assert str(word("x", 0, ~1)) == "x0 x1^-1"
    assert str(FreeWord("x")) == "1"


def test_normal_form_picks_one_representative():
    w = word("x", 1, 2, 0)
    assert w.normal_form() == word("x", 0, 1, 2)
    assert w.inverse().normal_form() == w.normal_form()


def test_abelianization():
    assert word("x", 0, 1, ~0, 3).abelianization(4) == (0, 1, 0, 1)


@given(letters)
def test_free_reduce_idempotent(ls):
    once = free_reduce(ls)
    assert free_reduce(once) == once
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(once, once[1:]))


@given(letters, st.integers(0, 11))
def test_normal_form_invariant_under_rotation_and_inversion(ls, k):
    w = FreeWord("x", tuple(ls)).cyclically_reduced()
    if len(w):
        k %= len(w)
    rotated = FreeWord("x", w.letters[k:] + w.letters[:k])
    assert rotated.equivalent(w)
    assert w.inverse().equivalent(w)


@given(letters, letters)
def test_normal_form_invariant_under_conjugation(ls, conj):
    w = FreeWord("x", tuple(ls))
    c = FreeWord("x", tuple(conj))
    assert (c * w * c.inverse()).normal_form() == w.normal_form()


@given(letters)
def test_trivial_iff_empty_normal_form(ls):
    w = FreeWord("x", tuple(ls))
    assert w.is_cyclically_trivial() == (len(w.normal_form()) == 0)
    assert (w * w.inverse()).is_cyclically_trivial()
