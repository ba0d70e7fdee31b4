import itertools
import random

from hypothesis import given, settings, strategies as st

from bridgedisks.homology import (
    boundary_columns,
    compose_is_zero,
    invariant_factors,
    rank_mod2,
    reduced_homology,
)


def _cols(matrix):
    rows = len(matrix)
    return [{r: matrix[r][c] for r in range(rows) if matrix[r][c]} for c in range(len(matrix[0]))]


def _complex(top):
    """All faces of the given maximal simplices, by dimension."""
    faces = set()
    for s in top:
        for k in range(1, len(s) + 1):
            faces.update(itertools.combinations(sorted(s), k))
    dim = max(len(f) for f in faces) - 1
    return [sorted(f for f in faces if len(f) == k + 1) for k in range(dim + 1)]


def _homology(top, max_dim):
    cx = _complex(top)
    sizes = [len(s) for s in cx] + [0] * (max_dim + 2)
    bds = [[]] + [boundary_columns(cx[k], cx[k - 1]) if k < len(cx) else [] for k in range(1, max_dim + 2)]
    return reduced_homology(sizes, bds, max_dim)


def test_known_invariant_factors():
    assert invariant_factors(_cols([[2, 0], [0, 3]])) == [1, 6]
    assert invariant_factors(_cols([[2, 4], [6, 8]])) == [2, 4]
    assert invariant_factors(_cols([[0, 0], [0, 0]])) == []


def test_circle_and_sphere():
    circle = [(0, 1), (1, 2), (0, 2)]
    assert _homology(circle, 1).reduced_betti == (0, 1)
    tetra_boundary = list(itertools.combinations(range(4), 3))
    h = _homology(tetra_boundary, 2)
    assert h.reduced_betti == (0, 0, 1) and h.consistent()


def test_two_points_and_a_disk():
    assert _homology([(0,), (1,)], 0).reduced_betti == (1,)
    assert _homology([(0, 1, 2)], 2).reduced_betti == (0, 0, 0)


def test_projective_plane_torsion():
    # six-vertex triangulation of RP^2
    rp2 = [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 0), (2, 0, 3), (3, 4, 5),
           (0, 4, 5), (0, 1, 5), (1, 2, 5), (2, 3, 5)]
    h = _homology(rp2, 2)
    assert h.reduced_betti == (0, 0, 0)
    assert h.torsion[1] == (2,)
    assert h.reduced_betti_mod2 == (0, 1, 1)
    assert h.consistent()


def test_boundary_squares_vanish():
    cx = _complex([(0, 1, 2, 3), (2, 3, 4)])
    b2 = boundary_columns(cx[2], cx[1])
    b3 = boundary_columns(cx[3], cx[2])
    assert compose_is_zero(b2, b3)


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _det_gcd_rank(m):
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in m]
    rank, rows, cols = 0, len(a), len(a[0])
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for r in range(rows):
            if r != rank and a[r][c]:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


@settings(max_examples=150)
@given(matrices)
def test_smith_form_properties(m):
    d = invariant_factors(_cols(m))
    assert len(d) == _det_gcd_rank(m)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert rank_mod2(_cols(m)) == sum(1 for x in d if x % 2)


def test_random_flag_complexes_consistent():
    rng = random.Random(5)
    for _ in range(20):
        top = [tuple(sorted(rng.sample(range(7), rng.randint(1, 4)))) for _ in range(6)]
        cx = _complex(top)
        h = _homology(top, len(cx) - 1)
        euler = sum((-1) ** k * len(s) for k, s in enumerate(cx)) - 1
        assert euler == sum((-1) ** k * b for k, b in enumerate(h.reduced_betti))
        assert h.consistent()
