"""Simplicial chain complexes: boundary matrices, Smith normal form, Betti numbers.

Matrices are sparse, stored by column as ``{row: coefficient}`` dicts, and
entries stay exact Python integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Sequence, Tuple

Column = Dict[int, int]
Simplex = Tuple[int, ...]


def boundary_columns(simplices: Sequence[Simplex], faces: Sequence[Simplex]) -> List[Column]:
    """Columns of the boundary map from k-simplices to (k-1)-simplices.

    Simplices are sorted vertex tuples; the face dropping position t gets
    sign (-1)^t.
    """
    index = {f: r for r, f in enumerate(faces)}
    cols = []
    for s in simplices:
        col: Column = {}
        for t in range(len(s)):
            col[index[s[:t] + s[t + 1:]]] = -1 if t % 2 else 1
        cols.append(col)
    return cols


def compose_is_zero(outer: List[Column], inner: List[Column]) -> bool:
    """Whether outer ∘ inner = 0, where ``inner`` lands in the domain of ``outer``."""
    for col in inner:
        acc: Dict[int, int] = {}
        for r, v in col.items():
            for r2, w in outer[r].items():
                acc[r2] = acc.get(r2, 0) + v * w
        if any(acc.values()):
            return False
    return True


class _Sparse:
    def __init__(self, cols: List[Column]):
        self.cols: Dict[int, Dict[int, int]] = {c: dict(col) for c, col in enumerate(cols) if col}
        self.rows: Dict[int, Dict[int, int]] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                self.rows.setdefault(r, {})[c] = v

    def _set(self, r: int, c: int, v: int) -> None:
        if v:
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, {})[r] = v
        else:
            self.rows.get(r, {}).pop(c, None)
            self.cols.get(c, {}).pop(r, None)
            if r in self.rows and not self.rows[r]:
                del self.rows[r]
            if c in self.cols and not self.cols[c]:
                del self.cols[c]

    def add_row(self, dst: int, src: int, f: int) -> None:
        # row_dst += f * row_src
        for c, v in list(self.rows[src].items()):
            self._set(dst, c, self.rows.get(dst, {}).get(c, 0) + f * v)

    def add_col(self, dst: int, src: int, f: int) -> None:
        for r, v in list(self.cols[src].items()):
            self._set(r, dst, self.cols.get(dst, {}).get(r, 0) + f * v)

    def drop(self, r: int, c: int) -> None:
        for c2 in list(self.rows.get(r, {})):
            self._set(r, c2, 0)
        for r2 in list(self.cols.get(c, {})):
            self._set(r2, c, 0)


def _isolate(m: _Sparse, r: int, c: int) -> Tuple[int, int, int]:
    """Row and column operations until (r, c) is the only entry of its row and column."""
    while True:
        col = m.cols[c]
        row = m.rows[r]
        if len(col) == 1 and len(row) == 1:
            return abs(col[r]), r, c
        # move the smallest entry of the cross to (r, c)
        best = min(
            [(abs(v), 0, r2) for r2, v in col.items()] + [(abs(v), 1, c2) for c2, v in row.items()]
        )
        _, kind, idx = best
        if kind == 0 and idx != r:
            r = idx
            continue
        if kind == 1 and idx != c:
            c = idx
            continue
        p = m.cols[c][r]
        for r2, v in list(m.cols[c].items()):
            if r2 != r:
                m.add_row(r2, r, -(v // p))
        for c2, v in list(m.rows[r].items()):
            if c2 != c:
                m.add_col(c2, c, -(v // p))


def invariant_factors(cols: List[Column]) -> List[int]:
    """Non-zero diagonal of the Smith normal form, as a divisibility chain."""
    m = _Sparse(cols)
    diag: List[int] = []
    while m.cols:
        c = min(m.cols, key=lambda k: (len(m.cols[k]), k))
        units = [r for r, v in m.cols[c].items() if abs(v) == 1]
        if units:
            r = min(units, key=lambda k: (len(m.rows[k]), k))
            p = m.cols[c][r]
            for r2, v in list(m.cols[c].items()):
                if r2 != r:
                    m.add_row(r2, r, -v * p)
            diag.append(1)
        else:
            d, r, c = _isolate(m, min(m.cols[c]), c)
            diag.append(d)
        m.drop(r, c)
    return _chain(diag)


def _chain(diag: List[int]) -> List[int]:
    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def rank_mod2(cols: List[Column]) -> int:
    pivots: Dict[int, int] = {}
    rank = 0
    for col in cols:
        x = 0
        for r, v in col.items():
            if v % 2:
                x ^= 1 << r
        while x:
            low = x & -x
            if low in pivots:
                x ^= pivots[low]
            else:
                pivots[low] = x
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class Homology:
    reduced_betti: Tuple[int, ...]  # rational ranks
    torsion: Tuple[Tuple[int, ...], ...]  # invariant factors > 1 per degree
    reduced_betti_mod2: Tuple[int, ...]

    def consistent(self) -> bool:
        """Universal coefficients: mod-2 ranks from integral ranks and 2-torsion."""
        for k, b2 in enumerate(self.reduced_betti_mod2):
            even = sum(1 for t in self.torsion[k] if t % 2 == 0)
            below = sum(1 for t in self.torsion[k - 1] if t % 2 == 0) if k else 0
            if b2 != self.reduced_betti[k] + even + below:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "betti": list(self.reduced_betti),
            "torsion": [list(t) for t in self.torsion],
            "betti_mod2": list(self.reduced_betti_mod2),
        }


def reduced_homology(chain_sizes: Sequence[int], boundaries: Sequence[List[Column]], max_dim: int) -> Homology:
    """Reduced homology in degrees 0..max_dim.

    ``boundaries[k]`` maps k-chains to (k-1)-chains for k >= 1 and must be
    given up to k = max_dim + 1; degree 0 uses the augmentation.
    """
    if len(boundaries) < max_dim + 2:
        raise ValueError("boundary matrices missing for the requested degrees")
    factors = [[1] * (1 if chain_sizes[0] else 0)]
    ranks2 = [1 if chain_sizes[0] else 0]
    for k in range(1, max_dim + 2):
        factors.append(invariant_factors(boundaries[k]))
        ranks2.append(rank_mod2(boundaries[k]))
    betti, torsion, betti2 = [], [], []
    for k in range(max_dim + 1):
        size = chain_sizes[k] if k < len(chain_sizes) else 0
        betti.append(size - len(factors[k]) - len(factors[k + 1]))
        torsion.append(tuple(t for t in factors[k + 1] if t > 1))
        betti2.append(size - ranks2[k] - ranks2[k + 1])
    return Homology(tuple(betti), tuple(torsion), tuple(betti2))
