"""Finite sets of disk-complex vertices: weight-bounded enumeration and twist orbits."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .curve import Curve, is_essential, reference_curves, trace
from .layout import BridgeLayout, build_layout
from .tangle import DiskVertex, Side, compression_side


class ResourceCapExceeded(RuntimeError):
    code = "ResourceCapExceeded"


def _weight_vectors(N: int, total: int) -> Iterator[Tuple[int, ...]]:
    # no segment may carry more than half the points: its chords must leave it
    def rec(j, left, acc):
        if j == N - 1:
            if 2 * left <= total:
                yield tuple(acc + [left])
            return
        for w in range(min(left, total // 2) + 1):
            yield from rec(j + 1, left - w, acc + [w])

    yield from rec(0, total, [])


def _matchings(segs: Sequence[int]) -> List[Tuple[int, ...]]:
    """Non-crossing perfect matchings of points 0..M-1 with no chord inside a segment."""
    M = len(segs)

    @lru_cache(maxsize=None)
    def rec(lo: int, hi: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        if lo >= hi:
            return ((),)
        out = []
        for q in range(lo + 1, hi, 2):
            if segs[q] == segs[lo]:
                continue
            for inside in rec(lo + 1, q):
                for rest in rec(q + 1, hi):
                    out.append(((lo, q),) + inside + rest)
        return tuple(out)

    result = []
    for pairs in rec(0, M):
        m = [0] * M
        for g, h in pairs:
            m[g], m[h] = h, g
        result.append(tuple(m))
    return result


def enumerate_curves(layout: BridgeLayout, max_weight: int, *, cap: int = 5_000_000) -> List[Curve]:
    """Every taut simple closed curve with total weight at most ``max_weight``.

    ``cap`` bounds the number of (inner, outer) matching pairs examined.
    """
    N = layout.puncture_count
    out: List[Curve] = []
    examined = 0
    for total in range(2, max_weight + 1, 2):
        for weights in _weight_vectors(N, total):
            segs = tuple(j for j, w in enumerate(weights) for _ in range(w))
            ms = _matchings(segs)
            examined += len(ms) ** 2
            if examined > cap:
                raise ResourceCapExceeded(
                    f"more than {cap} encodings needed for max_weight={max_weight}"
                )
            for inner in ms:
                for outer in ms:
                    c = Curve(layout.n, weights, inner, outer)
                    if len(trace(c)) == total:
                        out.append(c)
    out.sort(key=lambda c: c.key)
    return out


def enumerate_vertices(layout: BridgeLayout, max_weight: int, *, cap: int = 5_000_000) -> List[DiskVertex]:
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2")
    verts = []
    for c in enumerate_curves(layout, max_weight, cap=cap):
        if not is_essential(c):
            continue
        side = compression_side(c)
        if side is not None:
            verts.append(DiskVertex(c, side))
    return verts


def side_moves(n: int, side: Side) -> List[List[Tuple[int, int]]]:
    """Half-twist words that extend over the tangle in the given ball.

    For each bridge of that ball: the half twist about its shadow.  For each
    pair of cyclically adjacent bridges: the braid passing one bridge through
    the next.  Inverses are included.
    """
    N = 2 * n + 2
    first = 0 if side is Side.ABOVE else 1
    moves = []
    for j in range(first, N, 2):
        moves.append([(j, 1)])
        moves.append([(j, -1)])
    for j in range(first, N, 2):
        a, b, c = (j + 1) % N, j, (j + 2) % N
        passing = [(a, 1), (b, 1), (c, -1), (a, -1)]
        moves.append(passing)
        moves.append([(k, -d) for k, d in reversed(passing)])
    return moves


def twist_orbit(layout: BridgeLayout, depth: int) -> List[DiskVertex]:
    """Reference vertices closed under at most ``depth`` side-preserving moves."""
    from .curve import apply_twists

    if depth < 0:
        raise ValueError("depth must be non-negative")
    n = layout.n
    seen: Dict[tuple, DiskVertex] = {}
    frontier = []
    for (i, s), c in sorted(reference_curves(layout).items()):
        v = DiskVertex(c, Side.of_sign(s))
        seen[c.key] = v
        frontier.append(v)
    moves = {side: side_moves(n, side) for side in Side}
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for mv in moves[v.side]:
                c = apply_twists(v.curve, mv)
                if c.key not in seen:
                    w = DiskVertex(c, v.side)
                    seen[c.key] = w
                    nxt.append(w)
        frontier = nxt
    return sorted(seen.values(), key=lambda v: v.key)


def merge_vertices(*groups: Sequence[DiskVertex]) -> List[DiskVertex]:
    seen: Dict[tuple, DiskVertex] = {}
    for g in groups:
        for v in g:
            seen.setdefault(v.key, v)
    return sorted(seen.values(), key=lambda v: v.key)
