"""Geometric intersection numbers by bigon removal on the overlay of two curves.

Both curves are drawn with straight chords in each face of S - C (on every
segment the points of ``a`` come first), so two chords cross iff their
endpoints interleave.  The union a ∪ b is kept as a 4-valent combinatorial
map: each crossing has ccw ports ``a_out, ., a_in, .`` and the faces carry
puncture counts.  A face with two corners and no puncture is a bigon; pushing
``a`` across it deletes its two crossings.  When no such face is left the
curves are in minimal position (bigon criterion), so the crossing count is
i(a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .curve import INNER, OUTER, Curve, LayoutMismatch, puncture_partition, trace
from .layout import Region

A, B = 0, 1


@dataclass
class _Overlay:
    seq: List[List[int]]  # crossing ids along a and along b
    rtl: Dict[int, bool]  # b crosses a from right to left
    puncture_darts: List[Tuple[int, int, int]]  # (curve, edge, dir) with the puncture on its left


def _overlay(a: Curve, b: Curve) -> _Overlay:
    N = len(a.weights)
    # overlay positions
    pos = [[0] * a.size, [0] * b.size]
    seg_start = []
    t = 0
    for j in range(N):
        seg_start.append(t)
        for k in range(a.weights[j]):
            pos[A][a.offsets[j] + k] = t
            t += 1
        for k in range(b.weights[j]):
            pos[B][b.offsets[j] + k] = t
            t += 1
    M = t
    curves = (a, b)

    # chords per face as (p, q) overlay positions, traversal-directed
    paths = [trace(a), trace(b)]
    # chord_t[c][t] -> (face, p, q) for chord from paths[c][t] to paths[c][t+1]
    chords = []
    for c in (A, B):
        path = paths[c]
        L = len(path)
        row = []
        for t in range(L):
            face = INNER if t % 2 == 0 else OUTER
            row.append((face, pos[c][path[t]], pos[c][path[(t + 1) % L]]))
        chords.append(row)

    def inc(p, q):  # length of increasing arc from p to q
        return (q - p) % M

    crossings: Dict[Tuple[int, int], int] = {}
    rtl: Dict[int, bool] = {}
    along_a: List[List[int]] = [[] for _ in chords[A]]
    along_b: List[List[Tuple[int, int]]] = [[] for _ in chords[B]]
    by_face = {INNER: [], OUTER: []}
    for tb, (face, r, s) in enumerate(chords[B]):
        by_face[face].append((tb, r, s))
    for ta, (face, p, q) in enumerate(chords[A]):
        span = inc(p, q)
        hits = []
        for tb, r, s in by_face[face]:
            r_in = 0 < inc(p, r) < span
            s_in = 0 < inc(p, s) < span
            if r_in == s_in:
                continue
            x = len(crossings)
            crossings[(ta, tb)] = x
            right = r_in  # increasing arc from p is the right side in the inner face
            rtl[x] = right if face == INNER else not right
            hits.append((inc(p, r) if r_in else inc(p, s), x))
            # order along b: distance from r along the increasing arc to a's endpoint on that side
            span_b = inc(r, s)
            d = inc(r, p) if 0 < inc(r, p) < span_b else inc(r, q)
            along_b[tb].append((d, x))
        hits.sort()
        along_a[ta] = [x for _, x in hits]

    seq_a = [x for row in along_a for x in row]
    seq_b = [x for row in sorted_b(along_b) for x in row]

    # edge index of each curve point: crossings passed since the start, minus one
    def point_edges(along, k):
        edges = []
        count = 0
        for row in along:
            edges.append((count - 1) % k if k else 0)
            count += len(row)
        return edges

    edges_a = point_edges(along_a, len(seq_a))
    edges_b = point_edges([[x for _, x in sorted(r)] for r in along_b], len(seq_b))
    point_edge = (edges_a, edges_b)

    # locate punctures: inner chord at the first overlay point from v_j onwards
    owner = {}
    for c in (A, B):
        for t, g in enumerate(paths[c]):
            owner[pos[c][g]] = (c, t)
    darts = []
    for j in range(N):
        start = seg_start[j]
        g = start % M if start < M else 0
        c, t = owner[g]
        # inner chord at this point is chord t (if t even, forward) or chord t-1 (backward)
        if t % 2 == 0:
            darts.append((c, point_edge[c][t], 1))
        else:
            darts.append((c, point_edge[c][t], -1))
    return _Overlay([seq_a, seq_b], rtl, darts)


def sorted_b(along_b):
    return [[x for _, x in sorted(row)] for row in along_b]


class _Map:
    """Mutable 4-valent map of a ∪ b with puncture counts on faces.

    A dart ``(c, v, d)`` leaves crossing ``v`` along curve ``c`` forwards
    (d=1) or backwards (d=-1); darts keep their identity when other
    crossings are deleted.
    """

    def __init__(self, seq: List[List[int]], rtl: Dict[int, bool]):
        self.rtl = rtl
        self.nxt = [{}, {}]
        self.prv = [{}, {}]
        for c in (A, B):
            s = seq[c]
            for t, v in enumerate(s):
                self.nxt[c][v] = s[(t + 1) % len(s)]
                self.prv[c][v] = s[t - 1]
        self.alive = set(seq[A])
        self.dart_face: Dict[Tuple[int, int, int], int] = {}
        self.faces: Dict[int, List[Tuple[int, int, int]]] = {}
        self.punct: Dict[int, int] = {}
        self._next_id = 0
        self._small = set()
        for c in (A, B):
            for v in seq[c]:
                for d in (1, -1):
                    if (c, v, d) not in self.dart_face:
                        self._trace((c, v, d))

    def _ports(self, v):
        # ccw ports at v: a_out, (b), a_in, (b)
        if self.rtl[v]:
            return ((A, 1), (B, 1), (A, -1), (B, -1))
        return ((A, 1), (B, -1), (A, -1), (B, 1))

    def _step(self, dart):
        c, v, d = dart
        w = self.nxt[c][v] if d == 1 else self.prv[c][v]
        ports = self._ports(w)
        p = ports.index((c, -d))
        return (w,) + ports[(p - 1) % 4]

    def _trace(self, start) -> int:
        fid = self._next_id
        self._next_id += 1
        darts = []
        dart = start
        while True:
            self.dart_face[dart] = fid
            darts.append(dart)
            w, c, d = self._step(dart)
            dart = (c, w, d)
            if dart == start:
                break
        self.faces[fid] = darts
        self.punct[fid] = 0
        if len(darts) == 2:
            self._small.add(fid)
        return fid

    def bigon(self) -> Optional[int]:
        for fid in sorted(self._small):
            if fid in self.faces and self.punct[fid] == 0:
                return fid
        return None

    def remove_bigon(self, fid: int) -> None:
        (c1, x, _), (c2, y, _) = self.faces[fid]
        gone = {x, y}
        affected = {self.dart_face[(c, v, d)] for v in gone for c in (A, B) for d in (1, -1)}
        # darts of affected faces that survive, with where their punctures came from
        survivors = [
            (dart, f) for f in sorted(affected) for dart in self.faces[f] if dart[1] not in gone
        ]
        carried = {f: self.punct[f] for f in affected}
        for f in affected:
            for dart in self.faces[f]:
                del self.dart_face[dart]
            del self.faces[f]
            del self.punct[f]
            self._small.discard(f)
        for c in (A, B):
            for v in (x, y):
                p, q = self.prv[c][v], self.nxt[c][v]
                self.nxt[c][p] = q
                self.prv[c][q] = p
            for v in (x, y):
                del self.nxt[c][v], self.prv[c][v]
        self.alive -= gone
        if not self.alive:
            return
        origin: Dict[int, int] = {}
        for dart, old in survivors:
            if dart not in self.dart_face:
                self._trace(dart)
            new = self.dart_face[dart]
            if origin.setdefault(old, new) != new:
                raise AssertionError("a face split during bigon removal")
        for old, count in carried.items():
            if old in origin:
                self.punct[origin[old]] += count
            elif count:
                raise AssertionError("a punctured face vanished during bigon removal")


def _minimal_crossings(ov: _Overlay) -> int:
    if not ov.seq[A]:
        return 0
    m = _Map(ov.seq, ov.rtl)
    for c, e, d in ov.puncture_darts:
        v = ov.seq[c][e] if d == 1 else ov.seq[c][(e + 1) % len(ov.seq[c])]
        m.punct[m.dart_face[(c, v, d)]] += 1
    while m.alive:
        fid = m.bigon()
        if fid is None:
            break
        m.remove_bigon(fid)
    return len(m.alive)


def _check(a: Curve, b: Curve) -> None:
    if a.n != b.n:
        raise LayoutMismatch(f"curves live on different layouts (n={a.n}, n={b.n})")


@lru_cache(maxsize=1 << 18)
def _intersection_cached(a: Curve, b: Curve) -> int:
    return _minimal_crossings(_overlay(a, b))


def initial_crossings(a: Curve, b: Curve) -> int:
    """Crossings of the straight-chord overlay before any bigon removal."""
    _check(a, b)
    return len(_overlay(a, b).seq[A])


def geometric_intersection(a: Curve, b: Curve) -> int:
    _check(a, b)
    if a.key == b.key:
        return 0
    if b.key < a.key:
        a, b = b, a
    return _intersection_cached(a, b)


def partitions_compatible(a: Curve, b: Curve) -> bool:
    """Necessary condition for disjointness: one side of ``a`` misses one side of ``b``."""
    sa = [set(s) for s in puncture_partition(a)]
    sb = [set(s) for s in puncture_partition(b)]
    return any(not (x & y) for x in sa for y in sb)


def _gap_regions(a: Curve, face: int) -> List[int]:
    # region of S - C - a containing the gap just before a-point c (circularly)
    m = a.matching(face)
    region = [0] * a.size
    stack = [0]
    fresh = 1
    for c in range(a.size):
        region[c] = stack[-1]
        if c < m[c]:
            stack.append(fresh)
            fresh += 1
        else:
            stack.pop()
    return region


def _gap_feasible(a: Curve, b: Curve) -> bool:
    """Necessary condition for i(a, b) = 0.

    Disjoint taut curves can be drawn taut and disjoint at once, so every
    point of ``b`` sits in some gap between consecutive points of ``a`` on its
    segment, each chord of ``b`` joins two gaps of one region of its face,
    and gaps along a segment are monotone.  Arc consistency on those domains
    is a relaxation: an emptied domain proves the curves meet.
    """
    if a.size == 0 or b.size == 0:
        return True
    N = len(a.weights)
    # masks[face][j][r]: gaps g of segment j lying in region r
    masks = []
    for face in (INNER, OUTER):
        reg = _gap_regions(a, face)
        per_seg = []
        for j in range(N):
            d: Dict[int, int] = {}
            for g in range(a.weights[j] + 1):
                r = reg[(a.offsets[j] + g) % a.size]
                d[r] = d.get(r, 0) | (1 << g)
            per_seg.append(d)
        masks.append(per_seg)
    seg_b = b.segs
    partner = (b.matching(INNER), b.matching(OUTER))
    # consecutive b-points on one segment: p and p+1 when seg_b agrees
    for parity in (0, 1):
        dom = []
        for p in range(b.size):
            j = seg_b[p]
            base = a.offsets[j]
            dom.append(sum(1 << g for g in range(a.weights[j] + 1) if (base + g) % 2 == parity))
        if _propagate(dom, seg_b, partner, masks):
            return True
    return False


def _propagate(dom, seg_b, partner, masks) -> bool:
    size = len(dom)
    work = list(range(size))
    queued = [True] * size
    while work:
        p = work.pop()
        queued[p] = False
        if not dom[p]:
            return False
        j = seg_b[p]
        changed = []
        for face in (INNER, OUTER):
            q = partner[face][p]
            jq = seg_b[q]
            src, dst = masks[face][j], masks[face][jq]
            allowed = 0
            for r, m in src.items():
                if dom[p] & m:
                    allowed |= dst.get(r, 0)
            new = dom[q] & allowed
            if new != dom[q]:
                dom[q] = new
                changed.append(q)
        low = dom[p] & -dom[p]
        if p + 1 < size and seg_b[p + 1] == j:
            new = dom[p + 1] & ~(low - 1)
            if new != dom[p + 1]:
                dom[p + 1] = new
                changed.append(p + 1)
        if p > 0 and seg_b[p - 1] == j:
            new = dom[p - 1] & ((1 << dom[p].bit_length()) - 1)
            if new != dom[p - 1]:
                dom[p - 1] = new
                changed.append(p - 1)
        for q in changed:
            if not dom[q]:
                return False
            if not queued[q]:
                queued[q] = True
                work.append(q)
    return True


def are_disjoint(a: Curve, b: Curve) -> bool:
    _check(a, b)
    if a.key == b.key:
        return True
    return (
        partitions_compatible(a, b)
        and _gap_feasible(a, b)
        and _gap_feasible(b, a)
        and geometric_intersection(a, b) == 0
    )


def _unordered_partition(c: Curve):
    return frozenset(puncture_partition(c))


def is_isotopic(a: Curve, b: Curve) -> bool:
    """Disjoint with the same puncture partition: the curves cobound an unpunctured annulus."""
    _check(a, b)
    if a.key == b.key:
        return True
    return _unordered_partition(a) == _unordered_partition(b) and geometric_intersection(a, b) == 0


class RegionSide(str, Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    CROSSING = "crossing"


def region_side(curve: Curve, region: Region) -> RegionSide:
    """Position of an essential curve relative to a reference disk E.

    Inside means the curve can be pushed into the interior of E without being
    parallel to its boundary; a curve parallel to the boundary of E counts as
    outside.
    """
    boundary = region.boundary
    _check(curve, boundary)
    if geometric_intersection(curve, boundary) > 0:
        return RegionSide.CROSSING
    outside = set(range(len(curve.weights))) - set(region.punctures_inside)
    for s in puncture_partition(curve):
        side = set(s)
        if outside < side:
            return RegionSide.INSIDE
    return RegionSide.OUTSIDE
