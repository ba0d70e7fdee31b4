"""Simple closed curves on the punctured bridge sphere P = S - K.

A curve in general position with respect to the shadow circle C is recorded by

* ``weights[j]``: number of points where it crosses segment s_j, and
* two perfect matchings of those points, one per face of S - C.

Points are numbered globally in circle order: the k-th point (from v_j) on
s_j gets index ``sum(weights[:j]) + k``.  The *inner* face sees this order
counter-clockwise, the *outer* face clockwise.  A taut curve has no chord
with both ends on the same segment; taut encodings are the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .layout import BridgeLayout, build_layout, reference_arc
from .words import PUNCTURE, FreeWord

INNER = 0
OUTER = 1


class CurveError(ValueError):
    code = "InvalidCurve"

    def to_json(self) -> dict:
        return {"error": self.code, "detail": str(self)}


class MalformedCurve(CurveError):
    code = "MalformedCurve"


class CrossingChords(CurveError):
    code = "CrossingChords"


class UnmatchedPoint(CurveError):
    code = "UnmatchedPoint"


class MultiComponent(CurveError):
    code = "MultiComponent"


class EmptyCurve(CurveError):
    code = "EmptyCurve"


class LayoutMismatch(CurveError):
    code = "LayoutMismatch"


def _offsets(weights: Sequence[int]) -> List[int]:
    out, total = [], 0
    for w in weights:
        out.append(total)
        total += w
    return out


@dataclass(frozen=True)
class Curve:
    n: int
    weights: Tuple[int, ...]
    inner: Tuple[int, ...]
    outer: Tuple[int, ...]

    @property
    def layout(self) -> BridgeLayout:
        return build_layout(self.n)

    @property
    def size(self) -> int:
        return len(self.inner)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @cached_property
    def segs(self) -> Tuple[int, ...]:
        return tuple(j for j, w in enumerate(self.weights) for _ in range(w))

    @cached_property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(_offsets(self.weights))

    def point(self, g: int) -> Tuple[int, int]:
        j = self.segs[g]
        return j, g - self.offsets[j]

    def index(self, j: int, k: int) -> int:
        return self.offsets[j] + k

    def matching(self, face: int) -> Tuple[int, ...]:
        return self.inner if face == INNER else self.outer

    @property
    def key(self) -> tuple:
        return (self.n, self.weights, self.inner, self.outer)

    def chords(self, face: int) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
        m = self.matching(face)
        return [(self.point(g), self.point(m[g])) for g in range(self.size) if g < m[g]]

    def to_json(self) -> dict:
        def enc(face):
            return [[list(p), list(q)] for p, q in self.chords(face)]

        return {"n": self.n, "weights": list(self.weights), "inner": enc(INNER), "outer": enc(OUTER)}

    def is_taut(self) -> bool:
        segs = self.segs
        return all(
            segs[g] != segs[m[g]] for m in (self.inner, self.outer) for g in range(self.size)
        )

    def __repr__(self) -> str:
        return f"Curve(n={self.n}, weights={list(self.weights)})"


# ---------------------------------------------------------------- validation


def _check_noncrossing(m: Sequence[int], face: str) -> None:
    stack: List[int] = []
    for g in range(len(m)):
        h = m[g]
        if h > g:
            stack.append(g)
        else:
            if not stack or stack[-1] != h:
                raise CrossingChords(f"{face} chords cross at point {g}")
            stack.pop()


def trace(curve: Curve, start: int = 0) -> List[int]:
    """Points visited from ``start``; the chord after an even position is inner."""
    out = [start]
    g, face = start, INNER
    while True:
        g = curve.matching(face)[g]
        face ^= 1
        if g == start and face == INNER:
            return out
        out.append(g)


def _involution(size: int, chords: Iterable[Tuple[int, int]], face: str) -> Tuple[int, ...]:
    m = [-1] * size
    for g, h in chords:
        if not (0 <= g < size and 0 <= h < size) or g == h:
            raise UnmatchedPoint(f"{face} chord ({g},{h}) has an invalid endpoint")
        if m[g] != -1 or m[h] != -1:
            raise UnmatchedPoint(f"{face} point matched twice")
        m[g], m[h] = h, g
    if -1 in m:
        raise UnmatchedPoint(f"{face} point {m.index(-1)} is unmatched")
    return tuple(m)


def from_matchings(n: int, weights: Sequence[int], inner: Sequence[int], outer: Sequence[int], *, taut: bool = True) -> Curve:
    c = Curve(n, tuple(weights), tuple(inner), tuple(outer))
    _check_noncrossing(c.inner, "inner")
    _check_noncrossing(c.outer, "outer")
    if len(trace(c)) != c.size:
        raise MultiComponent("encoding traces more than one component")
    if taut:
        c = tighten(c)
    return c


def validate(raw: dict, *, taut: bool = True) -> Curve:
    """Check a raw JSON-style encoding and return its (tightened) curve.

    Raises the specific :class:`CurveError` subclass naming the violated
    invariant.  A curve bounding an unpunctured disk is reported as
    :class:`EmptyCurve`, like the all-zero encoding.
    """
    try:
        n = int(raw["n"])
        weights = [int(w) for w in raw["weights"]]
        inner_raw, outer_raw = raw["inner"], raw["outer"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCurve(f"missing or ill-typed field: {exc}") from None
    if n < 1:
        raise MalformedCurve("n must be positive")
    N = 2 * n + 2
    if len(weights) != N or any(w < 0 for w in weights):
        raise MalformedCurve(f"expected {N} non-negative weights")
    size = sum(weights)
    if size == 0:
        raise EmptyCurve("all weights are zero")
    offs = _offsets(weights)

    def glob(pt) -> int:
        try:
            j, k = int(pt[0]), int(pt[1])
        except (TypeError, ValueError, IndexError):
            raise MalformedCurve(f"bad point {pt!r}") from None
        if not (0 <= j < N and 0 <= k < weights[j]):
            raise UnmatchedPoint(f"point {[j, k]} does not exist")
        return offs[j] + k

    faces = []
    for name, chords in (("inner", inner_raw), ("outer", outer_raw)):
        if 2 * len(chords) != size:
            raise UnmatchedPoint(f"{name} face has {len(chords)} chords for {size} points")
        faces.append(_involution(size, [(glob(p), glob(q)) for p, q in chords], name))
    return from_matchings(n, weights, faces[0], faces[1], taut=taut)


def from_traversal(n: int, points: Sequence[Tuple[int, tuple]]) -> Curve:
    """Build a curve from points listed in traversal order.

    Each point is ``(segment, sort_key)``; the sort key orders points along
    their segment from v_j.  Chords alternate inner, outer, inner, ...
    """
    N = 2 * n + 2
    if len(points) % 2:
        raise UnmatchedPoint("odd number of traversal points")
    order = sorted(range(len(points)), key=lambda t: points[t])
    glob = [0] * len(points)
    for g, t in enumerate(order):
        glob[t] = g
    weights = [0] * N
    for j, _ in points:
        weights[j] += 1
    inner = [0] * len(points)
    outer = [0] * len(points)
    L = len(points)
    for t in range(L):
        u, v = glob[t], glob[(t + 1) % L]
        m = inner if t % 2 == 0 else outer
        m[u], m[v] = v, u
    return from_matchings(n, weights, inner, outer, taut=False)


# ------------------------------------------------------------------ tighten


def tighten(curve: Curve) -> Curve:
    """Remove bigons between the curve and the shadow circle."""
    segs = list(curve.segs)
    m = [list(curve.inner), list(curve.outer)]
    while True:
        found = None
        for g in range(len(segs) - 1):
            if segs[g] != segs[g + 1]:
                continue
            for face in (INNER, OUTER):
                if m[face][g] == g + 1:
                    found = (g, face)
                    break
            if found:
                break
        if found is None:
            break
        g, face = found
        other = m[face ^ 1]
        p, q = other[g], other[g + 1]
        if p == g + 1:
            raise EmptyCurve("curve bounds an unpunctured disk")
        other[p], other[q] = q, p
        keep = [h for h in range(len(segs)) if h not in (g, g + 1)]
        new_index = {h: t for t, h in enumerate(keep)}
        segs = [segs[h] for h in keep]
        m = [[new_index[mm[h]] for h in keep] for mm in m]
    weights = [0] * len(curve.weights)
    for j in segs:
        weights[j] += 1
    return Curve(curve.n, tuple(weights), tuple(m[0]), tuple(m[1]))


# --------------------------------------------------------------- partitions


def side_bits(curve: Curve) -> Tuple[int, ...]:
    """0/1 side of every puncture; v_0 is on side 0.

    Walking along C the side flips at every crossing point, since a simple
    closed curve on the sphere separates.
    """
    N = len(curve.weights)
    bits = [0] * N
    b = 0
    for j in range(N):
        bits[j] = b
        b ^= curve.weights[j] & 1
    return tuple(bits)


def puncture_partition(curve: Curve) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Punctures on each side; the side containing v_0 comes first."""
    bits = side_bits(curve)
    first = tuple(v for v, b in enumerate(bits) if b == 0)
    second = tuple(v for v, b in enumerate(bits) if b == 1)
    return first, second


def is_essential(curve: Curve) -> bool:
    a, b = puncture_partition(curve)
    return len(a) >= 2 and len(b) >= 2


# --------------------------------------------------------------------- words


def raw_peripheral_word(curve: Curve) -> FreeWord:
    """Product over outer excursions s_j -> s_k of x_{j+1} ... x_k (no relation applied)."""
    N = len(curve.weights)
    path = trace(curve)
    letters = []
    for t in range(1, len(path), 2):
        j = curve.segs[path[t]]
        k = curve.segs[path[(t + 1) % len(path)]]
        v = j
        while v != k:
            v = (v + 1) % N
            letters.append((v, 1))
    return FreeWord(PUNCTURE, tuple(letters))


def eliminate_last_puncture(w: FreeWord, N: int) -> FreeWord:
    """Rewrite x_{N-1} as (x_0 ... x_{N-2})^-1, landing in a genuinely free group."""
    last = N - 1
    out = []
    for g, e in w.letters:
        if g != last:
            out.append((g, e))
        elif e == 1:
            out.extend((h, -1) for h in range(N - 2, -1, -1))
        else:
            out.extend((h, 1) for h in range(N - 1))
    return FreeWord(w.alphabet, tuple(out))


def peripheral_word(curve: Curve) -> FreeWord:
    """Conjugacy class of the curve in pi_1(P), in normal form over x_0..x_{2n}."""
    N = len(curve.weights)
    return eliminate_last_puncture(raw_peripheral_word(curve), N).normal_form()


# ------------------------------------------------------------------ builders


def interval_curve(n: int, start: int, length: int) -> Curve:
    """Boundary of a neighbourhood of the circle arc through ``length`` punctures from v_start.

    The curve crosses only the two segments just outside the arc.
    """
    N = 2 * n + 2
    if not 1 <= length <= N - 1:
        raise ValueError("interval length must be between 1 and N-1")
    before = (start - 1) % N
    after = (start + length - 1) % N
    weights = [0] * N
    weights[before] += 1
    weights[after] += 1
    return from_matchings(n, weights, (1, 0), (1, 0))


def peripheral_curve(n: int, v: int) -> Curve:
    """Loop around the single puncture v."""
    return interval_curve(n, v, 1)


def segment_curve(n: int, j: int) -> Curve:
    """Boundary of a neighbourhood of the segment s_j."""
    return interval_curve(n, j, 2)


def reference_curve(layout: BridgeLayout, i: int, sign: str) -> Curve:
    arc = reference_arc(layout, i, sign)
    return interval_curve(layout.n, arc[0], len(arc) + 1)


def reference_curves(layout: BridgeLayout) -> Dict[Tuple[int, str], Curve]:
    return {(i, s): reference_curve(layout, i, s) for i in range(1, layout.n + 1) for s in "+-"}


def finger_move(curve: Curve, t: int) -> Curve:
    """Isotopic, non-taut copy: push the curve back and forth across C at trace position ``t``.

    The crossing is replaced by three consecutive crossings on the same
    segment, adding one bigon with C on each face.  ``tighten`` undoes it.
    """
    path = trace(curve)
    if not 0 <= t < len(path):
        raise IndexError(f"trace position {t} out of range")
    pts = [(curve.segs[g], (g,)) for g in path]
    j, (g,) = pts[t]
    pts[t:t + 1] = [(j, (g, 0)), (j, (g, 1)), (j, (g, 2))]
    return from_traversal(curve.n, pts)


# --------------------------------------------------------------- half twists


def apply_half_twist(curve: Curve, j: int, direction: int = 1) -> Curve:
    """Image under the half twist exchanging v_j and v_{j+1} in a disk around s_j.

    Each crossing of s_j is replaced by three crossings: one on s_{j-1} near
    v_j, one on s_j (order along s_j reversed), one on s_{j+1} near v_{j+1}.
    ``direction`` picks the sense of rotation; the two senses are inverse.
    The result is tightened.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    N = len(curve.weights)
    j %= N
    prev, nxt = (j - 1) % N, (j + 1) % N
    w = curve.weights[j]
    path = trace(curve)
    L = len(path)
    pts: List[Tuple[int, tuple]] = []

    def orig(g: int) -> Tuple[int, tuple]:
        s, k = curve.point(g)
        if s == prev:
            return s, (0, k)
        if s == nxt:
            return s, (1, k)
        return s, (0, k)

    for t, g in enumerate(path):
        s, k = curve.point(g)
        if s != j:
            pts.append(orig(g))
            continue
        # chord arriving at position t is inner iff t is odd
        arrived_inner = t % 2 == 1
        near_prev = (prev, (1, k))
        near_next = (nxt, (0, k))
        mid = (j, (0, w - 1 - k))
        first, last = (near_prev, near_next) if direction == 1 else (near_next, near_prev)
        # 'first' is reached from the inner-face side of the original point
        if arrived_inner:
            pts.extend([first, mid, last])
        else:
            pts.extend([last, mid, first])
    if L == 0:
        return curve
    return tighten(from_traversal(curve.n, pts))


def apply_twists(curve: Curve, word: Iterable[Tuple[int, int]]) -> Curve:
    """Apply ``[(j, direction), ...]`` left to right."""
    for j, d in word:
        curve = apply_half_twist(curve, j, d)
    return curve
