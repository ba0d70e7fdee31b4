"""Standard (n+1)-bridge picture of the unknot on the shadow circle.

Punctures v_0, ..., v_{2n+1} sit in order on a circle C in the bridge sphere.
Segment s_j runs from v_j to v_{j+1} (indices mod 2n+2) and is the shadow of
one bridge; segments alternate between the upper ball (even j) and the lower
ball (odd j).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

UPPER = "upper"
LOWER = "lower"

PLUS = "+"
MINUS = "-"


def side_of_sign(sign: str) -> str:
    if sign == PLUS:
        return UPPER
    if sign == MINUS:
        return LOWER
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class Segment:
    idx: int
    side: str
    bridge: int

    @property
    def label(self) -> str:
        return f"b{self.bridge}{PLUS if self.side == UPPER else MINUS}"


@dataclass(frozen=True)
class BridgeLayout:
    n: int
    segments: Tuple[Segment, ...]
    upper_pairing: Dict[int, int] = field(compare=False, hash=False)
    lower_pairing: Dict[int, int] = field(compare=False, hash=False)

    @property
    def puncture_count(self) -> int:
        return 2 * self.n + 2

    @property
    def labels(self) -> List[str]:
        return [s.label for s in self.segments]

    def segment_of(self, bridge: int, sign: str) -> Segment:
        side = side_of_sign(sign)
        for s in self.segments:
            if s.bridge == bridge and s.side == side:
                return s
        raise KeyError((bridge, sign))

    def segment_punctures(self, j: int) -> Tuple[int, int]:
        N = self.puncture_count
        return j % N, (j + 1) % N

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "segments": [
                {"idx": s.idx, "side": s.side, "bridge": s.bridge} for s in self.segments
            ],
            "punctures": self.puncture_count,
        }


def _adjacent(n: int, i: int) -> List[int]:
    # a_i^± touches a_{i-1}^∓ and a_{i+1}^∓, with a_1 and a_{n+1} touching themselves.
    if n + 1 == 1:
        return [1, 1]
    if i == 1:
        return [1, 2]
    if i == n + 1:
        return [n, n + 1]
    return [i - 1, i + 1]


def bridge_walk(n: int) -> List[Tuple[int, str]]:
    """Closed walk of the bridge adjacency relation, starting a_1^+ -> a_1^-.

    Consecutive entries share an endpoint puncture; the walk visits all
    2n+2 bridges once.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    walk = [(1, PLUS), (1, MINUS)]
    seen = set(walk)
    while len(walk) < 2 * n + 2:
        i, sign = walk[-1]
        other = MINUS if sign == PLUS else PLUS
        nxt = [(j, other) for j in _adjacent(n, i) if (j, other) not in seen]
        if not nxt:
            raise RuntimeError("bridge adjacency does not close up")  # pragma: no cover
        walk.append(nxt[0])
        seen.add(nxt[0])
    # the walk must close: last bridge is adjacent to a_1^+
    i, sign = walk[-1]
    assert sign == MINUS and 1 in _adjacent(n, i)
    return walk


@lru_cache(maxsize=None)
def build_layout(n: int) -> BridgeLayout:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    segments = tuple(
        Segment(idx=j, side=side_of_sign(sign), bridge=b)
        for j, (b, sign) in enumerate(bridge_walk(n))
    )
    N = 2 * n + 2
    upper: Dict[int, int] = {}
    lower: Dict[int, int] = {}
    for s in segments:
        target = upper if s.side == UPPER else lower
        target[s.idx] = s.bridge
        target[(s.idx + 1) % N] = s.bridge
    return BridgeLayout(n=n, segments=segments, upper_pairing=upper, lower_pairing=lower)


def _check_index(layout: BridgeLayout, i: int) -> None:
    if not 1 <= i <= layout.n:
        raise IndexError(f"reference index must be in 1..{layout.n}, got {i}")


def reference_arc(layout: BridgeLayout, i: int, sign: str) -> Tuple[int, ...]:
    """Segments of b_1^± ∪ b_1^∓ ∪ ... ∪ b_{i-1}^± ∪ b_{i-1}^∓ ∪ b_i^±, in circle order.

    Returns the 2i-1 segment indices as a contiguous cyclic run.
    """
    _check_index(layout, i)
    side_of_sign(sign)
    wanted = {layout.segment_of(i, sign).idx}
    for k in range(1, i):
        wanted.add(layout.segment_of(k, PLUS).idx)
        wanted.add(layout.segment_of(k, MINUS).idx)
    N = layout.puncture_count
    # start of the run: a wanted segment whose predecessor is not wanted
    starts = [j for j in wanted if (j - 1) % N not in wanted]
    if len(starts) != 1:
        raise AssertionError(f"reference arc ({i},{sign}) is not contiguous")
    start = starts[0]
    arc = tuple((start + t) % N for t in range(len(wanted)))
    if set(arc) != wanted:
        raise AssertionError(f"reference arc ({i},{sign}) is not contiguous")
    assert len(arc) == 2 * i - 1
    return arc


def arc_punctures(layout: BridgeLayout, arc: Tuple[int, ...]) -> Tuple[int, ...]:
    N = layout.puncture_count
    return tuple((arc[0] + t) % N for t in range(len(arc) + 1))


@dataclass(frozen=True)
class Region:
    """Disk E in S around a reference arc; boundary is the reference curve."""

    n: int
    i: int
    sign: str
    punctures_inside: Tuple[int, ...]

    @property
    def boundary(self):
        from .curve import reference_curve

        return reference_curve(build_layout(self.n), self.i, self.sign)

    def to_json(self) -> dict:
        return {"i": self.i, "side": self.sign, "punctures": list(self.punctures_inside)}


def reference_region(layout: BridgeLayout, i: int, sign: str) -> Region:
    arc = reference_arc(layout, i, sign)
    return Region(layout.n, i, sign, arc_punctures(layout, arc))
