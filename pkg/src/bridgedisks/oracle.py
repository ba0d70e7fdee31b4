"""Independent checks for the intersection engine.

``arc_pair_intersection`` is a closed form for neighbourhoods of circle arcs.
``equivariance_suite`` pushes random curve pairs through random half-twist
words and looks for a quantity that fails to be invariant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .curve import (
    Curve,
    apply_twists,
    interval_curve,
    is_essential,
    puncture_partition,
    raw_peripheral_word,
)
from .intersection import geometric_intersection
from .tangle import Side, compression_side


@dataclass(frozen=True)
class ArcInterval:
    """Cyclic run of ``length`` punctures starting at ``start`` on the 2n+2 circle."""

    n: int
    start: int
    length: int

    def __post_init__(self):
        N = 2 * self.n + 2
        if not 2 <= self.length <= N - 2:
            raise ValueError(f"improper interval: length {self.length} not in 2..{N - 2}")

    @property
    def punctures(self) -> frozenset:
        N = 2 * self.n + 2
        return frozenset((self.start + t) % N for t in range(self.length))

    def complement(self) -> "ArcInterval":
        N = 2 * self.n + 2
        return ArcInterval(self.n, (self.start + self.length) % N, N - self.length)

    def curve(self) -> Curve:
        return interval_curve(self.n, self.start, self.length)


def arc_pair_intersection(a: ArcInterval, b: ArcInterval) -> int:
    """i(∂N(A), ∂N(B)).

    ∂N(A) = ∂N(complement of A), so the curves are disjoint when A and B are
    nested, disjoint, or together cover the circle.  Otherwise the arcs
    overlap in a single block and the curves meet twice.
    """
    if a.n != b.n:
        raise ValueError("intervals on different layouts")
    A, B = a.punctures, b.punctures
    N = 2 * a.n + 2
    if A <= B or B <= A or not (A & B) or len(A | B) == N:
        return 0
    return 2


def random_twist_word(rng: random.Random, N: int, length: int) -> List[Tuple[int, int]]:
    return [(rng.randrange(N), rng.choice((1, -1))) for _ in range(length)]


def random_interval(rng: random.Random, n: int) -> ArcInterval:
    N = 2 * n + 2
    return ArcInterval(n, rng.randrange(N), rng.randrange(2, N - 1))


def random_curve(rng: random.Random, n: int, twists: int = 4) -> Curve:
    N = 2 * n + 2
    return apply_twists(random_interval(rng, n).curve(), random_twist_word(rng, N, twists))


def _profile(c: Curve) -> Tuple[int, int]:
    a, b = puncture_partition(c)
    return tuple(sorted((len(a), len(b))))


def equivariance_suite(n: int, trials: int, seed: int = 0, *, max_twists: int = 4) -> dict:
    """Random half-twist words must not change intersection numbers or puncture profiles.

    Compression sides are checked against the wicket moves of the matching
    ball, which extend over the tangle.
    """
    from .vertices import side_moves

    if trials < 1:
        raise ValueError("trials must be positive")
    N = 2 * n + 2
    master = random.Random(seed)
    failures: List[dict] = []
    for t in range(trials):
        rng = random.Random(master.getrandbits(64))
        a = random_curve(rng, n, rng.randrange(0, max_twists + 1))
        b = random_curve(rng, n, rng.randrange(0, max_twists + 1))
        word = random_twist_word(rng, N, rng.randrange(0, max_twists + 1))
        a2, b2 = apply_twists(a, word), apply_twists(b, word)
        problems = []
        if geometric_intersection(a, b) != geometric_intersection(a2, b2):
            problems.append("intersection")
        if is_essential(a) != is_essential(a2):
            problems.append("essential")
        if _profile(a) != _profile(a2):
            problems.append("profile")
        if is_essential(a):
            side = compression_side(a)
            if side is not None:
                moves = side_moves(n, side)
                picks = [moves[rng.randrange(len(moves))] for _ in range(rng.randrange(1, 3))]
                moved = a
                for mv in picks:
                    moved = apply_twists(moved, mv)
                if compression_side(moved) is not side:
                    problems.append("compression_side")
        if problems:
            failures.append(
                {"trial": t, "checks": problems, "a": a.to_json(), "b": b.to_json(), "word": word}
            )
    return {"n": n, "trials": trials, "seed": seed, "counterexamples": failures}


def arc_pair_trials(n: int, samples: int, seed: int = 0) -> List[dict]:
    """Engine against the closed form on random pairs of arc neighbourhoods."""
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        a, b = random_interval(rng, n), random_interval(rng, n)
        o = arc_pair_intersection(a, b)
        e = geometric_intersection(a.curve(), b.curve())
        if o != e:
            out.append({"a": [a.start, a.length], "b": [b.start, b.length], "oracle": o, "engine": e})
    return out


def abelianization_consistent(curve: Curve) -> bool:
    """The raw word abelianizes to the indicator of one side, modulo the all-ones relation."""
    N = len(curve.weights)
    ab = raw_peripheral_word(curve).abelianization(N)
    first, second = puncture_partition(curve)
    values = [{ab[v] for v in side} for side in (first, second)]
    if any(len(vals) != 1 for vals in values):
        return False
    (x,), (y,) = values
    return abs(x - y) == 1


def reference_matrix_agreement(n: int) -> List[dict]:
    """Compare engine and closed form on every pair of reference arcs."""
    from .layout import build_layout, reference_arc

    layout = build_layout(n)
    refs = {}
    for i in range(1, n + 1):
        for s in "+-":
            arc = reference_arc(layout, i, s)
            refs[(i, s)] = ArcInterval(n, arc[0], len(arc) + 1)
    out = []
    keys = sorted(refs)
    for x in keys:
        for y in keys:
            o = arc_pair_intersection(refs[x], refs[y])
            e = geometric_intersection(refs[x].curve(), refs[y].curve())
            if o != e:
                out.append({"pair": [list(x), list(y)], "oracle": o, "engine": e})
    return out
