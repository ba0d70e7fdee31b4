"""The partition of compressing disks into classes C_i^± and the retraction onto the octahedron.

For an upper disk, walk the even indices i = 2, 4, ...: the first lower
reference disk D_i^- it meets puts it in C_i^+; if instead it already sits
inside E_i (the disk bounded by D_i^-) it must be D_{i-1}^+.  A disk that
survives the walk must be D_n^+ (n odd).  Lower disks mirror this with the
odd upper references.  Every "must be" is asserted, so a failure is a
counterexample to the partition (or a bug).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from .curve import Curve, reference_curve
from .intersection import RegionSide, are_disjoint, geometric_intersection, is_isotopic, region_side
from .layout import MINUS, PLUS, build_layout, reference_region
from .tangle import DiskVertex, Side


class Unclassifiable(RuntimeError):
    code = "Unclassifiable"


@dataclass(frozen=True, order=True)
class ClassLabel:
    i: int
    side: str  # '+' or '-'

    @property
    def singleton(self) -> bool:
        # C_i^+ is {D_i^+} for odd i; C_i^- is {D_i^-} for even i
        return (self.i % 2 == 1) == (self.side == PLUS)

    def to_json(self) -> dict:
        return {"i": self.i, "side": self.side}


@lru_cache(maxsize=None)
def _ref(n: int, i: int, sign: str) -> Curve:
    return reference_curve(build_layout(n), i, sign)


@lru_cache(maxsize=1 << 16)
def classify(vertex: DiskVertex) -> ClassLabel:
    curve = vertex.curve
    n = curve.n
    layout = build_layout(n)
    mine, theirs = (PLUS, MINUS) if vertex.side is Side.ABOVE else (MINUS, PLUS)
    first = 2 if vertex.side is Side.ABOVE else 1
    for i in range(first, n + 1, 2):
        if geometric_intersection(curve, _ref(n, i, theirs)) > 0:
            return ClassLabel(i, mine)
        if region_side(curve, reference_region(layout, i, theirs)) is RegionSide.INSIDE:
            if i - 1 < 1:
                raise Unclassifiable(f"{curve!r} lies inside E_1 but is not an upper disk")
            if not is_isotopic(curve, _ref(n, i - 1, mine)):
                raise Unclassifiable(f"{curve!r} lies in E_{i} but is not D_{i-1}{mine}")
            return ClassLabel(i - 1, mine)
    # terminal singleton class: n odd above, n even below
    if (n % 2 == 1) == (vertex.side is Side.ABOVE):
        if is_isotopic(curve, _ref(n, n, mine)):
            return ClassLabel(n, mine)
        raise Unclassifiable(f"{curve!r} avoids every reference yet is not D_{n}{mine}")
    raise Unclassifiable(f"{curve!r} exhausted the reference walk without a class")


def reference_vertex(n: int, label: ClassLabel) -> DiskVertex:
    return DiskVertex(_ref(n, label.i, label.side), Side.of_sign(label.side), (label.i, label.side))


def retraction_image(vertex: DiskVertex) -> DiskVertex:
    return reference_vertex(vertex.curve.n, classify(vertex))


def antipodal(a: ClassLabel, b: ClassLabel) -> bool:
    return a.i == b.i and a.side != b.side


class EdgeVerdict(str, Enum):
    SIMPLICIAL = "simplicial"
    VIOLATION = "violation"


def check_edge(u: DiskVertex, v: DiskVertex) -> EdgeVerdict:
    if not are_disjoint(u.curve, v.curve) or is_isotopic(u.curve, v.curve):
        raise ValueError("check_edge needs two disjoint, non-isotopic vertices")
    return EdgeVerdict.VIOLATION if antipodal(classify(u), classify(v)) else EdgeVerdict.SIMPLICIAL


def labelled(vertex: DiskVertex) -> DiskVertex:
    lab = classify(vertex)
    return DiskVertex(vertex.curve, vertex.side, (lab.i, lab.side))


@dataclass(frozen=True)
class ClaimInstance:
    """One application of the inductive step: hypotheses met, conclusion checked.

    ``index`` is the reference disk D_index whose region E_index holds the
    curve; ``expected`` is the label the curve must then be isotopic to
    (``None`` when no such disk can exist).
    """

    index: int
    expected: Tuple[int, str]
    holds: bool

    def to_json(self) -> dict:
        return {"index": self.index, "expected": list(self.expected), "holds": self.holds}


def claim_instances(vertex: DiskVertex) -> List[ClaimInstance]:
    """Instances of the region claims whose hypotheses the vertex satisfies.

    Walking the opposite-side references D_i in order, as long as the curve
    is disjoint from D_i: if it lies inside E_i it must be isotopic to the
    previous same-side reference; otherwise move on.  After the last
    opposite-side reference, a terminal same-side reference D_n must absorb
    it.  Unlike :func:`classify` this never stops at a class by definition
    and inspects the hypotheses literally.
    """
    curve = vertex.curve
    n = curve.n
    layout = build_layout(n)
    mine, theirs = (PLUS, MINUS) if vertex.side is Side.ABOVE else (MINUS, PLUS)
    first = 2 if vertex.side is Side.ABOVE else 1
    out = []
    for i in range(first, n + 1, 2):
        if geometric_intersection(curve, _ref(n, i, theirs)) > 0:
            return out
        if region_side(curve, reference_region(layout, i, theirs)) is RegionSide.INSIDE:
            holds = i > 1 and is_isotopic(curve, _ref(n, i - 1, mine))
            out.append(ClaimInstance(i, (i - 1, mine), holds))
            return out
    if (n % 2 == 1) == (vertex.side is Side.ABOVE):
        out.append(ClaimInstance(n, (n, mine), is_isotopic(curve, _ref(n, n, mine))))
    else:
        out.append(ClaimInstance(n, (n, mine), False))
    return out
