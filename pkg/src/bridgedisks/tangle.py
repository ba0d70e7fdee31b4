"""Which ball, if any, a curve on P compresses into.

pi_1 of a trivial tangle complement is free on the meridians of its bridges.
The inclusion of P sends the two puncture loops at the ends of a bridge to
that bridge's meridian and its inverse, so a curve bounds a disk in
B^± - K exactly when the image of its word is cyclically trivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .curve import Curve, CurveError, is_essential, peripheral_word
from .layout import LOWER, UPPER, BridgeLayout, build_layout
from .words import LOWER_MERIDIAN, PUNCTURE, UPPER_MERIDIAN, FreeWord


class Side(str, Enum):
    ABOVE = "above"
    BELOW = "below"

    @property
    def sign(self) -> str:
        return "+" if self is Side.ABOVE else "-"

    @classmethod
    def of_sign(cls, sign: str) -> "Side":
        return cls.ABOVE if sign == "+" else cls.BELOW


class InessentialCurve(CurveError):
    code = "InessentialCurve"


class NoCompression(CurveError):
    code = "NoCompression"


def meridian_image(word: FreeWord, layout: BridgeLayout, side: Side) -> FreeWord:
    if word.alphabet != PUNCTURE:
        raise ValueError("expected a word in the puncture generators")
    ball = UPPER if side is Side.ABOVE else LOWER
    N = layout.puncture_count
    sub = {}
    for s in layout.segments:
        if s.side == ball:
            sub[s.idx] = (s.bridge, 1)
            sub[(s.idx + 1) % N] = (s.bridge, -1)
    letters = tuple((sub[g][0], sub[g][1] * e) for g, e in word.letters)
    alphabet = UPPER_MERIDIAN if side is Side.ABOVE else LOWER_MERIDIAN
    return FreeWord(alphabet, letters).cyclically_reduced()


def compresses(curve: Curve, side: Side) -> bool:
    return meridian_image(peripheral_word(curve), curve.layout, side).is_cyclically_trivial()


def compression_side(curve: Curve) -> Optional[Side]:
    """``Side.ABOVE``/``Side.BELOW``, or ``None`` when the curve compresses nowhere."""
    if not is_essential(curve):
        raise InessentialCurve("curve bounds a disk with at most one puncture")
    above = compresses(curve, Side.ABOVE)
    below = compresses(curve, Side.BELOW)
    if above and below:
        raise AssertionError("curve compresses on both sides; the unknot is connected")
    if above:
        return Side.ABOVE
    if below:
        return Side.BELOW
    return None


@dataclass(frozen=True)
class DiskVertex:
    curve: Curve
    side: Side
    label: Optional[tuple] = field(default=None, compare=False)

    @property
    def key(self) -> tuple:
        return self.curve.key

    def to_json(self) -> dict:
        data = self.curve.to_json()
        data["side"] = self.side.value
        if self.label is not None:
            data["label"] = {"i": self.label[0], "side": self.label[1]}
        return data


def make_vertex(curve: Curve) -> DiskVertex:
    side = compression_side(curve)
    if side is None:
        raise NoCompression("curve bounds no compressing disk on either side")
    return DiskVertex(curve, side)
