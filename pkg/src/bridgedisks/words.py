"""Words in free groups, compared up to cyclic reduction, rotation and inversion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

Letter = Tuple[int, int]  # (generator index, exponent +1/-1)

PUNCTURE = "x"
UPPER_MERIDIAN = "m"
LOWER_MERIDIAN = "l"


def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    w = list(free_reduce(letters))
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo][0] == w[hi - 1][0] and w[lo][1] == -w[hi - 1][1]:
        lo += 1
        hi -= 1
    return tuple(w[lo:hi])


def invert(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    return tuple((g, -e) for g, e in reversed(letters))


def _key(letters: Sequence[Letter]):
    return tuple((g, -e) for g, e in letters)  # x before x^-1


def _min_rotation(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    if not letters:
        return letters
    return min((letters[k:] + letters[:k] for k in range(len(letters))), key=_key)


@dataclass(frozen=True)
class FreeWord:
    alphabet: str
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return FreeWord(self.alphabet, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            f"{self.alphabet}{g}" + ("" if e == 1 else "^-1") for g, e in self.letters
        )

    def inverse(self) -> "FreeWord":
        return FreeWord(self.alphabet, invert(self.letters))

    def cyclically_reduced(self) -> "FreeWord":
        return FreeWord(self.alphabet, cyclic_reduce(self.letters))

    def is_cyclically_trivial(self) -> bool:
        return not cyclic_reduce(self.letters)

    def normal_form(self) -> "FreeWord":
        """Least representative over rotations of the cyclic reduction and its inverse."""
        w = cyclic_reduce(self.letters)
        best = min(_min_rotation(w), _min_rotation(invert(w)), key=_key)
        return FreeWord(self.alphabet, best)

    def equivalent(self, other: "FreeWord") -> bool:
        return self.alphabet == other.alphabet and self.normal_form() == other.normal_form()

    def abelianization(self, size: int) -> Tuple[int, ...]:
        v = [0] * size
        for g, e in self.letters:
            v[g] += e
        return tuple(v)

    def to_json(self) -> list:
        return [[f"{self.alphabet}{g}", e] for g, e in self.letters]


def word(alphabet: str, *gens: int) -> FreeWord:
    """Shorthand: ``word("x", 0, 1)`` is x0 x1 and ``~g`` stands for x_g^-1."""
    return FreeWord(alphabet, tuple((g, 1) if g >= 0 else (~g, -1) for g in gens))
