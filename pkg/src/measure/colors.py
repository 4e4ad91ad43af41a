from dataclasses import dataclass
from typing import Tuple

from ..core.carpet import CarpetSpec, profile
from ..geometry.squares import ApproximateSquare


@dataclass(frozen=True)
class Color:
    """Word over the distinct nonzero row counts; the empty word has product 1"""
    word: Tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.word)

    @property
    def product(self) -> int:
        total = 1
        for letter in self.word:
            total *= letter
        return total

    @property
    def head(self) -> int:
        """First letter, chi(c)"""
        if not self.word:
            raise ValueError("The empty color has no first letter")
        return self.word[0]

    def shift(self) -> "Color":
        return Color(self.word[1:])

    def concat(self, other: Tuple[int, ...]) -> "Color":
        return Color(self.word + tuple(other))

    def differences(self, other: "Color") -> int:
        if len(self) != len(other):
            raise ValueError("Colors of different lengths are not comparable")
        return sum(1 for a, b in zip(self.word, other.word) if a != b)

    def __str__(self) -> str:
        return "(" + ",".join(str(letter) for letter in self.word) + ")"


def color_of(spec: CarpetSpec, q: ApproximateSquare) -> Color:
    prof = profile(spec)
    return Color(tuple(prof.a[y] for y in q.extension))
