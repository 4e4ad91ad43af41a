"""Basic rectangles and approximate squares of a carpet.

A rank-k basic rectangle is addressed by a digit word of length k; it is the
cell (X, Y) of the n^k x m^k grid. A rank-k approximate square extends the
vertical address to length ell(k) with rows from E, and is the cell (X, Y) of
the n^k x m^ell(k) grid.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Optional, Tuple, Union
import logging

from ..config import DEFAULT_ENUMERATION_BUDGET
from ..core.carpet import CarpetSpec, ell, profile
from ..errors import BudgetExceeded, ConfigError, ShapeMismatch
from .words import SymbolWord

logger = logging.getLogger(__name__)

Region = Tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class BasicRectangle:
    rank: int
    x_word: SymbolWord
    y_word: SymbolWord

    @property
    def cell(self) -> Tuple[int, int]:
        return self.x_word.value(), self.y_word.value()

    @property
    def height_exponent(self) -> int:
        return self.rank

    @property
    def digit_word(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(zip(self.x_word, self.y_word))


@dataclass(frozen=True)
class ApproximateSquare:
    rank: int
    x_word: SymbolWord
    y_word: SymbolWord

    @property
    def cell(self) -> Tuple[int, int]:
        return self.x_word.value(), self.y_word.value()

    @property
    def height_exponent(self) -> int:
        return len(self.y_word)

    @property
    def digit_word(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(zip(self.x_word, self.y_word))

    @property
    def extension(self) -> Tuple[int, ...]:
        """Vertical symbols y_{k+1} ... y_{ell(k)} beyond the digit word"""
        return self.y_word.symbols[self.rank:]


Piece = Union[BasicRectangle, ApproximateSquare]


def check_budget(requested: int, budget: Optional[int], what: str = "pieces") -> None:
    budget = DEFAULT_ENUMERATION_BUDGET if budget is None else budget
    if requested > budget:
        raise BudgetExceeded(requested, budget, what)


def count_squares(spec: CarpetSpec, k: int) -> int:
    prof = profile(spec)
    return prof.N ** k * prof.s ** (ell(k, spec) - k)


def _prefix_of(spec: CarpetSpec, within: Optional[BasicRectangle], k: int) -> Tuple[Tuple[int, int], ...]:
    if within is None:
        return ()
    if within.rank > k:
        raise ShapeMismatch(f"Restricting rectangle has rank {within.rank} > {k}")
    if within.x_word.alphabet_bound != spec.n or within.y_word.alphabet_bound != spec.m:
        raise ShapeMismatch("Restricting rectangle belongs to a different grid")
    return within.digit_word


def enumerate_basic(spec: CarpetSpec, k: int, budget: Optional[int] = None,
                    within: Optional[BasicRectangle] = None) -> Iterator[BasicRectangle]:
    """Stream the rank-k basic rectangles in lexicographic digit-word order"""
    if k < 1:
        raise ConfigError(f"enumerate_basic needs k >= 1, got {k}")
    prefix = _prefix_of(spec, within, k)
    free = k - len(prefix)
    check_budget(len(spec.digits) ** free, budget, "basic rectangles")
    logger.debug(f"Enumerating {len(spec.digits) ** free} basic rectangles at rank {k}")

    for tail in product(spec.digits, repeat=free):
        word = prefix + tail
        yield BasicRectangle(
            rank=k,
            x_word=SymbolWord(spec.n, tuple(i for i, _ in word)),
            y_word=SymbolWord(spec.m, tuple(j for _, j in word)),
        )


def enumerate_squares(spec: CarpetSpec, k: int, budget: Optional[int] = None,
                      within: Optional[BasicRectangle] = None) -> Iterator[ApproximateSquare]:
    """Stream the rank-k approximate squares, optionally inside a basic rectangle"""
    if k < 1:
        raise ConfigError(f"enumerate_squares needs k >= 1, got {k}")
    prof = profile(spec)
    prefix = _prefix_of(spec, within, k)
    free = k - len(prefix)
    extra = ell(k, spec) - k
    requested = prof.N ** free * prof.s ** extra
    check_budget(requested, budget, "approximate squares")
    logger.debug(f"Enumerating {requested} approximate squares at rank {k}")

    extensions = list(product(prof.E_rows, repeat=extra))
    for tail in product(spec.digits, repeat=free):
        word = prefix + tail
        xs = tuple(i for i, _ in word)
        ys = tuple(j for _, j in word)
        x_word = SymbolWord(spec.n, xs)
        for z in extensions:
            yield ApproximateSquare(rank=k, x_word=x_word, y_word=SymbolWord(spec.m, ys + z))


def direct_offsprings(spec: CarpetSpec, q: ApproximateSquare) -> List[ApproximateSquare]:
    """Rank-(k+1) approximate squares contained in q"""
    prof = profile(spec)
    k = q.rank
    lk, lk1 = ell(k, spec), ell(k + 1, spec)
    offsprings = []

    if lk > k:
        row = q.y_word[k]
        tails = list(product(prof.E_rows, repeat=lk1 - lk))
        for u in prof.rows.get(row, ()):
            x_word = q.x_word.concat((u,))
            for z in tails:
                offsprings.append(ApproximateSquare(k + 1, x_word, q.y_word.concat(z)))
    else:
        tails = list(product(prof.E_rows, repeat=lk1 - k - 1))
        for u, v in spec.digits:
            x_word = q.x_word.concat((u,))
            for z in tails:
                offsprings.append(ApproximateSquare(k + 1, x_word, q.y_word.concat((v,) + z)))

    return offsprings


def offspring_count(spec: CarpetSpec, q: ApproximateSquare) -> int:
    """Closed-form number of direct offsprings"""
    prof = profile(spec)
    k = q.rank
    lk, lk1 = ell(k, spec), ell(k + 1, spec)
    if lk > k:
        return prof.a[q.y_word[k]] * prof.s ** (lk1 - lk)
    return prof.N * prof.s ** (lk1 - k - 1)


def region(piece: Piece) -> Region:
    """Exact closed region (x0, x1, y0, y1) of a piece"""
    X, Y = piece.cell
    width = Fraction(1, piece.x_word.alphabet_bound ** piece.rank)
    height = Fraction(1, piece.y_word.alphabet_bound ** piece.height_exponent)
    return X * width, (X + 1) * width, Y * height, (Y + 1) * height


def contains(outer: Piece, inner: Piece) -> bool:
    ox0, ox1, oy0, oy1 = region(outer)
    ix0, ix1, iy0, iy1 = region(inner)
    return ox0 <= ix0 and ix1 <= ox1 and oy0 <= iy0 and iy1 <= oy1
