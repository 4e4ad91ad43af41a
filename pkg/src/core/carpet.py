"""Carpet specifications, derived profiles and the exact arithmetic of sigma.

A carpet K(n, m, D) is given by a horizontal expansion n, a vertical
expansion m < n and a digit set D of (column, row) pairs.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Optional, Tuple
import logging

from ..errors import BadShape, ConfigError, DuplicateDigit, EmptyDigitSet, GridViolation, MalformedCarpet
from .arithmetic import floor_log_ratio_guess, primitive_power

logger = logging.getLogger(__name__)

Digit = Tuple[int, int]


class TriState(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class SigmaKind(str, Enum):
    RATIONAL = "rational"
    IRRATIONAL = "irrational"


@dataclass(frozen=True)
class SigmaClass:
    kind: SigmaKind
    p: Optional[int] = None
    q: Optional[int] = None
    base: Optional[int] = None

    @property
    def is_rational(self) -> bool:
        return self.kind is SigmaKind.RATIONAL

    @property
    def value(self) -> Optional[Fraction]:
        return Fraction(self.p, self.q) if self.is_rational else None


@dataclass(frozen=True)
class CarpetSpec:
    n: int
    m: int
    digits: Tuple[Digit, ...]

    def __post_init__(self):
        _validate(self.n, self.m, self.digits)
        object.__setattr__(self, "digits", tuple(sorted(self.digits)))

    @property
    def digit_set(self) -> frozenset:
        return frozenset(self.digits)


@dataclass(frozen=True)
class CarpetProfile:
    n: int
    m: int
    a: Tuple[int, ...]
    N: int
    E_rows: Tuple[int, ...]
    s: int
    a_star: Tuple[int, ...]
    M: Tuple[int, ...]
    has_vacant_row: bool
    sigma_class: SigmaClass
    rows: Mapping[int, Tuple[int, ...]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def p_tilde(self) -> int:
        return len(self.a_star)

    @property
    def alphabet(self) -> Tuple[int, ...]:
        return self.a_star

    @property
    def a_star_product(self) -> int:
        product = 1
        for value in self.a_star:
            product *= value
        return product

    @property
    def a_max(self) -> int:
        return self.a_star[0]

    @property
    def a_min(self) -> int:
        return self.a_star[-1]

    def multiplicity(self, value: int) -> int:
        """Number of rows whose count equals value (M(.) on one letter)"""
        try:
            return self.M[self.a_star.index(value)]
        except ValueError:
            return 0

    def word_multiplicity(self, word: Iterable[int]) -> int:
        """M(c1...ck): the number of row words carrying this color"""
        total = 1
        for value in word:
            total *= self.multiplicity(value)
        return total


def _validate(n: int, m: int, digits: Iterable[Digit]) -> None:
    if not isinstance(n, int) or not isinstance(m, int) or isinstance(n, bool) or isinstance(m, bool):
        raise MalformedCarpet(f"n and m must be integers, got {n!r}, {m!r}")
    if m < 2 or m >= n:
        raise BadShape(f"Expansion pair must satisfy 2 <= m < n, got n={n}, m={m}")

    digits = list(digits)
    if not digits:
        raise EmptyDigitSet("Digit set is empty")

    seen = set()
    for digit in digits:
        i, j = digit
        if not (0 <= i < n and 0 <= j < m):
            raise GridViolation(f"Digit {digit} outside the {n}x{m} grid")
        if digit in seen:
            raise DuplicateDigit(f"Digit {digit} appears more than once")
        seen.add(digit)


def parse_spec(raw: Mapping) -> CarpetSpec:
    """Validate a raw {"n", "m", "digits"} document into a CarpetSpec"""
    if not isinstance(raw, Mapping):
        raise MalformedCarpet(f"Carpet document must be an object, got {type(raw).__name__}")
    missing = [key for key in ("n", "m", "digits") if key not in raw]
    if missing:
        raise MalformedCarpet(f"Carpet document missing fields: {', '.join(missing)}")

    digits = []
    for entry in raw["digits"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise MalformedCarpet(f"Digit must be a pair [i, j], got {entry!r}")
        i, j = entry
        if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
            raise MalformedCarpet(f"Digit coordinates must be integers, got {entry!r}")
        digits.append((i, j))

    return CarpetSpec(n=raw["n"], m=raw["m"], digits=tuple(digits))


@lru_cache(maxsize=None)
def sigma_classify(n: int, m: int) -> SigmaClass:
    """Decide whether sigma = log m / log n is rational, exactly"""
    if not 2 <= m < n:
        raise BadShape(f"sigma_classify needs 2 <= m < n, got n={n}, m={m}")

    base_n, exp_n = primitive_power(n)
    base_m, exp_m = primitive_power(m)
    if base_n != base_m:
        return SigmaClass(SigmaKind.IRRATIONAL)

    g = gcd(exp_m, exp_n)
    return SigmaClass(SigmaKind.RATIONAL, p=exp_m // g, q=exp_n // g, base=base_n ** g)


@lru_cache(maxsize=4096)
def _ell(k: int, n: int, m: int) -> int:
    target = n ** k
    j = max(floor_log_ratio_guess(k, n, m), k)
    while m ** j > target:
        j -= 1
    while m ** (j + 1) <= target:
        j += 1
    return j


def ell(k: int, spec) -> int:
    """Largest j with m**j <= n**k, by exact integer comparison"""
    if k < 0:
        raise ConfigError(f"ell needs k >= 0, got {k}")
    return _ell(k, spec.n, spec.m)


@lru_cache(maxsize=256)
def profile(spec: CarpetSpec) -> CarpetProfile:
    """Derive the distribution sequence and the statistics built from it"""
    counts = Counter(j for _, j in spec.digits)
    a = tuple(counts.get(j, 0) for j in range(spec.m))
    E_rows = tuple(j for j in range(spec.m) if a[j] > 0)

    multiplicities = Counter(a[j] for j in E_rows)
    a_star = tuple(sorted(multiplicities, reverse=True))
    M = tuple(multiplicities[value] for value in a_star)

    rows = {}
    for i, j in spec.digits:
        rows.setdefault(j, []).append(i)

    prof = CarpetProfile(
        n=spec.n,
        m=spec.m,
        a=a,
        N=len(spec.digits),
        E_rows=E_rows,
        s=len(E_rows),
        a_star=a_star,
        M=M,
        has_vacant_row=any(value == 0 for value in a),
        sigma_class=sigma_classify(spec.n, spec.m),
        rows={j: tuple(sorted(cols)) for j, cols in rows.items()},
    )
    logger.debug(f"Profiled carpet n={spec.n} m={spec.m}: a={a}, N={prof.N}, s={prof.s}")
    return prof


def is_doubling(p: CarpetProfile) -> bool:
    a = p.a
    if a[0] * a[-1] == 0:
        return True
    if all(a[j] * a[j + 1] == 0 for j in range(len(a) - 1)):
        return True
    return a[0] == a[-1]


def is_regular(p: CarpetProfile) -> bool:
    return len(p.a_star) == 1


def total_disconnectedness(p: CarpetProfile) -> TriState:
    """Certify total disconnectedness; only decidable when a row is vacant"""
    if not p.has_vacant_row:
        return TriState.UNKNOWN
    if all(value < p.n for value in p.a):
        return TriState.YES
    return TriState.NO
