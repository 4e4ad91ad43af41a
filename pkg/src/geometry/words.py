from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple


@dataclass(frozen=True)
class SymbolWord:
    """Finite word over {0, ..., alphabet_bound - 1}; the empty word is allowed"""
    alphabet_bound: int
    symbols: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.alphabet_bound < 1:
            raise ValueError(f"alphabet_bound must be positive, got {self.alphabet_bound}")
        for symbol in self.symbols:
            if not 0 <= symbol < self.alphabet_bound:
                raise ValueError(f"Symbol {symbol} outside [0, {self.alphabet_bound})")

    @classmethod
    def empty(cls, alphabet_bound: int) -> "SymbolWord":
        return cls(alphabet_bound, ())

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def concat(self, other: Iterable[int]) -> "SymbolWord":
        return SymbolWord(self.alphabet_bound, self.symbols + tuple(other))

    __mul__ = concat

    def shift(self) -> "SymbolWord":
        """Drop the first symbol"""
        return SymbolWord(self.alphabet_bound, self.symbols[1:])

    def prefix(self, q: int) -> "SymbolWord":
        if q < 0 or q > len(self.symbols):
            raise ValueError(f"Prefix length {q} outside [0, {len(self.symbols)}]")
        return SymbolWord(self.alphabet_bound, self.symbols[:q])

    def value(self) -> int:
        """Integer whose base-alphabet_bound expansion is this word"""
        total = 0
        for symbol in self.symbols:
            total = total * self.alphabet_bound + symbol
        return total

    @classmethod
    def from_value(cls, value: int, length: int, alphabet_bound: int) -> "SymbolWord":
        if value < 0 or value >= alphabet_bound ** length:
            raise ValueError(f"Value {value} does not fit in {length} symbols")
        symbols = []
        for _ in range(length):
            value, symbol = divmod(value, alphabet_bound)
            symbols.append(symbol)
        return cls(alphabet_bound, tuple(reversed(symbols)))

    def successor(self) -> Optional["SymbolWord"]:
        """Word of the same length adjacent to and above this one, or None"""
        value = self.value() + 1
        if value >= self.alphabet_bound ** len(self.symbols):
            return None
        return SymbolWord.from_value(value, len(self.symbols), self.alphabet_bound)

    def __str__(self) -> str:
        return ".".join(str(symbol) for symbol in self.symbols) or "()"
