from dataclasses import dataclass
from enum import Enum
from typing import Dict, Hashable, List, Optional, Sequence
import logging

from ..core.carpet import CarpetSpec, ell
from .squares import Piece, enumerate_basic, enumerate_squares

logger = logging.getLogger(__name__)


class PieceKind(str, Enum):
    TILDE = "tilde"
    SQUARE = "square"


class UnionFind:
    """
    Disjoint sets with union by rank and grandparent path compression.
    Nodes are added lazily by find().
    """

    def __init__(self) -> None:
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Dict[Hashable, int] = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0
            return x

        while self.parent[x] != x:
            # Path compression
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, x, y) -> bool:
        """Merge the groups of x and y; False if they were already joined"""
        root_x = self.find(x)
        root_y = self.find(y)
        if root_x == root_y:
            return False

        if self.rank[root_x] < self.rank[root_y]:
            root_x, root_y = root_y, root_x
        self.parent[root_y] = root_x
        if self.rank[root_x] == self.rank[root_y]:
            self.rank[root_x] += 1
        return True

    def connected(self, x, y) -> bool:
        return self.find(x) == self.find(y)

    def get_groups(self) -> Dict[Hashable, List[Hashable]]:
        groups: Dict[Hashable, List[Hashable]] = {}
        for node in self.parent:
            groups.setdefault(self.find(node), []).append(node)
        return groups


@dataclass
class ComponentPartition:
    rank: int
    kind: PieceKind
    pieces: List[Piece]
    cells: List[List[int]]

    @property
    def count(self) -> int:
        return len(self.cells)

    @property
    def sizes(self) -> List[int]:
        return [len(cell) for cell in self.cells]

    @property
    def max_cardinality(self) -> int:
        return max(self.sizes, default=0)

    def members(self, index: int) -> List[Piece]:
        return [self.pieces[i] for i in self.cells[index]]


@dataclass(frozen=True)
class RankStats:
    rank: int
    components: int
    max_cardinality: int
    pieces: int


_FORWARD_NEIGHBOURS = ((1, -1), (1, 0), (1, 1), (0, 1))


def partition_pieces(pieces: Sequence[Piece], rank: int, kind: PieceKind) -> ComponentPartition:
    """Group pieces of one grid into components of their closed union.

    Pieces are cells of a common grid, so two of them touch iff their cell
    indices differ by at most one in both coordinates.
    """
    pieces = sorted(pieces, key=lambda piece: piece.cell)
    index_of = {piece.cell: i for i, piece in enumerate(pieces)}

    uf = UnionFind()
    for i, piece in enumerate(pieces):
        uf.find(i)
        X, Y = piece.cell
        for dx, dy in _FORWARD_NEIGHBOURS:
            j = index_of.get((X + dx, Y + dy))
            if j is not None:
                uf.join(i, j)

    cells = sorted(sorted(group) for group in uf.get_groups().values())
    return ComponentPartition(rank=rank, kind=kind, pieces=list(pieces), cells=cells)


def components(spec: CarpetSpec, k: int, kind: PieceKind = PieceKind.TILDE,
               budget: Optional[int] = None) -> ComponentPartition:
    kind = PieceKind(kind)
    if kind is PieceKind.TILDE:
        pieces = list(enumerate_basic(spec, k, budget))
    else:
        pieces = list(enumerate_squares(spec, k, budget))

    partition = partition_pieces(pieces, k, kind)
    logger.info(f"Rank {k} {kind.value} approximation: {len(pieces)} pieces in {partition.count} components")
    return partition


def component_stats(spec: CarpetSpec, k_max: int, kind: PieceKind = PieceKind.TILDE,
                    budget: Optional[int] = None) -> List[RankStats]:
    """Empirical component counts and largest member counts for ranks 1..k_max"""
    table = []
    for k in range(1, k_max + 1):
        partition = components(spec, k, kind, budget)
        table.append(RankStats(
            rank=k,
            components=partition.count,
            max_cardinality=partition.max_cardinality,
            pieces=len(partition.pieces),
        ))
    return table


def projection_dichotomy(spec: CarpetSpec, partition: ComponentPartition, index: int) -> bool:
    """Check that a component's vertical projection meets one or two adjacent bands.

    The bands are those of the y-prefixes of length ell(k) - 1; two bands must
    be adjacent in lexicographic order.
    """
    if partition.kind is not PieceKind.SQUARE:
        raise ValueError("projection_dichotomy applies to approximate-square partitions")

    depth = ell(partition.rank, spec) - 1
    prefixes = sorted({piece.y_word.prefix(depth).value() for piece in partition.members(index)})
    if len(prefixes) == 1:
        return True
    return len(prefixes) == 2 and prefixes[1] == prefixes[0] + 1
