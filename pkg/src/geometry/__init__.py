from .words import SymbolWord
from .squares import (
    ApproximateSquare,
    BasicRectangle,
    contains,
    direct_offsprings,
    enumerate_basic,
    enumerate_squares,
    region,
)
from .components import ComponentPartition, PieceKind, component_stats, components, projection_dichotomy
from .boxcount import box_count, box_count_bounds, box_dimension_estimate
