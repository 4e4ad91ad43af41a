"""Mesh-box counts of the approximate-square cover.

Mesh boxes are half-open [i d, (i+1) d) x [j d, (j+1) d) with d = n^-q. A
rank-q approximate square is exactly one mesh column wide and at least one
mesh row tall, so it meets between 1 and m+1 mesh rows.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence
import logging

import numpy as np
from mpmath import mp, mpf
from scipy import stats

from ..config import DEFAULT_PRECISION_BITS
from ..core.carpet import CarpetSpec, ell, profile
from ..errors import ConfigError
from .squares import BasicRectangle, enumerate_squares

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoxCountBounds:
    count: int
    reference: mpf
    c2: int
    lower: mpf
    upper: mpf

    @property
    def holds(self) -> bool:
        return self.lower <= self.count <= self.upper


@dataclass(frozen=True)
class BoxDimensionEstimate:
    depths: List[int]
    counts: List[int]
    slope: float
    intercept: float
    r_squared: float


def box_count(spec: CarpetSpec, q: int, restrict: Optional[BasicRectangle] = None,
              budget: Optional[int] = None) -> int:
    """Number of n^-q mesh boxes met by the rank-q cover (inside restrict if given)"""
    if q < 1:
        raise ConfigError(f"box_count needs q >= 1, got {q}")
    scale = spec.n ** q
    rows = spec.m ** ell(q, spec)

    covered = set()
    for square in enumerate_squares(spec, q, budget, within=restrict):
        X, Y = square.cell
        low = Y * scale // rows
        high = -(-(Y + 1) * scale // rows)
        for row in range(low, high):
            covered.add((X, row))

    logger.debug(f"Depth {q}: cover meets {len(covered)} mesh boxes")
    return len(covered)


def box_count_bounds(spec: CarpetSpec, q: int, restrict: Optional[BasicRectangle] = None,
                     budget: Optional[int] = None,
                     precision_bits: int = DEFAULT_PRECISION_BITS) -> BoxCountBounds:
    """Compare the cover count with mu(R) d^-dim_B up to the constant 2s(m+2)"""
    prof = profile(spec)
    count = box_count(spec, q, restrict, budget)
    k = restrict.rank if restrict is not None else 0
    c2 = 2 * prof.s * (spec.m + 2)

    with mp.workprec(precision_bits):
        # d^-dim_B = (N s^(1/sigma - 1))^q
        inv_sigma = mp.log(spec.n) / mp.log(spec.m)
        growth = mpf(prof.N) * mpf(prof.s) ** (inv_sigma - 1)
        reference = growth ** q / mpf(prof.N) ** k
        return BoxCountBounds(
            count=count,
            reference=reference,
            c2=c2,
            lower=reference / c2,
            upper=reference * c2,
        )


def box_dimension_estimate(spec: CarpetSpec, depths: Sequence[int],
                           budget: Optional[int] = None) -> BoxDimensionEstimate:
    """Least-squares slope of log count against log(1/d)"""
    depths = list(depths)
    if len(depths) < 2:
        raise ValueError("box_dimension_estimate needs at least two depths")

    counts = [box_count(spec, q, budget=budget) for q in depths]
    log_inv_delta = np.array(depths, dtype=float) * np.log(spec.n)
    log_counts = np.log(np.array(counts, dtype=float))
    fit = stats.linregress(log_inv_delta, log_counts)

    return BoxDimensionEstimate(
        depths=depths,
        counts=counts,
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        r_squared=float(fit.rvalue ** 2),
    )
