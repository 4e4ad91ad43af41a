"""Arithmetic checks on measures of approximate squares of one component.

These hold for totally disconnected carpets with a vacant row and a doubling
uniform Bernoulli measure; every check refuses carpets not certified in that
class.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence
import logging

from ..core.carpet import CarpetSpec, TriState, ell, is_doubling, profile, total_disconnectedness
from ..errors import ClassViolation
from ..geometry.squares import ApproximateSquare, contains
from .colors import color_of
from .measures import mu_component, mu_square

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RatioWitness:
    value: Fraction
    check: bool
    bound: int

    @property
    def numerator(self) -> int:
        return self.value.numerator


def certify_tvd(spec: CarpetSpec) -> None:
    """Raise ClassViolation unless the carpet is certified in M_{t,v,d}"""
    prof = profile(spec)
    if total_disconnectedness(prof) is not TriState.YES:
        raise ClassViolation("Carpet is not certified totally disconnected")
    if not prof.has_vacant_row:
        raise ClassViolation("Carpet has no vacant row")
    if not is_doubling(prof):
        raise ClassViolation("Uniform Bernoulli measure is not doubling")


def _is_positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def ratio_witness(spec: CarpetSpec, members: Sequence[ApproximateSquare],
                  B: ApproximateSquare) -> RatioWitness:
    """mu(U)/mu(B) scaled by the squared product of the distinct row counts"""
    certify_tvd(spec)
    if B not in members:
        raise ValueError("B must be a member of the component")

    prof = profile(spec)
    value = mu_component(spec, members) / mu_square(spec, B) * prof.a_star_product ** 2
    return RatioWitness(
        value=value,
        check=_is_positive_integer(value),
        bound=len(members) * spec.n ** (2 * spec.m),
    )


def member_ratio_check(spec: CarpetSpec, B1: ApproximateSquare, B2: ApproximateSquare) -> bool:
    """mu(B1)/mu(B2) scaled by the squared product is an integer in (0, n^2m)"""
    certify_tvd(spec)
    prof = profile(spec)
    value = mu_square(spec, B1) / mu_square(spec, B2) * prof.a_star_product ** 2
    return _is_positive_integer(value) and value < spec.n ** (2 * spec.m)


def offspring_ratio_denominator_check(spec: CarpetSpec, B: ApproximateSquare,
                                      B_prime: ApproximateSquare) -> bool:
    if B_prime.rank != B.rank + 1 or not contains(B, B_prime):
        raise ValueError("B_prime must be a direct offspring of B")

    prof = profile(spec)
    scale = prof.a_star_product * prof.N ** (ell(1, spec) + 1)
    value = mu_square(spec, B_prime) / mu_square(spec, B) * scale
    return value.denominator == 1


def color_rigidity_check(spec: CarpetSpec, members: Sequence[ApproximateSquare]) -> bool:
    """Every two members' colors differ in at most two positions"""
    certify_tvd(spec)
    colors = [color_of(spec, q) for q in members]
    for first, second in combinations(colors, 2):
        if first.differences(second) > 2:
            logger.debug(f"Colors {first} and {second} differ in more than two positions")
            return False
    return True
