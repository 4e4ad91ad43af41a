"""Exact uniform Bernoulli measure of cylinders, approximate squares and components"""
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable

from ..core.carpet import CarpetSpec, ell, profile
from ..errors import ConfigError
from ..geometry.squares import ApproximateSquare
from .colors import Color, color_of


def mu_cylinder(spec: CarpetSpec, k: int) -> Fraction:
    if k < 0:
        raise ConfigError(f"mu_cylinder needs k >= 0, got {k}")
    return Fraction(1, len(spec.digits) ** k)


def mu_square(spec: CarpetSpec, q: ApproximateSquare) -> Fraction:
    return Fraction(color_of(spec, q).product, len(spec.digits) ** len(q.y_word))


def mu_component(spec: CarpetSpec, members: Iterable[ApproximateSquare]) -> Fraction:
    return sum((mu_square(spec, q) for q in members), Fraction(0))


def offspring_color_census(spec: CarpetSpec, q: ApproximateSquare) -> Dict[Color, int]:
    """Colors of the direct offsprings of q with their multiplicities, in closed form"""
    prof = profile(spec)
    k = q.rank
    lk, lk1 = ell(k, spec), ell(k + 1, spec)
    census: Dict[Color, int] = {}

    if lk == k:
        for word in product(prof.alphabet, repeat=lk1 - k - 1):
            census[Color(word)] = prof.N * prof.word_multiplicity(word)
        return census

    parent = color_of(spec, q)
    for word in product(prof.alphabet, repeat=lk1 - lk):
        census[parent.concat(word).shift()] = parent.head * prof.word_multiplicity(word)
    return census
