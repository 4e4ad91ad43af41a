from itertools import combinations

import pytest

from src.errors import ClassViolation
from src.geometry.components import PieceKind, components
from src.geometry.squares import direct_offsprings, enumerate_squares
from src.measure.doubling import (
    certify_tvd,
    color_rigidity_check,
    member_ratio_check,
    offspring_ratio_denominator_check,
    ratio_witness,
)


def _partitions(spec, k_max=3):
    for k in range(1, k_max + 1):
        yield components(spec, k, PieceKind.SQUARE)


def test_certification(ex17_D, ex17_Dprime, ex18_D, full_grid):
    certify_tvd(ex17_D)
    certify_tvd(ex18_D)
    with pytest.raises(ClassViolation):
        certify_tvd(ex17_Dprime)
    with pytest.raises(ClassViolation):
        certify_tvd(full_grid)


def test_checks_refuse_uncertified_carpets(ex17_Dprime):
    square = next(enumerate_squares(ex17_Dprime, 1))
    with pytest.raises(ClassViolation):
        ratio_witness(ex17_Dprime, [square], square)
    with pytest.raises(ClassViolation):
        member_ratio_check(ex17_Dprime, square, square)
    with pytest.raises(ClassViolation):
        color_rigidity_check(ex17_Dprime, [square])


def test_singleton_ratio(ex18_D):
    square = next(enumerate_squares(ex18_D, 2))
    witness = ratio_witness(ex18_D, [square], square)
    assert witness.value == 18 ** 2
    assert witness.check


def test_ratio_witness_is_integral(ex17_D, ex18_D, ex18_Dprime):
    for spec in (ex17_D, ex18_D, ex18_Dprime):
        for partition in _partitions(spec):
            for index in range(partition.count):
                members = partition.members(index)
                for B in members:
                    witness = ratio_witness(spec, members, B)
                    assert witness.check
                    assert witness.numerator <= witness.bound


def test_member_ratios(ex17_D, ex18_D, ex18_Dprime):
    for spec in (ex17_D, ex18_D, ex18_Dprime):
        for partition in _partitions(spec):
            for index in range(partition.count):
                members = partition.members(index)
                for B1, B2 in combinations(members, 2):
                    assert member_ratio_check(spec, B1, B2)
                    assert member_ratio_check(spec, B2, B1)


def test_offspring_ratio_denominators(ex17_D, ex18_D, ex18_Dprime):
    for spec in (ex17_D, ex18_D, ex18_Dprime):
        for k in range(1, 4):
            for square in enumerate_squares(spec, k):
                for child in direct_offsprings(spec, square):
                    assert offspring_ratio_denominator_check(spec, square, child)


def test_offspring_ratio_needs_an_offspring(ex18_D):
    first, second = list(enumerate_squares(ex18_D, 1))[:2]
    stranger = direct_offsprings(ex18_D, second)[0]
    with pytest.raises(ValueError):
        offspring_ratio_denominator_check(ex18_D, first, stranger)


def test_color_rigidity(ex17_D, ex18_D, ex18_Dprime):
    for spec in (ex17_D, ex18_D, ex18_Dprime):
        for partition in _partitions(spec):
            for index in range(partition.count):
                assert color_rigidity_check(spec, partition.members(index))
