from fractions import Fraction

import pytest

from src.core.arithmetic import (
    compare_log_products,
    primitive_power,
    rational_power_exponent,
    rational_power_sign,
    signed_factorization,
)


def test_primitive_power():
    assert primitive_power(64) == (2, 6)
    assert primitive_power(27) == (3, 3)
    assert primitive_power(12) == (12, 1)
    assert primitive_power(36) == (6, 2)
    with pytest.raises(ValueError):
        primitive_power(1)


def test_signed_factorization():
    assert signed_factorization(Fraction(8, 9)) == {2: 3, 3: -2}
    assert signed_factorization(1) == {}


def test_rational_power_exponent():
    assert rational_power_exponent(8, 2) == 3
    assert rational_power_exponent(Fraction(1, 8), 2) == -3
    assert rational_power_exponent(2, 8) == Fraction(1, 3)
    assert rational_power_exponent(Fraction(4, 9), Fraction(2, 3)) == 2
    assert rational_power_exponent(1, 5) == 0
    assert rational_power_exponent(6, 2) is None
    assert rational_power_exponent(5, 1) is None


def test_rational_power_sign():
    assert rational_power_sign(27, 3, 3) == 0
    assert rational_power_sign(28, 3, 3) == 1
    assert rational_power_sign(4, 8, Fraction(2, 3)) == 0


def test_compare_log_products_exact():
    sign, certificate = compare_log_products(2, 3, 3, 2)
    assert sign == 0
    assert certificate.startswith("exact")

    sign, _ = compare_log_products(2, 3, 2, 5)
    assert sign == -1

    # log 1 = 0 on the right
    sign, certificate = compare_log_products(2, 2, 3, 1)
    assert sign == 1
    assert "vanishing" in certificate

    sign, certificate = compare_log_products(Fraction(1, 2), 3, 2, 3)
    assert sign == -1
    assert "opposite" in certificate


def test_compare_log_products_interval():
    sign, certificate = compare_log_products(2, 3, 5, 7, precision=128)
    assert sign == -1
    assert "interval" in certificate

    sign, _ = compare_log_products(5, 7, 2, 3, precision=128)
    assert sign == 1


def test_compare_log_products_rejects_nonpositive():
    with pytest.raises(ValueError):
        compare_log_products(0, 2, 3, 4)
