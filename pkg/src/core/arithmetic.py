"""Exact integer and rational helpers shared by the carpet modules.

Everything here is exact except ``compare_log_products``, which falls back to
rigorous ``mpmath.iv`` interval evaluation when no exact identity decides the
sign.
"""
from fractions import Fraction
from typing import Dict, Optional, Tuple
import logging
import math

from mpmath import iv
from sympy import factorint, integer_nthroot

logger = logging.getLogger(__name__)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def primitive_power(x: int) -> Tuple[int, int]:
    """Return (b, e) with x = b**e and b not itself a perfect power"""
    if x < 2:
        raise ValueError(f"primitive_power needs x >= 2, got {x}")
    for exponent in range(x.bit_length(), 1, -1):
        root, exact = integer_nthroot(x, exponent)
        if exact and int(root) ** exponent == x:
            return int(root), exponent
    return x, 1


def signed_factorization(x: Fraction) -> Dict[int, int]:
    """Prime exponents of a positive rational (negative for the denominator)"""
    x = as_fraction(x)
    if x <= 0:
        raise ValueError(f"signed_factorization needs a positive rational, got {x}")
    exponents = {int(prime): int(power) for prime, power in factorint(x.numerator).items()}
    for prime, power in factorint(x.denominator).items():
        exponents[int(prime)] = exponents.get(int(prime), 0) - int(power)
    return exponents


def rational_power_exponent(x, base) -> Optional[Fraction]:
    """Find q with x == base**q exactly, or None.

    Decided by proportionality of the prime exponent vectors of x and base.
    """
    x, base = as_fraction(x), as_fraction(base)
    if x <= 0 or base <= 0:
        raise ValueError("rational_power_exponent needs positive rationals")
    if x == 1:
        return Fraction(0)
    if base == 1:
        return None

    ex = signed_factorization(x)
    eb = signed_factorization(base)
    if set(ex) != set(eb):
        return None

    pivot = next(iter(eb))
    q = Fraction(ex[pivot], eb[pivot])
    if all(ex[p] == q * eb[p] for p in eb):
        return q
    return None


def rational_power_sign(x, y, q: Fraction) -> int:
    """Sign of log x - q*log y, i.e. compare x**den against y**num exactly"""
    x, y, q = as_fraction(x), as_fraction(y), as_fraction(q)
    lhs = x ** q.denominator
    rhs = y ** q.numerator
    return (lhs > rhs) - (lhs < rhs)


def _log_sign(x: Fraction) -> int:
    return (x > 1) - (x < 1)


def _interval_log(x: Fraction):
    return iv.log(iv.mpf(x.numerator) / iv.mpf(x.denominator))


def compare_log_products(a, b, c, d, precision: int = 256) -> Tuple[Optional[int], str]:
    """Sign of log(a)*log(b) - log(c)*log(d) for positive rationals.

    Returns (sign, certificate). The sign is None when interval evaluation at
    ``precision`` bits cannot separate the two products.
    """
    a, b, c, d = (as_fraction(v) for v in (a, b, c, d))
    if min(a, b, c, d) <= 0:
        raise ValueError("compare_log_products needs positive rationals")

    left = _log_sign(a) * _log_sign(b)
    right = _log_sign(c) * _log_sign(d)
    if left == 0 or right == 0:
        return left - right if left != right else 0, "exact: vanishing logarithm"
    if left != right:
        return (1 if left > right else -1), "exact: opposite signs"

    # log(a)log(b) - log(c)log(d) = log(u) * (log(v) - q log(w)) when c = u**q
    for u, v, other, w in ((a, b, c, d), (a, b, d, c), (b, a, c, d), (b, a, d, c)):
        q = rational_power_exponent(other, u)
        if q is not None:
            sign = _log_sign(u) * rational_power_sign(v, w, q)
            return sign, f"exact: {other} = {u}^({q})"

    old_prec = iv.prec
    try:
        iv.prec = precision
        diff = _interval_log(a) * _interval_log(b) - _interval_log(c) * _interval_log(d)
        if diff.a > 0:
            return 1, f"interval separation at {precision} bits"
        if diff.b < 0:
            return -1, f"interval separation at {precision} bits"
    finally:
        iv.prec = old_prec

    logger.warning(f"Log products {a},{b} vs {c},{d} not separated at {precision} bits")
    return None, f"undecided at {precision} bits"


def floor_log_ratio_guess(k: int, n: int, m: int) -> int:
    """Float estimate of floor(k log n / log m); callers correct it exactly"""
    return int(math.floor(k * math.log(n) / math.log(m)))
