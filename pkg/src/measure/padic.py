"""p-adic valuations and the gamma_k obstruction sequence of two carpets"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List
import logging

from sympy import isprime, multiplicity, primefactors

from ..core.carpet import CarpetProfile, ell
from ..errors import ConfigError, NotPrime, ShapeMismatch, ZeroValuation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaRow:
    k: int
    gamma: Fraction
    valuation: int


def vp(x, p: int) -> int:
    x = Fraction(x)
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if x == 0:
        raise ZeroValuation("The valuation of 0 is undefined")
    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


def abs_p(x, p: int) -> Fraction:
    """|x|_p = p^(-v_p(x))"""
    return Fraction(p) ** (-vp(x, p))


def _check_pair(profE: CarpetProfile, profF: CarpetProfile) -> None:
    if (profE.n, profE.m) != (profF.n, profF.m):
        raise ShapeMismatch(
            f"gamma needs a common expansion pair, got ({profE.n},{profE.m}) and ({profF.n},{profF.m})"
        )


def gamma(k: int, profE: CarpetProfile, profF: CarpetProfile) -> Fraction:
    """(a1*/b1*)^(ell(k)-k) * (N'/N)^ell(k)"""
    if k < 1:
        raise ConfigError(f"gamma needs k >= 1, got {k}")
    _check_pair(profE, profF)
    lk = ell(k, profE)
    return Fraction(profE.a_max, profF.a_max) ** (lk - k) * Fraction(profF.N, profE.N) ** lk


def gamma_table(profE: CarpetProfile, profF: CarpetProfile, k_max: int, p: int) -> List[GammaRow]:
    rows = []
    for k in range(1, k_max + 1):
        value = gamma(k, profE, profF)
        rows.append(GammaRow(k=k, gamma=value, valuation=vp(value, p)))
    return rows


def obstruction_primes(profE: CarpetProfile, profF: CarpetProfile) -> List[int]:
    """Primes dividing b1* N along which v_p(gamma_k) tends to minus infinity.

    v_p(gamma_k) = u (ell(k) - k) + u' ell(k) with u = v_p(a1*/b1*) and
    u' = v_p(N'/N); its drift has the sign of log(n^(u+u') / m^u).
    """
    _check_pair(profE, profF)
    head_ratio = Fraction(profE.a_max, profF.a_max)
    mass_ratio = Fraction(profF.N, profE.N)

    primes = []
    for p in map(int, primefactors(profF.a_max * profE.N)):
        u = vp(head_ratio, p)
        u_prime = vp(mass_ratio, p)
        if Fraction(profE.n) ** (u + u_prime) < Fraction(profE.m) ** u:
            primes.append(p)
    logger.debug(f"Obstruction primes: {primes}")
    return primes
