"""Box, Hausdorff and Assouad dimensions, as high-precision reals and as intervals"""
from mpmath import iv, mp, mpf

from ..config import DEFAULT_PRECISION_BITS
from ..core.carpet import CarpetProfile


def dim_box(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """log_n(N s^(1/sigma - 1))"""
    with mp.workprec(precision_bits):
        ln_n, ln_m = mp.log(prof.n), mp.log(prof.m)
        return mp.log(prof.N) / ln_n + mp.log(prof.s) * (1 / ln_m - 1 / ln_n)


def dim_hausdorff(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """log_m sum_{j in E} a_j^sigma"""
    with mp.workprec(precision_bits):
        ln_m = mp.log(prof.m)
        sigma = ln_m / mp.log(prof.n)
        total = mp.fsum(count * mpf(value) ** sigma for value, count in zip(prof.a_star, prof.M))
        return mp.log(total) / ln_m


def dim_assouad(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """log_m s + log_n max a_j"""
    with mp.workprec(precision_bits):
        return mp.log(prof.s) / mp.log(prof.m) + mp.log(prof.a_max) / mp.log(prof.n)


def _with_interval_precision(precision_bits: int, compute):
    old_prec = iv.prec
    try:
        iv.prec = precision_bits
        return compute()
    finally:
        iv.prec = old_prec


def dim_box_interval(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS):
    def compute():
        ln_n, ln_m = iv.log(prof.n), iv.log(prof.m)
        return iv.log(prof.N) / ln_n + iv.log(prof.s) * (1 / ln_m - 1 / ln_n)
    return _with_interval_precision(precision_bits, compute)


def dim_hausdorff_interval(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS):
    def compute():
        ln_m = iv.log(prof.m)
        sigma = ln_m / iv.log(prof.n)
        total = iv.mpf(0)
        for value, count in zip(prof.a_star, prof.M):
            total += count * iv.exp(sigma * iv.log(value))
        return iv.log(total) / ln_m
    return _with_interval_precision(precision_bits, compute)


def dim_assouad_interval(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS):
    def compute():
        return iv.log(prof.s) / iv.log(prof.m) + iv.log(prof.a_max) / iv.log(prof.n)
    return _with_interval_precision(precision_bits, compute)
