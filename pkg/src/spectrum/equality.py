"""Exact decision of spectrum equality and of dimension equality for two carpets"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional
import logging

from mpmath import mp

from ..config import DEFAULT_PRECISION_BITS, DEFAULT_SPECTRUM_GRID
from ..core.arithmetic import compare_log_products
from ..core.carpet import CarpetProfile, is_regular
from ..errors import ShapeMismatch
from .beta import alpha_grid, alpha_range, spectrum_value
from .dimensions import (
    dim_assouad_interval,
    dim_box_interval,
    dim_hausdorff,
    dim_hausdorff_interval,
)

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNDECIDED = "UndecidedAtPrecision"


@dataclass(frozen=True)
class TriVerdict:
    value: Verdict
    certificate: str

    @property
    def equal(self) -> bool:
        return self.value is Verdict.EQUAL

    @property
    def decided(self) -> bool:
        return self.value is not Verdict.UNDECIDED


def _from_sign(sign: Optional[int], certificate: str) -> TriVerdict:
    if sign is None:
        return TriVerdict(Verdict.UNDECIDED, certificate)
    if sign == 0:
        return TriVerdict(Verdict.EQUAL, certificate)
    return TriVerdict(Verdict.NOT_EQUAL, certificate)


def _same_shape(profE: CarpetProfile, profF: CarpetProfile) -> bool:
    return (profE.n, profE.m) == (profF.n, profF.m)


def spectra_equal(profE: CarpetProfile, profF: CarpetProfile,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> TriVerdict:
    if not _same_shape(profE, profF):
        raise ShapeMismatch("spectra_equal needs a common expansion pair")

    if profE.p_tilde != profF.p_tilde:
        return TriVerdict(Verdict.NOT_EQUAL,
                          f"exact: {profE.p_tilde} vs {profF.p_tilde} distinct row counts")

    s_ratio = Fraction(profF.s, profE.s)
    for i, (mult_e, mult_f) in enumerate(zip(profE.M, profF.M), start=1):
        if Fraction(mult_f, mult_e) != s_ratio:
            return TriVerdict(Verdict.NOT_EQUAL,
                              f"exact: multiplicity ratio M'_{i}/M_{i} = {Fraction(mult_f, mult_e)} != s'/s = {s_ratio}")

    ratios = {Fraction(a, b) for a, b in zip(profE.a_star, profF.a_star)}
    if len(ratios) != 1:
        return TriVerdict(Verdict.NOT_EQUAL, "exact: row-count ratios a_i*/b_i* are not constant")
    rho = ratios.pop()
    expected = s_ratio * Fraction(profE.N, profF.N)
    if rho != expected:
        return TriVerdict(Verdict.NOT_EQUAL, f"exact: rho = {rho} != (s'/s)(N/N') = {expected}")

    # rho^sigma = s'/s  <=>  log m log rho = log n log(s'/s)
    sign, how = compare_log_products(profE.m, rho, profE.n, s_ratio, precision_bits)
    if rho == 1:
        how = f"degenerate rho = 1; {how}"
    verdict = _from_sign(sign, f"rho = {rho}, s'/s = {s_ratio}: {how}")
    if verdict.value is Verdict.UNDECIDED:
        logger.warning(f"Spectrum equality undecided at {precision_bits} bits")
    return verdict


def _interval_verdict(left, right, precision_bits: int) -> TriVerdict:
    difference = left - right
    if difference.a > 0 or difference.b < 0:
        return TriVerdict(Verdict.NOT_EQUAL, f"interval separation at {precision_bits} bits")
    return TriVerdict(Verdict.UNDECIDED, f"intervals overlap at {precision_bits} bits")


def compare_dimensions(profE: CarpetProfile, profF: CarpetProfile,
                       precision_bits: int = DEFAULT_PRECISION_BITS,
                       spectra: Optional[TriVerdict] = None) -> Dict[str, TriVerdict]:
    """Decide equality of the box, Hausdorff and Assouad dimensions"""
    result = {}
    same_shape = _same_shape(profE, profF)

    if same_shape:
        n, m = profE.n, profE.m
        sign, how = compare_log_products(
            Fraction(profE.N, profF.N), m, Fraction(profF.s, profE.s), Fraction(n, m), precision_bits
        )
        result["box"] = _from_sign(sign, how)
        sign, how = compare_log_products(
            Fraction(profE.s, profF.s), n, Fraction(profF.a_max, profE.a_max), m, precision_bits
        )
        result["assouad"] = _from_sign(sign, how)
    else:
        result["box"] = _interval_verdict(
            dim_box_interval(profE, precision_bits), dim_box_interval(profF, precision_bits), precision_bits
        )
        result["assouad"] = _interval_verdict(
            dim_assouad_interval(profE, precision_bits), dim_assouad_interval(profF, precision_bits),
            precision_bits,
        )

    if spectra is not None and spectra.equal:
        result["hausdorff"] = TriVerdict(Verdict.EQUAL, "implied by spectrum equality")
    elif profE == profF:
        result["hausdorff"] = TriVerdict(Verdict.EQUAL, "exact: identical profiles")
    else:
        result["hausdorff"] = _interval_verdict(
            dim_hausdorff_interval(profE, precision_bits), dim_hausdorff_interval(profF, precision_bits),
            precision_bits,
        )
    return result


def sampled_spectra_agree(profE: CarpetProfile, profF: CarpetProfile,
                          grid: int = DEFAULT_SPECTRUM_GRID, tol: float = 1e-8,
                          precision_bits: int = DEFAULT_PRECISION_BITS) -> bool:
    """Compare the two spectra pointwise on a common interior alpha grid"""
    with mp.workprec(precision_bits):
        range_e = alpha_range(profE, precision_bits)
        range_f = alpha_range(profF, precision_bits)
        if any(abs(x - y) > tol for x, y in zip(range_e, range_f)):
            return False

        if is_regular(profE) or is_regular(profF):
            if is_regular(profE) != is_regular(profF):
                return False
            return abs(dim_hausdorff(profE, precision_bits) - dim_hausdorff(profF, precision_bits)) <= tol

        for alpha in alpha_grid(profE, grid, precision_bits):
            h_e = spectrum_value(profE, alpha, precision_bits)
            h_f = spectrum_value(profF, alpha, precision_bits)
            if abs(h_e - h_f) > tol:
                return False
        return True
