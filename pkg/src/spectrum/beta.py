"""The moment function beta(t) and the multifractal spectrum by Legendre transform.

beta(t) = t log_m N - log_m sum_{j in E} a_j^(sigma + (1 - sigma) t) is concave
and increasing with beta(1) = 0. Its derivative alpha(t) = beta'(t) decreases
from alpha_max (t -> -inf) to alpha_min (t -> +inf), and

    h(alpha) = inf_t (alpha t - beta(t)) = alpha t* - beta(t*),  beta'(t*) = alpha.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import logging

from mpmath import mp, mpf

from ..config import DEFAULT_PRECISION_BITS, DEFAULT_SPECTRUM_GRID
from ..core.carpet import CarpetProfile, is_regular
from ..errors import AlphaOutOfRange, ConfigError, RegularDegenerate, SolverFailure

logger = logging.getLogger(__name__)

_MAX_BRACKET_DOUBLINGS = 256


@dataclass(frozen=True)
class SpectrumSample:
    t: mpf
    beta: mpf
    alpha: mpf
    h: mpf


@dataclass(frozen=True)
class LegendrePoint:
    alpha: mpf
    t: Optional[mpf]
    h: mpf
    endpoint: bool = False


@dataclass(frozen=True)
class SpectrumCurve:
    samples: List[SpectrumSample]
    alpha_min: mpf
    alpha_max: mpf
    h_at_alpha_min: mpf
    h_at_alpha_max: mpf
    precision_bits: int


def _logs(prof: CarpetProfile):
    ln_n = mp.log(prof.n)
    ln_m = mp.log(prof.m)
    return ln_n, ln_m, ln_m / ln_n


def _moment(prof: CarpetProfile, exponent) -> Tuple[mpf, mpf]:
    """sum a_j^e over E and sum a_j^e ln a_j over E"""
    total = mpf(0)
    weighted = mpf(0)
    for value, count in zip(prof.a_star, prof.M):
        term = count * mpf(value) ** exponent
        total += term
        weighted += term * mp.log(value)
    return total, weighted


def beta(prof: CarpetProfile, t, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    with mp.workprec(precision_bits):
        t = mpf(t)
        ln_n, ln_m, sigma = _logs(prof)
        total, _ = _moment(prof, sigma + (1 - sigma) * t)
        return (t * mp.log(prof.N) - mp.log(total)) / ln_m


def beta_prime(prof: CarpetProfile, t, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    with mp.workprec(precision_bits):
        t = mpf(t)
        ln_n, ln_m, sigma = _logs(prof)
        total, weighted = _moment(prof, sigma + (1 - sigma) * t)
        return (mp.log(prof.N) - (1 - sigma) * weighted / total) / ln_m


def alpha_range(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> Tuple[mpf, mpf]:
    with mp.workprec(precision_bits):
        ln_n, ln_m, sigma = _logs(prof)
        base = mp.log(prof.N) / ln_m
        alpha_min = (sigma - 1) / ln_m * mp.log(prof.a_max) + base
        alpha_max = (sigma - 1) / ln_m * mp.log(prof.a_min) + base
        return alpha_min, alpha_max


def endpoint_values(prof: CarpetProfile, precision_bits: int = DEFAULT_PRECISION_BITS) -> Tuple[mpf, mpf]:
    """One-sided limits of h at alpha_min and alpha_max"""
    with mp.workprec(precision_bits):
        ln_n, ln_m, _ = _logs(prof)
        at_min = mp.log(prof.M[0]) / ln_m + mp.log(prof.a_max) / ln_n
        at_max = mp.log(prof.M[-1]) / ln_m + mp.log(prof.a_min) / ln_n
        return at_min, at_max


def _hausdorff(prof: CarpetProfile) -> mpf:
    return -beta(prof, 0, mp.prec)


def _bracket(prof: CarpetProfile, alpha: mpf, precision_bits: int) -> Tuple[mpf, mpf]:
    lo, hi = mpf(-1), mpf(1)
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if beta_prime(prof, hi, precision_bits) < alpha:
            break
        lo, hi = hi, hi * 2
    else:
        raise AlphaOutOfRange(f"No bracket found above alpha={alpha}")
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if beta_prime(prof, lo, precision_bits) >= alpha:
            break
        hi, lo = lo, lo * 2
    else:
        raise AlphaOutOfRange(f"No bracket found below alpha={alpha}")
    logger.debug(f"Bracket for alpha={mp.nstr(alpha, 12)}: [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}]")
    return lo, hi


def _solve(prof: CarpetProfile, alpha: mpf, lo: mpf, hi: mpf, precision_bits: int) -> mpf:
    # bisect answers with the midpoint when f vanishes at an end of the bracket
    for end in (lo, hi):
        if beta_prime(prof, end, precision_bits) == alpha:
            return end
    return mp.findroot(
        lambda t: beta_prime(prof, t, precision_bits) - alpha,
        (lo, hi),
        solver="bisect",
        tol=mpf(2) ** (-precision_bits),
        maxsteps=precision_bits + 64,
        verify=False,
    )


def legendre_point(prof: CarpetProfile, alpha, precision_bits: int = DEFAULT_PRECISION_BITS) -> LegendrePoint:
    """Solve beta'(t*) = alpha and return (alpha, t*, h(alpha))"""
    with mp.workprec(precision_bits):
        alpha = mpf(alpha)
        tol = mpf(2) ** (-(precision_bits // 2))

        if is_regular(prof):
            dim = _hausdorff(prof)
            if abs(alpha - dim) > tol:
                raise RegularDegenerate(f"Regular carpet admits only alpha = {mp.nstr(dim, 15)}")
            return LegendrePoint(alpha=alpha, t=mpf(1), h=dim)

        alpha_min, alpha_max = alpha_range(prof, precision_bits)
        if alpha < alpha_min - tol or alpha > alpha_max + tol:
            raise AlphaOutOfRange(
                f"alpha={mp.nstr(alpha, 15)} outside [{mp.nstr(alpha_min, 15)}, {mp.nstr(alpha_max, 15)}]"
            )

        at_min, at_max = endpoint_values(prof, precision_bits)
        if abs(alpha - alpha_min) <= tol:
            logger.warning("Spectrum at alpha_min is an extrapolated endpoint")
            return LegendrePoint(alpha=alpha, t=mp.inf, h=at_min, endpoint=True)
        if abs(alpha - alpha_max) <= tol:
            logger.warning("Spectrum at alpha_max is an extrapolated endpoint")
            return LegendrePoint(alpha=alpha, t=-mp.inf, h=at_max, endpoint=True)

        lo, hi = _bracket(prof, alpha, precision_bits)
        t_star = _solve(prof, alpha, lo, hi, precision_bits)
        residual = abs(beta_prime(prof, t_star, precision_bits) - alpha)
        if residual > tol:
            raise SolverFailure(
                f"beta'(t*) misses alpha={mp.nstr(alpha, 15)} by {mp.nstr(residual, 5)} at t*={mp.nstr(t_star, 15)}"
            )
        h = alpha * t_star - beta(prof, t_star, precision_bits)
        return LegendrePoint(alpha=alpha, t=t_star, h=h)


def spectrum_value(prof: CarpetProfile, alpha, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    return legendre_point(prof, alpha, precision_bits).h


def alpha_grid(prof: CarpetProfile, grid: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> List[mpf]:
    """grid equally spaced interior points of (alpha_min, alpha_max)"""
    with mp.workprec(precision_bits):
        alpha_min, alpha_max = alpha_range(prof, precision_bits)
        step = (alpha_max - alpha_min) / (grid + 1)
        return [alpha_min + step * i for i in range(1, grid + 1)]


def spectrum_curve(prof: CarpetProfile, grid: int = DEFAULT_SPECTRUM_GRID,
                   precision_bits: int = DEFAULT_PRECISION_BITS) -> SpectrumCurve:
    """Sample h on an interior alpha grid, ordered by increasing t"""
    if grid < 1:
        raise ConfigError(f"grid must be positive, got {grid}")

    with mp.workprec(precision_bits):
        alpha_min, alpha_max = alpha_range(prof, precision_bits)
        at_min, at_max = endpoint_values(prof, precision_bits)

        samples = []
        if is_regular(prof):
            dim = _hausdorff(prof)
            samples.append(SpectrumSample(t=mpf(1), beta=mpf(0), alpha=dim, h=dim))
        else:
            for alpha in reversed(alpha_grid(prof, grid, precision_bits)):
                point = legendre_point(prof, alpha, precision_bits)
                samples.append(SpectrumSample(
                    t=point.t,
                    beta=beta(prof, point.t, precision_bits),
                    alpha=alpha,
                    h=point.h,
                ))

        logger.info(f"Sampled spectrum at {len(samples)} points ({precision_bits} bits)")
        return SpectrumCurve(
            samples=samples,
            alpha_min=alpha_min,
            alpha_max=alpha_max,
            h_at_alpha_min=at_min,
            h_at_alpha_max=at_max,
            precision_bits=precision_bits,
        )


def spectrum_samples_from_t(prof: CarpetProfile, ts: Sequence,
                            precision_bits: int = DEFAULT_PRECISION_BITS) -> List[SpectrumSample]:
    """Parametrise the spectrum by t: alpha = beta'(t), h = alpha t - beta(t)"""
    samples = []
    with mp.workprec(precision_bits):
        for t in ts:
            t = mpf(t)
            b = beta(prof, t, precision_bits)
            alpha = beta_prime(prof, t, precision_bits)
            samples.append(SpectrumSample(t=t, beta=b, alpha=alpha, h=alpha * t - b))
    return samples


def reconstruct_beta(samples: Sequence[SpectrumSample], t, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpf:
    """Dual transform inf over samples of (alpha t - h)"""
    if not samples:
        raise ValueError("reconstruct_beta needs at least one sample")
    with mp.workprec(precision_bits):
        t = mpf(t)
        return min(sample.alpha * t - sample.h for sample in samples)
