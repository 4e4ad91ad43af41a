from .beta import (
    LegendrePoint,
    SpectrumCurve,
    SpectrumSample,
    alpha_range,
    beta,
    beta_prime,
    endpoint_values,
    legendre_point,
    reconstruct_beta,
    spectrum_curve,
    spectrum_samples_from_t,
    spectrum_value,
)
from .dimensions import dim_assouad, dim_box, dim_hausdorff
from .equality import TriVerdict, Verdict, compare_dimensions, sampled_spectra_agree, spectra_equal
