from .colors import Color, color_of
from .measures import mu_component, mu_cylinder, mu_square, offspring_color_census
from .doubling import (
    RatioWitness,
    color_rigidity_check,
    member_ratio_check,
    offspring_ratio_denominator_check,
    ratio_witness,
)
from .padic import abs_p, gamma, gamma_table, obstruction_primes, vp
