from .bernoulli import (
    BERNOULLI,
    EULER,
    BernoulliCache,
    EulerCache,
    bernoulli_factor_mod,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    local_bernoulli_factor,
    raabe_check,
    vsc_check,
)
