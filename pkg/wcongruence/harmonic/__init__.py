from .harmonic import (
    SHIFTED_MODULI,
    SumSpec,
    a_e_mod,
    euler_form_inv_sq,
    full_range_inv_sq,
    full_range_modulus,
    local_sum_inv_sq,
    predict_shifted,
    predict_sum_inv,
    predict_sum_inv_sq,
    reflection_rhs,
    require_sum_hypothesis,
    sum_inv,
    sum_inv_shifted,
    sum_inv_sq,
)
