from .multfunc import (
    CONSTANT_ONE,
    JACOBI_MODULI,
    TotientSpec,
    combined_totient,
    divisors,
    euler_phi,
    euler_quotient,
    floor_totient,
    generalized_totient,
    jacobi_unit,
    moebius,
    squarefree_divisors,
)
