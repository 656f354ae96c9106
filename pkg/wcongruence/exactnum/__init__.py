from .errors import (
    BadHypothesis,
    CongruenceError,
    NonCoprimeModuli,
    NotCoprime,
    NotInvertible,
    UndefinedSymbol,
    require_coprime,
    require_odd,
)
from .exactnum import (
    Factorization,
    Modulus,
    ModulusLike,
    Rational,
    Residue,
    crt_combine,
    factorize,
    is_prime,
    mod_inv,
    mod_pow_signed,
    rational_mod,
    unit_power_formal,
)
