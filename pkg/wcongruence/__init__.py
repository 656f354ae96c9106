from .bernoulli import bernoulli_factor_mod, bernoulli_number, bernoulli_poly, euler_number
from .congruence import (
    CheckResult,
    ClaimParams,
    CongruenceClaim,
    Variant,
    claim_hypothesis,
    verify_claim,
)
from .exactnum import CongruenceError, Residue, rational_mod
