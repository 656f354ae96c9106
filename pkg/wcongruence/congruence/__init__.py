from wcongruence.harmonic import a_e_mod

from .claims import (
    CLAIM_IDS,
    COLUMN_PARAMS,
    CheckResult,
    ClaimParams,
    CongruenceClaim,
    Variant,
)
from .congruence import (
    THEOREM3_MODULI,
    Theorem3Parts,
    binom_valuation,
    gen_binom,
    half_binom_product,
    half_product_targets,
    half_products,
    moebius_binom_product,
    ord_factorial,
    product_modulus,
    require_theorem3,
    rhs_theorem2,
    rhs_theorem3,
    rhs_theorem4,
    s_product,
    t_product,
    theorem3_parts,
)
from .lemmas import lemma1_check, lemma1_sides, lemma3_check, lemma3_sides
from .verify import claim_hypothesis, verify_claim
