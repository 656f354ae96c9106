"""
Claim dispatcher.

Each claim id maps to a hypothesis check and an evaluator returning the two
sides as residues over one modulus. The left-hand side always comes from
direct evaluation (unit products, binomials, modular sums) and the
right-hand side from the closed-form builders.
"""

from math import comb
from typing import Callable

from loguru import logger

from wcongruence.exactnum import (
    BadHypothesis,
    CongruenceError,
    Residue,
    is_prime,
    mod_inv,
    rational_mod,
    require_coprime,
    require_odd,
)
from wcongruence.harmonic import (
    euler_form_inv_sq,
    full_range_inv_sq,
    predict_shifted,
    predict_sum_inv,
    predict_sum_inv_sq,
    require_sum_hypothesis,
    sum_inv,
    sum_inv_shifted,
    sum_inv_sq,
)
from wcongruence.multfunc import JACOBI_MODULI, euler_phi

from .claims import CheckResult, ClaimParams, CongruenceClaim, Variant
from .congruence import (
    moebius_binom_product,
    product_modulus,
    require_theorem3,
    rhs_theorem2,
    rhs_theorem3,
    rhs_theorem4,
    s_product,
    t_product,
)
from .lemmas import lemma1_sides, lemma3_sides, require_lemma1, require_lemma3

Sides = tuple[Residue, Residue]

# Claims whose skip decision needs the exact sides, not only the parameters.
_INVERTIBILITY_SKIPS = ("lem1", "lem3")


def _need_k(params: ClaimParams) -> int:
    k = params.need("k")
    if k < 1:
        raise BadHypothesis(f"k must be >= 1 (k = {k})")
    return k


def _need_prime(params: ClaimParams, name: str, minimum: int) -> int:
    value = params.need(name)
    if value < minimum or not is_prime(value):
        raise BadHypothesis(f"{name} must be a prime >= {minimum} ({name} = {value})")
    return value


def _need_theorem1(params: ClaimParams) -> int:
    n = params.need("n")
    if n <= 1:
        raise BadHypothesis(f"n must be > 1 (n = {n})")
    require_coprime(n, 6)
    return n


def _morley_sides(p: int, k: int) -> Sides:
    modulus = p**3
    half = (p - 1) // 2
    sign = -1 if half % 2 else 1
    lhs = Residue(sign * comb(k * p - 1, half), modulus)
    return lhs, Residue(pow(4, k * (p - 1), modulus), modulus)


# morley / cor4


def _hyp_morley(params: ClaimParams) -> None:
    _need_prime(params, "p", 5)


def _eval_morley(params: ClaimParams) -> Sides:
    return _morley_sides(params.p, 1)


def _hyp_cor4(params: ClaimParams) -> None:
    _need_prime(params, "p", 5)
    _need_k(params)


def _eval_cor4(params: ClaimParams) -> Sides:
    return _morley_sides(params.p, params.k)


# cai / th2 / th4


def _hyp_odd(params: ClaimParams) -> None:
    require_odd(params.need("n"))


def _hyp_odd_k(params: ClaimParams) -> None:
    require_odd(params.need("n"))
    _need_k(params)


def _eval_cai(params: ClaimParams) -> Sides:
    # Cross-multiplied so that non-unit binomials in the denominator are fine.
    n = params.n
    modulus = product_modulus(n)
    value = moebius_binom_product(n, 2, 1)
    lhs = Residue(value.numerator, modulus)
    return lhs, rhs_theorem2(n, 1) * value.denominator


def _eval_th2(params: ClaimParams) -> Sides:
    return t_product(params.n, 2, params.k), rhs_theorem2(params.n, params.k)


def _eval_th4(params: ClaimParams) -> Sides:
    n, k = params.n, params.k
    modulus = product_modulus(n)
    lhs = s_product(n, k) * mod_inv(pow(2, euler_phi(n) // 2, modulus), modulus)
    return lhs, rhs_theorem4(n, k)


# cor5


def _hyp_cor5(params: ClaimParams) -> None:
    p = _need_prime(params, "p", 3)
    q = _need_prime(params, "q", 3)
    if p == q:
        raise BadHypothesis(f"p and q must be distinct (p = q = {p})")
    _need_k(params)


def _eval_cor5(params: ClaimParams) -> Sides:
    p, q, k = params.p, params.q, params.k
    modulus = (p * q) ** 3
    lhs = Residue(comb(k * p * q - 1, (p * q - 1) // 2), modulus)
    rhs = Residue(
        pow(4, k * (p - 1) * (q - 1), modulus)
        * comb(k * p - 1, (p - 1) // 2)
        * comb(k * q - 1, (q - 1) // 2),
        modulus,
    )
    return lhs, rhs


# th1 / cor1 / cor2


def _hyp_th1(params: ClaimParams) -> None:
    e = params.need("e")
    if e not in JACOBI_MODULI:
        raise BadHypothesis(f"e must be one of {JACOBI_MODULI} (e = {e})")
    _need_theorem1(params)


def _eval_th1(params: ClaimParams) -> Sides:
    return sum_inv_sq(params.n, params.e), predict_sum_inv_sq(params.n, params.e)


def _hyp_n_coprime6(params: ClaimParams) -> None:
    _need_theorem1(params)


def _eval_cor1(params: ClaimParams) -> Sides:
    return sum_inv_sq(params.n, 2), Residue(0, params.n)


def _eval_cor2(params: ClaimParams) -> Sides:
    return sum_inv_sq(params.n, 4), euler_form_inv_sq(params.n)


# cor3 / lem4 / lem5


def _sum_claim(e: int, shifted: bool) -> tuple[Callable, Callable]:
    """Hypothesis and evaluator of the restricted-sum claims for one e."""

    def hypothesis(params: ClaimParams) -> None:
        require_sum_hypothesis(params.need("n"), e)

    def evaluate(params: ClaimParams) -> Sides:
        if shifted:
            return sum_inv_shifted(params.n, e), predict_shifted(params.n, e)
        return sum_inv(params.n, e), predict_sum_inv(params.n, e)

    return hypothesis, evaluate


# th3


def _th3_claim(e: int) -> tuple[Callable, Callable]:
    """Hypothesis and evaluator of th3 at one e; the variant defaults to proof_expansion."""

    def hypothesis(params: ClaimParams) -> None:
        require_theorem3(params.need("n"), e, _need_k(params))

    def evaluate(params: ClaimParams) -> Sides:
        variant = params.variant or Variant.PROOF_EXPANSION
        return (
            t_product(params.n, e, params.k),
            rhs_theorem3(params.n, e, params.k, variant),
        )

    return hypothesis, evaluate


# lemmas


def _hyp_lem1(params: ClaimParams) -> None:
    require_lemma1(params.need("p"), params.need("l"), params.need("t"), params.need("k"))


def _eval_lem1(params: ClaimParams) -> Sides:
    lhs, rhs, modulus = lemma1_sides(params.p, params.l, params.t, params.k)
    return Residue(lhs, modulus), rational_mod(rhs, modulus)


def _hyp_lem3(params: ClaimParams) -> None:
    params.need("a")
    params.need("x")
    require_lemma3(params.need("k"), params.need("m"), params.need("q"))


def _eval_lem3(params: ClaimParams) -> Sides:
    lhs, rhs = lemma3_sides(params.a, params.k, params.m, params.q, params.x)
    return rational_mod(lhs, params.q), rational_mod(rhs, params.q)


def _hyp_lem2(params: ClaimParams) -> None:
    n = params.need("n")
    if n <= 1:
        raise BadHypothesis(f"n must be > 1 (n = {n})")


def _eval_lem2(params: ClaimParams) -> Sides:
    lhs = full_range_inv_sq(params.n)
    return lhs, Residue(0, lhs.modulus)


_CLAIMS: dict[str, tuple[Callable[[ClaimParams], None], Callable[[ClaimParams], Sides]]] = {
    "morley": (_hyp_morley, _eval_morley),
    "cai": (_hyp_odd, _eval_cai),
    "th1": (_hyp_th1, _eval_th1),
    "cor1": (_hyp_n_coprime6, _eval_cor1),
    "cor2": (_hyp_n_coprime6, _eval_cor2),
    "cor3_1": _sum_claim(3, shifted=False),
    "cor3_2": _sum_claim(4, shifted=False),
    "cor3_3": _sum_claim(6, shifted=False),
    "th2": (_hyp_odd_k, _eval_th2),
    "cor4": (_hyp_cor4, _eval_cor4),
    "cor5": (_hyp_cor5, _eval_cor5),
    "th3_1": _th3_claim(3),
    "th3_2": _th3_claim(4),
    "th3_3": _th3_claim(6),
    "th4": (_hyp_odd_k, _eval_th4),
    "lem1": (_hyp_lem1, _eval_lem1),
    "lem2": (_hyp_lem2, _eval_lem2),
    "lem3": (_hyp_lem3, _eval_lem3),
    "lem4": _sum_claim(2, shifted=False),
    "lem5_1": _sum_claim(3, shifted=True),
    "lem5_2": _sum_claim(4, shifted=True),
    "lem5_3": _sum_claim(6, shifted=True),
}


def claim_hypothesis(claim: CongruenceClaim) -> str | None:
    """
    Reason the claim lies outside its hypotheses, or None when it may be
    evaluated. For the lemma checks a right-hand side that cannot be reduced
    at the modulus also counts as outside.
    """
    hypothesis, evaluate = _CLAIMS[claim.claim_id]
    try:
        hypothesis(claim.params)
        if claim.claim_id in _INVERTIBILITY_SKIPS:
            evaluate(claim.params)
    except CongruenceError as error:
        return str(error)
    return None


def verify_claim(claim: CongruenceClaim) -> CheckResult:
    """
    Evaluates both sides of a claim.

    Args:
        claim (CongruenceClaim): The claim and its parameters.

    Returns:
        CheckResult: The comparison. Hypothesis violations and non-invertible
        denominators produce a failed result carrying the error message.
    """
    hypothesis, evaluate = _CLAIMS[claim.claim_id]
    try:
        hypothesis(claim.params)
        lhs, rhs = evaluate(claim.params)
    except CongruenceError as error:
        logger.error(f"{claim}: {error}")
        return CheckResult.from_error(claim, error)
    return CheckResult.from_sides(claim, lhs, rhs)
