from fractions import Fraction
from math import comb, factorial, gcd

import pytest
from sympy import primerange

from wcongruence.congruence import (
    CLAIM_IDS,
    ClaimParams,
    CongruenceClaim,
    Variant,
    a_e_mod,
    binom_valuation,
    claim_hypothesis,
    gen_binom,
    half_binom_product,
    half_product_targets,
    half_products,
    moebius_binom_product,
    ord_factorial,
    product_modulus,
    rhs_theorem2,
    rhs_theorem3,
    rhs_theorem4,
    s_product,
    t_product,
    theorem3_parts,
    verify_claim,
)
from wcongruence.exactnum import BadHypothesis, Residue, mod_inv, rational_mod
from wcongruence.multfunc import euler_phi

ODD_TO_105 = range(3, 106, 2)
ODD_TO_301 = range(3, 302, 2)
COPRIME_TO_6 = [n for n in range(5, 296) if gcd(n, 6) == 1]
COPRIME_TO_30 = [n for n in COPRIME_TO_6 if n % 5]


def _verify(claim_id, **params):
    return verify_claim(CongruenceClaim(claim_id, ClaimParams(**params)))


@pytest.mark.parametrize(
    "x, m, expected",
    [(Fraction(9, 4), 0, 1), (7, 2, 21), (Fraction(5, 2), 2, Fraction(15, 8)), (Fraction(-1, 2), 3, Fraction(-5, 16))],
)
def test_gen_binom(x, m, expected):
    assert gen_binom(x, m) == expected


def test_gen_binom_agrees_with_comb():
    for x in range(12):
        for m in range(12):
            assert gen_binom(x, m) == comb(x, m)


def test_product_modulus():
    assert product_modulus(7) == 343
    assert product_modulus(15) == 1125
    assert product_modulus(15, 3) == 3375


@pytest.mark.parametrize(
    "n, e, k, expected",
    [(5, 2, 1, Residue(6, 125)), (15, 2, 1, Residue(286, 1125)), (5, 6, 3, Residue(1, 125)), (5, 3, 1, Residue(4, 125))],
)
def test_t_product(n, e, k, expected):
    assert t_product(n, e, k) == expected


def test_moebius_binom_product_examples():
    assert moebius_binom_product(5, 2, 1) == 6
    assert moebius_binom_product(15, 2, 1) == 286
    for p in (7, 11, 13):
        assert moebius_binom_product(p, 3, 2) == comb(2 * p - 1, p // 3)


@pytest.mark.parametrize("e", [2, 3, 4, 6])
def test_moebius_identity(e):
    for n in ODD_TO_105:
        modulus = product_modulus(n, e)
        for k in (1, 2, 3):
            value = moebius_binom_product(n, e, k)
            direct = t_product(n, e, k)
            numerator = Residue(value.numerator, modulus)
            assert numerator == direct * value.denominator
            if gcd(value.denominator, modulus) == 1:
                assert rational_mod(value, modulus) == direct


def test_theorem2_grid():
    for n in ODD_TO_301:
        for k in range(1, 5):
            assert t_product(n, 2, k) == rhs_theorem2(n, k)


@pytest.mark.parametrize("n, k, expected", [(5, 1, 6), (15, 1, 286), (5, 2, 36)])
def test_rhs_theorem2(n, k, expected):
    assert rhs_theorem2(n, k) == Residue(expected, product_modulus(n))


@pytest.mark.parametrize("n, k, expected", [(5, 1, 4), (5, 3, 84)])
def test_s_product(n, k, expected):
    assert s_product(n, k) == Residue(expected, 125)


def test_s_product_scaled():
    scaled = s_product(7, 2) * mod_inv(8, 343)
    assert scaled == Residue(134, 343) == rhs_theorem4(7, 2)


@pytest.mark.parametrize("n, k, expected", [(5, 1, 1), (5, 3, 21), (7, 2, 134)])
def test_rhs_theorem4(n, k, expected):
    assert rhs_theorem4(n, k) == Residue(expected, n**3)


def test_s_product_moebius_identity():
    for n in ODD_TO_105:
        modulus = product_modulus(n)
        for k in (1, 2, 3):
            value = half_binom_product(n, k)
            assert gcd(value.denominator, n) == 1
            expected = rational_mod(value, modulus) * pow(2, euler_phi(n) // 2, modulus)
            assert s_product(n, k) == expected


def test_theorem4_grid():
    for n in ODD_TO_301:
        for k in range(1, 5):
            assert rational_mod(half_binom_product(n, k), product_modulus(n)) == rhs_theorem4(n, k)


def test_half_products_match_closed_forms():
    for n in range(5, 151, 2):
        if n % 3 == 0:
            continue
        for k in (1, 2, 3):
            assert half_products(n, k) == half_product_targets(n, k)


@pytest.mark.parametrize(
    "n, e, k, variant, expected",
    [
        (5, 3, 1, "corrected", 4),
        (5, 3, 1, "proof_expansion", 4),
        (5, 3, 1, "statement", 54),
        (5, 4, 1, "statement", 4),
        (7, 6, 1, "corrected", 6),
        (7, 6, 1, "statement", 251),
    ],
)
def test_rhs_theorem3_examples(n, e, k, variant, expected):
    assert rhs_theorem3(n, e, k, variant) == Residue(expected, n**3)


def test_theorem3_parts():
    parts = theorem3_parts(5, 3, 1)
    assert parts.sign == -1
    assert parts.phi == 4
    assert parts.q3 == 16
    assert parts.a_e == a_e_mod(5, 3).value == 4
    assert parts.modulus == 125


def test_theorem3_hypotheses():
    with pytest.raises(BadHypothesis):
        rhs_theorem3(25, 6, 1, Variant.CORRECTED)
    with pytest.raises(BadHypothesis):
        rhs_theorem3(9, 3, 1, Variant.CORRECTED)
    with pytest.raises(BadHypothesis):
        rhs_theorem3(5, 3, 0, Variant.CORRECTED)
    with pytest.raises(ValueError):
        rhs_theorem3(5, 2, 1, Variant.CORRECTED)


def test_theorem3_e4_variants_coincide():
    for n in COPRIME_TO_6:
        for k in range(1, 5):
            values = {rhs_theorem3(n, 4, k, v) for v in Variant}
            assert len(values) == 1


@pytest.mark.parametrize("e, grid", [(3, COPRIME_TO_6), (6, COPRIME_TO_30)])
def test_theorem3_expansion_equals_corrected(e, grid):
    for n in grid:
        for k in range(1, 5):
            assert rhs_theorem3(n, e, k, Variant.PROOF_EXPANSION) == rhs_theorem3(n, e, k, Variant.CORRECTED)


@pytest.mark.parametrize("e, grid", [(3, COPRIME_TO_6), (4, COPRIME_TO_6), (6, COPRIME_TO_30)])
def test_theorem3_expansion_matches_products(e, grid):
    for n in grid[:50]:
        for k in (1, 2):
            assert t_product(n, e, k) == rhs_theorem3(n, e, k, Variant.PROOF_EXPANSION)


@pytest.mark.parametrize("n, p, expected", [(10, 2, 8), (4, 5, 0), (25, 5, 6), (0, 3, 0)])
def test_ord_factorial(n, p, expected):
    assert ord_factorial(n, p) == expected


def test_ord_factorial_counts_factors():
    for p in primerange(2, 14):
        for n in range(0, 201):
            value, count = factorial(n), 0
            while value % p == 0:
                value //= p
                count += 1
            assert ord_factorial(n, p) == count


def test_binom_valuation_bound_at_three():
    for q in primerange(5, 51):
        if q % 6 != 5:
            continue
        for k in range(1, 10):
            if k % 3:
                assert binom_valuation(k * q - 1, (q - 1) // 2, 3) >= 1


@pytest.mark.parametrize(
    "claim_id, params, lhs, rhs, modulus, passed",
    [
        ("morley", {"p": 5}, 6, 6, 125, True),
        ("cor4", {"p": 5, "k": 2}, 36, 36, 125, True),
        ("cor5", {"p": 3, "q": 5, "k": 1}, 57, 57, 3375, True),
        ("th3_1", {"n": 5, "k": 1, "variant": "statement"}, 4, 54, 125, False),
        ("th3_1", {"n": 5, "k": 1, "variant": "corrected"}, 4, 4, 125, True),
        ("th3_3", {"n": 7, "k": 1, "variant": "statement"}, 6, 251, 343, False),
        ("th2", {"n": 15, "k": 1}, 286, 286, 1125, True),
        ("th1", {"n": 5, "e": 4}, 1, 1, 5, True),
        ("cor3_1", {"n": 5}, 1, 1, 25, True),
        ("lem5_2", {"n": 7}, 33, 33, 49, True),
        ("lem2", {"n": 9}, 0, 0, 3, True),
        ("th4", {"n": 7, "k": 2}, 134, 134, 343, True),
    ],
)
def test_verify_claim_examples(claim_id, params, lhs, rhs, modulus, passed):
    result = _verify(claim_id, **params)
    assert (result.lhs, result.rhs, result.modulus, result.passed) == (lhs, rhs, modulus, passed)
    assert result.error is None


def test_verify_claim_reports_hypothesis_errors():
    result = _verify("th2", n=4, k=1)
    assert not result.passed
    assert "odd" in result.error
    assert claim_hypothesis(CongruenceClaim("th2", ClaimParams(n=4, k=1))) == result.error


def test_missing_parameters_are_reported():
    result = _verify("cor5", p=3, k=1)
    assert result.error == "missing parameter q"


def test_unknown_claim():
    with pytest.raises(ValueError, match="unknown claim"):
        CongruenceClaim("bogus")


def test_morley_and_cor4_grid():
    for p in primerange(5, 98):
        assert _verify("morley", p=p).passed
        for k in range(1, 5):
            assert _verify("cor4", p=p, k=k).passed


def test_cor5_grid():
    primes = list(primerange(3, 24))
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            for k in (1, 2, 3):
                assert _verify("cor5", p=p, q=q, k=k).passed


def test_cai_grid():
    for n in ODD_TO_105:
        assert _verify("cai", n=n).passed


def test_every_claim_has_a_passing_point():
    points = {
        "morley": {"p": 7},
        "cai": {"n": 9},
        "th1": {"n": 7, "e": 3},
        "cor1": {"n": 11},
        "cor2": {"n": 13},
        "cor3_1": {"n": 7},
        "cor3_2": {"n": 7},
        "cor3_3": {"n": 7},
        "th2": {"n": 9, "k": 2},
        "cor4": {"p": 7, "k": 3},
        "cor5": {"p": 5, "q": 7, "k": 2},
        "th3_1": {"n": 7, "k": 2},
        "th3_2": {"n": 7, "k": 2},
        "th3_3": {"n": 11, "k": 2},
        "th4": {"n": 9, "k": 3},
        "lem1": {"p": 5, "l": 1, "t": 2, "k": 2},
        "lem2": {"n": 12},
        "lem3": {"a": 1, "k": 2, "m": 3, "q": 5, "x": 0},
        "lem4": {"n": 9},
        "lem5_1": {"n": 7},
        "lem5_2": {"n": 11},
        "lem5_3": {"n": 11},
    }
    assert set(points) == set(CLAIM_IDS)
    for claim_id, params in points.items():
        assert _verify(claim_id, **params).passed, claim_id


def test_claim_params_strings():
    params = ClaimParams(n=5, k=1, x=Fraction(1, 2), variant="proof")
    assert params.variant is Variant.PROOF_EXPANSION
    strings = params.as_strings()
    assert strings == {"n": "5", "k": "1", "x": "1/2", "variant": "proof_expansion"}
    assert ClaimParams.from_strings({**strings, "e": ""}) == params


def test_sort_key_orders_by_claim_then_parameters():
    claims = [
        CongruenceClaim("th2", ClaimParams(n=7, k=1)),
        CongruenceClaim("morley", ClaimParams(p=5)),
        CongruenceClaim("th2", ClaimParams(n=5, k=2)),
        CongruenceClaim("th2", ClaimParams(n=5, k=1)),
    ]
    ordered = sorted(claims, key=CongruenceClaim.sort_key)
    assert [str(c) for c in ordered] == ["morley(p=5)", "th2(n=5, k=1)", "th2(n=5, k=2)", "th2(n=7, k=1)"]
