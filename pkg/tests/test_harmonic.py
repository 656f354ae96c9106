from math import gcd

import pytest
from sympy import primerange

from wcongruence.exactnum import BadHypothesis, Residue
from wcongruence.harmonic import (
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
    sum_inv,
    sum_inv_shifted,
    sum_inv_sq,
)
from wcongruence.multfunc import jacobi_unit

COPRIME_TO_6 = [n for n in range(5, 296) if gcd(n, 6) == 1]
COPRIME_TO_30 = [n for n in COPRIME_TO_6 if n % 5]
ODD = list(range(3, 296, 2))


@pytest.mark.parametrize("n, e, expected", [(5, 2, 0), (7, 3, 3), (5, 4, 1)])
def test_sum_inv_sq_examples(n, e, expected):
    assert sum_inv_sq(n, e) == Residue(expected, n)


@pytest.mark.parametrize("n, e, expected", [(5, 2, 14), (7, 2, 10), (5, 4, 1), (7, 6, 1)])
def test_sum_inv_examples(n, e, expected):
    assert sum_inv(n, e) == Residue(expected, n * n)


@pytest.mark.parametrize("n, e, expected", [(5, 3, 13), (7, 4, 33), (7, 6, 1)])
def test_sum_inv_shifted_examples(n, e, expected):
    assert sum_inv_shifted(n, e) == Residue(expected, n * n)


def test_sum_spec_dispatch():
    assert SumSpec(7, 3).evaluate() == sum_inv_sq(7, 3)
    assert SumSpec(7, 2, power=1).evaluate() == sum_inv(7, 2)
    assert SumSpec(7, 4, shifted=True).evaluate() == sum_inv_shifted(7, 4)
    with pytest.raises(ValueError):
        SumSpec(7, 3, power=3).evaluate()


def test_hypotheses_are_strict():
    with pytest.raises(BadHypothesis, match=r"gcd\(n, 6\) > 1 \(n = 15\)"):
        sum_inv_sq(15, 4)
    with pytest.raises(BadHypothesis):
        sum_inv(35, 6)
    with pytest.raises(BadHypothesis):
        sum_inv(8, 2)
    with pytest.raises(ValueError):
        sum_inv_shifted(7, 2)


@pytest.mark.parametrize("n, expected_modulus", [(5, 5), (9, 3), (8, 4), (3, 1), (2, 1), (10, 10)])
def test_full_range_inv_sq(n, expected_modulus):
    assert full_range_modulus(n) == expected_modulus
    assert full_range_inv_sq(n) == Residue(0, expected_modulus)


def test_full_range_inv_sq_vanishes():
    for n in range(3, 1001):
        assert full_range_inv_sq(n).value == 0


@pytest.mark.parametrize("n, e, expected", [(5, 4, 1), (7, 3, 3), (11, 2, 0)])
def test_predict_sum_inv_sq_examples(n, e, expected):
    assert predict_sum_inv_sq(n, e) == Residue(expected, n)


@pytest.mark.parametrize("e", [2, 3, 4, 6])
def test_theorem1_grid(e):
    for n in COPRIME_TO_6:
        assert sum_inv_sq(n, e) == predict_sum_inv_sq(n, e)


def test_e2_sum_vanishes():
    for n in COPRIME_TO_6:
        assert sum_inv_sq(n, 2).value == 0


def test_euler_number_form():
    for n in COPRIME_TO_6:
        assert euler_form_inv_sq(n) == predict_sum_inv_sq(n, 4) == sum_inv_sq(n, 4)


@pytest.mark.parametrize("n, e, expected", [(5, 3, 4), (7, 6, 6), (11, 2, 0)])
def test_a_e_mod(n, e, expected):
    assert a_e_mod(n, e) == Residue(expected, n)


@pytest.mark.parametrize("n, e, expected", [(5, 2, 14), (5, 4, 1), (7, 6, 1)])
def test_predict_sum_inv_examples(n, e, expected):
    assert predict_sum_inv(n, e) == Residue(expected, n * n)


def test_euler_quotient_form_for_half_range():
    for n in ODD:
        assert sum_inv(n, 2) == predict_sum_inv(n, 2)


@pytest.mark.parametrize("e, grid", [(3, COPRIME_TO_6), (4, COPRIME_TO_6), (6, COPRIME_TO_30)])
def test_partial_harmonic_grid(e, grid):
    for n in grid:
        assert sum_inv(n, e) == predict_sum_inv(n, e)


@pytest.mark.parametrize("n, e, expected", [(5, 3, 13), (7, 4, 33), (7, 6, 1)])
def test_predict_shifted_examples(n, e, expected):
    assert predict_shifted(n, e) == Residue(expected, n * n)


@pytest.mark.parametrize("e, grid", [(3, COPRIME_TO_6), (4, COPRIME_TO_6), (6, COPRIME_TO_30)])
def test_shifted_grid(e, grid):
    for n in grid:
        assert sum_inv_shifted(n, e) == predict_shifted(n, e)


@pytest.mark.parametrize("e, grid", [(3, COPRIME_TO_6), (4, COPRIME_TO_6), (6, COPRIME_TO_30)])
def test_reflection_with_two_lifts(e, grid):
    for n in grid[:40]:
        plain = reflection_rhs(n, e)
        shifted_lift = reflection_rhs(n, e, lift=lambda r: r.value + 7 * r.modulus)
        assert plain == shifted_lift == sum_inv(n, e)


def test_shift_multiplicativity():
    for p in primerange(5, 24):
        for l in (1, 2):
            q = p**l
            for e in (3, 4, 6):
                base = local_sum_inv_sq(q, p, l, e)
                for m in range(1, 21):
                    if gcd(m, e * p) != 1:
                        continue
                    scaled = local_sum_inv_sq(m * q, p, l, e)
                    assert scaled == base * jacobi_unit(e, m)


def test_local_sum_inv_sq_skips_multiples_of_p():
    assert local_sum_inv_sq(25, 5, 2, 3) == Residue(
        sum(pow(r, -2, 25) for r in range(1, 9) if r % 5), 25
    )


def test_reflection_rejects_e2():
    with pytest.raises(ValueError):
        reflection_rhs(7, 2, lift=int)

