import random
from fractions import Fraction
from math import gcd, prod

import pytest
from sympy import factorint

from wcongruence.exactnum import (
    BadHypothesis,
    Modulus,
    NonCoprimeModuli,
    NotInvertible,
    Residue,
    crt_combine,
    factorize,
    is_prime,
    mod_inv,
    mod_pow_signed,
    rational_mod,
    unit_power_formal,
)


@pytest.mark.parametrize(
    "n, expected",
    [(1, ()), (3375, ((3, 3), (5, 3))), (97, ((97, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
)
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_matches_sympy():
    for n in range(2, 2000):
        assert dict(factorize(n)) == factorint(n)


def test_factorize_rejects_non_positive():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_modulus_caches_factorization():
    m = Modulus(1125)
    assert m.factorization == ((3, 2), (5, 3))
    assert int(m) == 1125
    with pytest.raises(ValueError):
        Modulus(0)


def test_residue_is_canonical():
    r = Residue(-1, 7)
    assert r.value == 6
    assert str(r) == "6 (mod 7)"
    assert Residue(13, 7) == Residue(6, 7)
    assert Residue(5, 1).value == 0


def test_residue_arithmetic():
    a, b = Residue(3, 7), Residue(5, 7)
    assert a + b == Residue(1, 7)
    assert a - b == Residue(5, 7)
    assert a * b == Residue(1, 7)
    assert 2 * a == Residue(6, 7)
    assert -a == Residue(4, 7)
    assert Residue(10, 25).reduce(5) == Residue(0, 5)


def test_residue_moduli_must_match():
    with pytest.raises(ValueError, match="do not mix"):
        Residue(1, 5) + Residue(1, 7)


@pytest.mark.parametrize("a, m, expected", [(4, 5, 4), (3, 125, 42), (1, 11, 1)])
def test_mod_inv(a, m, expected):
    assert mod_inv(a, m) == Residue(expected, m)


def test_mod_inv_not_invertible():
    with pytest.raises(NotInvertible) as info:
        mod_inv(3, 6)
    assert info.value.gcd == 3


@pytest.mark.parametrize(
    "a, e, m, expected", [(4, 4, 125, 6), (2, -8, 125, 21), (9, 0, 7, 1)]
)
def test_mod_pow_signed(a, e, m, expected):
    assert mod_pow_signed(a, e, m) == Residue(expected, m)


@pytest.mark.parametrize(
    "q, m, expected",
    [(Fraction(1, 64), 5, 4), (Fraction(-123, 2), 25, 1), (Fraction(0), 9, 0), (Fraction(-4, 3), 25, 7)],
)
def test_rational_mod(q, m, expected):
    assert rational_mod(q, m) == Residue(expected, m)


def test_rational_mod_not_invertible():
    with pytest.raises(NotInvertible, match="not invertible mod 6"):
        rational_mod(Fraction(1, 3), 6)


def test_crt_combine():
    assert crt_combine([Residue(2, 3), Residue(3, 5)]) == Residue(8, 15)
    assert crt_combine([Residue(4, 9)]) == Residue(4, 9)
    assert crt_combine([]) == Residue(0, 1)
    with pytest.raises(NonCoprimeModuli):
        crt_combine([Residue(1, 4), Residue(1, 6)])


def test_unit_power_formal_examples():
    assert unit_power_formal(Residue(81, 125), Fraction(3, 2), 5) == Residue(21, 125)
    assert unit_power_formal(Residue(64, 343), 2, 7) == Residue(323, 343)
    assert unit_power_formal(Residue(36, 125), 1, 5) == Residue(36, 125)


@pytest.mark.parametrize("n", [5, 7, 11, 13, 25])
def test_unit_power_formal_exponent_laws(n):
    m = n**3
    u = Residue(pow(2, n - 1 if n != 25 else 20, m), m)
    half = unit_power_formal(u, Fraction(1, 2), n)
    assert half * half == u
    for t in range(4):
        assert unit_power_formal(u, t, n) == Residue(pow(u.value, t, m), m)
    s, t = Fraction(3, 2), Fraction(5, 2)
    assert unit_power_formal(u, s, n) * unit_power_formal(u, t, n) == unit_power_formal(u, s + t, n)


def test_unit_power_formal_rejects_non_units():
    with pytest.raises(BadHypothesis):
        unit_power_formal(Residue(2, 125), 2, 5)
    with pytest.raises(BadHypothesis):
        unit_power_formal(Residue(6, 25), 2, 5)


def _random_rational(rng: random.Random, m: int) -> Fraction:
    while True:
        denominator = rng.randint(1, 10**6)
        if gcd(denominator, m) == 1:
            return Fraction(rng.randint(-(10**9), 10**9), denominator)


@pytest.mark.parametrize("m", [7, 125, 1125, 343, 1001, 2**13])
def test_rational_mod_is_a_ring_homomorphism(m):
    rng = random.Random(m)
    for _ in range(300):
        a, b = _random_rational(rng, m), _random_rational(rng, m)
        assert rational_mod(a + b, m) == rational_mod(a, m) + rational_mod(b, m)
        assert rational_mod(a - b, m) == rational_mod(a, m) - rational_mod(b, m)
        assert rational_mod(a * b, m) == rational_mod(a, m) * rational_mod(b, m)
        if gcd(a.numerator, m) == 1:
            assert rational_mod(a, m) * rational_mod(1 / a, m) == Residue(1, m)


def test_negative_powers_are_inverses():
    for m in (5, 49, 125, 1125, 1001):
        for a in range(1, 60):
            if gcd(a, m) != 1:
                continue
            for e in range(0, 12):
                assert mod_pow_signed(a, -e, m) == mod_inv(mod_pow_signed(a, e, m).value, m)


def test_crt_combine_reproduces_every_part():
    rng = random.Random(2024)
    moduli = [4, 9, 25, 7, 11, 13]
    for _ in range(200):
        chosen = rng.sample(moduli, rng.randint(1, len(moduli)))
        parts = [Residue(rng.randrange(m), m) for m in chosen]
        combined = crt_combine(parts)
        assert combined.modulus == prod(chosen)
        for part in parts:
            assert combined.reduce(part.modulus) == part
