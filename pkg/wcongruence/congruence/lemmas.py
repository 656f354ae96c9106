from fractions import Fraction
from math import gcd

from wcongruence.bernoulli import bernoulli_number, bernoulli_poly
from wcongruence.exactnum import BadHypothesis, Residue, is_prime, rational_mod

from .claims import CheckResult, ClaimParams, CongruenceClaim


def require_lemma1(p: int, l: int, t: int, k: int) -> None:
    """
    Hypotheses of the power-sum congruence for p^l - t r.

    Args:
        p (int): Prime, >= 5.
        l (int): Exponent, >= 1.
        t (int): Step, >= 2 and coprime to p.
        k (int): Half the power, >= 2.

    Raises:
        BadHypothesis: If any condition fails.
    """
    if not is_prime(p) or p < 5:
        raise BadHypothesis(f"p must be a prime >= 5 (p = {p})")
    if l < 1 or t < 2 or k < 2:
        raise BadHypothesis(f"need l >= 1, t >= 2, k >= 2 (l = {l}, t = {t}, k = {k})")
    if gcd(t, p) != 1:
        raise BadHypothesis(f"gcd(t, p) > 1 (t = {t}, p = {p})")


def require_lemma3(k: int, m: int, q: int) -> None:
    """
    Hypotheses of the Bernoulli-polynomial congruence mod q.

    Args:
        k (int): Index, >= 1.
        m (int): Multiplier, >= 1 and coprime to q.
        q (int): Modulus, >= 1.

    Raises:
        BadHypothesis: If any condition fails.
    """
    if k < 1 or m < 1 or q < 1:
        raise BadHypothesis(f"need k, m, q >= 1 (k = {k}, m = {m}, q = {q})")
    if gcd(m, q) != 1:
        raise BadHypothesis(f"gcd(m, q) > 1 (m = {m}, q = {q})")


def lemma1_sides(p: int, l: int, t: int, k: int) -> tuple[int, Fraction, int]:
    """
    Exact sides of the power-sum congruence for p^l - t r.

    Returns:
        tuple[int, Fraction, int]: The integer power sum, the exact rational
        right-hand side, and the modulus p^(3l-1).
    """
    require_lemma1(p, l, t, k)
    q = p**l
    s = q % t
    lhs = sum((q - t * r) ** (2 * k) for r in range(1, q // t + 1))
    rhs = Fraction(t ** (2 * k), 2 * k + 1) * (
        Fraction(2 * k + 1, t) * q * bernoulli_number(2 * k)
        - bernoulli_poly(2 * k + 1, Fraction(s, t))
    )
    return lhs, rhs, p ** (3 * l - 1)


def lemma1_check(p: int, l: int, t: int, k: int) -> CheckResult:
    """
    Sum of (p^l - t r)^(2k) over 1 <= r <= floor(p^l/t) against
    t^(2k)/(2k+1) ((2k+1)/t p^l B_2k - B_(2k+1)(s/t)) mod p^(3l-1),
    where s is p^l mod t.

    Raises:
        NotInvertible: If the right-hand side has a denominator divisible by p.
    """
    lhs, rhs, modulus = lemma1_sides(p, l, t, k)
    claim = CongruenceClaim("lem1", ClaimParams(p=p, l=l, t=t, k=k))
    return CheckResult.from_sides(
        claim, Residue(lhs, modulus), rational_mod(rhs, modulus)
    )


def lemma3_sides(a: int, k: int, m: int, q: int, x: Fraction | int) -> tuple[Fraction, Fraction]:
    """Exact sides of the Bernoulli-polynomial floor-sum identity."""
    require_lemma3(k, m, q)
    x = Fraction(x)
    lhs = (m**k * bernoulli_poly(k, (x + a) / m) - bernoulli_poly(k, x)) / k
    half = Fraction(1 - m, 2)
    rhs = sum(
        (
            ((a + j * m) // q + half) * (x + a + j * m) ** (k - 1)
            for j in range(q)
        ),
        Fraction(0),
    )
    return lhs, rhs


def lemma3_check(a: int, k: int, m: int, q: int, x: Fraction | int) -> CheckResult:
    """
    (1/k)(m^k B_k((x+a)/m) - B_k(x)) against
    sum over 0 <= j < q of (floor((a+jm)/q) + (1-m)/2)(x+a+jm)^(k-1), mod q.

    Raises:
        NotInvertible: If either side has a denominator sharing a factor with q.
    """
    lhs, rhs = lemma3_sides(a, k, m, q, x)
    claim = CongruenceClaim("lem3", ClaimParams(a=a, k=k, m=m, q=q, x=Fraction(x)))
    return CheckResult.from_sides(claim, rational_mod(lhs, q), rational_mod(rhs, q))
