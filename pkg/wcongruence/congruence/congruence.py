from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from wcongruence.bernoulli import euler_number
from wcongruence.exactnum import (
    BadHypothesis,
    Residue,
    mod_inv,
    mod_pow_signed,
    rational_mod,
    require_coprime,
    require_odd,
    unit_power_formal,
)
from wcongruence.harmonic import a_e_mod
from wcongruence.multfunc import (
    combined_totient,
    divisors,
    euler_phi,
    euler_quotient,
    floor_totient,
    moebius,
)

from .claims import Variant

THEOREM3_MODULI = (3, 4, 6)


def product_modulus(n: int, e: int = 2) -> int:
    """M(n): n^3, or n^3/3 when 3 | n in the e = 2 products (th2, th4)."""
    if e == 2 and n % 3 == 0:
        return n**3 // 3
    return n**3


def _require_k(k: int) -> None:
    if k < 1:
        raise BadHypothesis(f"k must be >= 1 (k = {k})")


def _half_phi_sign(n: int) -> int:
    return -1 if euler_phi(n) // 2 % 2 else 1


def gen_binom(x: Fraction | int, m: int) -> Fraction:
    """x(x-1)...(x-m+1)/m! for rational x; gen_binom(x, 0) = 1."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    x = Fraction(x)
    result = Fraction(1)
    for i in range(m):
        result *= (x - i) / (i + 1)
    return result


def t_product(n: int, e: int, k: int) -> Residue:
    """
    T_n = product of (kn - r)/r over r <= floor(n/e), gcd(r, n) = 1,
    modulo M(n). The empty product is 1.

    Args:
        n (int): Odd, > 1.
        e (int): Range divisor; M(n) is n^3/3 only for e = 2 and 3 | n.
        k (int): Multiplier, >= 1.

    Returns:
        Residue: T_n modulo M(n).

    Raises:
        BadHypothesis: If n is not odd and > 1, or k < 1.
    """
    require_odd(n)
    _require_k(k)
    modulus = product_modulus(n, e)
    numerator, denominator = 1, 1
    for r in range(1, n // e + 1):
        if gcd(r, n) == 1:
            numerator = numerator * (k * n - r) % modulus
            denominator = denominator * r % modulus
    return Residue(numerator, modulus) * mod_inv(denominator, modulus)


def moebius_binom_product(n: int, e: int, k: int) -> Fraction:
    """Exact value of the product over d | n of C(kd - 1, floor(d/e))^mu(n/d)."""
    require_odd(n)
    _require_k(k)
    result = Fraction(1)
    for d in divisors(n):
        mu = moebius(n // d)
        if mu:
            result *= Fraction(comb(k * d - 1, d // e)) ** mu
    return result


def _half_range(n: int):
    return (r for r in range(1, (n - 1) // 2 + 1) if gcd(r, n) == 1)


def s_product(n: int, k: int) -> Residue:
    """
    S_n = product over r <= (n-1)/2, gcd(r, n) = 1, of
    (kn - r)/r * (kn - (n - r))/r * r/(kn - 2r), modulo M(n).
    """
    require_odd(n)
    _require_k(k)
    modulus = product_modulus(n)
    numerator, denominator = 1, 1
    for r in _half_range(n):
        numerator = numerator * (k * n - r) * (k * n - n + r) * r % modulus
        denominator = denominator * r * r * (k * n - 2 * r) % modulus
    return Residue(numerator, modulus) * mod_inv(denominator, modulus)


def half_binom_product(n: int, k: int) -> Fraction:
    """Exact value of the product over d | n of gen_binom((kd-1)/2, (d-1)/2)^mu(n/d)."""
    require_odd(n)
    _require_k(k)
    result = Fraction(1)
    for d in divisors(n):
        mu = moebius(n // d)
        if mu:
            result *= gen_binom(Fraction(k * d - 1, 2), (d - 1) // 2) ** mu
    return result


def half_products(n: int, k: int) -> tuple[Residue, Residue, Residue]:
    """
    The three partial products over r <= (n-1)/2, gcd(r, n) = 1, mod M(n):
    (kn - r)/r, (kn - (n - r))/r and (kn - 2r)/r.
    """
    require_odd(n)
    _require_k(k)
    modulus = product_modulus(n)
    factors = (
        lambda r: k * n - r,
        lambda r: k * n - n + r,
        lambda r: k * n - 2 * r,
    )
    results = []
    for factor in factors:
        numerator, denominator = 1, 1
        for r in _half_range(n):
            numerator = numerator * factor(r) % modulus
            denominator = denominator * r % modulus
        results.append(Residue(numerator, modulus) * mod_inv(denominator, modulus))
    return tuple(results)


def half_product_targets(n: int, k: int) -> tuple[Residue, Residue, Residue]:
    """
    Closed forms of half_products: (-1)^(phi/2) 4^(k phi),
    4^(-(k-1) phi) and (-1)^(phi/2) 2^(phi/2) 2^(k phi).
    """
    require_odd(n)
    _require_k(k)
    modulus = product_modulus(n)
    phi = euler_phi(n)
    sign = _half_phi_sign(n)
    return (
        Residue(sign * pow(4, k * phi, modulus), modulus),
        mod_pow_signed(4, -(k - 1) * phi, modulus),
        Residue(sign * pow(2, phi // 2 + k * phi, modulus), modulus),
    )


def rhs_theorem2(n: int, k: int) -> Residue:
    """
    Closed form of t_product(n, 2, k).

    Args:
        n (int): Odd, > 1.
        k (int): Multiplier, >= 1.

    Returns:
        Residue: (-1)^(phi(n)/2) 4^(k phi(n)) modulo M(n).
    """
    require_odd(n)
    _require_k(k)
    modulus = product_modulus(n)
    return Residue(_half_phi_sign(n) * pow(4, k * euler_phi(n), modulus), modulus)


def rhs_theorem4(n: int, k: int) -> Residue:
    """
    Closed form of s_product(n, k) * 2^(-phi(n)/2).

    Args:
        n (int): Odd, > 1.
        k (int): Multiplier, >= 1.

    Returns:
        Residue: 2^(-(k-1) phi(n)) modulo M(n).
    """
    require_odd(n)
    _require_k(k)
    return mod_pow_signed(2, -(k - 1) * euler_phi(n), product_modulus(n))


def require_theorem3(n: int, e: int, k: int) -> None:
    """
    Hypotheses of the floor(n/e) products for e in {3, 4, 6}.

    Args:
        n (int): Odd, coprime to 6 (to 30 when e = 6).
        e (int): 3, 4 or 6.
        k (int): Multiplier, >= 1.

    Raises:
        ValueError: If e is not 3, 4 or 6.
        BadHypothesis: If n or k falls outside the hypotheses.
    """
    if e not in THEOREM3_MODULI:
        raise ValueError(f"e must be one of {THEOREM3_MODULI}, got {e}")
    require_odd(n)
    _require_k(k)
    require_coprime(n, 30 if e == 6 else 6)


@dataclass(frozen=True)
class Theorem3Parts:
    """
    Shared ingredients of every th3 right-hand side.

    Attributes:
        n (int): Odd modulus argument.
        e (int): 3, 4 or 6.
        k (int): Multiplier.
        sign (int): (-1)^phi_e(n).
        phi (int): phi(n).
        q2 (int): q_2(n) mod n^2.
        q3 (int): q_3(n) mod n^2.
        a_e (int): A_e(n) mod n.
    """

    n: int
    e: int
    k: int
    sign: int
    phi: int
    q2: int
    q3: int
    a_e: int

    @property
    def modulus(self) -> int:
        """n^3, the modulus of every variant."""
        return self.n**3

    def a_coefficient(self) -> Fraction:
        """Rational multiplier of A_e(n) in the n^2 term, by e."""
        k = Fraction(self.k)
        if self.e == 3:
            return k * (k / 2 - Fraction(1, 3))
        if self.e == 4:
            return k * k / 2 - k / 4
        return k * (k - Fraction(1, 3)) / 2

    def a_term(self) -> Fraction:
        """n^2 * coefficient * A_e(n) with the cofactor reduced mod n."""
        cofactor = rational_mod(self.a_coefficient() * self.a_e, self.n).value
        return Fraction(self.n * self.n * cofactor)


def theorem3_parts(n: int, e: int, k: int) -> Theorem3Parts:
    """
    Evaluates the ingredients shared by the three variants once.

    Args:
        n (int): Odd, coprime to 6 (to 30 when e = 6).
        e (int): 3, 4 or 6.
        k (int): Multiplier, >= 1.

    Returns:
        Theorem3Parts: Sign, totient, Euler quotients mod n^2 and A_e(n).
    """
    require_theorem3(n, e, k)
    return Theorem3Parts(
        n=n,
        e=e,
        k=k,
        sign=-1 if floor_totient(e, n) % 2 else 1,
        phi=euler_phi(n),
        q2=euler_quotient(2, n, 2).value,
        q3=euler_quotient(3, n, 2).value,
        a_e=a_e_mod(n, e).value,
    )


def _statement(parts: Theorem3Parts) -> Fraction:
    n, k, phi, m = parts.n, parts.k, parts.phi, parts.modulus
    if parts.e == 3:
        return Fraction(pow(27, k * phi, m) + 1, 2) + parts.a_term()
    if parts.e == 4:
        sign = -1 if (n + 1) // 2 % 2 else 1
        euler_term = combined_totient(4, n) * euler_number(phi - 2) % n
        return Fraction(pow(8, k * phi, m) + sign * k * (2 * k - 1) * n * n * euler_term)
    return Fraction(pow(16, k * phi, m) + pow(27, k * phi, m), 2) + parts.a_term()


def _proof_expansion(parts: Theorem3Parts) -> Fraction:
    n, k, q2, q3 = parts.n, Fraction(parts.k), parts.q2, parts.q3
    if parts.e == 3:
        polynomial = (
            1
            + Fraction(3, 2) * k * n * q3
            + (Fraction(9, 8) * k * k - Fraction(3, 4) * k) * n * n * q3 * q3
        )
    elif parts.e == 4:
        polynomial = (
            1
            + 3 * k * n * q2
            + (Fraction(9, 2) * k * k - Fraction(3, 2) * k) * n * n * q2 * q2
        )
    else:
        polynomial = (
            1
            + 2 * k * n * q2
            + Fraction(3, 2) * k * n * q3
            + (2 * k * k - k) * n * n * q2 * q2
            + (Fraction(9, 8) * k * k - Fraction(3, 4) * k) * n * n * q3 * q3
            + 3 * k * k * n * n * q2 * q3
        )
    return polynomial + parts.a_term()


def _corrected(parts: Theorem3Parts) -> Fraction:
    n, k, phi, m = parts.n, parts.k, parts.phi, parts.modulus
    if parts.e == 4:
        return _statement(parts)
    three = unit_power_formal(Residue(pow(3, phi, m), m), Fraction(3 * k, 2), n)
    if parts.e == 3:
        return three.value + parts.a_term()
    two = unit_power_formal(Residue(pow(2, phi, m), m), 2 * k, n)
    return (two * three).value + parts.a_term()


_VARIANTS = {
    Variant.STATEMENT: _statement,
    Variant.PROOF_EXPANSION: _proof_expansion,
    Variant.CORRECTED: _corrected,
}


def rhs_theorem3(n: int, e: int, k: int, variant: Variant | str) -> Residue:
    """
    Right-hand side of the floor(n/e) binomial congruence mod n^3.

    Args:
        n (int): Odd, gcd(n, 6) = 1 (gcd(n, 30) = 1 for e = 6).
        e (int): 3, 4 or 6.
        k (int): Multiplier, >= 1.
        variant (Variant | str): "statement" uses the printed closed form,
            "proof_expansion" the polynomial in Euler quotients obtained by
            expanding T_n, and "corrected" the formal half powers that match
            the expansion.

    Returns:
        Residue: (-1)^phi_e(n) times the selected bracket, mod n^3.
    """
    parts = theorem3_parts(n, e, k)
    bracket = _VARIANTS[Variant.parse(variant)](parts)
    return rational_mod(parts.sign * bracket, parts.modulus)


def ord_factorial(n: int, p: int) -> int:
    """ord_p(n!) by Legendre's formula."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total, power = 0, p
    while power <= n:
        total += n // power
        power *= p
    return total


def binom_valuation(n: int, m: int, p: int) -> int:
    """ord_p of C(n, m), 0 <= m <= n."""
    return ord_factorial(n, p) - ord_factorial(m, p) - ord_factorial(n - m, p)
