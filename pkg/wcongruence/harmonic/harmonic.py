"""
Restricted inverse-power sums over 1 <= r <= floor(n/e), gcd(r, n) = 1, and
their closed-form predictions in terms of Bernoulli values, Euler numbers
and Euler quotients.

Direct sums use per-term modular inverses; predictions build an exact
rational from integer representatives and reduce it once, so the two routes
share no arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from wcongruence.bernoulli import bernoulli_factor_mod, euler_number
from wcongruence.exactnum import (
    BadHypothesis,
    Residue,
    rational_mod,
    require_coprime,
    require_odd,
)
from wcongruence.multfunc import (
    JACOBI_MODULI,
    combined_totient,
    euler_phi,
    euler_quotient,
    jacobi_unit,
)

SHIFTED_MODULI = (3, 4, 6)


@dataclass(frozen=True)
class SumSpec:
    """
    One restricted sum.

    Attributes:
        n (int): Upper range is floor(n/e); summands are coprime to n.
        e (int): One of 2, 3, 4, 6.
        power (int): 1 or 2.
        shifted (bool): Sum 1/(n - e r) instead of 1/r^power.
    """

    n: int
    e: int
    power: int = 2
    shifted: bool = False

    def evaluate(self) -> Residue:
        """
        Evaluates the sum directly.

        Returns:
            Residue: The sum mod n for power 2, mod n^2 otherwise.

        Raises:
            ValueError: If power is neither 1 nor 2.
        """
        if self.shifted:
            return sum_inv_shifted(self.n, self.e)
        if self.power == 2:
            return sum_inv_sq(self.n, self.e)
        if self.power == 1:
            return sum_inv(self.n, self.e)
        raise ValueError(f"unsupported power {self.power}")


def _units_up_to(n: int, bound: int):
    return (r for r in range(1, bound + 1) if gcd(r, n) == 1)


def _check_e(e: int, allowed: tuple = JACOBI_MODULI) -> None:
    if e not in allowed:
        raise ValueError(f"e must be one of {allowed}, got {e}")


def require_sum_hypothesis(n: int, e: int) -> None:
    """
    Hypotheses of the mod n^2 statements: odd n > 1 for e = 2,
    gcd(n, 6) = 1 for e in {3, 4} and gcd(n, 30) = 1 for e = 6.
    """
    _check_e(e)
    require_odd(n)
    if e in (3, 4):
        require_coprime(n, 6)
    elif e == 6:
        require_coprime(n, 30)


def _require_theorem1(n: int, e: int) -> None:
    _check_e(e)
    if n <= 1:
        raise BadHypothesis(f"n must be > 1 (n = {n})")
    require_coprime(n, 6)


def sum_inv_sq(n: int, e: int) -> Residue:
    """
    Sum of r^-2 over r <= floor(n/e), gcd(r, n) = 1, mod n.

    Args:
        n (int): n > 1 with gcd(n, 6) = 1.
        e (int): One of 2, 3, 4, 6.

    Returns:
        Residue: The sum modulo n.

    Raises:
        BadHypothesis: If n <= 1 or gcd(n, 6) > 1.
    """
    _require_theorem1(n, e)
    return Residue(sum(pow(r, -2, n) for r in _units_up_to(n, n // e)), n)


def sum_inv(n: int, e: int) -> Residue:
    """
    Sum of 1/r over r <= floor(n/e), gcd(r, n) = 1, mod n^2.

    Args:
        n (int): Odd n > 1; coprime to 6 for e in {3, 4}, to 30 for e = 6.
        e (int): One of 2, 3, 4, 6.

    Returns:
        Residue: The sum modulo n^2.
    """
    require_sum_hypothesis(n, e)
    m = n * n
    return Residue(sum(pow(r, -1, m) for r in _units_up_to(n, n // e)), m)


def sum_inv_shifted(n: int, e: int) -> Residue:
    """Sum of 1/(n - e r) over r <= floor(n/e), gcd(r, n) = 1, mod n^2."""
    _check_e(e, SHIFTED_MODULI)
    require_sum_hypothesis(n, e)
    m = n * n
    return Residue(
        sum(pow(n - e * r, -1, m) for r in _units_up_to(n, n // e)), m
    )


def full_range_modulus(n: int) -> int:
    """n, n/3 when 3 | n, or n/2 when n is a power of two."""
    if n % 3 == 0:
        return n // 3
    if n & (n - 1) == 0:
        return n // 2
    return n


def full_range_inv_sq(n: int) -> Residue:
    """
    Sum of i^-2 over 1 <= i < n with gcd(i, n) = 1, reduced mod
    full_range_modulus(n). The sum vanishes there.
    """
    if n <= 1:
        raise BadHypothesis(f"n must be > 1 (n = {n})")
    m = full_range_modulus(n)
    return Residue(sum(pow(i, -2, m) for i in _units_up_to(n, n - 1)), m)


def local_sum_inv_sq(n: int, p: int, l: int, e: int) -> Residue:
    """Sum of r^-2 over r <= floor(n/e) with p not dividing r, mod p^l."""
    q = p**l
    return Residue(
        sum(pow(r, -2, q) for r in range(1, n // e + 1) if r % p), q
    )


def a_e_mod(n: int, e: int) -> Residue:
    """
    A_e(n) = J_e(n) n^(phi(n)-2) phi_{J_e}^(2-phi(n))(n)
             B_{phi(n)-1}(1/e)/(phi(n)-1)  mod n.
    """
    _require_theorem1(n, e)
    totient = combined_totient(e, n)
    return Residue(jacobi_unit(e, n) * totient * bernoulli_factor_mod(n, e).value, n)


def predict_sum_inv_sq(n: int, e: int) -> Residue:
    """The right-hand side -A_e(n) of the mod n congruence for sum_inv_sq."""
    return -a_e_mod(n, e)


def euler_form_inv_sq(n: int) -> Residue:
    """
    The Euler-number form for e = 4:
    (-1)^((n-1)/2) 4 n^(phi(n)-2) phi_{J_4}^(2-phi(n))(n) E_{phi(n)-2}  mod n.
    """
    _require_theorem1(n, 4)
    sign = -1 if (n - 1) // 2 % 2 else 1
    phi = euler_phi(n)
    return Residue(sign * 4 * combined_totient(4, n) * euler_number(phi - 2), n)


def _quotients(n: int) -> tuple[int, int]:
    q2 = euler_quotient(2, n, 2).value
    q3 = euler_quotient(3, n, 2).value if n % 3 else 0
    return q2, q3


def predict_sum_inv(n: int, e: int) -> Residue:
    """
    Closed form of sum_inv(n, e) mod n^2:

    - e = 2: -2 q_2 + n q_2^2
    - e = 3: -3/2 q_3 + 3/4 n q_3^2 + 1/3 n A_3(n)
    - e = 4: -3 q_2 + 3/2 n q_2^2 + (-1)^((n+1)/2) n C_4(n) E_{phi(n)-2}
    - e = 6: -2 q_2 - 3/2 q_3 + n q_2^2 + 3/4 n q_3^2 + 1/6 n A_6(n)

    where C_e(n) = n^(phi(n)-2) phi_{J_e}^(2-phi(n))(n). Terms carrying a
    factor n only need their cofactor mod n.
    """
    require_sum_hypothesis(n, e)
    q2, q3 = _quotients(n)
    if e == 2:
        value = Fraction(-2 * q2 + n * q2 * q2)
    elif e == 3:
        a3 = a_e_mod(n, 3).value
        value = Fraction(-3, 2) * q3 + Fraction(3, 4) * n * q3 * q3 + Fraction(n * a3, 3)
    elif e == 4:
        sign = -1 if (n + 1) // 2 % 2 else 1
        euler_term = combined_totient(4, n) * euler_number(euler_phi(n) - 2) % n
        value = -3 * q2 + Fraction(3, 2) * n * q2 * q2 + sign * n * euler_term
    else:
        a6 = a_e_mod(n, 6).value
        value = (
            -2 * q2
            - Fraction(3, 2) * q3
            + n * q2 * q2
            + Fraction(3, 4) * n * q3 * q3
            + Fraction(n * a6, 6)
        )
    return rational_mod(value, n * n)


def predict_shifted(n: int, e: int) -> Residue:
    """
    Euler-quotient closed form of sum_inv_shifted(n, e) mod n^2:

    - e = 3: 1/2 q_3 - 1/4 n q_3^2
    - e = 4: 3/4 q_2 - 3/8 n q_2^2
    - e = 6: 1/3 q_2 + 1/4 q_3 - 1/6 n q_2^2 - 1/8 n q_3^2
    """
    _check_e(e, SHIFTED_MODULI)
    require_sum_hypothesis(n, e)
    q2, q3 = _quotients(n)
    if e == 3:
        value = Fraction(q3, 2) - Fraction(n * q3 * q3, 4)
    elif e == 4:
        value = Fraction(3 * q2, 4) - Fraction(3 * n * q2 * q2, 8)
    else:
        value = (
            Fraction(q2, 3)
            + Fraction(q3, 4)
            - Fraction(n * q2 * q2, 6)
            - Fraction(n * q3 * q3, 8)
        )
    return rational_mod(value, n * n)


def reflection_rhs(n: int, e: int, lift: Callable[[Residue], int] = int) -> Residue:
    """
    -e * sum_inv_shifted(n, e) - (n/e) * lift(sum_inv_sq(n, e))  mod n^2.

    Any representative of the mod n residue may be used; the factor n makes
    the choice immaterial.
    """
    _check_e(e, SHIFTED_MODULI)
    m = n * n
    shifted = sum_inv_shifted(n, e).value
    square = lift(sum_inv_sq(n, e))
    return rational_mod(Fraction(-e * shifted) - Fraction(n * square, e), m)
