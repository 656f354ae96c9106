from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, prod

from wcongruence.exactnum import (
    NotCoprime,
    Residue,
    UndefinedSymbol,
    factorize,
)

JACOBI_MODULI = (2, 3, 4, 6)
CONSTANT_ONE = 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"divisors expects a positive integer, got {n}")
    powers = [[p**i for i in range(a + 1)] for p, a in factorize(n)]
    return sorted(prod(combo) for combo in product(*powers))


def squarefree_divisors(n: int) -> list[tuple[int, int]]:
    """Pairs (d, moebius(d)) over the squarefree divisors d of n."""
    pairs = [(1, 1)]
    for p, _ in factorize(n):
        pairs += [(d * p, -mu) for d, mu in pairs]
    return sorted(pairs)


def moebius(n: int) -> int:
    """
    Möbius function from the factorization of n.

    Args:
        n (int): Positive integer.

    Returns:
        int: 0 if n has a square factor, else (-1) to the number of primes.
    """
    factors = factorize(n)
    if any(a > 1 for _, a in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    """
    Euler totient, n times the product of (1 - 1/p) over p | n.

    Args:
        n (int): Positive integer.

    Returns:
        int: The number of 1 <= r <= n with gcd(r, n) = 1.
    """
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def jacobi_unit(e: int, n: int) -> int:
    """
    The unit J_e(n) for e in {2, 3, 4, 6}: +1 when n = 1 (mod e) and -1 when
    n = -1 (mod e).

    Raises:
        UndefinedSymbol: If n is congruent to neither 1 nor -1 mod e.
    """
    if e not in JACOBI_MODULI:
        raise ValueError(f"J_e is only defined for e in {JACOBI_MODULI}, got {e}")
    if n % e == 1 % e:
        return 1
    if n % e == e - 1:
        return -1
    raise UndefinedSymbol(f"n ≢ ±1 (mod {e}) (n = {n})")


@dataclass(frozen=True)
class TotientSpec:
    """
    Weight and exponent of a generalized totient.

    Attributes:
        weight (int): CONSTANT_ONE for the Jordan weight, otherwise the
            modulus e in {2, 3, 4, 6} of the weight J_e.
        k (int): The exponent; may be negative.
    """

    weight: int
    k: int

    def __post_init__(self):
        if self.weight != CONSTANT_ONE and self.weight not in JACOBI_MODULI:
            raise ValueError(f"unsupported totient weight {self.weight}")

    def f(self, d: int) -> int:
        """The weight at d: 1, or J_e(d)."""
        if self.weight == CONSTANT_ONE:
            return 1
        return jacobi_unit(self.weight, d)


def generalized_totient(spec: TotientSpec, n: int) -> Fraction:
    """
    phi_f^(k)(n) = sum over d | n of (n/d)^k f(d) mu(d), exactly.

    Only squarefree d contribute, so the weight is evaluated only where
    mu(d) != 0.
    """
    total = Fraction(0)
    for d, mu in squarefree_divisors(n):
        total += Fraction(n // d) ** spec.k * spec.f(d) * mu
    return total


def combined_totient(e: int, n: int, exponent: int | None = None) -> int:
    """
    Sum over d | n of mu(d) J_e(d) d^E, i.e. the product over p | n of
    (1 - J_e(p) p^E). With the default E = phi(n) - 2 this is the integer
    n^(phi(n)-2) * phi_{J_e}^(2-phi(n))(n).

    Args:
        e (int): Modulus of the weight J_e.
        n (int): Positive argument.
        exponent (int | None): E; defaults to euler_phi(n) - 2.

    Returns:
        int: The exact value.
    """
    if n == 1:
        return 1
    if exponent is None:
        exponent = euler_phi(n) - 2
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    return sum(mu * jacobi_unit(e, d) * d**exponent for d, mu in squarefree_divisors(n))


def floor_totient(e: int, n: int) -> int:
    """
    phi_e(n) = sum over d | n of mu(n/d) floor(d/e), the number of
    r <= floor(n/e) coprime to n.

    Args:
        e (int): Range divisor, >= 2.
        n (int): Positive integer.

    Returns:
        int: The count.
    """
    if e < 2:
        raise ValueError(f"floor_totient expects e >= 2, got {e}")
    return sum(moebius(n // d) * (d // e) for d in divisors(n))


def euler_quotient(r: int, n: int, precision_power: int = 1) -> Residue:
    """
    Euler quotient q_r(n) = (r^phi(n) - 1)/n reduced mod n^precision_power.

    Args:
        r (int): Base, coprime to n.
        n (int): Modulus, n > 1.
        precision_power (int): Precision of the result, >= 1.

    Raises:
        NotCoprime: If gcd(r, n) > 1.
    """
    if n <= 1:
        raise ValueError(f"euler_quotient expects n > 1, got {n}")
    if precision_power < 1:
        raise ValueError(f"precision_power must be >= 1, got {precision_power}")
    if gcd(r, n) != 1:
        raise NotCoprime(f"gcd({r}, {n}) > 1")
    target = n**precision_power
    power = pow(r, euler_phi(n), target * n)
    return Residue((power - 1) // n, target)
