from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Union

from .errors import BadHypothesis, NonCoprimeModuli, NotInvertible

Rational = Fraction
Factorization = tuple[tuple[int, int], ...]


@lru_cache(maxsize=8192)
def factorize(n: int) -> Factorization:
    """
    Factors a positive integer by deterministic trial division.

    Args:
        n (int): The integer to factor, n >= 1.

    Returns:
        Factorization: Pairs (prime, exponent) with strictly increasing primes.
        The factorization of 1 is empty.
    """
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")

    factors = []
    remaining = n
    divisor = 2
    while divisor * divisor <= remaining:
        if remaining % divisor == 0:
            exponent = 0
            while remaining % divisor == 0:
                remaining //= divisor
                exponent += 1
            factors.append((divisor, exponent))
        divisor += 1 if divisor == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return tuple(factors)


def is_prime(n: int) -> bool:
    """True iff n is a prime, decided from its trial-division factorization."""
    return n >= 2 and factorize(n) == ((n, 1),)


@dataclass(frozen=True)
class Modulus:
    """
    A modulus together with its (lazily cached) factorization.

    Every function taking a ModulusLike accepts one; bernoulli_factor_mod
    reads the cached factorization instead of factoring again.

    Attributes:
        value (int): The modulus, >= 1.
    """

    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"modulus must be positive, got {self.value}")

    @cached_property
    def factorization(self) -> Factorization:
        """Prime factorization of the modulus, computed once."""
        return factorize(self.value)

    def __int__(self) -> int:
        return self.value


ModulusLike = Union[int, Modulus]


def _modulus(m: ModulusLike) -> int:
    value = int(m)
    if value < 1:
        raise ValueError(f"modulus must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Residue:
    """
    A canonical residue: 0 <= value < modulus.

    Negative or oversized values are normalized on construction, so two
    residues compare equal exactly when they denote the same class.
    """

    value: int
    modulus: int

    def __post_init__(self):
        modulus = _modulus(self.modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", self.value % modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"

    def __int__(self) -> int:
        return self.value

    def _check(self, other: "Residue") -> None:
        if other.modulus != self.modulus:
            raise ValueError(
                f"residues mod {self.modulus} and mod {other.modulus} do not mix"
            )

    def __add__(self, other: Union["Residue", int]) -> "Residue":
        if isinstance(other, Residue):
            self._check(other)
            other = other.value
        return Residue(self.value + other, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Union["Residue", int]) -> "Residue":
        if isinstance(other, Residue):
            self._check(other)
            other = other.value
        return Residue(self.value - other, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __mul__(self, other: Union["Residue", int]) -> "Residue":
        if isinstance(other, Residue):
            self._check(other)
            other = other.value
        return Residue(self.value * other, self.modulus)

    __rmul__ = __mul__

    def reduce(self, modulus: ModulusLike) -> "Residue":
        """Reduces to a modulus dividing the current one."""
        modulus = _modulus(modulus)
        if self.modulus % modulus != 0:
            raise ValueError(f"{modulus} does not divide {self.modulus}")
        return Residue(self.value, modulus)


def mod_inv(a: int, m: ModulusLike) -> Residue:
    """
    Inverse of a modulo m.

    Args:
        a (int): The element to invert.
        m (ModulusLike): Modulus, >= 1.

    Returns:
        Residue: The inverse, modulo m.

    Raises:
        NotInvertible: If gcd(a, m) > 1.
    """
    m = _modulus(m)
    g = gcd(a, m)
    if g != 1:
        raise NotInvertible(a, m, g)
    return Residue(pow(a, -1, m), m)


def mod_pow_signed(a: int, e: int, m: ModulusLike) -> Residue:
    """
    a**e modulo m for any integer exponent; negative exponents go through
    the inverse of a**|e|.

    Args:
        a (int): Base.
        e (int): Exponent of any sign.
        m (ModulusLike): Modulus, >= 1.

    Returns:
        Residue: a**e modulo m.

    Raises:
        NotInvertible: If e < 0 and gcd(a, m) > 1.
    """
    m = _modulus(m)
    if e >= 0:
        return Residue(pow(a, e, m), m)
    return mod_inv(pow(a, -e, m), m)


def rational_mod(q: Fraction | int, m: ModulusLike) -> Residue:
    """
    Image of an exact rational in Z/mZ.

    Args:
        q (Fraction | int): The rational to reduce.
        m (ModulusLike): Modulus, >= 1.

    Returns:
        Residue: numerator * denominator^-1 modulo m.

    Raises:
        NotInvertible: If the reduced denominator shares a factor with m.
    """
    q = Fraction(q)
    m = _modulus(m)
    g = gcd(q.denominator, m)
    if g != 1:
        raise NotInvertible(q.denominator, m, g)
    return Residue(q.numerator * pow(q.denominator, -1, m), m)


def crt_combine(parts: Iterable[Residue]) -> Residue:
    """
    Chinese remainder assembly of residues with pairwise coprime moduli.

    Args:
        parts (Iterable[Residue]): Residues to combine.

    Returns:
        Residue: The unique residue modulo the product of the moduli.

    Raises:
        NonCoprimeModuli: If two moduli share a factor.
    """
    value, modulus = 0, 1
    for part in parts:
        if gcd(modulus, part.modulus) != 1:
            raise NonCoprimeModuli(
                f"modulus {part.modulus} is not coprime to {modulus}"
            )
        step = (part.value - value) * pow(modulus, -1, part.modulus)
        value += modulus * (step % part.modulus)
        modulus *= part.modulus
    return Residue(value, modulus)


def unit_power_formal(u: Residue, t: Fraction | int, n: int) -> Residue:
    """
    Principal formal power u**t of a unit u = 1 + a with n | a, working mod
    n**3 (or n**3/3 when 3 | n).

    The binomial series is cut after the quadratic term, which is exact
    because a**3 vanishes at that modulus:

        u**t = 1 + t*a + t*(t - 1)/2 * a**2

    For integer t this is the ordinary power.

    Args:
        u (Residue): The unit, u = 1 mod n, with modulus n**3 or n**3/3.
        t (Fraction | int): Exponent; its denominator must be coprime to n.
        n (int): The base modulus n.

    Returns:
        Residue: u**t modulo the modulus of u.

    Raises:
        BadHypothesis: If u is not 1 mod n or its modulus is not n**3 (n**3/3).
        NotInvertible: If the exponent's denominator is not a unit.
    """
    allowed = {n**3} | ({n**3 // 3} if n % 3 == 0 else set())
    if u.modulus not in allowed:
        raise BadHypothesis(f"modulus {u.modulus} is not n^3 for n = {n}")
    if (u.value - 1) % n != 0:
        raise BadHypothesis(f"{u.value} is not congruent to 1 mod {n}")

    t = Fraction(t)
    a = u.value - 1
    linear = rational_mod(t, u.modulus).value
    quadratic = rational_mod(t * (t - 1) / 2, u.modulus).value
    return Residue(1 + linear * a + quadratic * a * a, u.modulus)
