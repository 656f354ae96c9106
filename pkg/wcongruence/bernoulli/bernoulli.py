import threading
from fractions import Fraction
from math import comb

from loguru import logger

from wcongruence.exactnum import (
    BadHypothesis,
    Modulus,
    ModulusLike,
    Residue,
    crt_combine,
    is_prime,
    require_coprime,
)
from wcongruence.multfunc import JACOBI_MODULI, divisors


class _SequenceCache:
    """
    Grow-on-demand table of an exact sequence.

    Readers always see an immutable tuple; growth happens under a lock and
    replaces the published tuple in one assignment, so concurrent callers
    observe identical values.

    Attributes:
        verbose (bool): Enables growth logging if True.
    """

    name = "sequence"

    def __init__(self, initial: int = 0, verbose: bool = True):
        self.verbose = verbose
        self._lock = threading.Lock()
        self._values = self._seed()
        if initial:
            self.extend(initial)

    def log(self, message: str, level: str = "debug") -> None:
        """
        Logs a message if verbose mode is enabled.

        Args:
            message (str): The message to log.
            level (str): The log level (e.g., "debug", "info", "warning").
        """
        if self.verbose:
            getattr(logger, level)(message)

    def _seed(self) -> tuple:
        raise NotImplementedError

    def _next(self, values: list, index: int):
        raise NotImplementedError

    def extend(self, index: int) -> None:
        """Makes sure entries 0..index are available."""
        if index < len(self._values):
            return
        with self._lock:
            values = list(self._values)
            if index < len(values):
                return
            for m in range(len(values), index + 1):
                values.append(self._next(values, m))
            self._values = tuple(values)
        self.log(f"{self.name} cache extended to index {index}")

    def __getitem__(self, index: int):
        """
        Entry at index, growing the table when needed.

        Args:
            index (int): Sequence index, >= 0.

        Raises:
            ValueError: If index is negative.
        """
        if index < 0:
            raise ValueError(f"{self.name} index must be >= 0, got {index}")
        self.extend(index)
        return self._values[index]

    def __len__(self) -> int:
        return len(self._values)

    def snapshot(self) -> tuple:
        """The published table, without growing it."""
        return self._values


class BernoulliCache(_SequenceCache):
    """Exact Bernoulli numbers B_0, B_1, ... with B_1 = -1/2."""

    name = "Bernoulli"

    def _seed(self) -> tuple:
        return (Fraction(1),)

    def _next(self, values: list, m: int) -> Fraction:
        if m > 1 and m % 2 == 1:
            return Fraction(0)
        # sum_{j=0}^{m} C(m+1, j) B_j = 0
        total = sum(
            (comb(m + 1, j) * values[j] for j in range(m) if j < 2 or j % 2 == 0),
            Fraction(0),
        )
        return -total / (m + 1)


class EulerCache(_SequenceCache):
    """Euler numbers E_0, E_1, ... (coefficients of 1/cosh x)."""

    name = "Euler"

    def _seed(self) -> tuple:
        return (1,)

    def _next(self, values: list, m: int) -> int:
        if m % 2 == 1:
            return 0
        return -sum(comb(m, j) * values[j] for j in range(0, m, 2))


BERNOULLI = BernoulliCache(verbose=False)
EULER = EulerCache(verbose=False)


def bernoulli_number(v: int) -> Fraction:
    """
    Exact Bernoulli number B_v, with B_1 = -1/2.

    Args:
        v (int): Index, >= 0.

    Returns:
        Fraction: B_v; zero for odd v > 1.
    """
    return BERNOULLI[v]


def euler_number(m: int) -> int:
    """
    Euler number E_m (E_2 = -1, E_4 = 5, E_6 = -61).

    Args:
        m (int): Index, >= 0.

    Returns:
        int: E_m; zero for odd m.
    """
    return EULER[m]


def bernoulli_poly(v: int, x: Fraction | int) -> Fraction:
    """
    B_v(x) = sum_j C(v, j) B_j x^(v - j), exactly.

    Args:
        v (int): Degree, >= 0.
        x (Fraction | int): Rational argument.

    Returns:
        Fraction: The value of the Bernoulli polynomial.
    """
    if v < 0:
        raise ValueError(f"degree must be >= 0, got {v}")
    x = Fraction(x)
    BERNOULLI.extend(v)
    return sum(
        (comb(v, j) * BERNOULLI[j] * x ** (v - j) for j in range(v + 1)),
        Fraction(0),
    )


def raabe_check(v: int, m: int, x: Fraction | int) -> bool:
    """
    Checks the multiplication formula B_v(m x) = m^(v-1) sum_{k<m} B_v(x + k/m)
    exactly.

    Args:
        v (int): Degree, >= 0.
        m (int): Multiplier, >= 1.
        x (Fraction | int): Rational argument.

    Returns:
        bool: True when both sides agree.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x = Fraction(x)
    right = sum(
        (bernoulli_poly(v, x + Fraction(k, m)) for k in range(m)), Fraction(0)
    )
    return bernoulli_poly(v, m * x) == Fraction(m) ** (v - 1) * right


def vsc_check(twok: int) -> tuple[int, bool]:
    """
    von Staudt-Clausen at index 2k.

    Args:
        twok (int): Even index, >= 2.

    Returns:
        tuple[int, bool]: The denominator of B_2k, and whether
        B_2k + sum over primes p with (p-1) | 2k of 1/p is an integer.
    """
    if twok < 2 or twok % 2:
        raise ValueError(f"index must be even and >= 2, got {twok}")
    value = bernoulli_number(twok)
    total = value + sum(
        (Fraction(1, d + 1) for d in divisors(twok) if is_prime(d + 1)),
        Fraction(0),
    )
    return value.denominator, total.denominator == 1


def local_bernoulli_factor(p: int, l: int, e: int) -> Residue:
    """
    The j-sum for B_{phi(p^l)-1}(1/e)/(phi(p^l)-1) modulo p^l:

        e * sum over 0 <= j < p^l, p not dividing 1+je, of
            (floor((1+je)/p^l) + (1-e)/2) * (1+je)^(-2)

    The half-integer weight is taken with the inverse of 2, so p must be odd.
    """
    q = p**l
    half = (1 - e) * pow(2, -1, q) % q
    total = 0
    for j in range(q):
        m = 1 + j * e
        if m % p == 0:
            continue
        total += (m // q + half) * pow(m, -2, q)
    return Residue(e * total, q)


def bernoulli_factor_mod(n: ModulusLike, e: int) -> Residue:
    """
    beta_e(n): the residue mod n that agrees with
    B_{phi(p^l)-1}(1/e)/(phi(p^l)-1) modulo every p^l || n.

    Args:
        n (ModulusLike): Modulus, n > 1 with gcd(n, 6) = 1. A Modulus reuses
            its cached factorization.
        e (int): One of 2, 3, 4, 6.

    Returns:
        Residue: beta_e(n) mod n, assembled by CRT.

    Raises:
        BadHypothesis: If gcd(n, 6) > 1 or n <= 1.
    """
    if e not in JACOBI_MODULI:
        raise ValueError(f"e must be one of {JACOBI_MODULI}, got {e}")
    if int(n) <= 1:
        raise BadHypothesis(f"n must be > 1 (n = {int(n)})")
    modulus = n if isinstance(n, Modulus) else Modulus(n)
    require_coprime(modulus.value, 6)
    return crt_combine(
        local_bernoulli_factor(p, l, e) for p, l in modulus.factorization
    )
