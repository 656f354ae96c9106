from math import gcd


class CongruenceError(ValueError):
    """Base class for every error raised by wcongruence."""


class NotInvertible(CongruenceError):
    """
    Raised when an element has no inverse modulo the requested modulus.

    Attributes:
        value (int): The element that was inverted.
        modulus (int): The modulus.
        gcd (int): gcd(value, modulus), always > 1.
    """

    def __init__(self, value: int, modulus: int, gcd: int):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(
            f"{value} is not invertible mod {modulus} (gcd = {gcd})"
        )


class NonCoprimeModuli(CongruenceError):
    """Raised by CRT assembly when two moduli share a factor."""


class BadHypothesis(CongruenceError):
    """Raised when arguments fall outside the hypotheses of a statement."""


class UndefinedSymbol(CongruenceError):
    """Raised when J_e(n) is evaluated at n not congruent to ±1 mod e."""


class NotCoprime(CongruenceError):
    """Raised when an Euler quotient is requested with gcd(r, n) > 1."""


def require_coprime(n: int, m: int, label: str | None = None) -> None:
    """
    Raises BadHypothesis unless gcd(n, m) == 1.

    Args:
        n (int): The argument under test.
        m (int): The number n must be coprime to.
        label (str | None): Name used for n in the message.
    """
    if gcd(n, m) != 1:
        name = label or "n"
        raise BadHypothesis(f"gcd({name}, {m}) > 1 ({name} = {n})")


def require_odd(n: int, label: str | None = None) -> None:
    """Raises BadHypothesis unless n is odd and greater than one."""
    if n <= 1 or n % 2 == 0:
        name = label or "n"
        raise BadHypothesis(f"{name} must be odd and > 1 ({name} = {n})")
