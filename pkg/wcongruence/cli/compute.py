"""Single-quantity evaluation behind the ``compute`` subcommand."""

from argparse import Namespace
from fractions import Fraction
from typing import Callable

from loguru import logger

from wcongruence.bernoulli import (
    bernoulli_factor_mod,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
)
from wcongruence.congruence import (
    a_e_mod,
    moebius_binom_product,
    s_product,
    t_product,
)
from wcongruence.exactnum import CongruenceError
from wcongruence.harmonic import SumSpec
from wcongruence.multfunc import (
    combined_totient,
    euler_phi,
    euler_quotient,
    floor_totient,
    jacobi_unit,
)


class MissingArgument(Exception):
    """A flag the quantity needs was not given."""


def _need(args: Namespace, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise MissingArgument(f"--{name} is required")
    return value


def _or_default(value, default):
    # An explicit 0 must reach the hypothesis checks.
    return default if value is None else value


def _euler_quotient(args: Namespace):
    return euler_quotient(_need(args, "r"), _need(args, "n"), _or_default(args.power, 1))


def _sum(args: Namespace):
    spec = SumSpec(_need(args, "n"), _need(args, "e"), _or_default(args.power, 2), args.shifted)
    return spec.evaluate()


QUANTITIES: dict[str, Callable[[Namespace], object]] = {
    "bernoulli": lambda a: bernoulli_number(_need(a, "m")),
    "bernoulli-poly": lambda a: bernoulli_poly(_need(a, "m"), _need(a, "x")),
    "euler-number": lambda a: euler_number(_need(a, "m")),
    "euler-quotient": _euler_quotient,
    "totient": lambda a: euler_phi(_need(a, "n")),
    "combined-totient": lambda a: combined_totient(_need(a, "e"), _need(a, "n"), a.m),
    "floor-totient": lambda a: floor_totient(_need(a, "e"), _need(a, "n")),
    "jacobi": lambda a: jacobi_unit(_need(a, "e"), _need(a, "n")),
    "beta": lambda a: bernoulli_factor_mod(_need(a, "n"), _need(a, "e")),
    "a-e": lambda a: a_e_mod(_need(a, "n"), _need(a, "e")),
    "sum": _sum,
    "t-product": lambda a: t_product(_need(a, "n"), _need(a, "e"), _or_default(a.k, 1)),
    "s-product": lambda a: s_product(_need(a, "n"), _or_default(a.k, 1)),
    "binom-product": lambda a: moebius_binom_product(_need(a, "n"), _need(a, "e"), _or_default(a.k, 1)),
}


def format_value(value) -> str:
    """Residues print as "v (mod m)", rationals as "p/q", integers as is."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def cmd_compute(args: Namespace) -> int:
    """
    Prints one quantity on stdout.

    Returns:
        int: 0 on success, 1 on a hypothesis violation, 2 on missing flags.
    """
    try:
        value = QUANTITIES[args.quantity](args)
    except MissingArgument as error:
        logger.error(f"{args.quantity}: {error}")
        return 2
    except CongruenceError as error:
        logger.error(f"{args.quantity}: {error}")
        return 1
    except ValueError as error:
        logger.error(f"{args.quantity}: {error}")
        return 2
    print(format_value(value))
    return 0
