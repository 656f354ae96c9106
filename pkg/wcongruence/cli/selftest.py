"""
Built-in table of hand-derived example values, grouped by package.

Every entry is evaluated and compared exactly. An expected exception class
means the call must raise that error.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from loguru import logger

from wcongruence.bernoulli import (
    bernoulli_factor_mod,
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    raabe_check,
    vsc_check,
)
from wcongruence.congruence import (
    ClaimParams,
    CongruenceClaim,
    a_e_mod,
    gen_binom,
    lemma1_check,
    lemma3_check,
    moebius_binom_product,
    ord_factorial,
    rhs_theorem2,
    rhs_theorem3,
    rhs_theorem4,
    s_product,
    t_product,
    verify_claim,
)
from wcongruence.exactnum import (
    CongruenceError,
    NonCoprimeModuli,
    NotInvertible,
    Residue,
    UndefinedSymbol,
    crt_combine,
    factorize,
    mod_inv,
    mod_pow_signed,
    rational_mod,
    unit_power_formal,
)
from wcongruence.harmonic import (
    full_range_inv_sq,
    predict_shifted,
    predict_sum_inv,
    predict_sum_inv_sq,
    sum_inv,
    sum_inv_shifted,
    sum_inv_sq,
)
from wcongruence.multfunc import (
    CONSTANT_ONE,
    TotientSpec,
    combined_totient,
    divisors,
    euler_phi,
    euler_quotient,
    floor_totient,
    generalized_totient,
    jacobi_unit,
    moebius,
)

MODULES = ("exactnum", "multfunc", "bernoulli", "harmonic", "congruence")

R = Residue


@dataclass(frozen=True)
class Example:
    """
    One hand-derived value.

    Attributes:
        module (str): Package the value belongs to, one of MODULES.
        label (str): Human-readable call, as printed by --list.
        compute (Callable[[], Any]): Evaluates the value.
        expected (Any): The expected value, or an error class.
    """

    module: str
    label: str
    compute: Callable[[], Any]
    expected: Any

    def run(self) -> Any:
        """Computed value, or the class of the CongruenceError raised."""
        try:
            return self.compute()
        except CongruenceError as error:
            return type(error)


def _sides(result) -> tuple:
    return result.lhs, result.rhs, result.modulus, result.passed


def _claim(claim_id: str, **params) -> tuple:
    return _sides(verify_claim(CongruenceClaim(claim_id, ClaimParams(**params))))


EXAMPLES = (
    # exactnum
    Example("exactnum", "factorize(1)", lambda: factorize(1), ()),
    Example("exactnum", "factorize(3375)", lambda: factorize(3375), ((3, 3), (5, 3))),
    Example("exactnum", "factorize(97)", lambda: factorize(97), ((97, 1),)),
    Example("exactnum", "mod_inv(4, 5)", lambda: mod_inv(4, 5), R(4, 5)),
    Example("exactnum", "mod_inv(3, 125)", lambda: mod_inv(3, 125), R(42, 125)),
    Example("exactnum", "mod_inv(3, 6)", lambda: mod_inv(3, 6), NotInvertible),
    Example("exactnum", "mod_pow_signed(4, 4, 125)", lambda: mod_pow_signed(4, 4, 125), R(6, 125)),
    Example("exactnum", "mod_pow_signed(2, -8, 125)", lambda: mod_pow_signed(2, -8, 125), R(21, 125)),
    Example("exactnum", "rational_mod(1/64, 5)", lambda: rational_mod(Fraction(1, 64), 5), R(4, 5)),
    Example("exactnum", "rational_mod(-123/2, 25)", lambda: rational_mod(Fraction(-123, 2), 25), R(1, 25)),
    Example("exactnum", "rational_mod(1/3, 6)", lambda: rational_mod(Fraction(1, 3), 6), NotInvertible),
    Example("exactnum", "crt_combine(2 mod 3, 3 mod 5)", lambda: crt_combine([R(2, 3), R(3, 5)]), R(8, 15)),
    Example("exactnum", "crt_combine(1 mod 4, 1 mod 6)", lambda: crt_combine([R(1, 4), R(1, 6)]), NonCoprimeModuli),
    Example(
        "exactnum",
        "unit_power_formal(81 mod 125, 3/2, 5)",
        lambda: unit_power_formal(R(81, 125), Fraction(3, 2), 5),
        R(21, 125),
    ),
    Example("exactnum", "unit_power_formal(64 mod 343, 2, 7)", lambda: unit_power_formal(R(64, 343), 2, 7), R(323, 343)),
    # multfunc
    Example("multfunc", "divisors(45)", lambda: divisors(45), [1, 3, 5, 9, 15, 45]),
    Example("multfunc", "moebius(12)", lambda: moebius(12), 0),
    Example("multfunc", "moebius(15)", lambda: moebius(15), 1),
    Example("multfunc", "euler_phi(15)", lambda: euler_phi(15), 8),
    Example("multfunc", "jacobi_unit(3, 7)", lambda: jacobi_unit(3, 7), 1),
    Example("multfunc", "jacobi_unit(4, 7)", lambda: jacobi_unit(4, 7), -1),
    Example("multfunc", "jacobi_unit(6, 25)", lambda: jacobi_unit(6, 25), 1),
    Example("multfunc", "jacobi_unit(3, 6)", lambda: jacobi_unit(3, 6), UndefinedSymbol),
    Example(
        "multfunc",
        "generalized_totient(1, 1, 12)",
        lambda: generalized_totient(TotientSpec(CONSTANT_ONE, 1), 12),
        Fraction(4),
    ),
    Example(
        "multfunc",
        "generalized_totient(J_4, -2, 5)",
        lambda: generalized_totient(TotientSpec(4, -2), 5),
        Fraction(-24, 25),
    ),
    Example("multfunc", "combined_totient(4, 5, 2)", lambda: combined_totient(4, 5, 2), -24),
    Example("multfunc", "combined_totient(3, 5, 2)", lambda: combined_totient(3, 5, 2), 26),
    Example("multfunc", "combined_totient(6, 7, 4)", lambda: combined_totient(6, 7, 4), -2400),
    Example("multfunc", "floor_totient(2, 5)", lambda: floor_totient(2, 5), 2),
    Example("multfunc", "floor_totient(3, 5)", lambda: floor_totient(3, 5), 1),
    Example("multfunc", "euler_quotient(2, 7, 2)", lambda: euler_quotient(2, 7, 2), R(9, 49)),
    Example("multfunc", "euler_quotient(3, 5, 2)", lambda: euler_quotient(3, 5, 2), R(16, 25)),
    Example("multfunc", "euler_quotient(2, 3)", lambda: euler_quotient(2, 3), R(1, 3)),
    # bernoulli
    Example("bernoulli", "bernoulli_number(2)", lambda: bernoulli_number(2), Fraction(1, 6)),
    Example("bernoulli", "bernoulli_number(4)", lambda: bernoulli_number(4), Fraction(-1, 30)),
    Example("bernoulli", "bernoulli_poly(3, 1/4)", lambda: bernoulli_poly(3, Fraction(1, 4)), Fraction(3, 64)),
    Example("bernoulli", "bernoulli_poly(5, 1/6)", lambda: bernoulli_poly(5, Fraction(1, 6)), Fraction(-85, 3888)),
    Example("bernoulli", "bernoulli_poly(3, 1/3)", lambda: bernoulli_poly(3, Fraction(1, 3)), Fraction(1, 27)),
    Example("bernoulli", "euler_number(2)", lambda: euler_number(2), -1),
    Example("bernoulli", "euler_number(4)", lambda: euler_number(4), 5),
    Example("bernoulli", "euler_number(6)", lambda: euler_number(6), -61),
    Example("bernoulli", "raabe_check(3, 2, 1/4)", lambda: raabe_check(3, 2, Fraction(1, 4)), True),
    Example("bernoulli", "raabe_check(5, 3, 0)", lambda: raabe_check(5, 3, 0), True),
    Example("bernoulli", "vsc_check(2)", lambda: vsc_check(2), (6, True)),
    Example("bernoulli", "vsc_check(4)", lambda: vsc_check(4), (30, True)),
    Example("bernoulli", "vsc_check(6)", lambda: vsc_check(6), (42, True)),
    Example("bernoulli", "bernoulli_factor_mod(5, 2)", lambda: bernoulli_factor_mod(5, 2), R(0, 5)),
    Example("bernoulli", "bernoulli_factor_mod(5, 4)", lambda: bernoulli_factor_mod(5, 4), R(4, 5)),
    Example("bernoulli", "bernoulli_factor_mod(7, 3)", lambda: bernoulli_factor_mod(7, 3), R(4, 7)),
    Example("bernoulli", "bernoulli_factor_mod(7, 6)", lambda: bernoulli_factor_mod(7, 6), R(6, 7)),
    # harmonic
    Example("harmonic", "sum_inv_sq(5, 2)", lambda: sum_inv_sq(5, 2), R(0, 5)),
    Example("harmonic", "sum_inv_sq(7, 3)", lambda: sum_inv_sq(7, 3), R(3, 7)),
    Example("harmonic", "sum_inv(5, 2)", lambda: sum_inv(5, 2), R(14, 25)),
    Example("harmonic", "sum_inv(7, 2)", lambda: sum_inv(7, 2), R(10, 49)),
    Example("harmonic", "sum_inv_shifted(5, 3)", lambda: sum_inv_shifted(5, 3), R(13, 25)),
    Example("harmonic", "sum_inv_shifted(7, 4)", lambda: sum_inv_shifted(7, 4), R(33, 49)),
    Example("harmonic", "full_range_inv_sq(5)", lambda: full_range_inv_sq(5), R(0, 5)),
    Example("harmonic", "full_range_inv_sq(9)", lambda: full_range_inv_sq(9), R(0, 3)),
    Example("harmonic", "full_range_inv_sq(8)", lambda: full_range_inv_sq(8), R(0, 4)),
    Example("harmonic", "predict_sum_inv_sq(5, 4)", lambda: predict_sum_inv_sq(5, 4), R(1, 5)),
    Example("harmonic", "predict_sum_inv_sq(7, 3)", lambda: predict_sum_inv_sq(7, 3), R(3, 7)),
    Example("harmonic", "predict_sum_inv(5, 2)", lambda: predict_sum_inv(5, 2), R(14, 25)),
    Example("harmonic", "predict_sum_inv(5, 4)", lambda: predict_sum_inv(5, 4), R(1, 25)),
    Example("harmonic", "predict_sum_inv(7, 6)", lambda: predict_sum_inv(7, 6), R(1, 49)),
    Example("harmonic", "predict_shifted(5, 3)", lambda: predict_shifted(5, 3), R(13, 25)),
    Example("harmonic", "predict_shifted(7, 4)", lambda: predict_shifted(7, 4), R(33, 49)),
    Example("harmonic", "predict_shifted(7, 6)", lambda: predict_shifted(7, 6), R(1, 49)),
    # congruence
    Example("congruence", "gen_binom(7, 2)", lambda: gen_binom(7, 2), Fraction(21)),
    Example("congruence", "gen_binom(5/2, 2)", lambda: gen_binom(Fraction(5, 2), 2), Fraction(15, 8)),
    Example("congruence", "t_product(5, 2, 1)", lambda: t_product(5, 2, 1), R(6, 125)),
    Example("congruence", "t_product(15, 2, 1)", lambda: t_product(15, 2, 1), R(286, 1125)),
    Example("congruence", "t_product(5, 3, 1)", lambda: t_product(5, 3, 1), R(4, 125)),
    Example("congruence", "t_product(5, 6, 1)", lambda: t_product(5, 6, 1), R(1, 125)),
    Example("congruence", "moebius_binom_product(5, 2, 1)", lambda: moebius_binom_product(5, 2, 1), Fraction(6)),
    Example("congruence", "moebius_binom_product(15, 2, 1)", lambda: moebius_binom_product(15, 2, 1), Fraction(286)),
    Example("congruence", "s_product(5, 1)", lambda: s_product(5, 1), R(4, 125)),
    Example("congruence", "s_product(5, 3)", lambda: s_product(5, 3), R(84, 125)),
    Example(
        "congruence",
        "s_product(7, 2) * inv(2^3)",
        lambda: s_product(7, 2) * mod_inv(8, 343),
        R(134, 343),
    ),
    Example("congruence", "a_e_mod(5, 3)", lambda: a_e_mod(5, 3), R(4, 5)),
    Example("congruence", "a_e_mod(7, 6)", lambda: a_e_mod(7, 6), R(6, 7)),
    Example("congruence", "rhs_theorem2(5, 1)", lambda: rhs_theorem2(5, 1), R(6, 125)),
    Example("congruence", "rhs_theorem2(15, 1)", lambda: rhs_theorem2(15, 1), R(286, 1125)),
    Example("congruence", "rhs_theorem2(5, 2)", lambda: rhs_theorem2(5, 2), R(36, 125)),
    Example("congruence", "rhs_theorem3(5, 3, 1, corrected)", lambda: rhs_theorem3(5, 3, 1, "corrected"), R(4, 125)),
    Example("congruence", "rhs_theorem3(5, 3, 1, statement)", lambda: rhs_theorem3(5, 3, 1, "statement"), R(54, 125)),
    Example("congruence", "rhs_theorem3(5, 4, 1, statement)", lambda: rhs_theorem3(5, 4, 1, "statement"), R(4, 125)),
    Example("congruence", "rhs_theorem3(7, 6, 1, corrected)", lambda: rhs_theorem3(7, 6, 1, "corrected"), R(6, 343)),
    Example("congruence", "rhs_theorem3(7, 6, 1, statement)", lambda: rhs_theorem3(7, 6, 1, "statement"), R(251, 343)),
    Example("congruence", "rhs_theorem4(5, 1)", lambda: rhs_theorem4(5, 1), R(1, 125)),
    Example("congruence", "rhs_theorem4(5, 3)", lambda: rhs_theorem4(5, 3), R(21, 125)),
    Example("congruence", "rhs_theorem4(7, 2)", lambda: rhs_theorem4(7, 2), R(134, 343)),
    Example("congruence", "ord_factorial(10, 2)", lambda: ord_factorial(10, 2), 8),
    Example("congruence", "ord_factorial(25, 5)", lambda: ord_factorial(25, 5), 6),
    Example("congruence", "lemma1_check(5, 1, 2, 2)", lambda: _sides(lemma1_check(5, 1, 2, 2)), (7, 7, 25, True)),
    Example("congruence", "lemma1_check(5, 1, 2, 4)", lambda: _sides(lemma1_check(5, 1, 2, 4)), (12, 12, 25, True)),
    Example("congruence", "lemma1_check(5, 1, 4, 2)", lambda: _sides(lemma1_check(5, 1, 4, 2)), (1, 1, 25, True)),
    Example("congruence", "lemma3_check(1, 2, 3, 5, 0)", lambda: _sides(lemma3_check(1, 2, 3, 5, 0)), (3, 3, 5, True)),
    Example("congruence", "lemma3_check(1, 4, 2, 5, 0)", lambda: _sides(lemma3_check(1, 4, 2, 5, 0)), (2, 2, 5, True)),
    Example("congruence", "verify morley(p=5)", lambda: _claim("morley", p=5), (6, 6, 125, True)),
    Example("congruence", "verify cor4(p=5, k=2)", lambda: _claim("cor4", p=5, k=2), (36, 36, 125, True)),
    Example("congruence", "verify cor5(p=3, q=5, k=1)", lambda: _claim("cor5", p=3, q=5, k=1), (57, 57, 3375, True)),
    Example(
        "congruence",
        "verify th3_1(n=5, k=1, statement)",
        lambda: _claim("th3_1", n=5, k=1, variant="statement"),
        (4, 54, 125, False),
    ),
    Example(
        "congruence",
        "verify th3_3(n=7, k=1, statement)",
        lambda: _claim("th3_3", n=7, k=1, variant="statement"),
        (6, 251, 343, False),
    ),
)


@dataclass(frozen=True)
class Mismatch:
    """An example whose computed value differs from the expected one."""

    example: Example
    actual: Any


class SelfTest:
    """
    Runs the example table.

    Attributes:
        verbose (bool): Enables detailed logging if True.
    """

    def __init__(self, verbose: bool = True):
        self.verbose = verbose

    def log(self, message: str, level: str = "info") -> None:
        """
        Logs a message if verbose mode is enabled.

        Args:
            message (str): The message to log.
            level (str): The log level (e.g., "info", "warning", "error").
        """
        if self.verbose:
            getattr(logger, level)(message)

    @staticmethod
    def select(only: str | None = None) -> list[Example]:
        """
        Examples of one module, or all of them.

        Args:
            only (str | None): Module name from MODULES.

        Returns:
            list[Example]: The selected examples in table order.

        Raises:
            ValueError: If the module is unknown.
        """
        if only is not None and only not in MODULES:
            raise ValueError(f"unknown module '{only}', expected one of {MODULES}")
        return [e for e in EXAMPLES if only is None or e.module == only]

    def run(self, only: str | None = None) -> list[Mismatch]:
        """
        Evaluates the selected examples.

        Args:
            only (str | None): Module name from MODULES.

        Returns:
            list[Mismatch]: Every example that did not agree.
        """
        examples = self.select(only)
        mismatches = []
        for example in examples:
            actual = example.run()
            if actual != example.expected:
                mismatches.append(Mismatch(example, actual))
                self.log(
                    f"{example.module}: {example.label} gave {actual!r}, "
                    f"expected {example.expected!r}",
                    "error",
                )
        self.log(f"{len(examples) - len(mismatches)}/{len(examples)} examples agree")
        return mismatches
