from dataclasses import dataclass, field, fields
from enum import Enum
from fractions import Fraction

from wcongruence.exactnum import BadHypothesis, Residue

CLAIM_IDS = (
    "morley",
    "cai",
    "th1",
    "cor1",
    "cor2",
    "cor3_1",
    "cor3_2",
    "cor3_3",
    "th2",
    "cor4",
    "cor5",
    "th3_1",
    "th3_2",
    "th3_3",
    "th4",
    "lem1",
    "lem2",
    "lem3",
    "lem4",
    "lem5_1",
    "lem5_2",
    "lem5_3",
)

# Parameters with their own report column; everything else goes to "extra".
COLUMN_PARAMS = ("n", "k", "e", "variant")


class Variant(str, Enum):
    """Which closed form the th3 claims compare the products with."""

    STATEMENT = "statement"
    PROOF_EXPANSION = "proof_expansion"
    CORRECTED = "corrected"

    @classmethod
    def parse(cls, text: "str | Variant") -> "Variant":
        """Accepts the enum value or the short CLI spelling "proof"."""
        if isinstance(text, Variant):
            return text
        if text == "proof":
            return cls.PROOF_EXPANSION
        return cls(text)


@dataclass(frozen=True)
class ClaimParams:
    """
    Parameters of a claim; unused ones stay None.

    Attributes:
        n (int | None): Main modulus argument.
        k (int | None): Multiplier in kn - r, or the Bernoulli index in lemmas.
        e (int | None): Range divisor in floor(n/e).
        p (int | None): Prime (morley, cor4, cor5, lem1).
        q (int | None): Second prime (cor5) or modulus (lem3).
        l (int | None): Prime-power exponent (lem1).
        t (int | None): Step in p^l - t r (lem1).
        a (int | None): Shift (lem3).
        m (int | None): Multiplier (lem3).
        x (Fraction | None): Rational argument (lem3).
        variant (Variant | None): Right-hand-side variant of the th3 claims.
    """

    n: int | None = None
    k: int | None = None
    e: int | None = None
    p: int | None = None
    q: int | None = None
    l: int | None = None
    t: int | None = None
    a: int | None = None
    m: int | None = None
    x: Fraction | None = None
    variant: Variant | None = None

    def __post_init__(self):
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
        if self.variant is not None:
            object.__setattr__(self, "variant", Variant.parse(self.variant))

    def need(self, name: str):
        """
        Value of a required parameter.

        Args:
            name (str): Field name.

        Returns:
            The parameter value.

        Raises:
            BadHypothesis: If the parameter was not given.
        """
        value = getattr(self, name)
        if value is None:
            raise BadHypothesis(f"missing parameter {name}")
        return value

    def as_strings(self) -> dict[str, str]:
        """Present parameters as decimal strings, in field order."""
        result = {}
        for item in fields(self):
            value = getattr(self, item.name)
            if value is None:
                continue
            result[item.name] = value.value if isinstance(value, Variant) else str(value)
        return result

    @classmethod
    def from_strings(cls, values: dict[str, str]) -> "ClaimParams":
        """
        Inverse of as_strings; empty strings count as absent.

        Args:
            values (dict[str, str]): Parameter names to their text form.

        Returns:
            ClaimParams: The parsed parameters.
        """
        kwargs = {}
        for item in fields(cls):
            text = values.get(item.name, "")
            if text == "":
                continue
            if item.name == "x":
                kwargs["x"] = Fraction(text)
            elif item.name == "variant":
                kwargs["variant"] = Variant.parse(text)
            else:
                kwargs[item.name] = int(text)
        return cls(**kwargs)


@dataclass(frozen=True)
class CongruenceClaim:
    """One statement together with the parameters it is checked at."""

    claim_id: str
    params: ClaimParams = field(default_factory=ClaimParams)

    def __post_init__(self):
        if self.claim_id not in CLAIM_IDS:
            raise ValueError(f"unknown claim '{self.claim_id}'")

    def sort_key(self) -> tuple:
        """Canonical order: claim id, then parameters ascending."""
        p = self.params

        def number(value):
            return -1 if value is None else value

        return (
            CLAIM_IDS.index(self.claim_id),
            number(p.n),
            number(p.p),
            number(p.q),
            number(p.k),
            number(p.e),
            number(p.l),
            number(p.t),
            number(p.a),
            number(p.m),
            Fraction(-1) if p.x is None else p.x,
            "" if p.variant is None else p.variant.value,
        )

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.as_strings().items())
        return f"{self.claim_id}({args})"


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of checking one claim.

    Attributes:
        claim (CongruenceClaim): The claim checked.
        modulus (int): Modulus both sides were reduced by.
        lhs (int): Canonical left-hand side.
        rhs (int): Canonical right-hand side.
        passed (bool): True iff lhs == rhs and no error occurred.
        error (str | None): Message of the error that stopped evaluation.
    """

    claim: CongruenceClaim
    modulus: int
    lhs: int
    rhs: int
    passed: bool
    error: str | None = None

    @classmethod
    def from_sides(cls, claim: CongruenceClaim, lhs: Residue, rhs: Residue) -> "CheckResult":
        """
        Compares two residues over the same modulus.

        Args:
            claim (CongruenceClaim): The claim checked.
            lhs (Residue): Left-hand side.
            rhs (Residue): Right-hand side.

        Returns:
            CheckResult: Passed when both residues agree.

        Raises:
            ValueError: If the moduli differ.
        """
        if lhs.modulus != rhs.modulus:
            raise ValueError(
                f"sides of {claim} use different moduli {lhs.modulus} and {rhs.modulus}"
            )
        return cls(claim, lhs.modulus, lhs.value, rhs.value, lhs.value == rhs.value)

    @classmethod
    def from_error(cls, claim: CongruenceClaim, error: Exception) -> "CheckResult":
        """Failed result carrying the message; modulus 1 and both sides 0."""
        return cls(claim, 1, 0, 0, False, str(error))
