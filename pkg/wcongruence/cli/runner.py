import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from multiprocessing import Pool
from typing import Iterator

from loguru import logger
from sympy import primerange

from wcongruence.congruence import (
    CheckResult,
    ClaimParams,
    CongruenceClaim,
    Variant,
    claim_hypothesis,
    verify_claim,
)

from .report import Report, Skip

JOBS_ENV = "CONGRUENCE_JOBS"

# Claims indexed by a prime p drawn from the --n range.
PRIME_CLAIMS = ("morley", "cor4", "lem1")
N_ONLY_CLAIMS = (
    "cai", "cor1", "cor2", "cor3_1", "cor3_2", "cor3_3",
    "lem2", "lem4", "lem5_1", "lem5_2", "lem5_3",
)
N_K_CLAIMS = ("th2", "th4", "th3_1", "th3_2", "th3_3")


def default_jobs() -> int:
    """Worker count from CONGRUENCE_JOBS, else the available parallelism."""
    fallback = os.cpu_count() or 1
    text = os.environ.get(JOBS_ENV)
    if text is None:
        return fallback
    try:
        jobs = int(text)
    except ValueError:
        jobs = 0
    if jobs < 1:
        logger.warning(f"Ignoring {JOBS_ENV}={text!r}: expected a positive integer")
        return fallback
    return jobs


@dataclass(frozen=True)
class VerifyRequest:
    """
    A grid over one claim.

    Attributes:
        claim_id (str): Claim to check.
        n_range (tuple[int, int]): Inclusive range for n (primes p, or q for lem3).
        k_range (tuple[int, int]): Inclusive range for k.
        e_values (tuple[int, ...]): Values of e (t for lem1).
        variant (Variant | None): Variant for the th3 claims.
        l_range (tuple[int, int]): Inclusive range for l (lem1).
        a_range (tuple[int, int]): Inclusive range for a (lem3).
        m_values (tuple[int, ...]): Values of m (lem3).
        x_values (tuple[Fraction, ...]): Values of x (lem3).
    """

    claim_id: str
    n_range: tuple[int, int] = (5, 45)
    k_range: tuple[int, int] = (1, 2)
    e_values: tuple[int, ...] = (2, 3, 4, 6)
    variant: Variant | None = None
    l_range: tuple[int, int] = (1, 2)
    a_range: tuple[int, int] = (0, 2)
    m_values: tuple[int, ...] = (1, 2, 3, 4, 6)
    x_values: tuple[Fraction, ...] = field(default=(Fraction(0), Fraction(1, 2)))

    def __post_init__(self):
        for name in ("n_range", "k_range", "l_range", "a_range"):
            low, high = getattr(self, name)
            if low > high:
                raise ValueError(f"empty range {low}..{high} for {name}")
        if not self.e_values or not self.m_values or not self.x_values:
            raise ValueError("value lists must not be empty")

    def _span(self, name: str) -> range:
        low, high = getattr(self, name)
        return range(low, high + 1)

    def _primes(self) -> list[int]:
        low, high = self.n_range
        return [int(p) for p in primerange(low, high + 1)]

    def params(self) -> Iterator[ClaimParams]:
        """Every parameter combination of the grid, before hypothesis filtering."""
        claim_id = self.claim_id
        ns, ks = self._span("n_range"), self._span("k_range")
        if claim_id == "morley":
            for p in self._primes():
                yield ClaimParams(p=p)
        elif claim_id == "cor4":
            for p, k in product(self._primes(), ks):
                yield ClaimParams(p=p, k=k)
        elif claim_id == "cor5":
            for (p, q), k in product(combinations(self._primes(), 2), ks):
                yield ClaimParams(p=p, q=q, k=k)
        elif claim_id == "lem1":
            grid = product(self._primes(), self._span("l_range"), self.e_values, ks)
            for p, l, t, k in grid:
                yield ClaimParams(p=p, l=l, t=t, k=k)
        elif claim_id == "lem3":
            grid = product(self._span("a_range"), ks, self.m_values, ns, self.x_values)
            for a, k, m, q, x in grid:
                yield ClaimParams(a=a, k=k, m=m, q=q, x=x)
        elif claim_id == "th1":
            for n, e in product(ns, self.e_values):
                yield ClaimParams(n=n, e=e)
        elif claim_id in N_K_CLAIMS:
            variant = self.variant if claim_id.startswith("th3") else None
            for n, k in product(ns, ks):
                yield ClaimParams(n=n, k=k, variant=variant)
        elif claim_id in N_ONLY_CLAIMS:
            for n in ns:
                yield ClaimParams(n=n)
        else:
            raise ValueError(f"unknown claim '{claim_id}'")


class GridRunner:
    """
    Filters a grid by hypotheses and evaluates the remaining claims, in
    process or on a worker pool.

    Attributes:
        jobs (int): Number of worker processes; 1 evaluates in process.
        verbose (bool): Enables detailed logging if True.
    """

    def __init__(self, jobs: int | None = None, verbose: bool = True):
        self.jobs = default_jobs() if jobs is None else jobs
        if self.jobs < 1:
            raise ValueError(f"jobs must be >= 1, got {self.jobs}")
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

    def build_grid(self, request: VerifyRequest) -> tuple[list[CongruenceClaim], list[Skip]]:
        """
        Splits the grid of a request by the claim hypotheses.

        Args:
            request (VerifyRequest): The grid to build.

        Returns:
            tuple[list[CongruenceClaim], list[Skip]]: Claims to evaluate in
            canonical order, and the points left out with their reasons.
        """
        claims, skipped = [], []
        for params in request.params():
            claim = CongruenceClaim(request.claim_id, params)
            reason = claim_hypothesis(claim)
            if reason is None:
                claims.append(claim)
            else:
                skipped.append(Skip(claim, reason))
        claims.sort(key=CongruenceClaim.sort_key)
        self.log(
            f"Grid for '{request.claim_id}': {len(claims)} claims, {len(skipped)} skipped",
            "debug",
        )
        return claims, skipped

    def evaluate(self, claims: list[CongruenceClaim]) -> Iterator[CheckResult]:
        """Yields results in the order of claims, whatever the job count."""
        if self.jobs == 1 or len(claims) < 2:
            yield from map(verify_claim, claims)
            return
        chunksize = max(1, len(claims) // (self.jobs * 8))
        with Pool(processes=self.jobs) as pool:
            yield from pool.imap(verify_claim, claims, chunksize=chunksize)

    def verify(self, request: VerifyRequest) -> Report:
        """
        Evaluates every admissible point of a grid.

        Args:
            request (VerifyRequest): The grid to check.

        Returns:
            Report: Results and skipped points in canonical order.
        """
        claims, skipped = self.build_grid(request)
        self.log(f"Verifying {len(claims)} claims on {self.jobs} worker(s)")
        report = Report(self.evaluate(claims), skipped, verbose=self.verbose)
        self.log(
            f"'{request.claim_id}': {report.passed} passed, "
            f"{report.failed} failed, {len(report.skipped)} skipped"
        )
        return report

    def search(self, request: VerifyRequest, stop_on_first: bool = False) -> Iterator[CheckResult]:
        """
        Yields failures in canonical order.

        Args:
            request (VerifyRequest): The grid to search.
            stop_on_first (bool): Stops after the first failure if True.

        Yields:
            CheckResult: Each failing result, errors included.
        """
        claims, _ = self.build_grid(request)
        self.log(f"Searching {len(claims)} claims on {self.jobs} worker(s)")
        for result in self.evaluate(claims):
            if result.passed:
                continue
            yield result
            if stop_on_first:
                break
