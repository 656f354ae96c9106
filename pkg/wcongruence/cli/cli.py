import argparse
import sys
from fractions import Fraction

from loguru import logger

from wcongruence.congruence import CLAIM_IDS, Variant

from .compute import QUANTITIES, cmd_compute
from .report import FORMATS
from .runner import GridRunner, VerifyRequest
from .selftest import MODULES, SelfTest

VARIANT_CHOICES = ("statement", "proof", "proof_expansion", "corrected")


def parse_range(text: str) -> tuple[int, int]:
    """Parses "A..B" or a single "A" into an inclusive, non-empty range."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got '{text}'")
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range '{text}'")
    return low, high


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parses a comma-separated list of integers, such as "2,3,4,6"."""
    try:
        values = tuple(int(part) for part in text.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list, got '{text}'")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def parse_fraction(text: str) -> Fraction:
    """Parses a rational such as "1/2" or "-3"."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/2, got '{text}'")


def parse_fraction_list(text: str) -> tuple[Fraction, ...]:
    """Parses a comma-separated list of rationals."""
    values = tuple(parse_fraction(part) for part in text.split(",") if part)
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def parse_jobs(text: str) -> int:
    """Parses a positive worker count."""
    try:
        jobs = int(text)
    except ValueError:
        jobs = 0
    if jobs < 1:
        raise argparse.ArgumentTypeError(f"jobs must be a positive integer, got '{text}'")
    return jobs


def _grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--claim", required=True, choices=CLAIM_IDS)
    parser.add_argument("--n", type=parse_range, default=(5, 45), help="n range A..B (primes p, or q for lem3)")
    parser.add_argument("--k", type=parse_range, default=(1, 2), help="k range A..B")
    parser.add_argument("--e", type=parse_int_list, default=(2, 3, 4, 6), help="e values (t for lem1)")
    parser.add_argument("--variant", choices=VARIANT_CHOICES, default=None)
    parser.add_argument("--l", type=parse_range, default=(1, 2), help="l range for lem1")
    parser.add_argument("--a", type=parse_range, default=(0, 2), help="a range for lem3")
    parser.add_argument("--m", type=parse_int_list, default=(1, 2, 3, 4, 6), help="m values for lem3")
    parser.add_argument(
        "--x", type=parse_fraction_list, default=(Fraction(0), Fraction(1, 2)), help="x values for lem3"
    )
    parser.add_argument("--jobs", type=parse_jobs, default=None, help="worker processes (default: CONGRUENCE_JOBS or CPU count)")


def build_parser() -> argparse.ArgumentParser:
    """
    Builds the command line with the verify, search, compute and selftest
    subcommands.

    Returns:
        argparse.ArgumentParser: The configured parser.
    """
    parser = argparse.ArgumentParser(
        prog="wcongruence",
        description="Exact verification of binomial, harmonic-sum and Bernoulli congruences.",
    )
    common = argparse.ArgumentParser(add_help=False)
    loudness = common.add_mutually_exclusive_group()
    loudness.add_argument("--verbose", action="store_true", help="debug logging")
    loudness.add_argument("--quiet", action="store_true", help="warnings and errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="check a claim over a parameter grid")
    _grid_arguments(verify)
    verify.add_argument("--format", choices=FORMATS, default="json")
    verify.add_argument("--output", default=None, help="report path (default: stdout)")

    search = commands.add_parser("search", parents=[common], help="list counterexamples of a claim")
    _grid_arguments(search)
    search.add_argument("--stop-on-first", action="store_true")

    compute = commands.add_parser("compute", parents=[common], help="print a single quantity")
    compute.add_argument("quantity", choices=tuple(QUANTITIES))
    compute.add_argument("--n", type=int)
    compute.add_argument("--e", type=int)
    compute.add_argument("--k", type=int)
    compute.add_argument("--m", type=int, help="index, degree or totient exponent")
    compute.add_argument("--r", type=int, help="base of the Euler quotient")
    compute.add_argument("--x", type=parse_fraction)
    compute.add_argument("--power", type=int, help="sum power, or quotient precision")
    compute.add_argument("--shifted", action="store_true")

    selftest = commands.add_parser("selftest", parents=[common], help="evaluate the built-in example table")
    selftest.add_argument("--list", action="store_true", help="print the inventory and exit")
    selftest.add_argument("--only", choices=MODULES, default=None)
    return parser


def configure_logging(args: argparse.Namespace) -> None:
    """
    Replaces the default loguru sink by one on stderr.

    Args:
        args (argparse.Namespace): Parsed arguments; --verbose selects DEBUG,
            --quiet WARNING and neither INFO.
    """
    level = "DEBUG" if args.verbose else "WARNING" if args.quiet else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level)


def _request(args: argparse.Namespace) -> VerifyRequest:
    return VerifyRequest(
        claim_id=args.claim,
        n_range=args.n,
        k_range=args.k,
        e_values=args.e,
        variant=None if args.variant is None else Variant.parse(args.variant),
        l_range=args.l,
        a_range=args.a,
        m_values=args.m,
        x_values=args.x,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Checks a claim over a grid and writes the report.

    Args:
        args (argparse.Namespace): Parsed verify arguments.

    Returns:
        int: 0 if every checked point passed, 1 otherwise.
    """
    runner = GridRunner(jobs=args.jobs, verbose=not args.quiet)
    report = runner.verify(_request(args))
    report.write(args.format, args.output)
    return report.exit_code()


def cmd_search(args: argparse.Namespace) -> int:
    """
    Prints the failing points of a grid, in canonical order.

    Args:
        args (argparse.Namespace): Parsed search arguments.

    Returns:
        int: 1 if a counterexample was printed, 0 otherwise.
    """
    runner = GridRunner(jobs=args.jobs, verbose=not args.quiet)
    found = 0
    for result in runner.search(_request(args), stop_on_first=args.stop_on_first):
        found += 1
        detail = result.error or f"lhs {result.lhs}, rhs {result.rhs} (mod {result.modulus})"
        print(f"{result.claim}: {detail}", flush=True)
    logger.info(f"{found} counterexample(s) found")
    return 1 if found else 0


def cmd_selftest(args: argparse.Namespace) -> int:
    """
    Runs or lists the built-in example table.

    Args:
        args (argparse.Namespace): Parsed selftest arguments.

    Returns:
        int: 0 when every example agrees (or with --list), 1 otherwise.
    """
    tester = SelfTest(verbose=not args.quiet)
    if args.list:
        for example in tester.select(args.only):
            print(f"{example.module}\t{example.label}\t{example.expected!r}")
        return 0
    mismatches = tester.run(args.only)
    for mismatch in mismatches:
        print(f"MISMATCH {mismatch.example.module}: {mismatch.example.label}: {mismatch.actual!r}")
    return 1 if mismatches else 0


COMMANDS = {
    "verify": cmd_verify,
    "search": cmd_search,
    "compute": cmd_compute,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    """
    Entry point of the wcongruence command.

    Args:
        argv (list[str] | None): Arguments; defaults to sys.argv[1:].

    Returns:
        int: The exit code of the subcommand. Usage errors exit with 2
        through argparse.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
