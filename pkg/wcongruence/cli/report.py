import csv
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from loguru import logger

from wcongruence.congruence import (
    COLUMN_PARAMS,
    CheckResult,
    ClaimParams,
    CongruenceClaim,
)

FORMATS = ("json", "csv", "text")
CSV_HEADER = ["claim", *COLUMN_PARAMS, "modulus", "lhs", "rhs", "pass", "extra", "error"]


@dataclass(frozen=True)
class Skip:
    """A grid point left out because it violates the claim's hypotheses."""

    claim: CongruenceClaim
    reason: str


def _json_params(claim: CongruenceClaim) -> dict[str, str]:
    present = claim.params.as_strings()
    params = {name: present.pop(name, "") for name in COLUMN_PARAMS}
    params.update(present)
    return params


def _extra(claim: CongruenceClaim) -> str:
    present = claim.params.as_strings()
    return ";".join(f"{k}={v}" for k, v in present.items() if k not in COLUMN_PARAMS)


def _parse_extra(text: str) -> dict[str, str]:
    if not text:
        return {}
    return dict(item.split("=", 1) for item in text.split(";"))


class Report:
    """
    Canonically ordered check results with a summary.

    Attributes:
        results (list[CheckResult]): Results sorted by claim id, then parameters.
        skipped (list[Skip]): Grid points outside the hypotheses.
        verbose (bool): Enables detailed logging if True.
    """

    def __init__(
        self,
        results: Iterable[CheckResult],
        skipped: Iterable[Skip] = (),
        verbose: bool = True,
    ):
        self.results = sorted(results, key=lambda r: r.claim.sort_key())
        self.skipped = sorted(skipped, key=lambda s: s.claim.sort_key())
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

    @property
    def passed(self) -> int:
        """Number of passing results."""
        return sum(1 for r in self.results if r.passed)

    @property
    def failed(self) -> int:
        """Number of failing results, errors included."""
        return len(self.results) - self.passed

    @property
    def failures(self) -> list[CheckResult]:
        """Failing results in canonical order."""
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict:
        """
        Counts of the report.

        Returns:
            dict: total, passed, failed and skipped counts, and skip_reasons
            mapping each reason to its count.
        """
        return {
            "total": len(self.results),
            "passed": self.passed,
            "failed": self.failed,
            "skipped": len(self.skipped),
            "skip_reasons": dict(sorted(Counter(s.reason for s in self.skipped).items())),
        }

    def exit_code(self) -> int:
        """0 when nothing failed, 1 otherwise."""
        return 0 if self.failed == 0 else 1

    def to_json(self) -> str:
        """
        Serializes results, skipped points and the summary.

        Returns:
            str: Indented JSON with integers written as strings.
        """
        entries = [
            {
                "claim": r.claim.claim_id,
                "params": _json_params(r.claim),
                "modulus": str(r.modulus),
                "lhs": str(r.lhs),
                "rhs": str(r.rhs),
                "pass": r.passed,
                "error": r.error,
            }
            for r in self.results
        ]
        skipped = [
            {"claim": s.claim.claim_id, "params": _json_params(s.claim), "reason": s.reason}
            for s in self.skipped
        ]
        payload = {"results": entries, "skipped": skipped, "summary": self.summary()}
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        """
        One row per result under CSV_HEADER. Skipped points are left out.

        Returns:
            str: The CSV text.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.results:
            columns = _json_params(r.claim)
            writer.writerow(
                [
                    r.claim.claim_id,
                    *(columns[name] for name in COLUMN_PARAMS),
                    r.modulus,
                    r.lhs,
                    r.rhs,
                    "true" if r.passed else "false",
                    _extra(r.claim),
                    r.error or "",
                ]
            )
        return buffer.getvalue()

    def to_text(self) -> str:
        """One PASS or FAIL line per result followed by the summary line."""
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            if r.error:
                lines.append(f"{status} {r.claim}: {r.error}")
            else:
                lines.append(f"{status} {r.claim}: {r.lhs} vs {r.rhs} (mod {r.modulus})")
        s = self.summary()
        lines.append(
            f"total {s['total']}, passed {s['passed']}, "
            f"failed {s['failed']}, skipped {s['skipped']}"
        )
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        """
        Renders the report in one of FORMATS.

        Args:
            fmt (str): "json", "csv" or "text".

        Returns:
            str: The rendered report.

        Raises:
            ValueError: If the format is unknown.
        """
        if fmt not in FORMATS:
            raise ValueError(f"unknown format '{fmt}', expected one of {FORMATS}")
        return getattr(self, f"to_{fmt}")()

    def write(self, fmt: str = "json", path: str | None = None) -> None:
        """
        Writes the report to a file, or to stdout when no path is given.

        Args:
            fmt (str): One of "json", "csv" or "text".
            path (str | None): Output file path.
        """
        content = self.render(fmt)
        if path is None:
            sys.stdout.write(content)
            return
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(content)
        self.log(f"Report with {len(self.results)} results written to '{path}'")

    @classmethod
    def from_json(cls, text: str, verbose: bool = True) -> "Report":
        """
        Rebuilds a report written by to_json.

        Args:
            text (str): JSON produced by to_json.
            verbose (bool): Enables detailed logging if True.

        Returns:
            Report: The parsed report, skipped points included.
        """
        payload = json.loads(text)
        results = [
            CheckResult(
                claim=CongruenceClaim(entry["claim"], ClaimParams.from_strings(entry["params"])),
                modulus=int(entry["modulus"]),
                lhs=int(entry["lhs"]),
                rhs=int(entry["rhs"]),
                passed=bool(entry["pass"]),
                error=entry.get("error"),
            )
            for entry in payload["results"]
        ]
        skipped = [
            Skip(CongruenceClaim(entry["claim"], ClaimParams.from_strings(entry["params"])), entry["reason"])
            for entry in payload.get("skipped", [])
        ]
        return cls(results, skipped, verbose=verbose)

    @classmethod
    def from_csv(cls, text: str, verbose: bool = True) -> "Report":
        """Rebuilds the results; skipped points are not part of the CSV form."""
        results = []
        for row in csv.DictReader(io.StringIO(text)):
            values = {name: row[name] for name in COLUMN_PARAMS}
            values.update(_parse_extra(row["extra"]))
            results.append(
                CheckResult(
                    claim=CongruenceClaim(row["claim"], ClaimParams.from_strings(values)),
                    modulus=int(row["modulus"]),
                    lhs=int(row["lhs"]),
                    rhs=int(row["rhs"]),
                    passed=row["pass"] == "true",
                    error=row["error"] or None,
                )
            )
        return cls(results, verbose=verbose)
