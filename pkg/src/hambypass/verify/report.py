# The hambypass Project.
# Author: The hambypass authors, 2026/10/17

#  Copyright (c) 2026 The hambypass authors.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
"""The theorem reports.

"""
import hashlib
from enum import Enum
from typing import Any

from hambypass.digraph import Digraph
from hambypass.iso import CanonicalForm
from .enumeration import EnumerationTask, ScanStats, ScanMode
from .records import VerificationRecord


class Verdict(Enum):
    """The verdict of a report."""
    CONFIRMED: str = "confirmed"
    """Every exception belongs to an allowed family."""
    COUNTEREXAMPLE: str = "counterexample-found"
    """Some exception belongs to no allowed family."""
    REPORT_ONLY: str = "report-only"
    """There is no expected outcome."""


class ExceptionEntry:
    """An exception, up to isomorphism, with its first scanned witness."""

    def __init__(self, canonical: CanonicalForm, family: str | None,
                 witness: Digraph):
        """Constructs the entry.

        :param canonical: The canonical form.
        :param family: The exceptional family it belongs to, or None.
        :param witness: The first scanned witness.
        """
        self.canonical: CanonicalForm = canonical
        """The canonical form."""
        self.family: str | None = family
        """The exceptional family it belongs to, or None."""
        self.witness: Digraph = witness
        """The first scanned witness."""

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the entry.

        :return: The JSON form.
        """
        return {"canonical_hex": self.canonical.hex,
                "family": self.family,
                "witness": {"n": self.witness.n,
                            "m": self.witness.m,
                            "arcs": [[u, w] for u, w
                                     in self.witness.arcs()]}}


class TheoremReport:
    """The report of a theorem check."""

    def __init__(self, task: EnumerationTask, parameter: str,
                 stats: ScanStats, exceptions: list[ExceptionEntry],
                 verdict: Verdict, elapsed_ms: int):
        """Constructs the report.

        :param task: The enumeration task.
        :param parameter: The parameter of the check, or an empty string.
        :param stats: The scan statistics.
        :param exceptions: The exceptions, in the order first scanned.
        :param verdict: The verdict.
        :param elapsed_ms: The wall time in milliseconds.
        """
        self.task: EnumerationTask = task
        """The enumeration task."""
        self.parameter: str = parameter
        """The parameter of the check, or an empty string."""
        self.scanned: int = stats.scanned
        """The number of scanned digraphs."""
        self.passed_filters: int = stats.passed_filters
        """The number of digraphs that passed the filters."""
        self.exceptions: list[ExceptionEntry] = exceptions
        """The exceptions."""
        self.verdict: Verdict = verdict
        """The verdict."""
        self.elapsed_ms: int = elapsed_ms
        """The wall time in milliseconds."""

    @property
    def theorem(self) -> str:
        """Returns the theorem identifier.

        :return: The theorem identifier.
        """
        return self.task.theorem

    @property
    def families(self) -> set[str | None]:
        """Returns the families of the exceptions.

        :return: The families of the exceptions.
        """
        return {x.family for x in self.exceptions}

    @property
    def digest(self) -> str:
        """Returns the SHA-256 digest of the sorted exception forms.

        :return: The hexadecimal digest.
        """
        forms: list[str] = sorted(x.canonical.hex for x in self.exceptions)
        return hashlib.sha256("\n".join(forms).encode()).hexdigest()

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the report, in the stable field order.

        :return: The JSON form.
        """
        result: dict[str, Any] = {"theorem": self.task.theorem,
                                  "n": self.task.n,
                                  "mode": self.task.mode.value}
        if self.task.mode is ScanMode.SAMPLE:
            result["seed"] = self.task.seed
            result["model"] = self.task.model.value
        result["scanned"] = self.scanned
        result["passed_filters"] = self.passed_filters
        result["exceptions"] = [x.to_dict() for x in self.exceptions]
        result["verdict"] = self.verdict.value
        result["elapsed_ms"] = self.elapsed_ms
        return result


def build_report(task: EnumerationTask, parameter: str, stats: ScanStats,
                 allowed: frozenset[str] | None, elapsed_ms: int) \
        -> TheoremReport:
    """Builds a report from the flagged survivors of a scan.  The survivors
    are deduplicated by canonical form, keeping the first one scanned.

    :param task: The enumeration task.
    :param parameter: The parameter of the check, or an empty string.
    :param stats: The scan statistics.
    :param allowed: The exceptional families the claim allows, or None if
        the report has no expected outcome.
    :param elapsed_ms: The wall time in milliseconds.
    :return: The report.
    """
    exceptions: list[ExceptionEntry] = []
    seen: set[CanonicalForm] = set()
    for g in stats.hits:
        record: VerificationRecord = VerificationRecord(g)
        if record.canonical in seen:
            continue
        seen.add(record.canonical)
        exceptions.append(ExceptionEntry(record.canonical, record.family, g))
    if allowed is None:
        verdict: Verdict = Verdict.REPORT_ONLY
    elif all(x.family in allowed for x in exceptions):
        verdict = Verdict.CONFIRMED
    else:
        verdict = Verdict.COUNTEREXAMPLE
    return TheoremReport(task, parameter, stats, exceptions, verdict,
                         elapsed_ms)
