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
"""The checks of the theorems and lemmas on Hamiltonian bypasses, cycles and
pre-Hamiltonian cycles, and the explorer of the bypass-free digraphs.

Theorem identifiers: "thm6", "thm8", "thm9", "thm11", "thm12", "thm16",
"lemma5", "lemma7", "prehc13", "prehc14", "classic:<condition>" and
"explore:<condition>".

"""
import logging
import time
from collections.abc import Sequence

from hambypass.conditions import get_condition, lemma5_consequence_holds
from hambypass.digraph import Digraph
from hambypass.errors import OrderError, UnknownTheoremError
from hambypass.insertion import lemma7_consequences, off_cycle_vertex
from hambypass.search import find_bypass_pattern, all_cycles_of_length
from .enumeration import EnumerationTask, SampleModel, Visitor, \
    enumerate_digraphs
from .records import VerificationRecord
from .report import TheoremReport, build_report

logger = logging.getLogger(__name__)

CLASSIC_CONDITIONS: tuple[str, ...] = ("nash_williams", "ghouila_houri",
                                       "woodall")
"""The classic Hamiltonian conditions that force a Hamiltonian bypass."""


class MissingStructure:
    """Flags the survivors that lack a structure."""

    def __init__(self, flag: str):
        """Constructs the visitor.

        :param flag: The VerificationRecord flag of the structure.
        """
        self.flag: str = flag
        """The VerificationRecord flag of the structure."""

    def __call__(self, g: Digraph) -> bool:
        """Returns whether the digraph lacks the structure.

        :param g: The digraph.
        :return: True if it lacks the structure, or False otherwise.
        """
        return not getattr(VerificationRecord(g), self.flag)


class MissingPattern:
    """Flags the survivors without a spanning D(n,k)."""

    def __init__(self, k: int):
        """Constructs the visitor.

        :param k: The pattern parameter.
        """
        self.k: int = k
        """The pattern parameter."""

    def __call__(self, g: Digraph) -> bool:
        """Returns whether the digraph has no spanning D(n,k).

        :param g: The digraph.
        :return: True if it has none, or False otherwise.
        """
        return find_bypass_pattern(g, self.k) is None


class DegreeLemmaFailure:
    """Flags the survivors where the degree consequence of A_0 fails."""

    def __call__(self, g: Digraph) -> bool:
        """Returns whether the consequence fails.

        :param g: The digraph.
        :return: True if it fails, or False otherwise.
        """
        return not lemma5_consequence_holds(g).holds


class CycleConsequenceFailure:
    """Flags the bypass-free survivors with a good cycle, or with a
    pre-Hamiltonian cycle whose consequences fail.
    """

    def __call__(self, g: Digraph) -> bool:
        """Returns whether the digraph is such a survivor.

        :param g: The digraph.
        :return: True if it is, or False otherwise.
        """
        record: VerificationRecord = VerificationRecord(g)
        if record.has_bypass:
            return False
        if record.has_good_cycle:
            return True
        for cycle in all_cycles_of_length(g, g.n - 1):
            y: int = off_cycle_vertex(g, cycle)
            if not lemma7_consequences(g, cycle, y).all_hold:
                return True
        return False


class TheoremCheck:
    """A theorem check: the filters, the visitor flagging the exceptions,
    and the exceptional families the claim allows.
    """

    def __init__(self, theorem: str, filters: Sequence[str],
                 visitor: Visitor, allowed: frozenset[str] | None, least: int,
                 parameter: str = ""):
        """Constructs the check.

        :param theorem: The theorem identifier.
        :param filters: The condition identifiers, cheap ones first.
        :param visitor: The picklable visitor flagging the exceptions.
        :param allowed: The allowed exceptional families, or None if the
            check has no expected outcome.
        :param least: The least order of the claim.
        :param parameter: The parameter of the check, or an empty string.
        """
        self.theorem: str = theorem
        """The theorem identifier."""
        self.filters: tuple[str, ...] = tuple(filters)
        """The condition identifiers."""
        self.visitor: Visitor = visitor
        """The visitor flagging the exceptions."""
        self.allowed: frozenset[str] | None = allowed
        """The allowed exceptional families, or None."""
        self.least: int = least
        """The least order of the claim."""
        self.parameter: str = parameter
        """The parameter of the check."""


def get_theorem(theorem: str, min_in_degree: int = 3) -> TheoremCheck:
    """Returns a theorem check by its identifier.

    :param theorem: The theorem identifier.
    :param min_in_degree: The least minimum in-degree of "thm16".
    :return: The theorem check.
    :raise UnknownTheoremError: When the identifier is unknown.
    :raise UnknownConditionError: When the condition of "classic:" or
        "explore:" is unknown.
    """
    no_bypass: MissingStructure = MissingStructure("has_bypass")
    if theorem == "thm6":
        return TheoremCheck(theorem, ["a_k:0", "strong"],
                            MissingStructure("has_hc"), frozenset(), 3)
    if theorem == "thm8":
        return TheoremCheck(theorem, ["degree_sum:-2", "strong"], no_bypass,
                            frozenset({"c3", "d1", "t5", "d0"}), 3)
    if theorem == "thm9":
        return TheoremCheck(theorem, ["meyniel", "strong"], MissingPattern(3),
                            frozenset(), 4)
    if theorem == "thm11":
        return TheoremCheck(theorem, ["a_k:0", "strong"],
                            MissingStructure("has_pre_hc"),
                            frozenset({"kbipartite"}), 4)
    if theorem == "thm12":
        return TheoremCheck(theorem, ["a_k:0", "strong"], no_bypass,
                            frozenset({"t5"}), 4)
    if theorem == "thm16":
        allowed: frozenset[str] | None = frozenset() \
            if min_in_degree >= 3 else None
        return TheoremCheck(theorem, [f"thm16:{min_in_degree}", "strong"],
                            no_bypass, allowed, 6,
                            f"min_in_degree={min_in_degree}")
    if theorem == "lemma5":
        return TheoremCheck(theorem, ["a_k:0", "strong"],
                            DegreeLemmaFailure(), frozenset(), 3)
    if theorem == "lemma7":
        return TheoremCheck(theorem, ["strong"], CycleConsequenceFailure(),
                            frozenset(), 3)
    if theorem in {"prehc13", "prehc14"}:
        condition: str = "thm13" if theorem == "prehc13" else "thm14"
        return TheoremCheck(theorem,
                            [condition, "min_semi_degree:2", "strong"],
                            MissingStructure("has_pre_hc"),
                            frozenset({"kbipartite", "kbipartite-minus"}), 4)
    kind, _, cond_id = theorem.partition(":")
    if kind == "classic" and cond_id in CLASSIC_CONDITIONS:
        return TheoremCheck(theorem, [cond_id, "strong"], no_bypass,
                            frozenset(), 3)
    if kind == "explore" and cond_id:
        get_condition(cond_id)
        return TheoremCheck(theorem, [cond_id, "strong"], no_bypass, None, 3)
    raise UnknownTheoremError(f"Unknown theorem \"{theorem}\".")


def run_check(check: TheoremCheck, n: int, sample: int | None = None,
              seed: int | None = None,
              model: SampleModel = SampleModel.UNIFORM,
              long_running: bool = False, inclusive: bool = False,
              workers: int = 1) -> TheoremReport:
    """Runs a theorem check.

    :param check: The theorem check.
    :param n: The order.
    :param sample: The number of samples, or None to scan exhaustively.
    :param seed: The random seed of the sample mode.
    :param model: The random arc model of the sample mode.
    :param long_running: Whether an exhaustive scan may go beyond the
        default order limit.
    :param inclusive: Whether the condition A_k lets z equal y.
    :param workers: The worker count.
    :return: The report.
    :raise OrderError: When n is below the least order of the claim.
    :raise EnumerationLimitError: When the mode does not allow the order.
    """
    if n < check.least:
        raise OrderError(f"{check.theorem} needs n >= {check.least},"
                         f" got {n}.")
    task: EnumerationTask = EnumerationTask(
        n, check.filters, check.theorem, sample=sample, seed=seed,
        model=model, long_running=long_running, inclusive=inclusive)
    start: float = time.monotonic()
    stats = enumerate_digraphs(task, check.visitor, workers)
    elapsed_ms: int = int((time.monotonic() - start) * 1000)
    report: TheoremReport = build_report(task, check.parameter, stats,
                                         check.allowed, elapsed_ms)
    logger.info("%s at n=%d: %s with %d exceptions.", check.theorem, n,
                report.verdict.value, len(report.exceptions))
    return report


def check_theorem6(n: int, **options) -> TheoremReport:
    """Checks that the strong digraphs with A_0 are Hamiltonian.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("thm6"), n, **options)


def check_theorem8(n: int, **options) -> TheoremReport:
    """Checks that the strong digraphs with d(x)+d(y) >= 2n-2 for the
    non-adjacent pairs have a Hamiltonian bypass, unless they are C_3, T(5),
    a D_0 or a D_1.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("thm8"), n, **options)


def check_theorem9(n: int, **options) -> TheoremReport:
    """Checks that the strong digraphs with the Meyniel condition contain a
    spanning D(n,3).

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("thm9"), n, **options)


def check_theorem11(n: int, **options) -> TheoremReport:
    """Checks that the strong digraphs with A_0 have a pre-Hamiltonian
    cycle, unless they are K*_{n/2,n/2}.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("thm11"), n, **options)


def check_theorem12(n: int, **options) -> TheoremReport:
    """Checks that the strong digraphs with A_0 have a Hamiltonian bypass,
    unless they are T(5).

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("thm12"), n, **options)


def check_theorem16_conjecture(n: int, min_in_degree: int = 3, **options) \
        -> TheoremReport:
    """Checks the Hamiltonian bypass under the common in-neighbour condition
    with minimum out-degree two and a minimum in-degree.  With three it is a
    theorem, and with two it is the open conjecture and only reported.

    :param n: The order, at least 6.
    :param min_in_degree: The least minimum in-degree.
    :param options: The options of run_check.
    :return: The report.
    :raise OrderError: When n < 6.
    """
    return run_check(get_theorem("thm16", min_in_degree), n, **options)


def explore_no_bypass(n: int, condition_id: str, **options) \
        -> TheoremReport:
    """Catalogues the strong bypass-free digraphs satisfying a condition.

    :param n: The order.
    :param condition_id: The condition identifier.
    :param options: The options of run_check.
    :return: The report.
    :raise UnknownConditionError: When the condition is unknown.
    """
    return run_check(get_theorem(f"explore:{condition_id}"), n, **options)


def check_lemma5(n: int, **options) -> TheoremReport:
    """Checks the degree consequence of A_0 on the strong digraphs.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("lemma5"), n, **options)


def check_lemma7(n: int, **options) -> TheoremReport:
    """Checks the consequences of every pre-Hamiltonian cycle of the strong
    bypass-free digraphs, and that a good cycle forces a bypass.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("lemma7"), n, **options)


def check_prehc_thm13(n: int, **options) -> TheoremReport:
    """Checks the pre-Hamiltonian cycle under the common in-neighbour
    condition with minimum semi-degree two.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("prehc13"), n, **options)


def check_prehc_thm14(n: int, **options) -> TheoremReport:
    """Checks the pre-Hamiltonian cycle under the common neighbour cross-sum
    condition with minimum semi-degree two.

    :param n: The order.
    :param options: The options of run_check.
    :return: The report.
    """
    return run_check(get_theorem("prehc14"), n, **options)


def check_classic_bypass(n: int, condition_id: str, **options) \
        -> TheoremReport:
    """Checks that a classic Hamiltonian condition forces a Hamiltonian
    bypass on the strong digraphs.

    :param n: The order.
    :param condition_id: "nash_williams", "ghouila_houri" or "woodall".
    :param options: The options of run_check.
    :return: The report.
    :raise UnknownTheoremError: When the condition is not a classic one.
    """
    return run_check(get_theorem(f"classic:{condition_id}"), n, **options)
