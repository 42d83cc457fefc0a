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
"""The registry of the condition identifiers used by the command line and the
verifier: "a_k:<k>", "meyniel", "degree_sum:<offset>", "ghouila_houri",
"woodall", "nash_williams", "thm13", "thm14", "thm15", "thm16",
"thm16relaxed", "thm16:<least in-degree>", "min_semi_degree:<least>",
"lemma5" and "strong".

"""
import re
from collections.abc import Callable
from functools import partial

from hambypass.digraph import Digraph
from hambypass.errors import UnknownConditionError
from .predicates import check_a_k, check_meyniel, check_degree_sum, \
    check_ghouila_houri, check_woodall, check_nash_williams, \
    check_thm13_condition, check_thm14_condition, check_thm15_condition, \
    check_thm16_hypothesis, lemma5_consequence_holds, check_strong, \
    check_min_semi_degree
from .report import ConditionReport

NAMED_CONDITIONS: dict[str, Callable[[Digraph], ConditionReport]] = {
    "meyniel": check_meyniel,
    "ghouila_houri": check_ghouila_houri,
    "woodall": check_woodall,
    "nash_williams": check_nash_williams,
    "thm13": check_thm13_condition,
    "thm14": check_thm14_condition,
    "thm15": check_thm15_condition,
    "thm16": check_thm16_hypothesis,
    "thm16relaxed": partial(check_thm16_hypothesis, min_in_degree=2),
    "lemma5": lemma5_consequence_holds,
    "strong": check_strong,
}
"""The conditions without parameters."""


class Condition:
    """A registered condition."""

    def __init__(self, cond_id: str,
                 check: Callable[[Digraph], ConditionReport]):
        """Constructs a condition.

        :param cond_id: The condition identifier.
        :param check: The predicate.
        """
        self.id: str = cond_id
        """The condition identifier."""
        self.check: Callable[[Digraph], ConditionReport] = check
        """The predicate."""

    def __repr__(self) -> str:
        """Returns the representation of the condition.

        :return: The representation.
        """
        return f"Condition({self.id!r})"

    def holds(self, g: Digraph) -> bool:
        """Returns whether the digraph satisfies the condition.

        :param g: The digraph.
        :return: True if the condition holds, or False otherwise.
        """
        return self.check(g).holds


def get_condition(cond_id: str, inclusive: bool = False) -> Condition:
    """Returns a condition by its identifier.

    :param cond_id: The condition identifier.
    :param inclusive: True to let z equal y in the condition A_k.
    :return: The condition.
    :raise UnknownConditionError: When the identifier is unknown.
    """
    if cond_id in NAMED_CONDITIONS:
        return Condition(cond_id, NAMED_CONDITIONS[cond_id])
    m = re.match(r"^a_k:(-?\d+)$", cond_id)
    if m is not None:
        return Condition(cond_id, partial(check_a_k, k=int(m[1]),
                                          inclusive=inclusive))
    m = re.match(r"^degree_sum:(-?\d+)$", cond_id)
    if m is not None:
        return Condition(cond_id, partial(check_degree_sum,
                                          bound_offset=int(m[1])))
    m = re.match(r"^thm16:(\d+)$", cond_id)
    if m is not None:
        return Condition(cond_id, partial(check_thm16_hypothesis,
                                          min_in_degree=int(m[1])))
    m = re.match(r"^min_semi_degree:(\d+)$", cond_id)
    if m is not None:
        return Condition(cond_id, partial(check_min_semi_degree,
                                          least=int(m[1])))
    raise UnknownConditionError(f"Unknown condition \"{cond_id}\".")
