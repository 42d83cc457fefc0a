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
"""The constructions that turn a pre-Hamiltonian cycle into a Hamiltonian
cycle or a Hamiltonian bypass, with a step log for the explanations.

"""
import logging
from typing import Any

from hambypass.digraph import Digraph, Cycle
from hambypass.search import BypassWitness, validate_bypass, \
    all_cycles_of_length
from .hypotheses import off_cycle_vertex, window_violations, \
    partner_chord_violations

logger = logging.getLogger(__name__)


class BypassConstruction:
    """A Hamiltonian bypass built from a pre-Hamiltonian cycle."""

    def __init__(self, witness: BypassWitness, rule: str,
                 steps: list[dict[str, Any]]):
        """Constructs the construction.

        :param witness: The Hamiltonian bypass.
        :param rule: The violated consequence it comes from, "out-window",
            "in-window" or "partner-chord".
        :param steps: The step log.
        """
        self.witness: BypassWitness = witness
        """The Hamiltonian bypass."""
        self.rule: str = rule
        """The violated consequence the bypass comes from."""
        self.steps: list[dict[str, Any]] = steps
        """The step log."""

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the construction.

        :return: The JSON form.
        """
        return {"rule": self.rule, "steps": self.steps,
                **self.witness.to_dict()}


def _around(cycle: Cycle, start: int) -> list[int]:
    """Returns the cycle vertices from a 0-based position all the way
    around.

    :param cycle: The cycle.
    :param start: The start position.
    :return: The vertices.
    """
    return [cycle[start + j] for j in range(len(cycle))]


def insert_off_vertex(g: Digraph, cycle: Cycle) -> tuple[Cycle, int] | None:
    """Inserts the vertex off a pre-Hamiltonian cycle at its first partner
    C[k] -> y -> C[k+1].

    :param g: The digraph.
    :param cycle: The cycle of length n-1.
    :return: The Hamiltonian cycle and the 0-based partner position k, or
        None if y has no partner on the cycle.
    :raise InvalidCycleError: When the cycle length is not n-1.
    """
    y: int = off_cycle_vertex(g, cycle)
    for k in range(len(cycle)):
        if g.has_arc(cycle[k], y) and g.has_arc(y, cycle[k + 1]):
            order: list[int] = _around(cycle, k + 1)
            return Cycle(g, [y, *order]), k
    return None


def bypass_from_cycle(g: Digraph, cycle: Cycle) -> BypassConstruction | None:
    """Builds a Hamiltonian bypass from the first violated consequence of a
    pre-Hamiltonian cycle.  Two out-neighbours y -> C[i], y -> C[i+1] give
    the path y, C[i+1], ..., C[i] with the chord y -> C[i].  Two
    in-neighbours give the path C[i+1], ..., C[i], y with the chord
    C[i+1] -> y.  A partner C[k] -> y -> C[k+1] together with a backward arc
    C[i+1] -> C[i] give the Hamiltonian cycle through y, opened between
    C[i] and C[i+1], with that arc as the chord.  A violated degree bound
    always violates a window, by counting.

    :param g: The digraph.
    :param cycle: The cycle of length n-1.
    :return: The construction, or None if every consequence holds.
    :raise InvalidCycleError: When the cycle length is not n-1.
    """
    y: int = off_cycle_vertex(g, cycle)
    steps: list[dict[str, Any]] = [{"cycle": list(cycle), "off": y}]
    windows: list[tuple[str, int]] = window_violations(g, cycle, y)
    if windows:
        rule, i = windows[0]
        a, b = cycle[i], cycle[i + 1]
        if rule == "out":
            order: list[int] = [y, *_around(cycle, i + 1)]
        else:
            order = [*_around(cycle, i + 1), y]
        steps.append({"window": [a, b], "rule": rule})
        result: BypassConstruction = BypassConstruction(
            BypassWitness(order), f"{rule}-window", steps)
    else:
        chords: list[tuple[int, int]] = partner_chord_violations(g, cycle, y)
        if not chords:
            return None
        k, i = chords[0]
        a, b = cycle[i], cycle[i + 1]
        inserted: list[int] = _around(cycle, k + 1)
        inserted.insert(0, y)
        start: int = inserted.index(b)
        order = [inserted[(start + j) % g.n] for j in range(g.n)]
        steps.append({"insert": y, "partner": [cycle[k], cycle[k + 1]]})
        steps.append({"chord": [b, a]})
        result = BypassConstruction(BypassWitness(order), "partner-chord",
                                    steps)
    if not validate_bypass(g, result.witness):
        raise AssertionError(f"Bad bypass construction {result.witness}.")
    logger.debug("Bypass %s from %s.", result.witness, result.rule)
    return result


def explain_hamiltonian_cycle(g: Digraph) -> dict[str, Any] | None:
    """Builds a Hamiltonian cycle by inserting the off-cycle vertex of the
    first pre-Hamiltonian cycle that admits it.

    :param g: The digraph.
    :return: The cycle and the step log, or None if no pre-Hamiltonian cycle
        admits the insertion.
    """
    if g.n < 3:
        return None
    for cycle in all_cycles_of_length(g, g.n - 1):
        inserted: tuple[Cycle, int] | None = insert_off_vertex(g, cycle)
        if inserted is not None:
            result, k = inserted
            y: int = off_cycle_vertex(g, cycle)
            return {"cycle": list(result),
                    "steps": [{"cycle": list(cycle), "off": y},
                              {"insert": y,
                               "partner": [cycle[k], cycle[k + 1]]}]}
    return None


def explain_bypass(g: Digraph) -> BypassConstruction | None:
    """Builds a Hamiltonian bypass from the first pre-Hamiltonian cycle with
    a violated consequence.

    :param g: The digraph.
    :return: The construction, or None if every pre-Hamiltonian cycle
        satisfies the consequences.
    """
    if g.n < 3:
        return None
    for cycle in all_cycles_of_length(g, g.n - 1):
        found: BypassConstruction | None = bypass_from_cycle(g, cycle)
        if found is not None:
            return found
    return None
