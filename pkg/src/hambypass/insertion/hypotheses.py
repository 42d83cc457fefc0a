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
"""The hypothesis checkers of the insertion lemmas, and the consequences of
a pre-Hamiltonian cycle in a digraph without a Hamiltonian bypass.

"""
from enum import Enum
from typing import Any

from hambypass.digraph import Digraph, Path, Cycle, degrees, \
    degrees_toward_set
from hambypass.errors import OverlapError, InvalidCycleError


class HypothesisCase(Enum):
    """The case of the single-vertex insertion hypothesis that holds."""
    STRONG: str = "i"
    """d(x,P) >= m+2."""
    ONE_END_OPEN: str = "ii"
    """d(x,P) >= m+1 and x->P[1] or P[m]->x is missing."""
    BOTH_ENDS_OPEN: str = "iii"
    """d(x,P) >= m and both x->P[1] and P[m]->x are missing."""


def _check_off(vertices: Path, outside: Path | int) -> None:
    """Checks that a vertex or a path is off a path or cycle.

    :param vertices: The path or cycle.
    :param outside: The vertex or path that should be off it.
    :return: None.
    :raise OverlapError: When they share a vertex.
    """
    mask: int = 1 << outside if isinstance(outside, int) else outside.mask
    if vertices.mask & mask:
        raise OverlapError("The vertices overlap the path.")


def lemma2_hypothesis(g: Digraph, host: Path, x: int, literal: bool = False) \
        -> HypothesisCase | None:
    """Returns the strongest case of the single-vertex insertion hypothesis
    that holds.

    :param g: The digraph.
    :param host: The host path P of m vertices.
    :param x: The vertex off the path.
    :param literal: Whether to read the second case as "x->P[1] or
        P[m]->P[1] is missing" instead of "x->P[1] or P[m]->x is missing".
    :return: The case, or None if no case holds.
    :raise OverlapError: When the vertex is on the path.
    """
    _check_off(host, x)
    m: int = len(host)
    d: int = degrees_toward_set(g, x, host).d
    no_in_first: bool = not g.has_arc(x, host.first)
    no_last_out: bool = not g.has_arc(host.last, x)
    if d >= m + 2:
        return HypothesisCase.STRONG
    second: bool = not g.has_arc(host.last, host.first) if literal \
        else no_last_out
    if d >= m + 1 and (no_in_first or second):
        return HypothesisCase.ONE_END_OPEN
    if d >= m and no_in_first and no_last_out:
        return HypothesisCase.BOTH_ENDS_OPEN
    return None


def lemma4_hypothesis(g: Digraph, host: Path, q: Path,
                      literal: bool = False) -> bool:
    """Returns whether the whole-path insertion hypothesis holds:
    d-(Q.first,P) + d+(Q.last,P) >= |P| + [P.last->Q.first] +
    [Q.last->P.first].  The two arcs subtracted are the ones that can never
    take part in a partner.  For a single vertex this is the same as
    [Q.first->P.first] + [P.last->Q.last], the literal form.

    :param g: The digraph.
    :param host: The host path.
    :param q: The path off the host path.
    :param literal: Whether to add [Q.first->P.first] + [P.last->Q.last]
        instead.
    :return: True if the hypothesis holds, or False otherwise.
    :raise OverlapError: When the paths share a vertex.
    """
    _check_off(host, q)
    left: int = degrees_toward_set(g, q.first, host).d_in \
        + degrees_toward_set(g, q.last, host).d_out
    if literal:
        extra: int = int(g.has_arc(q.first, host.first)) \
            + int(g.has_arc(host.last, q.last))
    else:
        extra = int(g.has_arc(host.last, q.first)) \
            + int(g.has_arc(q.last, host.first))
    return left >= len(host) + extra


def lemma1_hypothesis(g: Digraph, cycle: Cycle, x: int) -> bool:
    """Returns whether d(x,C) >= |C|+1.

    :param g: The digraph.
    :param cycle: The cycle.
    :param x: The vertex off the cycle.
    :return: True if the hypothesis holds, or False otherwise.
    :raise OverlapError: When the vertex is on the cycle.
    """
    _check_off(cycle, x)
    return degrees_toward_set(g, x, cycle).d >= len(cycle) + 1


def lemma3_hypothesis(g: Digraph, cycle: Cycle, q: Path) -> bool:
    """Returns whether d-(Q.first,C) + d+(Q.last,C) >= |C|+1.

    :param g: The digraph.
    :param cycle: The cycle.
    :param q: The path off the cycle.
    :return: True if the hypothesis holds, or False otherwise.
    :raise OverlapError: When the path meets the cycle.
    """
    _check_off(cycle, q)
    return degrees_toward_set(g, q.first, cycle).d_in \
        + degrees_toward_set(g, q.last, cycle).d_out >= len(cycle) + 1


def off_cycle_vertex(g: Digraph, cycle: Cycle) -> int:
    """Returns the vertex off a pre-Hamiltonian cycle.

    :param g: The digraph.
    :param cycle: The cycle of length n-1.
    :return: The vertex off the cycle.
    :raise InvalidCycleError: When the cycle length is not n-1.
    """
    if len(cycle) != g.n - 1:
        raise InvalidCycleError(
            f"The cycle has {len(cycle)} vertices, not n-1 = {g.n - 1}.")
    return (g.vertex_mask & ~cycle.mask).bit_length() - 1


class Lemma7Report:
    """The consequences that hold for a pre-Hamiltonian cycle and its
    off-cycle vertex y when there is no Hamiltonian bypass.
    """

    def __init__(self, windows: bool, degree_bounds: bool,
                 partner_chords: bool):
        """Constructs the report.

        :param windows: Whether y has at most one out-neighbour and at most
            one in-neighbour in every pair of consecutive cycle vertices.
        :param degree_bounds: Whether d+(y) and d-(y) are at most (n-1)/2
            and d(y) is at most n-1.
        :param partner_chords: Whether a partner x_k->y->x_{k+1} rules out
            every backward arc x_{i+1}->x_i with x_i other than x_k.
        """
        self.i: bool = windows
        """Whether the window bounds hold."""
        self.ii: bool = degree_bounds
        """Whether the degree bounds hold."""
        self.iii: bool = partner_chords
        """Whether the partner rules out backward arcs."""

    @property
    def all_hold(self) -> bool:
        """Returns whether all the consequences hold.

        :return: True if all the consequences hold, or False otherwise.
        """
        return self.i and self.ii and self.iii

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the report.

        :return: The JSON form.
        """
        return {"i": self.i, "ii": self.ii, "iii": self.iii}


def window_violations(g: Digraph, cycle: Cycle, y: int) \
        -> list[tuple[str, int]]:
    """Returns the windows where y has two out-neighbours or two
    in-neighbours.

    :param g: The digraph.
    :param cycle: The cycle.
    :param y: The vertex off the cycle.
    :return: The rule ("out" or "in") and the 0-based position i of every
        violated window {C[i], C[i+1]}.
    """
    found: list[tuple[str, int]] = []
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[i + 1]
        if g.has_arc(y, a) and g.has_arc(y, b):
            found.append(("out", i))
        if g.has_arc(a, y) and g.has_arc(b, y):
            found.append(("in", i))
    return found


def partner_chord_violations(g: Digraph, cycle: Cycle, y: int) \
        -> list[tuple[int, int]]:
    """Returns the pairs of a partner position k of y on the cycle and a
    backward arc position i, other than k, with C[i+1] -> C[i].

    :param g: The digraph.
    :param cycle: The cycle.
    :param y: The vertex off the cycle.
    :return: The pairs (k, i) of 0-based positions.
    """
    found: list[tuple[int, int]] = []
    size: int = len(cycle)
    for k in range(size):
        if not (g.has_arc(cycle[k], y) and g.has_arc(y, cycle[k + 1])):
            continue
        for i in range(size):
            if cycle[i] != cycle[k] and g.has_arc(cycle[i + 1], cycle[i]):
                found.append((k, i))
    return found


def lemma7_consequences(g: Digraph, cycle: Cycle, y: int) -> Lemma7Report:
    """Evaluates the consequences of a pre-Hamiltonian cycle in a digraph
    without a Hamiltonian bypass.

    :param g: The digraph.
    :param cycle: The cycle of length n-1.
    :param y: The vertex off the cycle.
    :return: The report.
    :raise InvalidCycleError: When the cycle length is not n-1 or y is on
        the cycle.
    """
    if off_cycle_vertex(g, cycle) != y:
        raise InvalidCycleError(f"Vertex {y} is on the cycle.")
    d_out, d_in, d = degrees(g, y)
    bounds: bool = 2 * d_out <= g.n - 1 and 2 * d_in <= g.n - 1 \
        and d <= g.n - 1
    return Lemma7Report(not window_violations(g, cycle, y), bounds,
                        not partner_chord_violations(g, cycle, y))


def is_good_cycle(g: Digraph, cycle: Cycle) -> bool:
    """Returns whether a cycle is good: its length is n-1 and its off-cycle
    vertex has degree at least n.

    :param g: The digraph.
    :param cycle: The cycle.
    :return: True if the cycle is good, or False otherwise.
    """
    if len(cycle) != g.n - 1:
        return False
    return g.degree(off_cycle_vertex(g, cycle)) >= g.n
