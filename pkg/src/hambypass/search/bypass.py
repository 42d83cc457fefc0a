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
"""The Hamiltonian bypass oracle and its witnesses.

A Hamiltonian bypass is a Hamiltonian path v_1 ... v_n together with the arc
v_1 -> v_n, a Hamiltonian cycle with exactly one arc reversed.

"""
from collections.abc import Sequence
from typing import Any

from hambypass.digraph import Digraph, Path, Cycle
from hambypass.errors import OrderError
from .cycles import all_cycles_of_length, find_hamiltonian_path_between


class BypassWitness:
    """A vertex order realizing a Hamiltonian bypass."""

    def __init__(self, order: Sequence[int]):
        """Constructs the witness.

        :param order: The vertices v_1, ..., v_n.
        """
        self.order: tuple[int, ...] = tuple(order)
        """The vertices v_1, ..., v_n."""

    def __eq__(self, other: object) -> bool:
        """Returns whether two witnesses have the same order.

        :param other: The other witness.
        :return: True if they are equal, or False otherwise.
        """
        if not isinstance(other, BypassWitness):
            return NotImplemented
        return self.order == other.order

    def __hash__(self) -> int:
        """Returns the hash of the witness.

        :return: The hash.
        """
        return hash(self.order)

    def __repr__(self) -> str:
        """Returns the representation of the witness.

        :return: The representation.
        """
        return f"BypassWitness({list(self.order)})"

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the witness.

        :return: The JSON form.
        """
        return {"order": list(self.order),
                "chord": [self.order[0], self.order[-1]]}


def find_hamiltonian_bypass(g: Digraph) -> BypassWitness | None:
    """Finds the first Hamiltonian bypass order.  The arcs (u, w) are tried
    in lexicographic order, and the witness is the lexicographically first
    Hamiltonian (u, w)-path of the first arc that has one.

    :param g: The digraph.
    :return: The witness, or None if there is no Hamiltonian bypass.
    :raise OrderError: When n < 3.
    """
    if g.n < 3:
        raise OrderError(f"A Hamiltonian bypass needs n >= 3, got {g.n}.")
    for u, w in g.arcs():
        if g.out_rows[u].bit_count() < 2 or g.in_rows[w].bit_count() < 2:
            continue
        path: Path | None = find_hamiltonian_path_between(
            g, u, w, range(g.n))
        if path is not None:
            return BypassWitness(path.vertices)
    return None


def validate_bypass(g: Digraph, witness: BypassWitness) -> bool:
    """Returns whether a witness is a Hamiltonian bypass of a digraph.

    :param g: The digraph.
    :param witness: The witness.
    :return: True if the witness is valid, or False otherwise.
    """
    order: tuple[int, ...] = witness.order
    if sorted(order) != list(range(g.n)) or g.n < 3:
        return False
    if not all(g.has_arc(u, w) for u, w in zip(order, order[1:])):
        return False
    return g.has_arc(order[0], order[-1])


def find_good_cycle(g: Digraph) -> Cycle | None:
    """Finds a good cycle, a cycle of length n-1 whose off-cycle vertex has
    degree at least n.

    :param g: The digraph.
    :return: The first good cycle, or None if there is none.
    """
    if g.n < 3:
        return None
    for cycle in all_cycles_of_length(g, g.n - 1):
        off: int = (g.vertex_mask & ~cycle.mask).bit_length() - 1
        if g.degree(off) >= g.n:
            return cycle
    return None
