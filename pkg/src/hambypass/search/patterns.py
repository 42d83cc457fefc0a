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
"""The spanning pattern embedding, used for the D(n,k) patterns.

"""
from typing import Any

from hambypass.digraph import Digraph
from hambypass.errors import OrderError
from hambypass.families import bypass_pattern
from hambypass.utils.bits import iter_bits, full_mask


class PatternEmbedding:
    """An injective mapping of the pattern vertices into a digraph that maps
    every pattern arc onto an arc.
    """

    def __init__(self, pattern: Digraph, mapping: tuple[int, ...]):
        """Constructs the embedding.

        :param pattern: The pattern digraph.
        :param mapping: The image of every pattern vertex.
        """
        self.pattern: Digraph = pattern
        """The pattern digraph."""
        self.mapping: tuple[int, ...] = mapping
        """The image of every pattern vertex."""

    def __repr__(self) -> str:
        """Returns the representation of the embedding.

        :return: The representation.
        """
        return f"PatternEmbedding({list(self.mapping)})"

    def is_valid_in(self, g: Digraph) -> bool:
        """Returns whether the embedding is valid in a digraph.

        :param g: The digraph.
        :return: True if every pattern arc maps onto an arc, or False
            otherwise.
        """
        if len(set(self.mapping)) != len(self.mapping):
            return False
        return all(g.has_arc(self.mapping[u], self.mapping[w])
                   for u, w in self.pattern.arcs())

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the embedding.

        :return: The JSON form.
        """
        return {"mapping": list(self.mapping),
                "arcs": [[self.mapping[u], self.mapping[w]]
                         for u, w in self.pattern.arcs()]}


def find_spanning_embedding(g: Digraph, pattern: Digraph) \
        -> PatternEmbedding | None:
    """Finds a spanning embedding of a pattern of the same order.  The
    pattern vertices are placed in index order, every candidate is pruned by
    its semi-degrees and by the arcs to the pattern vertices already placed,
    and the candidates are tried in ascending order.

    :param g: The digraph.
    :param pattern: The pattern.
    :return: The first embedding, or None if there is none.
    """
    n: int = g.n
    if pattern.n != n:
        return None
    fits: list[int] = []
    for p in range(n):
        mask: int = 0
        for v in range(n):
            if g.out_degree(v) >= pattern.out_degree(p) \
                    and g.in_degree(v) >= pattern.in_degree(p):
                mask |= 1 << v
        fits.append(mask)
    mapping: list[int] = [0] * n

    def place(p: int, unused: int) -> bool:
        if p == n:
            return True
        lower: int = full_mask(p)
        candidates: int = unused & fits[p]
        for q in iter_bits(pattern.out_rows[p] & lower):
            candidates &= g.in_rows[mapping[q]]
        for q in iter_bits(pattern.in_rows[p] & lower):
            candidates &= g.out_rows[mapping[q]]
        for v in iter_bits(candidates):
            mapping[p] = v
            if place(p + 1, unused & ~(1 << v)):
                return True
        return False

    if place(0, full_mask(n)):
        return PatternEmbedding(pattern, tuple(mapping))
    return None


def find_bypass_pattern(g: Digraph, k: int) -> PatternEmbedding | None:
    """Finds a spanning D(n,k).

    :param g: The digraph.
    :param k: The pattern parameter in 2..n.
    :return: The first embedding, or None if there is none.
    :raise OrderError: When k is out of 2..n.
    """
    if not 2 <= k <= g.n:
        raise OrderError(f"k={k} is out of 2..{g.n}.")
    return find_spanning_embedding(g, bypass_pattern(g.n, k))
