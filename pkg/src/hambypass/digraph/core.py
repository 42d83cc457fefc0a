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
"""The digraph value type and its structural primitives.

A digraph on the vertices 0..n-1 keeps one out-row and one in-row bitmask per
vertex, so that degrees toward a vertex set are popcounts.

"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import NamedTuple

from hambypass.errors import SelfLoopError, VertexRangeError, \
    DuplicateArcError, OrderError, EmptyVertexSetError
from hambypass.utils.bits import iter_bits, to_mask, full_mask

MAX_ORDER: int = 16
"""The maximum number of vertices of the dense representation."""


class Degrees(NamedTuple):
    """The out-degree, in-degree and degree of a vertex."""
    d_out: int
    """The out-degree."""
    d_in: int
    """The in-degree."""
    d: int
    """The degree, the sum of the two semi-degrees."""


class Digraph:
    """A loop-free digraph on the vertices 0..n-1.  Instances are immutable
    after construction and may be shared between workers.
    """
    __slots__ = ("n", "out_rows", "in_rows")

    def __init__(self, n: int, out_rows: Sequence[int],
                 in_rows: Sequence[int] | None = None):
        """Constructs a digraph from its out-rows.  The rows are trusted;
        use :func:`new_digraph` to validate an arc list.

        :param n: The number of vertices.
        :param out_rows: The out-neighbourhood bitmask of every vertex.
        :param in_rows: The in-neighbourhood bitmask of every vertex, or None
            to derive it.
        """
        self.n: int = n
        """The number of vertices."""
        self.out_rows: tuple[int, ...] = tuple(out_rows)
        """The out-neighbourhood bitmask of every vertex."""
        if in_rows is None:
            columns: list[int] = [0] * n
            for u in range(n):
                for w in iter_bits(self.out_rows[u]):
                    columns[w] |= 1 << u
            in_rows = columns
        self.in_rows: tuple[int, ...] = tuple(in_rows)
        """The in-neighbourhood bitmask of every vertex."""

    @classmethod
    def from_rows(cls, n: int, out_rows: Sequence[int]) -> Digraph:
        """Constructs a digraph from trusted out-rows.

        :param n: The number of vertices.
        :param out_rows: The out-neighbourhood bitmask of every vertex.
        :return: The digraph.
        """
        return cls(n, out_rows)

    def __eq__(self, other: object) -> bool:
        """Returns whether two digraphs have the same vertices and arcs.

        :param other: The other digraph.
        :return: True if they are equal, or False otherwise.
        """
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_rows == other.out_rows

    def __hash__(self) -> int:
        """Returns the hash of the digraph.

        :return: The hash.
        """
        return hash((self.n, self.out_rows))

    def __repr__(self) -> str:
        """Returns the representation of the digraph.

        :return: The representation.
        """
        return f"Digraph(n={self.n}, arcs={self.arcs()})"

    @property
    def m(self) -> int:
        """Returns the number of arcs.

        :return: The number of arcs.
        """
        return sum(x.bit_count() for x in self.out_rows)

    @property
    def vertex_mask(self) -> int:
        """Returns the bitmask of all the vertices.

        :return: The bitmask of all the vertices.
        """
        return full_mask(self.n)

    def arcs(self) -> list[tuple[int, int]]:
        """Returns the arcs in lexicographic order.

        :return: The arcs in lexicographic order.
        """
        return [(u, w) for u in range(self.n)
                for w in iter_bits(self.out_rows[u])]

    def has_arc(self, u: int, w: int) -> bool:
        """Returns whether the arc u->w exists.

        :param u: The tail.
        :param w: The head.
        :return: True if the arc exists, or False otherwise.
        """
        return bool(self.out_rows[u] >> w & 1)

    def is_adjacent(self, u: int, w: int) -> bool:
        """Returns whether two vertices are joined by an arc either way.

        :param u: A vertex.
        :param w: Another vertex.
        :return: True if they are adjacent, or False otherwise.
        """
        return bool((self.out_rows[u] | self.in_rows[u]) >> w & 1)

    def out_neighbours(self, v: int) -> list[int]:
        """Returns the out-neighbours of a vertex in ascending order.

        :param v: The vertex.
        :return: The out-neighbours.
        """
        return list(iter_bits(self.out_rows[v]))

    def in_neighbours(self, v: int) -> list[int]:
        """Returns the in-neighbours of a vertex in ascending order.

        :param v: The vertex.
        :return: The in-neighbours.
        """
        return list(iter_bits(self.in_rows[v]))

    def out_degree(self, v: int) -> int:
        """Returns the out-degree of a vertex.

        :param v: The vertex.
        :return: The out-degree.
        """
        return self.out_rows[v].bit_count()

    def in_degree(self, v: int) -> int:
        """Returns the in-degree of a vertex.

        :param v: The vertex.
        :return: The in-degree.
        """
        return self.in_rows[v].bit_count()

    def degree(self, v: int) -> int:
        """Returns the degree of a vertex.

        :param v: The vertex.
        :return: The degree.
        """
        return self.out_rows[v].bit_count() + self.in_rows[v].bit_count()

    @property
    def min_out_degree(self) -> int:
        """Returns the minimum out-degree.

        :return: The minimum out-degree.
        """
        return min(x.bit_count() for x in self.out_rows)

    @property
    def min_in_degree(self) -> int:
        """Returns the minimum in-degree.

        :return: The minimum in-degree.
        """
        return min(x.bit_count() for x in self.in_rows)

    def relabel(self, permutation: Sequence[int]) -> Digraph:
        """Returns the digraph with vertex v renamed to permutation[v].

        :param permutation: The new name of every vertex.
        :return: The relabeled digraph.
        """
        rows: list[int] = [0] * self.n
        for u in range(self.n):
            heads: Iterable[int] = iter_bits(self.out_rows[u])
            rows[permutation[u]] = to_mask(permutation[w] for w in heads)
        return Digraph(self.n, rows)


def new_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Constructs a digraph from an arc list.

    :param n: The number of vertices.
    :param arcs: The arcs.
    :return: The digraph with exactly the given arcs.
    :raise OrderError: When n is out of 1..MAX_ORDER.
    :raise SelfLoopError: When an arc goes from a vertex to itself.
    :raise VertexRangeError: When an arc end is out of 0..n-1.
    :raise DuplicateArcError: When an arc is given more than once.
    """
    if not 1 <= n <= MAX_ORDER:
        raise OrderError(
            f"The number of vertices {n} is out of 1..{MAX_ORDER}.")
    rows: list[int] = [0] * n
    for u, w in arcs:
        if u == w:
            raise SelfLoopError(f"Self-loop at vertex {u}.")
        if not (0 <= u < n and 0 <= w < n):
            raise VertexRangeError(f"Arc ({u}, {w}) is out of 0..{n - 1}.")
        if rows[u] >> w & 1:
            raise DuplicateArcError(f"Duplicate arc ({u}, {w}).")
        rows[u] |= 1 << w
    return Digraph(n, rows)


def degrees(g: Digraph, v: int) -> Degrees:
    """Returns the semi-degrees and the degree of a vertex.

    :param g: The digraph.
    :param v: The vertex.
    :return: The out-degree, in-degree and degree.
    """
    d_out: int = g.out_rows[v].bit_count()
    d_in: int = g.in_rows[v].bit_count()
    return Degrees(d_out, d_in, d_out + d_in)


def degrees_toward_set(g: Digraph, v: int, vertices: Iterable[int]) \
        -> Degrees:
    """Returns the semi-degrees and the degree of a vertex counted only
    toward a vertex set.

    :param g: The digraph.
    :param v: The vertex, usually outside the set.
    :param vertices: The vertex set.
    :return: The out-degree, in-degree and degree toward the set.
    """
    mask: int = to_mask(vertices)
    d_out: int = (g.out_rows[v] & mask).bit_count()
    d_in: int = (g.in_rows[v] & mask).bit_count()
    return Degrees(d_out, d_in, d_out + d_in)


def converse(g: Digraph) -> Digraph:
    """Returns the converse digraph, with every arc reversed.

    :param g: The digraph.
    :return: The converse digraph.
    """
    return Digraph(g.n, g.in_rows, g.out_rows)


def _reach(rows: tuple[int, ...], start: int) -> int:
    """Returns the vertices reachable from a start vertex.

    :param rows: The neighbourhood rows to follow.
    :param start: The start vertex.
    :return: The bitmask of the reachable vertices.
    """
    seen: int = 1 << start
    frontier: int = seen
    while frontier:
        nxt: int = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strong(g: Digraph) -> bool:
    """Returns whether the digraph is strongly connected.  A single vertex is
    strong.

    :param g: The digraph.
    :return: True if the digraph is strong, or False otherwise.
    """
    everything: int = full_mask(g.n)
    return _reach(g.out_rows, 0) == everything \
        and _reach(g.in_rows, 0) == everything


def non_adjacent_pairs(g: Digraph) -> list[tuple[int, int]]:
    """Returns the pairs of distinct non-adjacent vertices.

    :param g: The digraph.
    :return: The pairs (u, w), u < w, in lexicographic order.
    """
    pairs: list[tuple[int, int]] = []
    everything: int = full_mask(g.n)
    for u in range(g.n):
        missing: int = everything & ~(g.out_rows[u] | g.in_rows[u]) \
            & ~((2 << u) - 1)
        pairs.extend((u, w) for w in iter_bits(missing))
    return pairs


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) \
        -> tuple[Digraph, list[int]]:
    """Returns the subdigraph induced by a vertex set.

    :param g: The digraph.
    :param vertices: The vertex set.
    :return: The induced subdigraph on 0..|S|-1, and the original vertex of
        every new vertex.
    :raise EmptyVertexSetError: When the vertex set is empty.
    """
    labels: list[int] = sorted(set(vertices))
    if len(labels) == 0:
        raise EmptyVertexSetError("The induced vertex set is empty.")
    index: dict[int, int] = {v: i for i, v in enumerate(labels)}
    mask: int = to_mask(labels)
    rows: list[int] = [to_mask(index[w]
                               for w in iter_bits(g.out_rows[v] & mask))
                       for v in labels]
    return Digraph(len(labels), rows), labels


def is_tournament(g: Digraph) -> bool:
    """Returns whether every pair of distinct vertices is joined by exactly
    one arc.

    :param g: The digraph.
    :return: True if the digraph is a tournament, or False otherwise.
    """
    for u in range(g.n):
        if g.out_rows[u] & g.in_rows[u]:
            return False
    return g.m == g.n * (g.n - 1) // 2


def is_weakly_connected(g: Digraph) -> bool:
    """Returns whether the underlying graph is connected.

    :param g: The digraph.
    :return: True if the underlying graph is connected, or False otherwise.
    """
    rows: tuple[int, ...] = tuple(g.out_rows[v] | g.in_rows[v]
                                  for v in range(g.n))
    return _reach(rows, 0) == full_mask(g.n)


def cut_vertices(g: Digraph) -> list[int]:
    """Returns the vertices whose removal disconnects the underlying graph.

    :param g: The digraph.
    :return: The cut vertices in ascending order.
    """
    if g.n < 3:
        return []
    return [v for v in range(g.n)
            if not is_weakly_connected(
                induced_subdigraph(g, (x for x in range(g.n) if x != v))[0])]


def reachable_from(g: Digraph, v: int) -> int:
    """Returns the vertices reachable from a vertex by a directed path.

    :param g: The digraph.
    :param v: The vertex.
    :return: The bitmask of the reachable vertices, v included.
    """
    return _reach(g.out_rows, v)


def reaching(g: Digraph, v: int) -> int:
    """Returns the vertices from which a vertex is reachable.

    :param g: The digraph.
    :param v: The vertex.
    :return: The bitmask of the vertices reaching v, v included.
    """
    return _reach(g.in_rows, v)


def has_cut_vertex(g: Digraph) -> bool:
    """Returns whether the underlying graph has a cut vertex.

    :param g: The digraph.
    :return: True if some vertex is a cut vertex, or False otherwise.
    """
    return len(cut_vertices(g)) > 0
