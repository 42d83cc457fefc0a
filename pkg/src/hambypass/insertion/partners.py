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
"""The partners of vertices and paths on a host path, and the insertions
they allow.

A partner of a path Q on a host path P is an arc P[i] -> P[i+1] such that
P[i] -> Q.first and Q.last -> P[i+1] are arcs, so that Q may be spliced in
between.  Positions on the host path are 1-based here.

"""
import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence

from hambypass.digraph import Digraph, Path
from hambypass.errors import InvalidPartnerError, InvalidPathError, \
    OverlapError
from hambypass.search import find_ordered_hamiltonian_path
from hambypass.utils.bits import to_mask

logger = logging.getLogger(__name__)


class PartnerIndex:
    """The 1-based position i of a partner arc P[i] -> P[i+1] on a host
    path.
    """

    def __init__(self, i: int):
        """Constructs the partner index.

        :param i: The 1-based position.
        :raise InvalidPartnerError: When the position is less than 1.
        """
        if i < 1:
            raise InvalidPartnerError(f"The partner index {i} is below 1.")
        self.i: int = i
        """The 1-based position."""

    def __eq__(self, other: object) -> bool:
        """Returns whether two partner indices are equal.

        :param other: The other partner index.
        :return: True if they are equal, or False otherwise.
        """
        if not isinstance(other, PartnerIndex):
            return NotImplemented
        return self.i == other.i

    def __hash__(self) -> int:
        """Returns the hash of the partner index.

        :return: The hash.
        """
        return hash(self.i)

    def __repr__(self) -> str:
        """Returns the representation of the partner index.

        :return: The representation.
        """
        return f"PartnerIndex({self.i})"

    def arc(self, host: Path) -> tuple[int, int]:
        """Returns the partner arc on a host path.

        :param host: The host path.
        :return: The arc (P[i], P[i+1]).
        """
        return host[self.i - 1], host[self.i]


def _check_disjoint(host: Path, vertices: Iterable[int]) -> int:
    """Checks that some vertices are off a host path.

    :param host: The host path.
    :param vertices: The vertices.
    :return: The bitmask of the vertices.
    :raise OverlapError: When a vertex is on the host path.
    """
    mask: int = to_mask(vertices)
    if mask & host.mask:
        raise OverlapError("The vertices overlap the host path.")
    return mask


def _partner_positions(g: Digraph, host: Path, first: int, last: int) \
        -> Iterator[int]:
    """Iterates the 1-based positions of the partners of a (first, last)
    segment, in ascending order.

    :param g: The digraph.
    :param host: The host path.
    :param first: The first vertex of the segment.
    :param last: The last vertex of the segment.
    :return: The partner positions.
    """
    for i in range(1, len(host)):
        if g.has_arc(host[i - 1], first) and g.has_arc(last, host[i]):
            yield i


def find_partner_for_vertex(g: Digraph, host: Path, x: int) \
        -> PartnerIndex | None:
    """Finds the first partner of a vertex on a host path.

    :param g: The digraph.
    :param host: The host path.
    :param x: The vertex off the path.
    :return: The smallest partner index, or None if there is none.
    :raise OverlapError: When the vertex is on the path.
    """
    return find_partner_for_path(g, host, Path(g, [x]))


def find_partner_for_path(g: Digraph, host: Path, q: Path) \
        -> PartnerIndex | None:
    """Finds the first partner of a whole path on a host path.

    :param g: The digraph.
    :param host: The host path.
    :param q: The path off the host path.
    :return: The smallest partner index, or None if there is none.
    :raise OverlapError: When the paths share a vertex.
    """
    _check_disjoint(host, q)
    i: int | None = next(_partner_positions(g, host, q.first, q.last), None)
    return None if i is None else PartnerIndex(i)


def insert_at(host: Path, index: PartnerIndex, q: Path) -> Path:
    """Inserts a path into a host path at a partner.

    :param host: The host path.
    :param index: The partner of the inserted path.
    :param q: The inserted path.
    :return: The path P[1..i] Q P[i+1..].
    :raise OverlapError: When the paths share a vertex.
    :raise InvalidPartnerError: When the index is not a partner of the path.
    """
    g: Digraph = host.digraph
    _check_disjoint(host, q)
    if index.i >= len(host):
        raise InvalidPartnerError(
            f"The partner index {index.i} is beyond the path.")
    tail, head = index.arc(host)
    if not g.has_arc(tail, q.first) or not g.has_arc(q.last, head):
        raise InvalidPartnerError(
            f"The arc ({tail}, {head}) is not a partner of {list(q)}.")
    return Path(g, host.vertices[:index.i] + q.vertices
                + host.vertices[index.i:])


class PartnerCollection:
    """A collection of partners: a split of the inserted path into
    consecutive blocks with a partner on the host path for every block.
    """

    def __init__(self, cuts: Sequence[int], partners: Sequence[int]):
        """Constructs the collection.

        :param cuts: The 1-based block starts i_1 = 1 < ... < i_m = |Q|+1.
        :param partners: The 1-based partner index of every block.
        """
        self.cuts: tuple[int, ...] = tuple(cuts)
        """The 1-based block starts, closed by |Q|+1."""
        self.partners: tuple[PartnerIndex, ...] \
            = tuple(PartnerIndex(i) for i in partners)
        """The partner index of every block."""

    def __repr__(self) -> str:
        """Returns the representation of the collection.

        :return: The representation.
        """
        return (f"PartnerCollection(cuts={list(self.cuts)},"
                f" partners={[x.i for x in self.partners]})")

    def blocks(self, q: Path) -> list[tuple[int, ...]]:
        """Returns the blocks of the inserted path.

        :param q: The inserted path.
        :return: The blocks in path order.
        """
        return [q.vertices[a - 1:b - 1]
                for a, b in zip(self.cuts, self.cuts[1:])]


def _splice(host: Path, blocks: list[tuple[int, ...]],
            partners: Sequence[int]) -> Path | None:
    """Inserts every block at its partner at once.  Blocks sharing a partner
    are chained in their order on the inserted path.

    :param host: The host path.
    :param blocks: The blocks.
    :param partners: The 1-based partner index of every block.
    :return: The resulting path, or None if it is not a path.
    """
    at: dict[int, list[tuple[int, ...]]] = {}
    for block, i in zip(blocks, partners):
        at.setdefault(i, []).append(block)
    vertices: list[int] = []
    for i, v in enumerate(host.vertices, start=1):
        vertices.append(v)
        for block in at.get(i, []):
            vertices.extend(block)
    try:
        return Path(host.digraph, vertices)
    except InvalidPathError:
        return None


def _partitions(r: int) -> Iterator[tuple[int, ...]]:
    """Iterates the block splits of a path of r vertices, the fewest blocks
    first.

    :param r: The number of vertices.
    :return: The cut tuples (1, ..., r+1).
    """
    for size in range(1, r + 1):
        for inner in itertools.combinations(range(2, r + 1), size - 1):
            yield 1, *inner, r + 1


def _distinct_assignments(options: list[list[int]], used: frozenset[int]) \
        -> Iterator[list[int]]:
    """Iterates the assignments of pairwise distinct partners, the smallest
    indices first.

    :param options: The candidate partners of every block.
    :param used: The partners already taken.
    :return: The assignments.
    """
    if not options:
        yield []
        return
    for i in options[0]:
        if i not in used:
            for rest in _distinct_assignments(options[1:], used | {i}):
                yield [i, *rest]


def _block_options(g: Digraph, host: Path, q: Path, cuts: tuple[int, ...]) \
        -> list[list[int]] | None:
    """Returns the candidate partners of every block of a split.

    :param g: The digraph.
    :param host: The host path.
    :param q: The inserted path.
    :param cuts: The split.
    :return: The candidates per block, or None if a block has none.
    """
    options: list[list[int]] = []
    for a, b in zip(cuts, cuts[1:]):
        found: list[int] = list(_partner_positions(g, host, q[a - 1],
                                                   q[b - 2]))
        if not found:
            return None
        options.append(found)
    return options


def has_collection_of_partners(g: Digraph, host: Path, q: Path) -> bool:
    """Returns whether a path has a collection of partners on a host path,
    that is, a split into blocks where every block has some partner, each
    block on its own.

    :param g: The digraph.
    :param host: The host path.
    :param q: The path off the host path.
    :return: True if there is a collection of partners, or False otherwise.
    :raise OverlapError: When the paths share a vertex.
    """
    _check_disjoint(host, q)
    return any(_block_options(g, host, q, cuts) is not None
               for cuts in _partitions(len(q)))


def find_collection_of_partners(g: Digraph, host: Path, q: Path) \
        -> PartnerCollection | None:
    """Finds a collection of partners whose simultaneous insertion is a
    path.  Assignments to pairwise distinct partner arcs are searched first
    over all the splits, and then assignments sharing partner arcs.  Every
    candidate is validated by rebuilding the path.

    :param g: The digraph.
    :param host: The host path.
    :param q: The path off the host path.
    :return: The collection, or None if there is none.
    :raise OverlapError: When the paths share a vertex.
    """
    _check_disjoint(host, q)
    candidates: list[tuple[tuple[int, ...], list[list[int]]]] = []
    for cuts in _partitions(len(q)):
        options: list[list[int]] | None = _block_options(g, host, q, cuts)
        if options is not None:
            candidates.append((cuts, options))
    for cuts, options in candidates:
        blocks: list[tuple[int, ...]] = PartnerCollection(cuts, [])\
            .blocks(q)
        for assignment in _distinct_assignments(options, frozenset()):
            if _splice(host, blocks, assignment) is not None:
                return PartnerCollection(cuts, assignment)
    for cuts, options in candidates:
        blocks = PartnerCollection(cuts, []).blocks(q)
        for assignment in itertools.product(*options):
            if len(set(assignment)) < len(assignment) \
                    and _splice(host, blocks, assignment) is not None:
                logger.debug("Blocks of %s share a partner arc.", list(q))
                return PartnerCollection(cuts, assignment)
    return None


def multi_insert(g: Digraph, host: Path, q: Path) -> Path | None:
    """Inserts a whole path into a host path, keeping the host endpoints.
    A collection of partners is tried first, and then an exact search for a
    path that keeps the order of the host path.

    :param g: The digraph.
    :param host: The host path.
    :param q: The path off the host path.
    :return: A (P.first, P.last)-path on V(P) and V(Q), or None if there is
        none.
    :raise OverlapError: When the paths share a vertex.
    """
    collection: PartnerCollection | None \
        = find_collection_of_partners(g, host, q)
    if collection is not None:
        return _splice(host, collection.blocks(q),
                       [x.i for x in collection.partners])
    return find_ordered_hamiltonian_path(g, host, q.vertices)


class InsertionOutcome:
    """The outcome of extending a path as much as possible."""

    def __init__(self, extended: Path, leftovers: frozenset[int],
                 steps: list[tuple[int, PartnerIndex]]):
        """Constructs the outcome.

        :param extended: The extended path.
        :param leftovers: The vertices that could not be inserted.
        :param steps: The inserted vertices and their partners, in order.
        """
        self.extended: Path = extended
        """The extended path."""
        self.leftovers: frozenset[int] = leftovers
        """The vertices that could not be inserted."""
        self.steps: list[tuple[int, PartnerIndex]] = steps
        """The inserted vertices and their partners, in order."""

    def __repr__(self) -> str:
        """Returns the representation of the outcome.

        :return: The representation.
        """
        return (f"InsertionOutcome(extended={list(self.extended)},"
                f" leftovers={sorted(self.leftovers)},"
                f" steps={[(x, i.i) for x, i in self.steps]})")


def extend_as_much_as_possible(g: Digraph, start: Path,
                               vertices: Iterable[int]) -> InsertionOutcome:
    """Inserts single vertices into a path while any of them has a partner.
    The lowest insertable vertex goes first, at its smallest partner, and
    the scan restarts after every insertion.

    :param g: The digraph.
    :param start: The starting path.
    :param vertices: The vertices to insert, off the starting path.
    :return: The outcome.
    :raise OverlapError: When a vertex is on the starting path.
    """
    remaining: set[int] = set(vertices)
    _check_disjoint(start, remaining)
    path: Path = start
    steps: list[tuple[int, PartnerIndex]] = []
    progress: bool = True
    while progress:
        progress = False
        for x in sorted(remaining):
            index: PartnerIndex | None = find_partner_for_vertex(g, path, x)
            if index is not None:
                path = insert_at(path, index, Path(g, [x]))
                steps.append((x, index))
                remaining.discard(x)
                progress = True
                break
    return InsertionOutcome(path, frozenset(remaining), steps)
