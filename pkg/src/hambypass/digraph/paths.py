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
"""The paths and cycles of a digraph.

"""
from __future__ import annotations

from collections.abc import Iterator, Sequence

from hambypass.errors import InvalidPathError, InvalidCycleError, \
    VertexRangeError
from hambypass.utils.bits import to_mask
from .core import Digraph


class Path:
    """A path, a sequence of distinct vertices with an arc from every vertex
    to the next one.
    """

    def __init__(self, digraph: Digraph, vertices: Sequence[int]):
        """Constructs a path.

        :param digraph: The digraph the path lives in.
        :param vertices: The vertices in path order.
        :raise InvalidPathError: When the sequence is not a path.
        """
        self.digraph: Digraph = digraph
        """The digraph the path lives in."""
        self.vertices: tuple[int, ...] = tuple(vertices)
        """The vertices in path order."""
        self._validate_vertices(InvalidPathError)
        for u, w in zip(self.vertices, self.vertices[1:]):
            if not digraph.has_arc(u, w):
                raise InvalidPathError(f"There is no arc ({u}, {w}).")

    def _validate_vertices(self, error: type[ValueError]) -> None:
        """Validates that the vertices are distinct and in range.

        :param error: The error to raise on repetition.
        :return: None.
        :raise VertexRangeError: When a vertex is out of range.
        """
        if len(self.vertices) == 0:
            raise error("The vertex sequence is empty.")
        for v in self.vertices:
            if not 0 <= v < self.digraph.n:
                raise VertexRangeError(
                    f"Vertex {v} is out of 0..{self.digraph.n - 1}.")
        if len(set(self.vertices)) != len(self.vertices):
            raise error(f"The vertices {list(self.vertices)} repeat.")

    def __len__(self) -> int:
        """Returns the number of vertices.

        :return: The number of vertices.
        """
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        """Iterates the vertices in order.

        :return: The vertices.
        """
        return iter(self.vertices)

    def __getitem__(self, index: int) -> int:
        """Returns a vertex by its 0-based position.

        :param index: The 0-based position.
        :return: The vertex.
        """
        return self.vertices[index]

    def __eq__(self, other: object) -> bool:
        """Returns whether two paths visit the same vertices in order.

        :param other: The other path.
        :return: True if they are equal, or False otherwise.
        """
        if type(other) is not type(self):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        """Returns the hash of the path.

        :return: The hash.
        """
        return hash(self.vertices)

    def __repr__(self) -> str:
        """Returns the representation of the path.

        :return: The representation.
        """
        return f"{type(self).__name__}({list(self.vertices)})"

    @property
    def first(self) -> int:
        """Returns the first vertex.

        :return: The first vertex.
        """
        return self.vertices[0]

    @property
    def last(self) -> int:
        """Returns the last vertex.

        :return: The last vertex.
        """
        return self.vertices[-1]

    @property
    def mask(self) -> int:
        """Returns the bitmask of the vertices.

        :return: The bitmask of the vertices.
        """
        return to_mask(self.vertices)


class Cycle(Path):
    """A cycle, a path of at least two vertices with an arc from its last
    vertex back to the first one.  Positions are taken modulo the length.
    """

    def __init__(self, digraph: Digraph, vertices: Sequence[int]):
        """Constructs a cycle.

        :param digraph: The digraph the cycle lives in.
        :param vertices: The vertices in cycle order.
        :raise InvalidCycleError: When the sequence is not a cycle.
        """
        self.digraph = digraph
        self.vertices = tuple(vertices)
        self._validate_vertices(InvalidCycleError)
        if len(self.vertices) < 2:
            raise InvalidCycleError("A cycle has at least two vertices.")
        for i, u in enumerate(self.vertices):
            w: int = self.vertices[(i + 1) % len(self.vertices)]
            if not digraph.has_arc(u, w):
                raise InvalidCycleError(f"There is no arc ({u}, {w}).")

    def __getitem__(self, index: int) -> int:
        """Returns a vertex by its 0-based position modulo the length.

        :param index: The 0-based position.
        :return: The vertex.
        """
        return self.vertices[index % len(self.vertices)]

    def as_path(self, start: int = 0) -> Path:
        """Returns the path around the cycle from a position, which drops the
        arc entering that position.

        :param start: The 0-based start position.
        :return: The path.
        """
        k: int = len(self.vertices)
        return Path(self.digraph,
                    [self.vertices[(start + i) % k] for i in range(k)])
