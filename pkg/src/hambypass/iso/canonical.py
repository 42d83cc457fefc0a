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
"""The canonical forms of small digraphs.

The canonical form is the least row-major adjacency bitstring over the
vertex orders that list the vertices by ascending (out-degree, in-degree).
The degree pairs are invariant, so two digraphs share the form if and only
if they are isomorphic.

"""
from __future__ import annotations

import itertools
import re
from collections.abc import Iterator

from hambypass.digraph import Digraph
from hambypass.errors import OrderError, ParseError

MAX_CANONICAL_ORDER: int = 8
"""The largest order with canonical forms."""

HEX_RE: re.Pattern = re.compile(r"^(\d+):([0-9a-f]+)$")
"""The pattern of a serialized canonical form."""


class CanonicalForm:
    """The canonical form of a digraph."""

    def __init__(self, n: int, bits: int):
        """Constructs a canonical form.

        :param n: The number of vertices.
        :param bits: The adjacency bitstring, the first entry as the most
            significant bit.
        """
        self.n: int = n
        """The number of vertices."""
        self.bits: int = bits
        """The adjacency bitstring."""

    def __eq__(self, other: object) -> bool:
        """Returns whether two canonical forms are equal.

        :param other: The other canonical form.
        :return: True if they are equal, or False otherwise.
        """
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __lt__(self, other: CanonicalForm) -> bool:
        """Returns whether this canonical form sorts before another.

        :param other: The other canonical form.
        :return: True if this one sorts first, or False otherwise.
        """
        return (self.n, self.bits) < (other.n, other.bits)

    def __hash__(self) -> int:
        """Returns the hash of the canonical form.

        :return: The hash.
        """
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        """Returns the representation of the canonical form.

        :return: The representation.
        """
        return f"CanonicalForm({self.hex!r})"

    @property
    def hex(self) -> str:
        """Returns the serialized form, "n:hexdigits".

        :return: The serialized form.
        """
        width: int = max(1, (self.n * self.n + 3) // 4)
        return f"{self.n}:{self.bits:0{width}x}"

    @classmethod
    def from_hex(cls, text: str) -> CanonicalForm:
        """Parses a serialized canonical form.

        :param text: The serialized form.
        :return: The canonical form.
        :raise ParseError: When the text is malformed.
        """
        m = HEX_RE.match(text)
        if m is None:
            raise ParseError(1, f"Bad canonical form \"{text}\".")
        return cls(int(m[1]), int(m[2], 16))

    def to_digraph(self) -> Digraph:
        """Returns the canonical representative.

        :return: The digraph whose adjacency matrix is the bitstring.
        """
        n: int = self.n
        rows: list[int] = [0] * n
        for u in range(n):
            for w in range(n):
                if self.bits >> (n * n - 1 - (u * n + w)) & 1:
                    rows[u] |= 1 << w
        return Digraph(n, tuple(rows))


def _bitstring(g: Digraph, order: tuple[int, ...]) -> int:
    """Returns the row-major adjacency bitstring under a vertex order.

    :param g: The digraph.
    :param order: The old vertex at every new position.
    :return: The bitstring.
    """
    bits: int = 0
    for u in order:
        row: int = g.out_rows[u]
        for w in order:
            bits = bits << 1 | row >> w & 1
    return bits


def _class_orders(g: Digraph) -> Iterator[tuple[int, ...]]:
    """Iterates the vertex orders that list the vertices by ascending degree
    pair, permuting within every class.

    :param g: The digraph.
    :return: The vertex orders.
    """
    classes: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        key: tuple[int, int] = (g.out_degree(v), g.in_degree(v))
        classes.setdefault(key, []).append(v)
    groups: list[list[int]] = [classes[x] for x in sorted(classes)]
    for parts in itertools.product(*(itertools.permutations(x)
                                     for x in groups)):
        yield tuple(itertools.chain.from_iterable(parts))


def canonical_form(g: Digraph) -> CanonicalForm:
    """Returns the canonical form of a digraph: the least adjacency
    bitstring over the vertex orders sorted by ascending (out-degree,
    in-degree), not over every vertex permutation.  The degree classes are
    kept by every isomorphism, so the form is still a complete invariant,
    but it differs from the least bitstring over all permutations.

    :param g: The digraph.
    :return: The canonical form.
    :raise OrderError: When n exceeds MAX_CANONICAL_ORDER.
    """
    if g.n > MAX_CANONICAL_ORDER:
        raise OrderError(f"Canonical forms need n <= {MAX_CANONICAL_ORDER},"
                         f" got {g.n}.")
    return CanonicalForm(g.n, min(_bitstring(g, x) for x in _class_orders(g)))


def degree_signature(g: Digraph) -> tuple[tuple[int, int], ...]:
    """Returns the sorted degree pairs of a digraph.

    :param g: The digraph.
    :return: The sorted (out-degree, in-degree) pairs.
    """
    return tuple(sorted((g.out_degree(v), g.in_degree(v))
                        for v in range(g.n)))


def are_isomorphic(g: Digraph, h: Digraph) -> bool:
    """Returns whether two digraphs are isomorphic.

    :param g: The digraph.
    :param h: The other digraph.
    :return: True if they are isomorphic, or False otherwise.
    :raise OrderError: When a digraph is larger than MAX_CANONICAL_ORDER.
    """
    if g.n != h.n or g.m != h.m:
        return False
    if degree_signature(g) != degree_signature(h):
        return False
    return canonical_form(g) == canonical_form(h)
