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
"""The extremal families D_0 and D_1, which satisfy the condition A_{-1} but
have no Hamiltonian bypass.

"""
from __future__ import annotations

import itertools
import re
from collections.abc import Iterator
from enum import Enum

import numpy as np

from hambypass.digraph import Digraph, new_digraph, MAX_ORDER
from hambypass.errors import OrderError, DigraphError
from hambypass.utils.bits import full_mask


class InnerKind(Enum):
    """The kinds of the subdigraph induced on the set B of D_0."""
    EMPTY: str = "empty"
    """No arcs."""
    COMPLETE: str = "complete"
    """All the arcs."""
    EXPLICIT: str = "explicit"
    """An explicit arc list."""
    RANDOM: str = "random"
    """Seeded random arcs."""


class InnerSpec:
    """The subdigraph induced on the set B of D_0."""

    def __init__(self, kind: InnerKind,
                 arcs: tuple[tuple[int, int], ...] = (),
                 seed: int | None = None):
        """Constructs the inner specification.

        :param kind: The kind.
        :param arcs: The arcs, for the explicit kind, in the vertex numbers of
            D_0.
        :param seed: The seed, for the random kind.
        """
        self.kind: InnerKind = kind
        """The kind."""
        self.arcs: tuple[tuple[int, int], ...] = tuple(arcs)
        """The explicit arcs."""
        self.seed: int | None = seed
        """The random seed."""

    def __repr__(self) -> str:
        """Returns the representation of the specification.

        :return: The representation.
        """
        return f"InnerSpec({self.spec})"

    @property
    def spec(self) -> str:
        """Returns the text form of the specification.

        :return: The text form.
        """
        if self.kind == InnerKind.EXPLICIT:
            return "explicit:" + ",".join(f"{u}-{w}" for u, w in self.arcs)
        if self.kind == InnerKind.RANDOM:
            return f"random:{self.seed}"
        return self.kind.value

    @classmethod
    def empty(cls) -> InnerSpec:
        """Returns the empty inner subdigraph.

        :return: The specification.
        """
        return cls(InnerKind.EMPTY)

    @classmethod
    def complete(cls) -> InnerSpec:
        """Returns the complete inner subdigraph.

        :return: The specification.
        """
        return cls(InnerKind.COMPLETE)

    @classmethod
    def explicit(cls, arcs: list[tuple[int, int]]) -> InnerSpec:
        """Returns an explicit inner subdigraph.

        :param arcs: The arcs.
        :return: The specification.
        """
        return cls(InnerKind.EXPLICIT, arcs=tuple(arcs))

    @classmethod
    def random(cls, seed: int) -> InnerSpec:
        """Returns a seeded random inner subdigraph.

        :param seed: The seed.
        :return: The specification.
        """
        return cls(InnerKind.RANDOM, seed=seed)

    @classmethod
    def parse(cls, text: str) -> InnerSpec:
        """Parses the text form "empty", "complete", "random:SEED" or
        "explicit:U-V,U-V,...".

        :param text: The text form.
        :return: The specification.
        :raise DigraphError: When the text form is invalid.
        """
        if text == "empty":
            return cls.empty()
        if text == "complete":
            return cls.complete()
        m = re.match(r"^random:(\d+)$", text)
        if m is not None:
            return cls.random(int(m[1]))
        m = re.match(r"^explicit:((?:\d+-\d+)(?:,\d+-\d+)*)?$", text)
        if m is not None:
            if m[1] is None:
                return cls.explicit([])
            return cls.explicit([(int(x.split("-")[0]), int(x.split("-")[1]))
                                 for x in m[1].split(",")])
        raise DigraphError(f"Unknown inner subdigraph \"{text}\".")

    def inner_arcs(self, b: list[int]) -> list[tuple[int, int]]:
        """Returns the arcs inside B.

        :param b: The vertices of B.
        :return: The arcs inside B.
        :raise DigraphError: When an explicit arc leaves B or is a loop.
        """
        if self.kind == InnerKind.EMPTY:
            return []
        if self.kind == InnerKind.COMPLETE:
            return [(u, w) for u in b for w in b if u != w]
        if self.kind == InnerKind.RANDOM:
            rng: np.random.Generator = np.random.default_rng(self.seed)
            draws: np.ndarray = rng.random((len(b), len(b))) < 0.5
            return [(b[i], b[j]) for i in range(len(b)) for j in range(len(b))
                    if i != j and draws[i, j]]
        members: set[int] = set(b)
        for u, w in self.arcs:
            if u not in members or w not in members:
                raise DigraphError(f"The inner arc ({u}, {w}) leaves B={b}.")
        return list(self.arcs)


INNER_PRESETS: list[InnerSpec] = [InnerSpec.empty(), InnerSpec.complete(),
                                  InnerSpec.random(1)]
"""The inner presets swept by the tests, besides explicit arc lists."""


def d0_parts(n: int) -> tuple[list[int], list[int]]:
    """Returns the independent set A and the set B of D_0.

    :param n: The number of vertices.
    :return: The set A of (n+1)/2 vertices and the set B of (n-1)/2 vertices.
    """
    return list(range((n + 1) // 2)), list(range((n + 1) // 2, n))


def d0(n: int, inner: InnerSpec) -> Digraph:
    """Returns the D_0 member of order n: an independent set A of (n+1)/2
    vertices, a set B of (n-1)/2 vertices carrying the inner subdigraph, and
    both arcs between every vertex of A and every vertex of B.

    :param n: The number of vertices.
    :param inner: The subdigraph induced on B.
    :return: The digraph.
    :raise OrderError: When n is even or less than 5.
    """
    if n < 5 or n % 2 == 0 or n > MAX_ORDER:
        raise OrderError(f"D_0 needs an odd order of at least 5, got {n}.")
    a, b = d0_parts(n)
    arcs: list[tuple[int, int]] = [(u, w) for u in a for w in b] \
        + [(w, u) for u in a for w in b]
    return new_digraph(n, arcs + inner.inner_arcs(b))


def d0_inner_variants(n: int) -> Iterator[Digraph]:
    """Iterates D_0 over every labelled subdigraph induced on B.

    :param n: The number of vertices.
    :return: The D_0 members.
    """
    a, b = d0_parts(n)
    slots: list[tuple[int, int]] = [(u, w) for u in b for w in b if u != w]
    for chosen in itertools.product((False, True), repeat=len(slots)):
        yield d0(n, InnerSpec.explicit([x for x, y in zip(slots, chosen)
                                        if y]))


def d1(n: int, k: int) -> Digraph:
    """Returns the D_1 member of order n: K*_{n-k} on 0..n-k-1 and K*_{k+1} on
    n-k-1..n-1, sharing the vertex n-k-1.

    :param n: The number of vertices.
    :param k: The parameter in 1..n-2.
    :return: The digraph.
    :raise OrderError: When n < 4 or k is out of 1..n-2.
    """
    if not 4 <= n <= MAX_ORDER:
        raise OrderError(f"D_1 needs an order of at least 4, got {n}.")
    if not 1 <= k <= n - 2:
        raise OrderError(f"k={k} is out of 1..{n - 2}.")
    glue: int = n - k - 1
    first: int = full_mask(glue + 1)
    second: int = full_mask(n) & ~full_mask(glue)
    rows: list[int] = [0] * n
    for v in range(n):
        if v <= glue:
            rows[v] |= first & ~(1 << v)
        if v >= glue:
            rows[v] |= second & ~(1 << v)
    return Digraph(n, rows)


def d1_variants(n: int) -> Iterator[Digraph]:
    """Iterates D_1 over every k in 1..n-2.

    :param n: The number of vertices.
    :return: The D_1 members.
    """
    for k in range(1, n - 1):
        yield d1(n, k)
