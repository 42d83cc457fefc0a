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
"""The basic digraph families: complete and complete bipartite digraphs,
directed cycles, the D(n,k) patterns, the tournament T(5), and seeded random
digraphs.

"""
import numpy as np

from hambypass.digraph import Digraph, new_digraph, MAX_ORDER
from hambypass.errors import OrderError
from hambypass.utils.bits import full_mask

T5_ARCS: list[tuple[int, int]] = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4),
                                  (2, 4), (4, 1), (4, 3), (0, 2), (1, 3)]
"""The arcs of T(5) with x1, x2, x3, x4, y named 0, 1, 2, 3, 4."""


def _check_order(n: int, least: int) -> None:
    """Checks the number of vertices of a family member.

    :param n: The number of vertices.
    :param least: The least number of vertices allowed.
    :return: None.
    :raise OrderError: When n is out of range.
    """
    if not least <= n <= MAX_ORDER:
        raise OrderError(
            f"The number of vertices {n} is out of {least}..{MAX_ORDER}.")


def complete_digraph(n: int) -> Digraph:
    """Returns the complete symmetric digraph K*_n.

    :param n: The number of vertices.
    :return: The complete symmetric digraph.
    """
    _check_order(n, 1)
    everything: int = full_mask(n)
    return Digraph(n, [everything & ~(1 << v) for v in range(n)])


def complete_bipartite_digraph(p: int, q: int) -> Digraph:
    """Returns the complete bipartite digraph K*_{p,q} with the parts
    0..p-1 and p..p+q-1.

    :param p: The size of the first part.
    :param q: The size of the second part.
    :return: The complete bipartite digraph.
    """
    if p < 1 or q < 1:
        raise OrderError(f"The part sizes ({p}, {q}) must be positive.")
    _check_order(p + q, 2)
    first: int = full_mask(p)
    second: int = full_mask(p + q) & ~first
    return Digraph(p + q, [second if v < p else first for v in range(p + q)])


def complete_bipartite_minus_arc(p: int, q: int) -> Digraph:
    """Returns K*_{p,q} without the arc 0->p.

    :param p: The size of the first part.
    :param q: The size of the second part.
    :return: The complete bipartite digraph minus one arc.
    """
    rows: list[int] = list(complete_bipartite_digraph(p, q).out_rows)
    rows[0] &= ~(1 << p)
    return Digraph(p + q, rows)


def directed_cycle(n: int) -> Digraph:
    """Returns the directed cycle 0->1->...->n-1->0.

    :param n: The number of vertices.
    :return: The directed cycle.
    :raise OrderError: When n < 2.
    """
    _check_order(n, 2)
    return new_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bypass_pattern(n: int, k: int) -> Digraph:
    """Returns D(n,k), the directed n-cycle with k-1 consecutive arcs
    reversed.  With the cycle arcs e_i = x_i x_{i+1} and e_n = x_n x_1, the
    reversed arcs are e_{n-k+2}, ..., e_n, so that D(n,2) is the path
    0->1->...->n-1 plus the arc 0->n-1.

    :param n: The number of vertices.
    :param k: The pattern parameter in 2..n.
    :return: The pattern digraph.
    :raise OrderError: When n < 3 or k is out of 2..n.
    """
    _check_order(n, 3)
    if not 2 <= k <= n:
        raise OrderError(f"k={k} is out of 2..{n}.")
    arcs: list[tuple[int, int]] = []
    for j in range(1, n + 1):
        tail, head = j - 1, j % n
        if j >= n - k + 2:
            tail, head = head, tail
        arcs.append((tail, head))
    return new_digraph(n, arcs)


def t5() -> Digraph:
    """Returns the tournament T(5).

    :return: The tournament T(5).
    """
    return new_digraph(5, T5_ARCS)


def random_digraph(n: int, seed: int, density: float = 0.5) -> Digraph:
    """Returns a seeded random digraph where every arc is present
    independently.

    :param n: The number of vertices.
    :param seed: The random seed.
    :param density: The probability of every arc.
    :return: The random digraph.
    """
    _check_order(n, 1)
    rng: np.random.Generator = np.random.default_rng(seed)
    matrix: np.ndarray = rng.random((n, n)) < density
    np.fill_diagonal(matrix, False)
    return new_digraph(n, [(int(u), int(w))
                           for u, w in zip(*np.nonzero(matrix))])
