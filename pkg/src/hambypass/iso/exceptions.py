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
"""The recognizers of the exceptional digraphs.

"""
from functools import cache

from hambypass.digraph import Digraph, is_tournament
from hambypass.families import t5, complete_bipartite_minus_arc
from hambypass.utils.bits import full_mask
from .canonical import CanonicalForm, canonical_form, degree_signature


@cache
def _t5_form() -> CanonicalForm:
    """Returns the canonical form of T(5).

    :return: The canonical form of T(5).
    """
    return canonical_form(t5())


@cache
def _t5_scores() -> list[int]:
    """Returns the sorted out-degrees of T(5).

    :return: The sorted out-degrees of T(5).
    """
    return sorted(t5().out_degree(v) for v in range(5))


def is_isomorphic_to_t5(g: Digraph) -> bool:
    """Returns whether a digraph is isomorphic to the tournament T(5).

    :param g: The digraph.
    :return: True if it is isomorphic to T(5), or False otherwise.
    """
    if g.n != 5 or g.m != 10 or not is_tournament(g):
        return False
    if sorted(g.out_degree(v) for v in range(5)) != _t5_scores():
        return False
    return canonical_form(g) == _t5_form()


def is_balanced_complete_bipartite(g: Digraph) -> bool:
    """Returns whether a digraph is the complete bipartite digraph with two
    parts of n/2 vertices.  The part of vertex 0 is vertex 0 with its
    non-neighbours.

    :param g: The digraph.
    :return: True if it is K*_{n/2,n/2}, or False otherwise.
    """
    n: int = g.n
    if n < 2 or n % 2 == 1 or g.m != n * n // 2:
        return False
    part: int = full_mask(n) & ~(g.out_rows[0] | g.in_rows[0])
    if part.bit_count() != n // 2:
        return False
    other: int = full_mask(n) & ~part
    for v in range(n):
        across: int = other if part >> v & 1 else part
        if g.out_rows[v] != across or g.in_rows[v] != across:
            return False
    return True


@cache
def _bipartite_minus_arc_form(n: int) -> CanonicalForm:
    """Returns the canonical form of K*_{n/2,n/2} minus an arc.

    :param n: The even number of vertices.
    :return: The canonical form.
    """
    return canonical_form(complete_bipartite_minus_arc(n // 2, n // 2))


def is_balanced_complete_bipartite_minus_arc(g: Digraph) -> bool:
    """Returns whether a digraph is K*_{n/2,n/2} with one arc removed.

    :param g: The digraph.
    :return: True if it is K*_{n/2,n/2} minus an arc, or False otherwise.
    """
    n: int = g.n
    if n < 2 or n % 2 == 1 or g.m != n * n // 2 - 1:
        return False
    reference: Digraph = complete_bipartite_minus_arc(n // 2, n // 2)
    if degree_signature(g) != degree_signature(reference):
        return False
    return canonical_form(g) == _bipartite_minus_arc_form(n)
