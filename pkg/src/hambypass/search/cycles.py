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
"""The exact cycle and Hamiltonian path oracles.

The searches are depth-first over bitmask-visited sets with the candidates in
ascending order, so every witness is the lexicographically first one.

"""
from collections.abc import Iterable, Iterator

from hambypass.digraph import Digraph, Path, Cycle
from hambypass.errors import OrderError, VertexRangeError, OverlapError
from hambypass.utils.bits import iter_bits, to_mask, full_mask


def _cycle_paths(g: Digraph, start: int, free: int, path: list[int],
                 m: int) -> Iterator[list[int]]:
    """Iterates the cycles of length m through the start vertex that extend a
    partial path.

    :param g: The digraph.
    :param start: The start vertex, the least vertex of the cycle.
    :param free: The vertices still allowed on the cycle.
    :param path: The partial path from the start vertex.
    :param m: The cycle length.
    :return: The completed vertex sequences.
    """
    current: int = path[-1]
    if len(path) == m:
        if g.out_rows[current] >> start & 1:
            yield path
        return
    candidates: int = g.out_rows[current] & free
    if len(path) == m - 1:
        candidates &= g.in_rows[start]
    for w in iter_bits(candidates):
        path.append(w)
        yield from _cycle_paths(g, start, free & ~(1 << w), path, m)
        path.pop()


def all_cycles_of_length(g: Digraph, m: int,
                         vertices: Iterable[int] | None = None) \
        -> Iterator[Cycle]:
    """Iterates every cycle of a length once, starting from its least vertex.

    :param g: The digraph.
    :param m: The cycle length.
    :param vertices: The vertices allowed on the cycles, or None for all.
    :return: The cycles in lexicographic order.
    :raise OrderError: When m is out of 2..n.
    """
    if not 2 <= m <= g.n:
        raise OrderError(f"The cycle length {m} is out of 2..{g.n}.")
    allowed: int = full_mask(g.n) if vertices is None else to_mask(vertices)
    if allowed.bit_count() < m:
        return
    for start in iter_bits(allowed):
        higher: int = allowed & ~((2 << start) - 1)
        for found in _cycle_paths(g, start, higher, [start], m):
            yield Cycle(g, found)


def find_cycle_of_length_within(g: Digraph, m: int,
                                vertices: Iterable[int] | None = None) \
        -> Cycle | None:
    """Finds a cycle of a length inside a vertex set.

    :param g: The digraph.
    :param m: The cycle length.
    :param vertices: The vertices allowed on the cycle, or None for all.
    :return: The first cycle, or None if there is none.
    :raise OrderError: When m is out of 2..n.
    """
    return next(all_cycles_of_length(g, m, vertices), None)


def find_cycle_of_length(g: Digraph, m: int) -> Cycle | None:
    """Finds a cycle of a length.

    :param g: The digraph.
    :param m: The cycle length.
    :return: The first cycle, or None if there is none.
    :raise OrderError: When m is out of 2..n.
    """
    return find_cycle_of_length_within(g, m)


def find_hamiltonian_cycle(g: Digraph) -> Cycle | None:
    """Finds a Hamiltonian cycle.

    :param g: The digraph.
    :return: The first Hamiltonian cycle, or None if there is none.
    """
    if g.n < 2:
        return None
    return find_cycle_of_length(g, g.n)


def find_pre_hamiltonian_cycle(g: Digraph) -> Cycle | None:
    """Finds a pre-Hamiltonian cycle, a cycle through all the vertices but
    one.

    :param g: The digraph.
    :return: The first pre-Hamiltonian cycle, or None if there is none.
    :raise OrderError: When n < 3.
    """
    if g.n < 3:
        raise OrderError(f"A pre-Hamiltonian cycle needs n >= 3, got {g.n}.")
    return find_cycle_of_length(g, g.n - 1)


def reaches_all(g: Digraph, current: int, remaining: int) -> bool:
    """Returns whether every remaining vertex is reachable from the current
    vertex through remaining vertices.

    :param g: The digraph.
    :param current: The current vertex.
    :param remaining: The unvisited vertices.
    :return: True if all are reachable, or False otherwise.
    """
    seen: int = 0
    frontier: int = g.out_rows[current] & remaining
    while frontier:
        seen |= frontier
        nxt: int = 0
        for v in iter_bits(frontier):
            nxt |= g.out_rows[v]
        frontier = nxt & remaining & ~seen
    return seen == remaining


def _feasible(g: Digraph, current: int, target: int, remaining: int) -> bool:
    """Returns whether the remaining vertices may still be threaded from the
    current vertex to the target.  Every inner vertex needs an in-neighbour
    and an out-neighbour where the path can still reach them, the target
    needs an in-neighbour, and all of them must be reachable.

    :param g: The digraph.
    :param current: The current vertex.
    :param target: The target vertex, part of the remaining vertices.
    :param remaining: The unvisited vertices.
    :return: True if the search may go on, or False otherwise.
    """
    inner: int = remaining & ~(1 << target)
    sources: int = inner | 1 << current
    for w in iter_bits(inner):
        if not g.in_rows[w] & sources or not g.out_rows[w] & remaining:
            return False
    if not g.in_rows[target] & sources:
        return False
    return reaches_all(g, current, remaining)


def _hamiltonian_path_dfs(g: Digraph, target: int, remaining: int,
                          path: list[int]) -> bool:
    """Extends a partial path to a Hamiltonian path ending at the target.

    :param g: The digraph.
    :param target: The target vertex.
    :param remaining: The unvisited vertices, the target included.
    :param path: The partial path, extended in place.
    :return: True if the path is completed, or False otherwise.
    """
    current: int = path[-1]
    if remaining == 1 << target:
        if g.out_rows[current] >> target & 1:
            path.append(target)
            return True
        return False
    if not _feasible(g, current, target, remaining):
        return False
    for w in iter_bits(g.out_rows[current] & remaining & ~(1 << target)):
        path.append(w)
        if _hamiltonian_path_dfs(g, target, remaining & ~(1 << w), path):
            return True
        path.pop()
    return False


def find_hamiltonian_path_between(g: Digraph, u: int, v: int,
                                  vertices: Iterable[int]) -> Path | None:
    """Finds a path from u to v through every vertex of a set exactly once.

    :param g: The digraph.
    :param u: The first vertex.
    :param v: The last vertex.
    :param vertices: The vertex set, containing u and v.
    :return: The first such path, or None if there is none.
    :raise VertexRangeError: When u or v is not in the set, or u equals v.
    """
    allowed: int = to_mask(vertices)
    if not allowed >> u & 1 or not allowed >> v & 1:
        raise VertexRangeError(f"The ends {u} and {v} must be in the set.")
    if u == v:
        raise VertexRangeError(f"The ends must differ, got {u} twice.")
    path: list[int] = [u]
    if _hamiltonian_path_dfs(g, v, allowed & ~(1 << u), path):
        return Path(g, path)
    return None


def _ordered_path_dfs(g: Digraph, order: tuple[int, ...], next_index: int,
                      extra: int, path: list[int]) -> bool:
    """Extends a partial path that keeps the host path vertices in order.

    :param g: The digraph.
    :param order: The host path vertices in order.
    :param next_index: The index of the next host vertex to visit.
    :param extra: The unvisited extra vertices.
    :param path: The partial path, extended in place.
    :return: True if the path is completed, or False otherwise.
    """
    if next_index == len(order):
        return extra == 0
    current: int = path[-1]
    candidates: int = g.out_rows[current] & extra
    host: int = order[next_index]
    if g.out_rows[current] >> host & 1 \
            and (next_index < len(order) - 1 or extra == 0):
        candidates |= 1 << host
    for w in iter_bits(candidates):
        path.append(w)
        if w == host:
            found: bool = _ordered_path_dfs(g, order, next_index + 1, extra,
                                            path)
        else:
            found = _ordered_path_dfs(g, order, next_index,
                                      extra & ~(1 << w), path)
        if found:
            return True
        path.pop()
    return False


def find_ordered_hamiltonian_path(g: Digraph, host: Path,
                                  extra: Iterable[int]) -> Path | None:
    """Finds a path from the first to the last vertex of a host path through
    the host vertices and some extra vertices, keeping the host vertices in
    their order.

    :param g: The digraph.
    :param host: The host path.
    :param extra: The extra vertices, disjoint from the host path.
    :return: The first such path, or None if there is none.
    :raise OverlapError: When an extra vertex is on the host path.
    """
    extra_mask: int = to_mask(extra)
    if extra_mask & host.mask:
        raise OverlapError("The extra vertices overlap the host path.")
    path: list[int] = [host.first]
    if _ordered_path_dfs(g, host.vertices, 1, extra_mask, path):
        return Path(g, path)
    return None
