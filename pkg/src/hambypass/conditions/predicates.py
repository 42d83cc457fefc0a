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
"""The degree-condition predicates: the condition A_k and the hypotheses of
the Hamiltonicity theorems of Nash-Williams, Ghouila-Houri, Woodall and
Meyniel, the degree-sum bound of the bypass theorem, the conditions on
non-adjacent pairs with common neighbours, and the consequence of the degree
lemma under A_0.

Every predicate scans its instances in lexicographic order and reports the
first violation.  Half-integer bounds are compared after doubling.

"""
from collections.abc import Iterator

from hambypass.digraph import Digraph, reachable_from, reaching
from hambypass.errors import OrderError
from hambypass.utils.bits import iter_bits, full_mask
from .report import Witness, ConditionReport


def _first(violations: Iterator[Witness]) -> ConditionReport:
    """Returns the report of the first violation, if any.

    :param violations: The violations in lexicographic order.
    :return: The report.
    """
    return ConditionReport(next(violations, None))


def _degree_lists(g: Digraph) -> tuple[list[int], list[int], list[int]]:
    """Returns the out-degrees, in-degrees and degrees of all the vertices.

    :param g: The digraph.
    :return: The out-degrees, in-degrees and degrees.
    """
    d_out: list[int] = [x.bit_count() for x in g.out_rows]
    d_in: list[int] = [x.bit_count() for x in g.in_rows]
    return d_out, d_in, [x + y for x, y in zip(d_out, d_in)]


def _non_adjacent(g: Digraph, x: int) -> int:
    """Returns the vertices other than x that are not adjacent to x.

    :param g: The digraph.
    :param x: The vertex.
    :return: The bitmask of the non-adjacent vertices.
    """
    return full_mask(g.n) & ~(g.out_rows[x] | g.in_rows[x] | 1 << x)


def a_k_violations(g: Digraph, k: int, inclusive: bool = False) \
        -> Iterator[Witness]:
    """Iterates the violations of the condition A_k.

    :param g: The digraph.
    :param k: The offset of the bound 3n-2+k.
    :param inclusive: True to let z equal y, or False to require three
        distinct vertices.
    :return: The violations over the ordered triples (x, y, z).
    """
    n: int = g.n
    bound: int = 3 * n - 2 + k
    out_rows, in_rows = g.out_rows, g.in_rows
    d_out, d_in, d = _degree_lists(g)
    for x in range(n):
        for y in iter_bits(_non_adjacent(g, x)):
            base: int = d[x] + d[y]
            for z in range(n):
                if z == x or (z == y and not inclusive):
                    continue
                if not out_rows[x] >> z & 1:
                    total: int = base + d_out[x] + d_in[z]
                    if total < bound:
                        yield Witness({"x": x, "y": y, "z": z}, total, bound,
                                      "no arc x->z: d(x)+d(y)+d+(x)+d-(z)")
                if not in_rows[x] >> z & 1:
                    total: int = base + d_in[x] + d_out[z]
                    if total < bound:
                        yield Witness({"x": x, "y": y, "z": z}, total, bound,
                                      "no arc z->x: d(x)+d(y)+d-(x)+d+(z)")


def check_a_k(g: Digraph, k: int, inclusive: bool = False) \
        -> ConditionReport:
    """Checks the condition A_k.

    :param g: The digraph.
    :param k: The offset of the bound 3n-2+k.
    :param inclusive: True to let z equal y, or False to require three
        distinct vertices.
    :return: The report.
    :raise OrderError: When n < 3.
    """
    if g.n < 3:
        raise OrderError(f"The condition A_k needs n >= 3, got {g.n}.")
    return _first(a_k_violations(g, k, inclusive))


def _degree_sum_violations(g: Digraph, offset: int) -> Iterator[Witness]:
    """Iterates the non-adjacent pairs with d(x)+d(y) < 2n+offset.

    :param g: The digraph.
    :param offset: The offset of the bound.
    :return: The violations.
    """
    bound: int = 2 * g.n + offset
    d: list[int] = _degree_lists(g)[2]
    for x in range(g.n):
        for y in iter_bits(_non_adjacent(g, x) >> (x + 1) << (x + 1)):
            if d[x] + d[y] < bound:
                yield Witness({"x": x, "y": y}, d[x] + d[y], bound,
                              "d(x)+d(y)")


def check_degree_sum(g: Digraph, bound_offset: int) -> ConditionReport:
    """Checks d(x)+d(y) >= 2n+offset for every pair of non-adjacent vertices.

    :param g: The digraph.
    :param bound_offset: The offset, -1 for Meyniel's condition or -2 for the
        degree-sum condition of the bypass theorem.
    :return: The report.
    """
    return _first(_degree_sum_violations(g, bound_offset))


def check_meyniel(g: Digraph) -> ConditionReport:
    """Checks Meyniel's condition d(x)+d(y) >= 2n-1 for every pair of
    non-adjacent vertices.

    :param g: The digraph.
    :return: The report.
    """
    return check_degree_sum(g, -1)


def check_ghouila_houri(g: Digraph) -> ConditionReport:
    """Checks Ghouila-Houri's condition d(x) >= n for every vertex.

    :param g: The digraph.
    :return: The report.
    """
    d: list[int] = _degree_lists(g)[2]
    return _first(Witness({"x": x}, d[x], g.n, "d(x)")
                  for x in range(g.n) if d[x] < g.n)


def check_woodall(g: Digraph) -> ConditionReport:
    """Checks Woodall's condition d+(x)+d-(y) >= n for every ordered pair
    without the arc x->y.

    :param g: The digraph.
    :return: The report.
    """
    d_out, d_in, _ = _degree_lists(g)
    return _first(Witness({"x": x, "y": y}, d_out[x] + d_in[y], g.n,
                          "no arc x->y: d+(x)+d-(y)")
                  for x in range(g.n) for y in range(g.n)
                  if x != y and not g.out_rows[x] >> y & 1
                  and d_out[x] + d_in[y] < g.n)


def check_nash_williams(g: Digraph) -> ConditionReport:
    """Checks Nash-Williams' condition d+(x) >= n/2 and d-(x) >= n/2 for
    every vertex, compared as 2d+(x) >= n and 2d-(x) >= n.

    :param g: The digraph.
    :return: The report.
    """
    d_out, d_in, _ = _degree_lists(g)

    def violations() -> Iterator[Witness]:
        for x in range(g.n):
            if 2 * d_out[x] < g.n:
                yield Witness({"x": x}, 2 * d_out[x], g.n, "2d+(x)")
            if 2 * d_in[x] < g.n:
                yield Witness({"x": x}, 2 * d_in[x], g.n, "2d-(x)")

    return _first(violations())


def _common_neighbour_pairs(g: Digraph, with_out: bool) \
        -> Iterator[tuple[int, int]]:
    """Iterates the non-adjacent pairs x < y with a common in-neighbour, or
    also with a common out-neighbour.

    :param g: The digraph.
    :param with_out: True to accept a common out-neighbour too.
    :return: The pairs.
    """
    for x in range(g.n):
        for y in iter_bits(_non_adjacent(g, x) >> (x + 1) << (x + 1)):
            if g.in_rows[x] & g.in_rows[y] \
                    or (with_out and g.out_rows[x] & g.out_rows[y]):
                yield x, y


def thm13_violations(g: Digraph) -> Iterator[Witness]:
    """Iterates the violations of the common in-neighbour condition.

    :param g: The digraph.
    :return: The violations.
    """
    n: int = g.n
    d: list[int] = _degree_lists(g)[2]
    for x, y in _common_neighbour_pairs(g, False):
        if min(d[x], d[y]) < n - 1:
            yield Witness({"x": x, "y": y}, min(d[x], d[y]), n - 1,
                          "common in-neighbour: min{d(x),d(y)}")
        if d[x] + d[y] < 2 * n - 1:
            yield Witness({"x": x, "y": y}, d[x] + d[y], 2 * n - 1,
                          "common in-neighbour: d(x)+d(y)")


def check_thm13_condition(g: Digraph) -> ConditionReport:
    """Checks min{d(x),d(y)} >= n-1 and d(x)+d(y) >= 2n-1 for every pair of
    non-adjacent vertices with a common in-neighbour.

    :param g: The digraph.
    :return: The report.
    """
    return _first(thm13_violations(g))


def _min_cross_sum(d_out: list[int], d_in: list[int], x: int, y: int) \
        -> int:
    """Returns min{d+(x)+d-(y), d-(x)+d+(y)}.

    :param d_out: The out-degrees.
    :param d_in: The in-degrees.
    :param x: A vertex.
    :param y: Another vertex.
    :return: The minimum cross sum.
    """
    return min(d_out[x] + d_in[y], d_in[x] + d_out[y])


def check_thm14_condition(g: Digraph) -> ConditionReport:
    """Checks min{d+(x)+d-(y), d-(x)+d+(y)} >= n for every pair of
    non-adjacent vertices with a common out- or in-neighbour.

    :param g: The digraph.
    :return: The report.
    """
    d_out, d_in, _ = _degree_lists(g)
    return _first(Witness({"x": x, "y": y},
                          _min_cross_sum(d_out, d_in, x, y), g.n,
                          "common neighbour: min{d+(x)+d-(y),d-(x)+d+(y)}")
                  for x, y in _common_neighbour_pairs(g, True)
                  if _min_cross_sum(d_out, d_in, x, y) < g.n)


def check_thm15_condition(g: Digraph) -> ConditionReport:
    """Checks d(x)+d(y) >= 2n-1 and min{d+(x)+d-(y), d-(x)+d+(y)} >= n-1 for
    every pair of non-adjacent vertices with a common out- or in-neighbour.

    :param g: The digraph.
    :return: The report.
    """
    n: int = g.n
    d_out, d_in, d = _degree_lists(g)

    def violations() -> Iterator[Witness]:
        for x, y in _common_neighbour_pairs(g, True):
            if d[x] + d[y] < 2 * n - 1:
                yield Witness({"x": x, "y": y}, d[x] + d[y], 2 * n - 1,
                              "common neighbour: d(x)+d(y)")
            cross: int = _min_cross_sum(d_out, d_in, x, y)
            if cross < n - 1:
                yield Witness({"x": x, "y": y}, cross, n - 1,
                              "common neighbour:"
                              " min{d+(x)+d-(y),d-(x)+d+(y)}")

    return _first(violations())


def check_thm16_hypothesis(g: Digraph, min_in_degree: int = 3) \
        -> ConditionReport:
    """Checks the common in-neighbour condition together with n >= 6,
    minimum out-degree at least two and a least minimum in-degree, three by
    default.
    The relaxed form has minimum in-degree two, and its bypass is still open.

    :param g: The digraph.
    :param min_in_degree: The least minimum in-degree.
    :return: The report.
    """
    def violations() -> Iterator[Witness]:
        if g.n < 6:
            yield Witness({}, g.n, 6, "n")
        for x in range(g.n):
            if g.out_rows[x].bit_count() < 2:
                yield Witness({"x": x}, g.out_rows[x].bit_count(), 2,
                              "d+(x)")
            if g.in_rows[x].bit_count() < min_in_degree:
                yield Witness({"x": x}, g.in_rows[x].bit_count(),
                              min_in_degree, "d-(x)")
        yield from thm13_violations(g)

    return _first(violations())


def lemma5_violations(g: Digraph) -> Iterator[Witness]:
    """Iterates the violations of the degree lemma under A_0: for a vertex x
    and two distinct vertices y, z not adjacent to x, with
    a = 2n-d(x)-d(y) >= 1, require 2(d(x)+d(z)) >= 4n-4+a.

    :param g: The digraph.
    :return: The violations.
    """
    n: int = g.n
    d: list[int] = _degree_lists(g)[2]
    for x in range(n):
        others: list[int] = list(iter_bits(_non_adjacent(g, x)))
        for y in others:
            a: int = 2 * n - d[x] - d[y]
            if a < 1:
                continue
            for z in others:
                if z != y and 2 * (d[x] + d[z]) < 4 * n - 4 + a:
                    yield Witness({"x": x, "y": y, "z": z},
                                  2 * (d[x] + d[z]), 4 * n - 4 + a,
                                  "2(d(x)+d(z)) with a=2n-d(x)-d(y)")


def lemma5_consequence_holds(g: Digraph) -> ConditionReport:
    """Checks the consequence of the degree lemma under A_0.

    :param g: The digraph.
    :return: The report.
    """
    return _first(lemma5_violations(g))


def check_strong(g: Digraph) -> ConditionReport:
    """Checks strong connectivity, reporting a vertex pair without a path.

    :param g: The digraph.
    :return: The report.
    """
    everything: int = full_mask(g.n)
    missing: int = everything & ~reachable_from(g, 0)
    if missing:
        y: int = (missing & -missing).bit_length() - 1
        return ConditionReport(Witness({"x": 0, "y": y}, 0, 1, "path x->y"))
    missing = everything & ~reaching(g, 0)
    if missing:
        x: int = (missing & -missing).bit_length() - 1
        return ConditionReport(Witness({"x": x, "y": 0}, 0, 1, "path x->y"))
    return ConditionReport()


def check_min_semi_degree(g: Digraph, least: int) -> ConditionReport:
    """Checks that every out-degree and every in-degree is at least a bound.

    :param g: The digraph.
    :param least: The bound.
    :return: The report.
    """
    def violations() -> Iterator[Witness]:
        for x in range(g.n):
            for rule, row in (("d+(x)", g.out_rows[x]),
                              ("d-(x)", g.in_rows[x])):
                if row.bit_count() < least:
                    yield Witness({"x": x}, row.bit_count(), least, rule)

    return _first(violations())
