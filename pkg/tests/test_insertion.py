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
"""The test for the partners, the insertions, and the insertion lemmas.

"""
import unittest

from hypothesis import given, settings

from hambypass.digraph import Digraph, Path, Cycle
from hambypass.errors import InvalidPartnerError, OverlapError, \
    InvalidCycleError
from hambypass.families import complete_digraph, t5
from hambypass.insertion import PartnerIndex, find_partner_for_vertex, \
    find_partner_for_path, insert_at, PartnerCollection, \
    has_collection_of_partners, find_collection_of_partners, multi_insert, \
    InsertionOutcome, extend_as_much_as_possible, HypothesisCase, \
    lemma2_hypothesis, lemma4_hypothesis, lemma1_hypothesis, \
    lemma3_hypothesis, off_cycle_vertex, Lemma7Report, window_violations, \
    partner_chord_violations, lemma7_consequences, is_good_cycle, \
    BypassConstruction, insert_off_vertex, bypass_from_cycle, \
    explain_hamiltonian_cycle, explain_bypass
from hambypass.search import all_cycles_of_length, \
    find_cycle_of_length_within, find_hamiltonian_bypass, validate_bypass
from testlib import digraphs, arc_digraph, all_paths, all_digraphs


class PartnerTestCase(unittest.TestCase):
    """The partner and insertion test case."""

    def setUp(self) -> None:
        """Sets up the test.
        This is run once per test.

        :return: None.
        """
        self.__g: Digraph = arc_digraph(3, "0-1 0-2 2-1")
        """The digraph where 2 can go between 0 and 1."""
        self.__host: Path = Path(self.__g, [0, 1])
        """The host path."""

    def test_partner_index(self) -> None:
        """Tests the partner index.

        :return: None.
        """
        self.assertEqual(PartnerIndex(1).arc(self.__host), (0, 1))
        self.assertEqual(PartnerIndex(2), PartnerIndex(2))
        self.assertEqual(repr(PartnerIndex(3)), "PartnerIndex(3)")
        with self.assertRaises(InvalidPartnerError):
            PartnerIndex(0)

    def test_find_partner_for_vertex(self) -> None:
        """Tests finding the partner of a vertex.

        :return: None.
        """
        self.assertEqual(find_partner_for_vertex(self.__g, self.__host, 2),
                         PartnerIndex(1))
        g: Digraph = arc_digraph(3, "0-1 2-0 1-2")
        self.assertIsNone(find_partner_for_vertex(g, Path(g, [0, 1]), 2))
        g = t5()
        self.assertEqual(find_partner_for_vertex(g, Path(g, [0, 1, 2, 3]),
                                                 4),
                         PartnerIndex(1))
        with self.assertRaises(OverlapError):
            find_partner_for_vertex(self.__g, self.__host, 1)

    def test_find_partner_for_path(self) -> None:
        """Tests finding the partner of a whole path.

        :return: None.
        """
        g: Digraph = arc_digraph(5, "0-1 1-2 1-3 3-4 4-2")
        host: Path = Path(g, [0, 1, 2])
        q: Path = Path(g, [3, 4])
        self.assertEqual(find_partner_for_path(g, host, q), PartnerIndex(2))
        self.assertIsNone(find_partner_for_path(g, Path(g, [0, 1]), q))
        with self.assertRaises(OverlapError):
            find_partner_for_path(g, host, Path(g, [1, 3]))

    def test_insert_at(self) -> None:
        """Tests inserting a path at a partner.

        :return: None.
        """
        self.assertEqual(list(insert_at(self.__host, PartnerIndex(1),
                                        Path(self.__g, [2]))),
                         [0, 2, 1])
        g: Digraph = arc_digraph(5, "0-1 1-2 1-3 3-4 4-2")
        self.assertEqual(list(insert_at(Path(g, [0, 1, 2]), PartnerIndex(2),
                                        Path(g, [3, 4]))),
                         [0, 1, 3, 4, 2])
        with self.assertRaises(InvalidPartnerError):
            insert_at(Path(g, [0, 1, 2]), PartnerIndex(1), Path(g, [3, 4]))
        with self.assertRaises(InvalidPartnerError):
            insert_at(self.__host, PartnerIndex(2), Path(self.__g, [2]))
        with self.assertRaises(OverlapError):
            insert_at(self.__host, PartnerIndex(1), Path(self.__g, [1]))

    @settings(max_examples=30, deadline=None)
    @given(digraphs(min_n=3, max_n=5))
    def test_partner_soundness(self, g: Digraph) -> None:
        """Tests that every partner found inserts into a path.

        :param g: The digraph.
        :return: None.
        """
        for host in all_paths(g, least=2, most=g.n - 1):
            for x in range(g.n):
                if host.mask & (1 << x):
                    continue
                index: PartnerIndex | None \
                    = find_partner_for_vertex(g, host, x)
                if index is None:
                    self.assertFalse(any(
                        g.has_arc(host[i - 1], x) and g.has_arc(x, host[i])
                        for i in range(1, len(host))))
                else:
                    inserted: Path = insert_at(host, index, Path(g, [x]))
                    self.assertEqual(len(inserted), len(host) + 1)
                    self.assertEqual((inserted.first, inserted.last),
                                     (host.first, host.last))


class HypothesisTestCase(unittest.TestCase):
    """The insertion lemma hypothesis test case."""

    def test_lemma2_hypothesis(self) -> None:
        """Tests the cases of the single-vertex insertion hypothesis.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 0-2 2-1 1-2 2-0")
        self.assertEqual(lemma2_hypothesis(g, Path(g, [0, 1]), 2),
                         HypothesisCase.STRONG)
        g = arc_digraph(3, "0-1 0-2 2-1")
        self.assertEqual(lemma2_hypothesis(g, Path(g, [0, 1]), 2),
                         HypothesisCase.BOTH_ENDS_OPEN)
        g = arc_digraph(3, "0-1 2-0 1-2")
        self.assertIsNone(lemma2_hypothesis(g, Path(g, [0, 1]), 2))
        with self.assertRaises(OverlapError):
            lemma2_hypothesis(g, Path(g, [0, 1]), 0)

    def test_lemma2_literal(self) -> None:
        """Tests that the literal second case claims a partner that does not
        exist.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 2-0 1-2 0-2")
        host: Path = Path(g, [0, 1])
        self.assertIsNone(lemma2_hypothesis(g, host, 2))
        self.assertEqual(lemma2_hypothesis(g, host, 2, literal=True),
                         HypothesisCase.ONE_END_OPEN)
        self.assertIsNone(find_partner_for_vertex(g, host, 2))

    def test_lemma4_hypothesis(self) -> None:
        """Tests the whole-path insertion hypothesis.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 0-2 2-1")
        self.assertTrue(lemma4_hypothesis(g, Path(g, [0, 1]), Path(g, [2])))
        g = arc_digraph(3, "0-1 2-0 0-2")
        self.assertFalse(lemma4_hypothesis(g, Path(g, [0, 1]), Path(g, [2])))
        self.assertFalse(lemma4_hypothesis(g, Path(g, [0, 1]), Path(g, [2]),
                                           literal=True))
        g = arc_digraph(3, "0-1")
        self.assertFalse(lemma4_hypothesis(g, Path(g, [0, 1]), Path(g, [2])))
        with self.assertRaises(OverlapError):
            lemma4_hypothesis(g, Path(g, [0, 1]), Path(g, [1]))

    def test_lemma4_literal(self) -> None:
        """Tests that the literal bound claims a partner that does not exist
        for a path of two vertices.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 2-3 1-2 3-0")
        host: Path = Path(g, [0, 1])
        q: Path = Path(g, [2, 3])
        self.assertTrue(lemma4_hypothesis(g, host, q, literal=True))
        self.assertFalse(lemma4_hypothesis(g, host, q))
        self.assertIsNone(find_partner_for_path(g, host, q))

    def test_lemma1_hypothesis(self) -> None:
        """Tests the degree hypothesis toward a cycle.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 1-0 2-0 0-2 1-2")
        self.assertTrue(lemma1_hypothesis(g, Cycle(g, [0, 1]), 2))
        g = arc_digraph(3, "0-1 1-0 2-0")
        self.assertFalse(lemma1_hypothesis(g, Cycle(g, [0, 1]), 2))
        with self.assertRaises(OverlapError):
            lemma1_hypothesis(g, Cycle(g, [0, 1]), 1)

    def test_lemma3_hypothesis(self) -> None:
        """Tests the end degree hypothesis of a path toward a cycle.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 1-2 2-0 0-3 1-3 3-0 3-1")
        self.assertTrue(lemma3_hypothesis(g, Cycle(g, [0, 1, 2]),
                                          Path(g, [3])))
        g = arc_digraph(4, "0-1 1-2 2-0 0-3 3-0 3-1")
        self.assertFalse(lemma3_hypothesis(g, Cycle(g, [0, 1, 2]),
                                           Path(g, [3])))

    @settings(max_examples=30, deadline=None)
    @given(digraphs(min_n=3, max_n=5))
    def test_lemma2_completeness(self, g: Digraph) -> None:
        """Tests that every case of the single-vertex hypothesis gives a
        partner.

        :param g: The digraph.
        :return: None.
        """
        for host in all_paths(g, least=2, most=g.n - 1):
            for x in range(g.n):
                if host.mask & (1 << x):
                    continue
                if lemma2_hypothesis(g, host, x) is not None:
                    self.assertIsNotNone(
                        find_partner_for_vertex(g, host, x),
                        f"{g.arcs()} {list(host)} {x}")

    @settings(max_examples=30, deadline=None)
    @given(digraphs(min_n=3, max_n=5))
    def test_lemma4_completeness(self, g: Digraph) -> None:
        """Tests that the whole-path hypothesis gives a partner.

        :param g: The digraph.
        :return: None.
        """
        paths: list[Path] = list(all_paths(g, least=1, most=g.n - 2))
        for host in paths:
            if len(host) < 2:
                continue
            for q in paths:
                if len(q) > 2 or host.mask & q.mask:
                    continue
                if lemma4_hypothesis(g, host, q):
                    self.assertIsNotNone(
                        find_partner_for_path(g, host, q),
                        f"{g.arcs()} {list(host)} {list(q)}")

    @settings(max_examples=30, deadline=None)
    @given(digraphs(min_n=3, max_n=5))
    def test_cycle_lengths(self, g: Digraph) -> None:
        """Tests that the cycle hypotheses give the cycles of every claimed
        length.

        :param g: The digraph.
        :return: None.
        """
        for m in range(2, g.n):
            for cycle in all_cycles_of_length(g, m):
                for q in all_paths(g, least=1, most=g.n - m):
                    if cycle.mask & q.mask:
                        continue
                    within: list[int] = [*cycle, *q]
                    if len(q) == 1 and lemma1_hypothesis(g, cycle, q.first):
                        for k in range(2, m + 2):
                            self.assertIsNotNone(
                                find_cycle_of_length_within(g, k, within))
                    if lemma3_hypothesis(g, cycle, q):
                        for k in range(len(q) + 1, m + len(q) + 1):
                            self.assertIsNotNone(
                                find_cycle_of_length_within(g, k, within))


class CollectionTestCase(unittest.TestCase):
    """The collection of partners and multi-insertion test case."""

    def setUp(self) -> None:
        """Sets up the test.
        This is run once per test.

        :return: None.
        """
        self.__g: Digraph = arc_digraph(6, "0-1 1-2 3-4 0-3 3-1 1-4 4-2")
        """The digraph where 3 and 4 go into different partner arcs."""
        self.__host: Path = Path(self.__g, [0, 1, 2])
        """The host path."""
        self.__q: Path = Path(self.__g, [3, 4])
        """The inserted path."""

    def test_find_collection(self) -> None:
        """Tests finding a collection of partners.

        :return: None.
        """
        self.assertIsNone(find_partner_for_path(self.__g, self.__host,
                                                self.__q))
        self.assertTrue(has_collection_of_partners(self.__g, self.__host,
                                                   self.__q))
        found: PartnerCollection | None \
            = find_collection_of_partners(self.__g, self.__host, self.__q)
        self.assertIsNotNone(found)
        self.assertEqual(found.cuts, (1, 2, 3))
        self.assertEqual(found.partners, (PartnerIndex(1), PartnerIndex(2)))
        self.assertEqual(found.blocks(self.__q), [(3,), (4,)])

    def test_single_vertex(self) -> None:
        """Tests the collection of a single vertex.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 0-2 2-1")
        found: PartnerCollection | None \
            = find_collection_of_partners(g, Path(g, [0, 1]), Path(g, [2]))
        self.assertIsNotNone(found)
        self.assertEqual(found.cuts, (1, 2))
        self.assertEqual(found.partners, (PartnerIndex(1),))

    def test_isolated_vertex(self) -> None:
        """Tests an inserted vertex without arcs to the host path.

        :return: None.
        """
        q: Path = Path(self.__g, [5])
        self.assertFalse(has_collection_of_partners(self.__g, self.__host,
                                                    q))
        self.assertIsNone(find_collection_of_partners(self.__g, self.__host,
                                                      q))
        self.assertIsNone(multi_insert(self.__g, self.__host, q))
        with self.assertRaises(OverlapError):
            has_collection_of_partners(self.__g, self.__host,
                                       Path(self.__g, [2]))

    def test_multi_insert(self) -> None:
        """Tests the multi-insertion.

        :return: None.
        """
        self.assertEqual(list(multi_insert(self.__g, self.__host, self.__q)),
                         [0, 3, 1, 4, 2])
        g: Digraph = arc_digraph(3, "0-1 0-2 2-1")
        self.assertEqual(list(multi_insert(g, Path(g, [0, 1]),
                                           Path(g, [2]))),
                         [0, 2, 1])

    @settings(max_examples=30, deadline=None)
    @given(digraphs(min_n=3, max_n=5))
    def test_multi_insert_soundness(self, g: Digraph) -> None:
        """Tests that the multi-insertion keeps the endpoints and covers
        exactly both paths.

        :param g: The digraph.
        :return: None.
        """
        paths: list[Path] = list(all_paths(g, least=1, most=g.n - 2))
        for host in paths:
            if len(host) < 2:
                continue
            for q in paths:
                if len(q) > 3 or host.mask & q.mask:
                    continue
                found: Path | None = multi_insert(g, host, q)
                if find_collection_of_partners(g, host, q) is not None:
                    self.assertIsNotNone(found)
                if found is not None:
                    self.assertEqual((found.first, found.last),
                                     (host.first, host.last))
                    self.assertEqual(found.mask, host.mask | q.mask)
                    self.assertEqual([x for x in found if host.mask >> x & 1],
                                     list(host))


class ExtendTestCase(unittest.TestCase):
    """The extension as much as possible test case."""

    def test_single(self) -> None:
        """Tests extending by a single vertex.

        :return: None.
        """
        g: Digraph = arc_digraph(3, "0-1 0-2 2-1")
        outcome: InsertionOutcome \
            = extend_as_much_as_possible(g, Path(g, [0, 1]), {2})
        self.assertEqual(list(outcome.extended), [0, 2, 1])
        self.assertEqual(outcome.leftovers, frozenset())

    def test_chained(self) -> None:
        """Tests a vertex that becomes insertable after another insertion.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 0-2 2-1 2-3 3-1")
        outcome: InsertionOutcome \
            = extend_as_much_as_possible(g, Path(g, [0, 1]), {3, 2})
        self.assertEqual(list(outcome.extended), [0, 2, 3, 1])
        self.assertEqual(outcome.leftovers, frozenset())
        self.assertEqual(outcome.steps,
                         [(2, PartnerIndex(1)), (3, PartnerIndex(2))])
        self.assertEqual(repr(outcome),
                         "InsertionOutcome(extended=[0, 2, 3, 1],"
                         " leftovers=[], steps=[(2, 1), (3, 2)])")

    def test_stuck(self) -> None:
        """Tests vertices that never have a partner.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 2-0 1-3")
        outcome: InsertionOutcome \
            = extend_as_much_as_possible(g, Path(g, [0, 1]), [2, 3])
        self.assertEqual(list(outcome.extended), [0, 1])
        self.assertEqual(outcome.leftovers, frozenset({2, 3}))
        self.assertEqual(outcome.steps, [])
        with self.assertRaises(OverlapError):
            extend_as_much_as_possible(g, Path(g, [0, 1]), [1])

    @settings(max_examples=50, deadline=None)
    @given(digraphs(min_n=3, max_n=7))
    def test_extend_invariants(self, g: Digraph) -> None:
        """Tests the vertex set and the leftovers of an extension.

        :param g: The digraph.
        :return: None.
        """
        for host in all_paths(g, least=2, most=2):
            rest: set[int] = set(range(g.n)) - set(host)
            outcome: InsertionOutcome \
                = extend_as_much_as_possible(g, host, rest)
            self.assertLessEqual(len(outcome.steps), len(rest))
            self.assertEqual(set(outcome.extended),
                             set(host) | (rest - outcome.leftovers))
            self.assertEqual((outcome.extended.first,
                              outcome.extended.last),
                             (host.first, host.last))
            for x in outcome.leftovers:
                self.assertIsNone(
                    find_partner_for_vertex(g, outcome.extended, x))


class PreHamiltonianCycleTestCase(unittest.TestCase):
    """The pre-Hamiltonian cycle consequence and construction test case."""

    def setUp(self) -> None:
        """Sets up the test.
        This is run once per test.

        :return: None.
        """
        self.__t5: Digraph = t5()
        """The tournament T(5)."""
        self.__k5: Digraph = complete_digraph(5)
        """The complete digraph of order 5."""

    def test_off_cycle_vertex(self) -> None:
        """Tests the vertex off a pre-Hamiltonian cycle.

        :return: None.
        """
        self.assertEqual(off_cycle_vertex(self.__t5,
                                          Cycle(self.__t5, [0, 1, 2, 3])), 4)
        with self.assertRaises(InvalidCycleError):
            off_cycle_vertex(self.__k5, Cycle(self.__k5, [0, 1, 2]))

    def test_t5_consequences(self) -> None:
        """Tests that all the consequences hold on T(5).

        :return: None.
        """
        cycle: Cycle = Cycle(self.__t5, [0, 1, 2, 3])
        report: Lemma7Report = lemma7_consequences(self.__t5, cycle, 4)
        self.assertTrue(report.all_hold)
        self.assertEqual(report.to_dict(),
                         {"i": True, "ii": True, "iii": True})
        self.assertEqual(window_violations(self.__t5, cycle, 4), [])
        self.assertEqual(partner_chord_violations(self.__t5, cycle, 4), [])
        self.assertIsNone(bypass_from_cycle(self.__t5, cycle))
        self.assertFalse(is_good_cycle(self.__t5, cycle))
        with self.assertRaises(InvalidCycleError):
            lemma7_consequences(self.__t5, cycle, 3)

    def test_complete_consequences(self) -> None:
        """Tests the violated consequences on the complete digraph.

        :return: None.
        """
        cycle: Cycle = Cycle(self.__k5, [0, 1, 2, 3])
        report: Lemma7Report = lemma7_consequences(self.__k5, cycle, 4)
        self.assertFalse(report.i)
        self.assertFalse(report.ii)
        self.assertFalse(report.all_hold)
        self.assertEqual(len(window_violations(self.__k5, cycle, 4)), 8)
        self.assertEqual(window_violations(self.__k5, cycle, 4)[0],
                         ("out", 0))
        self.assertTrue(is_good_cycle(self.__k5, cycle))
        self.assertFalse(is_good_cycle(self.__k5,
                                       Cycle(self.__k5, [0, 1, 2])))

    def test_isolated_off_vertex(self) -> None:
        """Tests an off-cycle vertex without arcs.

        :return: None.
        """
        g: Digraph = arc_digraph(5, "0-1 1-2 2-3 3-0")
        report: Lemma7Report = lemma7_consequences(
            g, Cycle(g, [0, 1, 2, 3]), 4)
        self.assertTrue(report.all_hold)

    def test_window_bypass(self) -> None:
        """Tests the bypass from two out-neighbours in a window.

        :return: None.
        """
        found: BypassConstruction | None \
            = bypass_from_cycle(self.__k5, Cycle(self.__k5, [0, 1, 2, 3]))
        self.assertIsNotNone(found)
        self.assertEqual(found.rule, "out-window")
        self.assertEqual(found.witness.order, (4, 1, 2, 3, 0))
        self.assertTrue(validate_bypass(self.__k5, found.witness))

    def test_in_window_bypass(self) -> None:
        """Tests the bypass from two in-neighbours in a window.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 1-2 2-0 0-3 1-3")
        found: BypassConstruction | None \
            = bypass_from_cycle(g, Cycle(g, [0, 1, 2]))
        self.assertIsNotNone(found)
        self.assertEqual(found.rule, "in-window")
        self.assertEqual(found.witness.order, (1, 2, 0, 3))

    def test_partner_chord_bypass(self) -> None:
        """Tests the bypass from a partner and a backward arc.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 1-2 2-0 0-3 3-1 2-1")
        cycle: Cycle = Cycle(g, [0, 1, 2])
        self.assertEqual(window_violations(g, cycle, 3), [])
        self.assertEqual(partner_chord_violations(g, cycle, 3), [(0, 1)])
        self.assertFalse(lemma7_consequences(g, cycle, 3).iii)
        found: BypassConstruction | None = bypass_from_cycle(g, cycle)
        self.assertIsNotNone(found)
        self.assertEqual(found.to_dict(),
                         {"rule": "partner-chord",
                          "steps": [{"cycle": [0, 1, 2], "off": 3},
                                    {"insert": 3, "partner": [0, 1]},
                                    {"chord": [2, 1]}],
                          "order": [2, 0, 3, 1], "chord": [2, 1]})

    def test_insert_off_vertex(self) -> None:
        """Tests inserting the off-cycle vertex.

        :return: None.
        """
        inserted: tuple[Cycle, int] | None = insert_off_vertex(
            self.__t5, Cycle(self.__t5, [0, 1, 2, 3]))
        self.assertIsNotNone(inserted)
        self.assertEqual(list(inserted[0]), [4, 1, 2, 3, 0])
        self.assertEqual(inserted[1], 0)
        g: Digraph = arc_digraph(4, "0-1 1-2 2-0 3-0")
        self.assertIsNone(insert_off_vertex(g, Cycle(g, [0, 1, 2])))

    def test_explain(self) -> None:
        """Tests the explanations.

        :return: None.
        """
        self.assertEqual(explain_hamiltonian_cycle(self.__t5),
                         {"cycle": [4, 1, 2, 3, 0],
                          "steps": [{"cycle": [0, 1, 2, 3], "off": 4},
                                    {"insert": 4, "partner": [0, 1]}]})
        self.assertIsNone(explain_bypass(self.__t5))
        found: BypassConstruction | None = explain_bypass(
            complete_digraph(4))
        self.assertEqual(found.to_dict(),
                         {"rule": "out-window",
                          "steps": [{"cycle": [0, 1, 2], "off": 3},
                                    {"window": [0, 1], "rule": "out"}],
                          "order": [3, 1, 2, 0], "chord": [3, 0]})
        self.assertIsNone(explain_hamiltonian_cycle(complete_digraph(2)))
        self.assertIsNone(explain_bypass(complete_digraph(2)))

    def test_order_4(self) -> None:
        """Tests the consequences on every digraph of order 4.

        :return: None.
        """
        for g in all_digraphs(4):
            self.__check_consequences(g)

    @settings(max_examples=100, deadline=None)
    @given(digraphs(min_n=5, max_n=6))
    def test_consequences(self, g: Digraph) -> None:
        """Tests the consequences on random digraphs.

        :param g: The digraph.
        :return: None.
        """
        self.__check_consequences(g)

    def __check_consequences(self, g: Digraph) -> None:
        """Checks that the consequences hold without a bypass, and that a
        violated one builds a bypass.

        :param g: The digraph.
        :return: None.
        """
        has_bypass: bool = find_hamiltonian_bypass(g) is not None
        for cycle in all_cycles_of_length(g, g.n - 1):
            y: int = off_cycle_vertex(g, cycle)
            report: Lemma7Report = lemma7_consequences(g, cycle, y)
            found: BypassConstruction | None = bypass_from_cycle(g, cycle)
            self.assertEqual(report.all_hold, found is None)
            if not has_bypass:
                self.assertTrue(report.all_hold, g.arcs())
            if found is not None:
                self.assertTrue(validate_bypass(g, found.witness))
            if is_good_cycle(g, cycle):
                self.assertTrue(has_bypass, g.arcs())


if __name__ == "__main__":
    unittest.main()
