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
"""The test for the exact structure oracles.

"""
import itertools
import unittest

from hypothesis import given, settings

from hambypass.digraph import Digraph, Path, Cycle, new_digraph, \
    converse
from hambypass.errors import OrderError, VertexRangeError, OverlapError
from hambypass.families import complete_digraph, \
    complete_bipartite_digraph, directed_cycle, bypass_pattern, t5, \
    InnerSpec, d0, d1
from hambypass.search import all_cycles_of_length, \
    find_cycle_of_length_within, find_cycle_of_length, \
    find_hamiltonian_cycle, find_pre_hamiltonian_cycle, \
    find_hamiltonian_path_between, find_ordered_hamiltonian_path, \
    BypassWitness, find_hamiltonian_bypass, validate_bypass, \
    find_good_cycle, PatternEmbedding, find_spanning_embedding, \
    find_bypass_pattern
from testlib import digraphs, arc_digraph, naive_cycle_of_length, \
    naive_hamiltonian_path_ends, naive_bypass


class CycleTestCase(unittest.TestCase):
    """The cycle oracle test case."""

    def test_t5(self) -> None:
        """Tests the cycles of T(5).

        :return: None.
        """
        self.assertEqual(list(find_hamiltonian_cycle(t5())), [0, 1, 2, 4, 3])
        self.assertEqual(list(find_pre_hamiltonian_cycle(t5())),
                         [0, 1, 2, 3])

    def test_all_cycles_of_length(self) -> None:
        """Tests iterating the cycles of a length.

        :return: None.
        """
        g: Digraph = complete_digraph(3)
        self.assertEqual([list(x) for x in all_cycles_of_length(g, 2)],
                         [[0, 1], [0, 2], [1, 2]])
        self.assertEqual([list(x) for x in all_cycles_of_length(g, 3)],
                         [[0, 1, 2], [0, 2, 1]])
        self.assertEqual(len(list(all_cycles_of_length(complete_digraph(4),
                                                       4))), 6)
        self.assertEqual(list(all_cycles_of_length(g, 3, [0, 1])), [])
        for m in [1, 4]:
            with self.assertRaises(OrderError):
                list(all_cycles_of_length(g, m))

    def test_find_cycle(self) -> None:
        """Tests finding cycles.

        :return: None.
        """
        g: Digraph = complete_digraph(4)
        self.assertEqual(list(find_cycle_of_length_within(g, 3, [1, 2, 3])),
                         [1, 2, 3])
        self.assertIsNone(find_cycle_of_length(directed_cycle(4), 3))
        self.assertIsNone(find_hamiltonian_cycle(new_digraph(1, [])))
        self.assertIsNone(find_hamiltonian_cycle(d1(5, 2)))
        self.assertIsNone(
            find_pre_hamiltonian_cycle(complete_bipartite_digraph(2, 2)))
        self.assertIsNone(
            find_pre_hamiltonian_cycle(complete_bipartite_digraph(3, 3)))
        with self.assertRaises(OrderError):
            find_pre_hamiltonian_cycle(complete_digraph(2))

    @settings(max_examples=80, deadline=None)
    @given(digraphs(min_n=2, max_n=6))
    def test_cycles_match_brute_force(self, g: Digraph) -> None:
        """Tests the cycle oracles against trying every vertex sequence.

        :param g: The digraph.
        :return: None.
        """
        for m in range(2, g.n + 1):
            found: Cycle | None = find_cycle_of_length(g, m)
            self.assertEqual(None if found is None else list(found),
                             naive_cycle_of_length(g, m))
            self.assertEqual(
                len(list(all_cycles_of_length(g, m))),
                len({tuple(x) for x in _naive_all_cycles(g, m)}))

    def test_hamiltonian_path_between(self) -> None:
        """Tests the Hamiltonian paths between two vertices.

        :return: None.
        """
        g: Digraph = directed_cycle(4)
        self.assertEqual(list(find_hamiltonian_path_between(
            g, 0, 3, range(4))), [0, 1, 2, 3])
        self.assertIsNone(find_hamiltonian_path_between(g, 0, 2, range(4)))
        self.assertEqual(list(find_hamiltonian_path_between(
            g, 1, 2, [1, 2])), [1, 2])
        with self.assertRaises(VertexRangeError):
            find_hamiltonian_path_between(g, 0, 0, range(4))
        with self.assertRaises(VertexRangeError):
            find_hamiltonian_path_between(g, 0, 3, [0, 1, 2])

    @settings(max_examples=60, deadline=None)
    @given(digraphs(min_n=2, max_n=6))
    def test_hamiltonian_paths_match_brute_force(self, g: Digraph) -> None:
        """Tests the Hamiltonian paths against trying every vertex order.

        :param g: The digraph.
        :return: None.
        """
        ends: set[tuple[int, int]] = naive_hamiltonian_path_ends(g)
        for u in range(g.n):
            for v in range(g.n):
                if u == v:
                    continue
                found: Path | None \
                    = find_hamiltonian_path_between(g, u, v, range(g.n))
                self.assertEqual(found is not None, (u, v) in ends)
                if found is not None:
                    self.assertEqual((found.first, found.last), (u, v))
                    self.assertEqual(sorted(found), list(range(g.n)))

    def test_ordered_hamiltonian_path(self) -> None:
        """Tests the paths that keep the order of a host path.

        :return: None.
        """
        g: Digraph = arc_digraph(4, "0-1 1-2 0-3 3-1")
        host: Path = Path(g, [0, 1, 2])
        self.assertEqual(list(find_ordered_hamiltonian_path(g, host, [3])),
                         [0, 3, 1, 2])
        self.assertEqual(list(find_ordered_hamiltonian_path(g, host, [])),
                         [0, 1, 2])
        g = arc_digraph(4, "0-1 1-2 2-3")
        self.assertIsNone(find_ordered_hamiltonian_path(
            g, Path(g, [0, 1, 2]), [3]))
        with self.assertRaises(OverlapError):
            find_ordered_hamiltonian_path(g, Path(g, [0, 1]), [1])


def _naive_all_cycles(g: Digraph, m: int) -> list[list[int]]:
    """Returns every cycle of a length, starting from its least vertex, by
    trying every vertex sequence.

    :param g: The digraph.
    :param m: The cycle length.
    :return: The cycles.
    """
    return [list(x) for x in itertools.permutations(range(g.n), m)
            if x[0] == min(x)
            and all(g.has_arc(x[i], x[(i + 1) % m]) for i in range(m))]


class BypassTestCase(unittest.TestCase):
    """The Hamiltonian bypass oracle test case."""

    def test_complete_bipartite(self) -> None:
        """Tests the Hamiltonian bypass of K*_{2,2}.

        :return: None.
        """
        g: Digraph = new_digraph(4, [(u, w) for u in range(4)
                                     for w in range(4) if (u + w) % 2 == 1])
        witness: BypassWitness = find_hamiltonian_bypass(g)
        self.assertEqual(witness.order, (0, 3, 2, 1))
        self.assertEqual(witness.to_dict(),
                         {"order": [0, 3, 2, 1], "chord": [0, 1]})
        self.assertTrue(validate_bypass(g, witness))
        self.assertEqual(
            find_hamiltonian_bypass(complete_bipartite_digraph(2, 2)).order,
            (0, 3, 1, 2))

    def test_first_chord(self) -> None:
        """Tests that the chords are tried before the paths, in
        lexicographic order.

        :return: None.
        """
        g: Digraph = new_digraph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2),
                                     (1, 3), (3, 2)])
        witness: BypassWitness = find_hamiltonian_bypass(g)
        self.assertEqual(witness.order, (0, 1, 3, 2))
        self.assertEqual(witness.to_dict()["chord"], [0, 2])

    def test_no_bypass(self) -> None:
        """Tests the digraphs without a Hamiltonian bypass.

        :return: None.
        """
        self.assertIsNone(find_hamiltonian_bypass(t5()))
        self.assertIsNone(find_hamiltonian_bypass(directed_cycle(5)))
        self.assertIsNone(find_hamiltonian_bypass(d0(5, InnerSpec.empty())))
        self.assertIsNone(find_hamiltonian_bypass(d1(5, 1)))
        with self.assertRaises(OrderError):
            find_hamiltonian_bypass(complete_digraph(2))

    def test_validate_bypass(self) -> None:
        """Tests validating the witnesses.

        :return: None.
        """
        g: Digraph = bypass_pattern(4, 2)
        self.assertTrue(validate_bypass(g, BypassWitness([0, 1, 2, 3])))
        self.assertFalse(validate_bypass(g, BypassWitness([0, 1, 2])))
        self.assertFalse(validate_bypass(g, BypassWitness([1, 2, 3, 0])))
        self.assertFalse(validate_bypass(g, BypassWitness([0, 1, 2, 2])))

    @settings(max_examples=100, deadline=None)
    @given(digraphs(min_n=3, max_n=6))
    def test_bypass_matches_brute_force(self, g: Digraph) -> None:
        """Tests the Hamiltonian bypass against trying every vertex order.

        :param g: The digraph.
        :return: None.
        """
        witness: BypassWitness | None = find_hamiltonian_bypass(g)
        expected: list[int] | None = naive_bypass(g)
        self.assertEqual(None if witness is None else list(witness.order),
                         expected)
        if witness is not None:
            self.assertTrue(validate_bypass(g, witness))

    @settings(max_examples=100, deadline=None)
    @given(digraphs(min_n=3, max_n=7))
    def test_converse(self, g: Digraph) -> None:
        """Tests that reversing every arc keeps a Hamiltonian bypass, with
        the witness reversed.

        :param g: The digraph.
        :return: None.
        """
        h: Digraph = converse(g)
        witness: BypassWitness | None = find_hamiltonian_bypass(g)
        self.assertEqual(witness is None, find_hamiltonian_bypass(h) is None)
        if witness is not None:
            self.assertTrue(validate_bypass(
                h, BypassWitness(witness.order[::-1])))

    def test_good_cycle(self) -> None:
        """Tests the good cycles.

        :return: None.
        """
        self.assertEqual(list(find_good_cycle(complete_digraph(4))),
                         [0, 1, 2])
        self.assertIsNone(find_good_cycle(t5()))
        self.assertIsNone(find_good_cycle(complete_digraph(2)))

    @settings(max_examples=100, deadline=None)
    @given(digraphs(min_n=3, max_n=7))
    def test_good_cycle_forces_bypass(self, g: Digraph) -> None:
        """Tests that a good cycle forces a Hamiltonian bypass.

        :param g: The digraph.
        :return: None.
        """
        if find_good_cycle(g) is not None:
            self.assertIsNotNone(find_hamiltonian_bypass(g))


class PatternTestCase(unittest.TestCase):
    """The pattern embedding test case."""

    def test_find_bypass_pattern(self) -> None:
        """Tests finding the D(n,k) patterns.

        :return: None.
        """
        g: Digraph = complete_digraph(4)
        for k in range(2, 5):
            found: PatternEmbedding = find_bypass_pattern(g, k)
            self.assertEqual(found.mapping, (0, 1, 2, 3))
            self.assertTrue(found.is_valid_in(g))
        self.assertIsNone(find_bypass_pattern(t5(), 2))
        self.assertIsNone(find_bypass_pattern(directed_cycle(4), 3))
        with self.assertRaises(OrderError):
            find_bypass_pattern(g, 1)
        with self.assertRaises(OrderError):
            find_bypass_pattern(g, 5)

    def test_embedding(self) -> None:
        """Tests the embeddings.

        :return: None.
        """
        pattern: Digraph = bypass_pattern(3, 2)
        g: Digraph = arc_digraph(3, "2-1 1-0 2-0")
        found: PatternEmbedding = find_spanning_embedding(g, pattern)
        self.assertEqual(found.mapping, (2, 1, 0))
        self.assertEqual(found.to_dict(),
                         {"mapping": [2, 1, 0],
                          "arcs": [[2, 1], [2, 0], [1, 0]]})
        self.assertFalse(PatternEmbedding(pattern, (0, 1, 2)).is_valid_in(g))
        self.assertIsNone(find_spanning_embedding(complete_digraph(4),
                                                  pattern))

    @settings(max_examples=80, deadline=None)
    @given(digraphs(min_n=3, max_n=6))
    def test_pattern_two_is_a_bypass(self, g: Digraph) -> None:
        """Tests that a spanning D(n,2) exists exactly when there is a
        Hamiltonian bypass.

        :param g: The digraph.
        :return: None.
        """
        found: PatternEmbedding | None = find_bypass_pattern(g, 2)
        self.assertEqual(found is None, find_hamiltonian_bypass(g) is None)
        if found is not None:
            self.assertTrue(found.is_valid_in(g))


if __name__ == "__main__":
    unittest.main()
