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
"""The test for the utilities.

"""
import unittest

from hypothesis import given, strategies as st

from hambypass.utils.bits import iter_bits, to_mask, full_mask


class BitsTestCase(unittest.TestCase):
    """The bitset utility test case."""

    def test_iter_bits(self) -> None:
        """Tests iterating the set bits.

        :return: None.
        """
        self.assertEqual(list(iter_bits(0)), [])
        self.assertEqual(list(iter_bits(0b101001)), [0, 3, 5])
        self.assertEqual(list(iter_bits(1 << 15)), [15])

    def test_masks(self) -> None:
        """Tests building the masks.

        :return: None.
        """
        self.assertEqual(to_mask([]), 0)
        self.assertEqual(to_mask([5, 0, 3, 3]), 0b101001)
        self.assertEqual(full_mask(0), 0)
        self.assertEqual(full_mask(4), 0b1111)

    @given(st.sets(st.integers(min_value=0, max_value=15)))
    def test_round_trip(self, vertices: set[int]) -> None:
        """Tests that the set bits of a mask are its vertices.

        :param vertices: The vertices.
        :return: None.
        """
        self.assertEqual(list(iter_bits(to_mask(vertices))), sorted(vertices))


if __name__ == "__main__":
    unittest.main()
