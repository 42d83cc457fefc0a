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
"""The bitset utilities.  Vertex sets are integers with one bit per vertex.

This module should not import any other module from the application.

"""
from collections.abc import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Iterates the set bits of a mask from the lowest.

    :param mask: The bitmask.
    :return: The indices of the set bits, in ascending order.
    """
    while mask:
        low: int = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    """Returns the bitmask of some vertices.

    :param vertices: The vertices.
    :return: The bitmask.
    """
    mask: int = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def full_mask(n: int) -> int:
    """Returns the bitmask of all the vertices 0..n-1.

    :param n: The number of vertices.
    :return: The bitmask.
    """
    return (1 << n) - 1
