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
"""The errors.

This module should not import any other module from the application.

"""


class DigraphError(ValueError):
    """The base error of the toolkit."""


class SelfLoopError(DigraphError):
    """An arc from a vertex to itself."""


class VertexRangeError(DigraphError):
    """A vertex outside 0..n-1."""


class DuplicateArcError(DigraphError):
    """An arc given more than once."""


class OrderError(DigraphError):
    """A vertex count or a family parameter out of range."""


class EmptyVertexSetError(DigraphError):
    """An empty vertex set where a non-empty one is required."""


class InvalidPathError(DigraphError):
    """A vertex sequence that is not a path."""


class InvalidCycleError(DigraphError):
    """A vertex sequence that is not a cycle."""


class InvalidPartnerError(DigraphError):
    """A position that is not a partner of the inserted path."""


class OverlapError(DigraphError):
    """Vertex sets that must be disjoint but are not."""


class ParseError(DigraphError):
    """A malformed text digraph."""

    def __init__(self, line_no: int, message: str):
        """Constructs the parse error.

        :param line_no: The 1-based line number.
        :param message: The message.
        """
        super().__init__(f"line {line_no}: {message}")
        self.line_no: int = line_no
        """The 1-based line number."""


class UnknownConditionError(DigraphError):
    """A condition identifier that is not registered."""


class UnknownTheoremError(DigraphError):
    """A theorem identifier that is not registered."""


class EnumerationLimitError(DigraphError):
    """An enumeration task outside the bounds of its mode."""


class GoldenMismatchError(DigraphError):
    """A stored golden value that differs from the new run."""
