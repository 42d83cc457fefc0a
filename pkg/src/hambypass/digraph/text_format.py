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
"""The text digraph format.

Line 1 holds "n m".  Each of the next m lines holds one arc "u v".  Lines
starting with "#" are comments, and blank lines are skipped.

"""
import re

from hambypass.errors import DigraphError, ParseError
from .core import Digraph, new_digraph

PAIR_RE: re.Pattern = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")
"""The regular expression of a line with two integers."""


def parse_digraph(text: str) -> Digraph:
    """Parses a digraph from the text format.

    :param text: The text.
    :return: The digraph.
    :raise ParseError: When the text is malformed or breaks a constructor
        rule.
    """
    lines: list[tuple[int, str]] \
        = [(i + 1, x) for i, x in enumerate(text.splitlines())
           if x.strip() != "" and not x.lstrip().startswith("#")]
    if len(lines) == 0:
        raise ParseError(1, "Missing the \"n m\" header.")
    header_no, header = lines[0]
    m = PAIR_RE.match(header)
    if m is None:
        raise ParseError(header_no, f"Bad header \"{header.strip()}\".")
    n, count = int(m[1]), int(m[2])
    if count < 0:
        raise ParseError(header_no, f"Negative arc count {count}.")
    if len(lines) - 1 != count:
        raise ParseError(lines[-1][0],
                         f"Expected {count} arcs, got {len(lines) - 1}.")
    try:
        new_digraph(n, [])
    except DigraphError as e:
        raise ParseError(header_no, str(e)) from e
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, line in lines[1:]:
        m = PAIR_RE.match(line)
        if m is None:
            raise ParseError(line_no, f"Bad arc \"{line.strip()}\".")
        arc: tuple[int, int] = int(m[1]), int(m[2])
        try:
            new_digraph(n, [arc])
        except DigraphError as e:
            raise ParseError(line_no, str(e)) from e
        if arc in seen:
            raise ParseError(line_no, f"Duplicate arc {arc}.")
        seen.add(arc)
        arcs.append(arc)
    return new_digraph(n, arcs)


def format_digraph(g: Digraph) -> str:
    """Formats a digraph in the text format, with the arcs in lexicographic
    order.

    :param g: The digraph.
    :return: The text.
    """
    arcs: list[tuple[int, int]] = g.arcs()
    return "".join([f"{g.n} {len(arcs)}\n"]
                   + [f"{u} {w}\n" for u, w in arcs])
