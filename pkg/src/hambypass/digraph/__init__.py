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
"""The digraph value type, its paths and cycles, and the text format.

"""
from .core import MAX_ORDER, Degrees, Digraph, new_digraph, degrees, \
    degrees_toward_set, converse, is_strong, non_adjacent_pairs, \
    induced_subdigraph, is_tournament, is_weakly_connected, cut_vertices, \
    has_cut_vertex, reachable_from, reaching
from .paths import Path, Cycle
from .text_format import parse_digraph, format_digraph
