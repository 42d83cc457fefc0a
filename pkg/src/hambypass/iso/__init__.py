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
"""The isomorphism tests and canonical forms of small digraphs.

"""
from .canonical import MAX_CANONICAL_ORDER, CanonicalForm, canonical_form, \
    degree_signature, are_isomorphic
from .exceptions import is_isomorphic_to_t5, is_balanced_complete_bipartite, \
    is_balanced_complete_bipartite_minus_arc
