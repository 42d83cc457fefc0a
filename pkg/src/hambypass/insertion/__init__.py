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
"""The partners, the insertions, and the insertion lemma hypotheses.

"""
from .partners import PartnerIndex, find_partner_for_vertex, \
    find_partner_for_path, insert_at, PartnerCollection, \
    has_collection_of_partners, find_collection_of_partners, multi_insert, \
    InsertionOutcome, extend_as_much_as_possible
from .hypotheses import HypothesisCase, lemma2_hypothesis, \
    lemma4_hypothesis, lemma1_hypothesis, lemma3_hypothesis, \
    off_cycle_vertex, Lemma7Report, window_violations, \
    partner_chord_violations, lemma7_consequences, is_good_cycle
from .construction import BypassConstruction, insert_off_vertex, \
    bypass_from_cycle, explain_hamiltonian_cycle, explain_bypass
