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
"""The exact structure oracles.

"""
from .cycles import all_cycles_of_length, find_cycle_of_length_within, \
    find_cycle_of_length, find_hamiltonian_cycle, find_pre_hamiltonian_cycle, \
    find_hamiltonian_path_between, find_ordered_hamiltonian_path
from .bypass import BypassWitness, find_hamiltonian_bypass, validate_bypass, \
    find_good_cycle
from .patterns import PatternEmbedding, find_spanning_embedding, \
    find_bypass_pattern
