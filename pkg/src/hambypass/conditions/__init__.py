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
"""The degree-condition predicates.

"""
from .report import Witness, ConditionReport
from .predicates import a_k_violations, check_a_k, check_degree_sum, \
    check_meyniel, check_ghouila_houri, check_woodall, check_nash_williams, \
    check_thm13_condition, check_thm14_condition, check_thm15_condition, \
    check_thm16_hypothesis, lemma5_consequence_holds, check_strong, \
    check_min_semi_degree
from .registry import NAMED_CONDITIONS, Condition, get_condition
