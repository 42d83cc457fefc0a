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
"""The theorem verification over enumerated digraphs.

"""
from .enumeration import MAX_EXHAUSTIVE_ORDER, DEFAULT_EXHAUSTIVE_LIMIT, \
    PROGRESS_INTERVAL, SAMPLE_CHUNK_SIZE, ScanMode, SampleModel, \
    EnumerationTask, ScanStats, arc_slots, decode, encode, \
    enumerate_digraphs, resolve_workers
from .records import VerificationRecord, match_family
from .report import Verdict, ExceptionEntry, TheoremReport, build_report
from .golden import GoldenRecord, GoldenStore
from .theorems import CLASSIC_CONDITIONS, MissingStructure, MissingPattern, \
    DegreeLemmaFailure, CycleConsequenceFailure, TheoremCheck, get_theorem, \
    run_check, check_theorem6, check_theorem8, check_theorem9, \
    check_theorem11, check_theorem12, check_theorem16_conjecture, \
    explore_no_bypass, check_lemma5, check_lemma7, check_prehc_thm13, \
    check_prehc_thm14, check_classic_bypass
