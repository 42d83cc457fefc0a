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
"""The enumeration of labelled digraphs, exhaustive or sampled, through the
condition filters and onto a visitor.

The arc slots are the ordered pairs (u, w), u != w, in lexicographic order,
and slot j is bit j of the arc mask.  The slots of a tail u are the n-1
consecutive bits starting at u(n-1).  The scan space is cut into chunks that
do not depend on the worker count, and the chunk results are merged in
chunk order.

"""
import logging
import math
import multiprocessing
import os
from collections.abc import Callable, Iterator, Sequence
from enum import Enum

import numpy as np

from hambypass.conditions import Condition, get_condition
from hambypass.digraph import Digraph
from hambypass.errors import EnumerationLimitError, OrderError
from hambypass.iso import MAX_CANONICAL_ORDER

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_ORDER: int = 6
"""The largest order of an exhaustive scan."""
DEFAULT_EXHAUSTIVE_LIMIT: int = 5
"""The largest order of an exhaustive scan without the long-running flag."""
PROGRESS_INTERVAL: int = 2 ** 20
"""The number of scanned digraphs between two progress lines."""
SAMPLE_CHUNK_SIZE: int = 2 ** 14
"""The number of samples in a chunk."""
EXHAUSTIVE_CHUNK_BITS: int = 16
"""The number of low arc slots enumerated inside an exhaustive chunk."""
THREADS_ENV: str = "HAMBYPASS_THREADS"
"""The environment variable with the worker count."""


class ScanMode(Enum):
    """The scan mode."""
    EXHAUSTIVE: str = "exhaustive"
    """Every labelled digraph."""
    SAMPLE: str = "sample"
    """Seeded random digraphs."""


class SampleModel(Enum):
    """The random arc model of the sample mode."""
    UNIFORM: str = "uniform"
    """Every arc present with probability 1/2."""
    DENSE: str = "dense"
    """Every arc present with probability 3/4."""

    @property
    def density(self) -> float:
        """Returns the arc probability.

        :return: The arc probability.
        """
        return 0.75 if self is SampleModel.DENSE else 0.5


class EnumerationTask:
    """An enumeration task."""

    def __init__(self, n: int, filters: Sequence[str], theorem: str,
                 sample: int | None = None, seed: int | None = None,
                 model: SampleModel = SampleModel.UNIFORM,
                 long_running: bool = False, inclusive: bool = False):
        """Constructs an enumeration task.

        :param n: The order.
        :param filters: The condition identifiers, applied in order.
        :param theorem: The identifier of the claim under test.
        :param sample: The number of samples, or None to scan exhaustively.
        :param seed: The random seed of the sample mode.
        :param model: The random arc model of the sample mode.
        :param long_running: Whether an exhaustive scan may go beyond
            DEFAULT_EXHAUSTIVE_LIMIT.
        :param inclusive: Whether the condition A_k lets z equal y.
        :raise OrderError: When n is out of range.
        :raise EnumerationLimitError: When the mode does not allow the order,
            or the sample mode has no seed.
        """
        if not 1 <= n <= MAX_CANONICAL_ORDER:
            raise OrderError(
                f"The order {n} is out of 1..{MAX_CANONICAL_ORDER}.")
        if sample is None:
            if n > MAX_EXHAUSTIVE_ORDER:
                raise EnumerationLimitError(
                    f"Exhaustive scans need n <= {MAX_EXHAUSTIVE_ORDER}.")
            if n > DEFAULT_EXHAUSTIVE_LIMIT and not long_running:
                raise EnumerationLimitError(
                    f"Exhaustive scans beyond n = {DEFAULT_EXHAUSTIVE_LIMIT}"
                    " need the long-running flag.")
        else:
            if sample < 0:
                raise EnumerationLimitError(
                    f"The sample count {sample} is negative.")
            if seed is None:
                raise EnumerationLimitError("Sample scans need a seed.")
        self.n: int = n
        """The order."""
        self.filters: tuple[str, ...] = tuple(filters)
        """The condition identifiers."""
        self.theorem: str = theorem
        """The identifier of the claim under test."""
        self.sample: int | None = sample
        """The number of samples, or None in the exhaustive mode."""
        self.seed: int | None = seed
        """The random seed of the sample mode."""
        self.model: SampleModel = model
        """The random arc model of the sample mode."""
        self.inclusive: bool = inclusive
        """Whether the condition A_k lets z equal y."""
        self.conditions: list[Condition] \
            = [get_condition(x, inclusive) for x in self.filters]
        """The conditions."""

    @property
    def mode(self) -> ScanMode:
        """Returns the scan mode.

        :return: The scan mode.
        """
        return ScanMode.EXHAUSTIVE if self.sample is None \
            else ScanMode.SAMPLE

    @property
    def slot_count(self) -> int:
        """Returns the number of arc slots.

        :return: The number of arc slots, n(n-1).
        """
        return self.n * (self.n - 1)

    @property
    def total(self) -> int:
        """Returns the number of digraphs the task scans.

        :return: The number of digraphs.
        """
        if self.sample is None:
            return 2 ** self.slot_count
        return self.sample

    @property
    def chunk_count(self) -> int:
        """Returns the number of chunks.

        :return: The number of chunks.
        """
        if self.sample is None:
            return 2 ** max(0, self.slot_count - EXHAUSTIVE_CHUNK_BITS)
        return math.ceil(self.sample / SAMPLE_CHUNK_SIZE)

    def passes(self, g: Digraph) -> bool:
        """Returns whether a digraph passes every filter.

        :param g: The digraph.
        :return: True if it passes, or False otherwise.
        """
        return all(x.holds(g) for x in self.conditions)


def arc_slots(n: int) -> list[tuple[int, int]]:
    """Returns the arc slots in order.

    :param n: The order.
    :return: The ordered pairs (u, w), u != w, in lexicographic order.
    """
    return [(u, w) for u in range(n) for w in range(n) if u != w]


def _spread(chunk: int, u: int) -> int:
    """Turns the n-1 slot bits of a tail into its out-row, skipping the tail
    itself.

    :param chunk: The slot bits.
    :param u: The tail.
    :return: The out-row.
    """
    return chunk & ((1 << u) - 1) | (chunk >> u) << (u + 1)


def decode(n: int, mask: int) -> Digraph:
    """Returns the digraph of an arc mask.

    :param n: The order.
    :param mask: The arc mask.
    :return: The digraph.
    """
    width: int = n - 1
    low: int = (1 << width) - 1
    return Digraph.from_rows(n, tuple(_spread(mask >> (u * width) & low, u)
                                      for u in range(n)))


def encode(g: Digraph) -> int:
    """Returns the arc mask of a digraph.

    :param g: The digraph.
    :return: The arc mask.
    """
    mask: int = 0
    for j, (u, w) in enumerate(arc_slots(g.n)):
        if g.has_arc(u, w):
            mask |= 1 << j
    return mask


def _exhaustive_chunk(task: EnumerationTask, index: int) -> Iterator[Digraph]:
    """Iterates the digraphs of an exhaustive chunk.

    :param task: The task.
    :param index: The chunk index, the high arc slots.
    :return: The digraphs in mask order.
    """
    low: int = min(task.slot_count, EXHAUSTIVE_CHUNK_BITS)
    base: int = index << low
    for mask in range(base, base + (1 << low)):
        yield decode(task.n, mask)


def _sample_chunk(task: EnumerationTask, index: int) -> Iterator[Digraph]:
    """Iterates the digraphs of a sample chunk.  Every chunk has its own
    random stream, seeded by the task seed and the chunk index.

    :param task: The task.
    :param index: The chunk index.
    :return: The digraphs in sample order.
    """
    n: int = task.n
    start: int = index * SAMPLE_CHUNK_SIZE
    size: int = min(SAMPLE_CHUNK_SIZE, task.total - start)
    rng: np.random.Generator = np.random.default_rng([task.seed, index])
    drawn: np.ndarray = rng.random((size, n, n - 1)) < task.model.density
    weights: np.ndarray = np.left_shift(1, np.arange(n - 1, dtype=np.int64))
    chunks: np.ndarray = drawn.astype(np.int64) @ weights
    for row in chunks.tolist():
        yield Digraph.from_rows(n, tuple(_spread(x, u)
                                         for u, x in enumerate(row)))


def task_digraphs(task: EnumerationTask, index: int) -> Iterator[Digraph]:
    """Iterates the digraphs of a chunk.

    :param task: The task.
    :param index: The chunk index.
    :return: The digraphs in scan order.
    """
    if task.sample is None:
        return _exhaustive_chunk(task, index)
    return _sample_chunk(task, index)


class ScanStats:
    """The statistics of a scan."""

    def __init__(self) -> None:
        """Constructs empty statistics."""
        self.scanned: int = 0
        """The number of scanned digraphs."""
        self.passed_filters: int = 0
        """The number of digraphs that passed the filters."""
        self.hits: list[Digraph] = []
        """The survivors the visitor flagged, in scan order."""

    def merge(self, other: "ScanStats") -> None:
        """Adds the statistics of a later chunk.

        :param other: The statistics of the later chunk.
        :return: None.
        """
        self.scanned += other.scanned
        self.passed_filters += other.passed_filters
        self.hits.extend(other.hits)


Visitor = Callable[[Digraph], bool]
"""A visitor, returning True to flag a survivor."""


def scan_chunk(job: tuple[EnumerationTask, Visitor, int]) -> ScanStats:
    """Scans a chunk.  This runs in the workers.

    :param job: The task, the visitor and the chunk index.
    :return: The statistics of the chunk.
    """
    task, visitor, index = job
    stats: ScanStats = ScanStats()
    for g in task_digraphs(task, index):
        stats.scanned += 1
        if not task.passes(g):
            continue
        stats.passed_filters += 1
        if visitor(g):
            logger.debug("Flagged %s.", g)
            stats.hits.append(g)
    return stats


def resolve_workers(workers: int | None = None) -> int:
    """Returns the worker count: the explicit count, or else the environment
    variable HAMBYPASS_THREADS, or else the number of CPUs.

    :param workers: The explicit worker count, or None.
    :return: The worker count.
    :raise ValueError: When the count is not a positive integer.
    """
    if workers is None:
        value: str | None = os.environ.get(THREADS_ENV)
        if value is None or value == "":
            return os.cpu_count() or 1
        try:
            workers = int(value)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer,"
                             f" got \"{value}\".")
    if workers < 1:
        raise ValueError(f"The worker count must be positive, got {workers}.")
    return workers


def enumerate_digraphs(task: EnumerationTask, visitor: Visitor,
                       workers: int = 1) -> ScanStats:
    """Runs a task: every digraph of the task is scanned, the survivors of
    the filters are visited, and the flagged ones are collected.  The
    visitor must be picklable when there is more than one worker.

    :param task: The task.
    :param visitor: The visitor.
    :param workers: The worker count.
    :return: The statistics, independent of the worker count.
    """
    jobs: list[tuple[EnumerationTask, Visitor, int]] \
        = [(task, visitor, x) for x in range(task.chunk_count)]
    logger.info("Scanning %d digraphs of order %d for %s in %d chunks.",
                task.total, task.n, task.theorem, len(jobs))
    total: ScanStats = ScanStats()
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            _merge_with_progress(total, scan_chunk(job))
    else:
        with multiprocessing.Pool(min(workers, len(jobs))) as pool:
            for stats in pool.imap(scan_chunk, jobs):
                _merge_with_progress(total, stats)
    logger.info("Scanned %d digraphs, %d passed the filters, %d flagged.",
                total.scanned, total.passed_filters, len(total.hits))
    return total


def _merge_with_progress(total: ScanStats, stats: ScanStats) -> None:
    """Merges the statistics of a chunk and logs the progress.

    :param total: The running statistics.
    :param stats: The statistics of the chunk.
    :return: None.
    """
    before: int = total.scanned // PROGRESS_INTERVAL
    total.merge(stats)
    if total.scanned // PROGRESS_INTERVAL > before:
        logger.info("Scanned %d digraphs.", total.scanned)
