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
"""The golden-value store.  The first run of a check records its counts and
exception digest, and every later run with the same key must reproduce
them.

"""
import logging

import sqlalchemy as sa
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column, Session

from hambypass.errors import GoldenMismatchError
from .report import TheoremReport

logger = logging.getLogger(__name__)


class Base(DeclarativeBase):
    """The base of the data models."""


class GoldenRecord(Base):
    """The golden values of a check."""
    __tablename__ = "hambypass_golden_records"
    """The table name."""
    __table_args__ = (sa.UniqueConstraint("theorem", "n", "mode", "sample",
                                          "seed", "model", "inclusive",
                                          "parameter"),)
    """The table arguments."""
    id: Mapped[int] = mapped_column(primary_key=True)
    """The record ID."""
    theorem: Mapped[str]
    """The theorem identifier."""
    n: Mapped[int]
    """The order."""
    mode: Mapped[str]
    """The scan mode."""
    sample: Mapped[int] = mapped_column(default=-1)
    """The sample size, or -1 in the exhaustive mode."""
    seed: Mapped[int] = mapped_column(default=-1)
    """The random seed, or -1 in the exhaustive mode."""
    model: Mapped[str] = mapped_column(default="")
    """The random arc model, or empty in the exhaustive mode."""
    inclusive: Mapped[bool] = mapped_column(default=False)
    """Whether the condition A_k lets z equal y."""
    parameter: Mapped[str] = mapped_column(default="")
    """The parameter of the check, or empty."""
    scanned: Mapped[int]
    """The number of scanned digraphs."""
    passed_filters: Mapped[int]
    """The number of digraphs that passed the filters."""
    exception_count: Mapped[int]
    """The number of exceptions up to isomorphism."""
    digest: Mapped[str] = mapped_column(sa.String(64))
    """The SHA-256 digest of the sorted exception forms."""

    @property
    def values(self) -> dict[str, int | str]:
        """Returns the guarded values.

        :return: The guarded values.
        """
        return {"scanned": self.scanned,
                "passed_filters": self.passed_filters,
                "exception_count": self.exception_count,
                "digest": self.digest}


def _report_values(report: TheoremReport) -> dict[str, int | str]:
    """Returns the guarded values of a report.

    :param report: The report.
    :return: The guarded values.
    """
    return {"scanned": report.scanned,
            "passed_filters": report.passed_filters,
            "exception_count": len(report.exceptions),
            "digest": report.digest}


class GoldenStore:
    """The golden-value store in an SQLite file."""

    def __init__(self, path: str):
        """Opens the store, creating its table if needed.

        :param path: The path of the SQLite file.
        """
        self.engine: sa.Engine = sa.create_engine(f"sqlite:///{path}")
        """The database engine."""
        Base.metadata.create_all(self.engine)

    def guard(self, report: TheoremReport) -> bool:
        """Records the values of a report on its first run, or compares them
        with the recorded ones.

        :param report: The report.
        :return: True if the values were recorded, or False if they matched.
        :raise GoldenMismatchError: When the values differ from the recorded
            ones.
        """
        key: dict[str, int | str | bool] = {
            "theorem": report.theorem,
            "n": report.task.n,
            "mode": report.task.mode.value,
            "sample": -1 if report.task.sample is None else report.task.sample,
            "seed": -1 if report.task.seed is None else report.task.seed,
            "model": "" if report.task.sample is None
            else report.task.model.value,
            "inclusive": report.task.inclusive,
            "parameter": report.parameter}
        values: dict[str, int | str] = _report_values(report)
        with Session(self.engine) as session:
            record: GoldenRecord | None = session.scalars(
                sa.select(GoldenRecord).filter_by(**key)).first()
            if record is None:
                session.add(GoldenRecord(**key, **values))
                session.commit()
                logger.info("Recorded the golden values of %s.", key)
                return True
            if record.values != values:
                raise GoldenMismatchError(
                    f"The golden values {record.values} of {key} differ from"
                    f" {values}.")
            return False

    def close(self) -> None:
        """Closes the store.

        :return: None.
        """
        self.engine.dispose()
