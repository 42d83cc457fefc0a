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
"""The condition reports.

"""
from __future__ import annotations

from typing import Any


class Witness:
    """A violating instance of a degree inequality."""

    def __init__(self, vertices: dict[str, int], value: int, bound: int,
                 rule: str):
        """Constructs a witness.

        :param vertices: The vertices by their roles, such as "x", "y", "z".
        :param value: The evaluated left-hand side.
        :param bound: The required bound that the value falls short of.
        :param rule: The inequality that is violated.
        """
        self.vertices: dict[str, int] = vertices
        """The vertices by their roles."""
        self.value: int = value
        """The evaluated left-hand side."""
        self.bound: int = bound
        """The required bound."""
        self.rule: str = rule
        """The inequality that is violated."""

    def __repr__(self) -> str:
        """Returns the representation of the witness.

        :return: The representation.
        """
        return f"Witness({self.vertices}, {self.value} < {self.bound}," \
               f" {self.rule!r})"

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the witness.

        :return: The JSON form.
        """
        return {**self.vertices, "sum": self.value, "bound": self.bound,
                "rule": self.rule}


class ConditionReport:
    """The verdict of a condition, with the first violation when it fails."""

    def __init__(self, witness: Witness | None = None):
        """Constructs a condition report.

        :param witness: The first violation, or None if the condition holds.
        """
        self.witness: Witness | None = witness
        """The first violation, or None if the condition holds."""

    @property
    def holds(self) -> bool:
        """Returns whether the condition holds.

        :return: True if the condition holds, or False otherwise.
        """
        return self.witness is None

    def __repr__(self) -> str:
        """Returns the representation of the report.

        :return: The representation.
        """
        return f"ConditionReport(holds={self.holds}, witness={self.witness})"

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON form of the report.

        :return: The JSON form.
        """
        if self.witness is None:
            return {"holds": True}
        return {"holds": False, "witness": self.witness.to_dict()}
