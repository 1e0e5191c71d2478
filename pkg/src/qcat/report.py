"""Structured pass/fail reports with witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass
class PropertyReport:
    """Named boolean verdicts plus, for each failed one, a witness tuple
    that re-evaluates to a violation.  `info` carries non-boolean facts
    (e.g. the list of zero objects)."""

    flags: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    info: Dict[str, Any] = field(default_factory=dict)

    def ok(self) -> bool:
        return all(self.flags.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.flags.items() if not v]

    def set(self, flag: str, value: bool, witness: Any = None) -> None:
        self.flags[flag] = value
        if not value and witness is not None and flag not in self.witnesses:
            self.witnesses[flag] = witness

    def require(self, flag: str, value: bool, witness: Any = None) -> None:
        """Like set(), but never upgrades an existing False to True."""
        if flag in self.flags and not self.flags[flag]:
            return
        self.set(flag, value, witness)
