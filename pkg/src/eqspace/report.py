"""Verification outcome record shared by all check operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping


@dataclass(frozen=True)
class VerificationReport:
    """Named check outcome; failed reports always carry witness data."""

    name: str
    passed: bool
    witness: Mapping[str, Any] | None = None
    dimensions: Mapping[str, int] | None = None

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError("failed report requires a witness")

    def __bool__(self) -> bool:
        return self.passed
