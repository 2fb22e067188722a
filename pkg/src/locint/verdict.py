"""Certificate carriers shared by the checking routines."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


class LocIntError(Exception):
    """Base class for every error raised by this package."""


class SizeGuard(LocIntError):
    """An exhaustive routine was asked to run beyond its configured bound."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: ``ok`` plus the first failing condition and witness."""

    ok: bool
    check: Optional[str] = None
    witness: Optional[Any] = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, check: str, witness: Any) -> "Verdict":
        return cls(False, check, witness)
