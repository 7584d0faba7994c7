from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check; ``detail`` carries the witness when ``ok`` is false."""

    ok: bool
    name: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, name: str, detail: str = "") -> "Verdict":
        return cls(True, name, detail)

    @classmethod
    def failed(cls, name: str, detail: str) -> "Verdict":
        return cls(False, name, detail)

    @classmethod
    def check(cls, ok: bool, name: str, detail: str = "") -> "Verdict":
        """``detail`` describes the failure and is dropped when ``ok`` holds."""
        return cls(bool(ok), name, "" if ok else detail)
