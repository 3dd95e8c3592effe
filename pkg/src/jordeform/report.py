"""Verification reports shared by every check in the package."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator


@dataclass
class CheckRecord:
    identity: str
    anchor: str
    passed: bool
    residual: Any = None
    millis: float = 0.0
    suite: str = ""

    @property
    def residual_terms(self) -> int:
        if self.residual is None or isinstance(self.residual, (bool, str)):
            return 0
        try:
            return len(self.residual)
        except TypeError:
            return 1

    def as_json(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "identity": self.identity,
            "anchor": self.anchor,
            "status": "pass" if self.passed else "fail",
            "residual_terms": self.residual_terms,
            "millis": round(self.millis, 3) if timing else 0,
        }


@dataclass
class VerificationReport:
    name: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def __iter__(self) -> Iterator[CheckRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def get(self, identity: str) -> CheckRecord:
        for r in self.records:
            if r.identity == identity:
                return r
        raise KeyError(identity)

    def record(self, identity: str, anchor: str, passed: bool, residual=None,
               millis: float = 0.0) -> CheckRecord:
        rec = CheckRecord(identity, anchor, bool(passed), residual, millis, self.name)
        self.records.append(rec)
        return rec

    def check(self, identity: str, anchor: str, residual_fn: Callable[[], Any]) -> CheckRecord:
        """Run ``residual_fn`` and pass iff the residual it returns is zero/empty."""
        t0 = time.perf_counter()
        residual = residual_fn()
        millis = 1000 * (time.perf_counter() - t0)
        ok = not residual
        return self.record(identity, anchor, ok, None if ok else residual, millis)

    def expect(self, identity: str, anchor: str, fn: Callable[[], bool]) -> CheckRecord:
        """Run a boolean check."""
        t0 = time.perf_counter()
        ok = bool(fn())
        return self.record(identity, anchor, ok, None, 1000 * (time.perf_counter() - t0))

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        for r in other.records:
            self.records.append(r)
        return self

    def summary(self) -> str:
        bad = len(self.failures())
        return f"{self.name}: {len(self.records) - bad}/{len(self.records)} passed"
