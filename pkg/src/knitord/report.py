"""Verification reports and the deterministic (optionally threaded) scan driver."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

DEFAULT_MAX_VIOLATIONS = 20


@dataclass(frozen=True)
class Violation:
    index: tuple  # enumeration position; sort key only, not serialized
    law: str
    witnesses: tuple
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "witnesses": list(self.witnesses),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class VerificationReport:
    suite: str
    instance: str
    radii: tuple
    checked: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    laws: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "radii": list(self.radii),
            "checked": self.checked,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "laws": self.laws,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))

    def to_text(self) -> str:
        head = "PASS" if self.passed else "FAIL"
        radii = ",".join(str(r) for r in self.radii)
        lines = [
            f"{head} {self.suite} on {self.instance} radii=({radii}) "
            f"checked={self.checked} violations={self.violation_count}"
        ]
        for law, row in self.laws.items():
            lines.append(f"  law {law}: checked={row['checked']} violations={row['violations']}")
        for tag, n in self.stats.items():
            lines.append(f"  stat {tag}: {n}")
        for v in self.violations:
            lines.append(
                f"  [{v.law}] witnesses=({'; '.join(v.witnesses)}) "
                f"expected={v.expected} actual={v.actual}"
            )
        return "\n".join(lines)

    def law_violations(self, law: str) -> int:
        return self.laws.get(law, {}).get("violations", 0)


class Tally:
    """Per-chunk accumulator handed to scan bodies."""

    def __init__(self, cap: int):
        self.cap = cap
        self.checked = 0
        self.total = 0
        self.violations: list[Violation] = []
        self.law_checked: Counter = Counter()
        self.law_failed: Counter = Counter()
        self.tags: Counter = Counter()

    def check(self, ok: bool, law: str, index: tuple, witnesses: Callable[[], Sequence[str]],
              expected: Callable[[], str] | str = "", actual: Callable[[], str] | str = "") -> bool:
        """Count one assertion; string arguments may be thunks, forced only on failure."""
        self.checked += 1
        self.law_checked[law] += 1
        if not ok:
            self.total += 1
            self.law_failed[law] += 1
            if len(self.violations) < self.cap:
                self.violations.append(Violation(
                    index, law, tuple(witnesses()),
                    expected() if callable(expected) else expected,
                    actual() if callable(actual) else actual,
                ))
        return ok

    def tag(self, name: str) -> None:
        self.tags[name] += 1


Family = tuple  # (law-group name, items, body(tally, family_index, item_index, item))


def scan(suite: str, instance: str, radii: Sequence[int], families: Sequence[Family],
         workers: int = 1, cap: int = DEFAULT_MAX_VIOLATIONS,
         tag_order: Sequence[str] = ()) -> VerificationReport:
    """Run check bodies over every (family, item) and merge results in enumeration order.

    Work is split into contiguous chunks; each chunk retains its first ``cap``
    violations, so merging by index and truncating reproduces the serial result.
    """
    tasks = [(fi, i, item) for fi, (_, items, _) in enumerate(families) for i, item in enumerate(items)]
    n_chunks = max(1, min(len(tasks), workers * 4)) if workers > 1 else 1
    bounds = [(len(tasks) * c // n_chunks, len(tasks) * (c + 1) // n_chunks) for c in range(n_chunks)]

    def run(span: tuple[int, int]) -> Tally:
        t = Tally(cap)
        for fi, i, item in tasks[span[0]:span[1]]:
            families[fi][2](t, fi, i, item)
        return t

    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(run, bounds))
    else:
        tallies = [run(b) for b in bounds]

    report = VerificationReport(suite, instance, tuple(radii))
    law_checked: Counter = Counter()
    law_failed: Counter = Counter()
    tags: Counter = Counter()
    merged: list[Violation] = []
    for t in tallies:
        report.checked += t.checked
        report.violation_count += t.total
        merged.extend(t.violations)
        law_checked.update(t.law_checked)
        law_failed.update(t.law_failed)
        tags.update(t.tags)
    merged.sort(key=lambda v: v.index)
    report.violations = merged[:cap]
    report.laws = {
        law: {"checked": law_checked[law], "violations": law_failed[law]}
        for law in sorted(law_checked)
    }
    ordered = list(tag_order) + sorted(k for k in tags if k not in tag_order)
    report.stats = {k: tags[k] for k in ordered if k in tags or k in tag_order}
    return report
