"""Check records and the verification report (JSON and markdown)."""

from dataclasses import asdict, dataclass, field
from fractions import Fraction
import json
import time

import numpy as np

from . import __version__


@dataclass
class Check:
    id: str
    description: str
    paperRef: str
    status: str
    computed: str
    expected: str
    runtimeMs: int = 0

    @property
    def passed(self):
        return self.status == "pass"


def render(x):
    """Canonical text for report values (plain ints, a/b fractions, sorted containers)."""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, tuple):
        inner = ", ".join(render(t) for t in x)
        return f"({inner},)" if len(x) == 1 else f"({inner})"
    if isinstance(x, list):
        return "[" + ", ".join(render(t) for t in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{render(k)}: {render(v)}" for k, v in sorted(x.items())) + "}"
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(render(t) for t in sorted(x)) + "}"
    return str(x)


def make_check(id, description, ref, computed, expected, ok=None, runtime_ms=0):
    """Build a check; ``ok`` defaults to computed == expected."""
    if ok is None:
        ok = computed == expected
    return Check(id, description, ref, "pass" if ok else "fail", render(computed), render(expected),
                 int(runtime_ms))


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter_ns()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter_ns() - self.t0) // 1_000_000
        return False


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    toolVersion: str = __version__
    configEcho: dict = field(default_factory=dict)

    def add(self, check):
        if any(c.id == check.id for c in self.checks):
            raise ValueError(f"duplicate check id {check.id}")
        self.checks.append(check)

    def extend(self, checks):
        for c in checks:
            self.add(c)

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def exit_code(self):
        return 0 if self.ok else 1

    def get(self, id):
        return next(c for c in self.checks if c.id == id)

    def to_dict(self):
        return {"toolVersion": self.toolVersion, "configEcho": self.configEcho,
                "checks": [asdict(c) for c in self.checks]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        return cls([Check(**c) for c in d["checks"]], d["toolVersion"], d["configEcho"])

    def to_markdown(self):
        lines = [f"# Verification report (orbicheck {self.toolVersion})", ""]
        passed = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{passed} of {len(self.checks)} checks passed.")
        lines += ["", "| id | status | computed | expected | ms | claim |", "|---|---|---|---|---|---|"]
        for c in self.checks:
            comp = c.computed if len(c.computed) < 60 else c.computed[:57] + "..."
            exp = c.expected if len(c.expected) < 60 else c.expected[:57] + "..."
            lines.append(f"| {c.id} | {c.status} | {comp} | {exp} | {c.runtimeMs} | {c.paperRef} |")
        return "\n".join(lines) + "\n"
