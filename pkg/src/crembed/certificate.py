"""Verdicts and replayable certificates.

Every certificate step names a registered criterion, the primitive inputs it
was evaluated on, and the outcome.  Because criteria are pure functions of
those inputs, :func:`replay` can re-run each step and confirm the recorded
outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class Step:
    criterion: str
    citation: str
    inputs: dict
    outcome: Any
    decisive: bool = False

    def __str__(self):
        args = ", ".join(f"{k}={_fmt(v)}" for k, v in self.inputs.items())
        mark = " [decisive]" if self.decisive else ""
        return f"{self.criterion} ({self.citation}): {args} -> {_fmt(self.outcome)}{mark}"


def _fmt(v):
    if v is None:
        return "?"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    certificate: tuple = ()
    missing: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "certificate", tuple(self.certificate))
        object.__setattr__(self, "missing", tuple(self.missing))
        if self.verdict is Verdict.INDETERMINATE:
            if not self.missing:
                raise ValueError("an indeterminate decision must say what is missing")
        elif not self.certificate or not self.certificate[-1].decisive:
            raise ValueError("a YES/NO decision needs a certificate ending in a decisive step")

    def lines(self) -> list:
        out = [f"VERDICT: {self.verdict.value}"]
        out += [f"  {i}. {step}" for i, step in enumerate(self.certificate, 1)]
        out += [f"  missing: {item}" for item in self.missing]
        return out


@dataclass(frozen=True)
class _Criterion:
    fn: Callable
    citation: str


CRITERIA: dict = {}


def criterion(name: str, citation: str):
    def register(fn):
        CRITERIA[name] = _Criterion(fn, citation)
        return fn

    return register


def evaluate(name: str, decisive: bool = False, **inputs) -> Step:
    c = CRITERIA[name]
    return Step(name, c.citation, dict(inputs), c.fn(**inputs), decisive)


def replay(decision: Decision) -> list:
    """Return the steps whose recorded outcome is not reproduced on re-evaluation."""
    bad = []
    for step in decision.certificate:
        c = CRITERIA.get(step.criterion)
        if c is None or c.fn(**step.inputs) != step.outcome:
            bad.append(step)
    return bad


def decided(verdict: Verdict, steps, final: Step) -> Decision:
    return Decision(verdict, tuple(steps) + (final,))
