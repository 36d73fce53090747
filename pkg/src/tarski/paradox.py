"""Empirically grounded paradoxes: networks of assertions about assertions.

A semantic assertion claims something about every assertion made by a given
speaker on a given topic, itself included when it matches.  A valuation is
consistent when each semantic assertion is true exactly when its claim holds
under that same valuation.  With at most :data:`MAX_SEMANTIC` semantic
assertions all candidate valuations are enumerated.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

MAX_SEMANTIC = 20

PATTERNS = ("majority_false", "majority_true", "all_true", "all_false")


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    pattern: str
    speaker: str
    topic: str

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ScenarioError(f"unknown claim pattern {self.pattern!r}; expected one of {PATTERNS}")

    def holds(self, values: list) -> bool:
        """Verdict of the claim given the truth values of its reference set."""
        n_true = sum(values)
        n_false = len(values) - n_true
        # "majority" is strict: exactly half is not a majority
        if self.pattern == "majority_false":
            return 2 * n_false > len(values)
        if self.pattern == "majority_true":
            return 2 * n_true > len(values)
        if self.pattern == "all_true":
            return n_false == 0
        return n_true == 0

    def __str__(self):
        return f"{self.pattern}({self.speaker}, {self.topic})"


@dataclass(frozen=True)
class Assertion:
    id: str
    speaker: str
    topic: str
    value: Optional[bool] = None
    claim: Optional[Claim] = None

    def __post_init__(self):
        if (self.value is None) == (self.claim is None):
            raise ScenarioError(f"assertion {self.id!r} must be either ground (value) or semantic (claim)")

    @property
    def is_ground(self) -> bool:
        return self.claim is None


def ground(id, speaker, topic, value: bool) -> Assertion:
    return Assertion(str(id), speaker, topic, value=bool(value))


def semantic(id, speaker, topic, pattern, about_speaker, about_topic) -> Assertion:
    return Assertion(str(id), speaker, topic, claim=Claim(pattern, about_speaker, about_topic))


@dataclass(frozen=True)
class Scenario:
    assertions: tuple

    def __post_init__(self):
        assertions = tuple(self.assertions)
        object.__setattr__(self, "assertions", assertions)
        ids = [a.id for a in assertions]
        if len(set(ids)) != len(ids):
            raise ScenarioError("assertion ids must be unique")

    @property
    def semantic_ids(self) -> list:
        return sorted(a.id for a in self.assertions if not a.is_ground)

    def reference_set(self, claim: Claim) -> list:
        return sorted(a.id for a in self.assertions if a.speaker == claim.speaker and a.topic == claim.topic)

    @classmethod
    def from_list(cls, items) -> "Scenario":
        out = []
        for d in items:
            try:
                if "claim" in d:
                    c = d["claim"]
                    out.append(semantic(d["id"], d["speaker"], d["topic"], c["pattern"], c["speaker"], c["topic"]))
                else:
                    out.append(ground(d["id"], d["speaker"], d["topic"], d["value"]))
            except (KeyError, TypeError) as exc:
                raise ScenarioError(f"malformed assertion {d!r}: {exc}") from exc
        return cls(tuple(out))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Scenario":
        with open(path, encoding="utf-8") as fh:
            return cls.from_list(json.load(fh))

    def to_list(self) -> list:
        out = []
        for a in self.assertions:
            d = {"id": a.id, "speaker": a.speaker, "topic": a.topic}
            if a.is_ground:
                d["value"] = a.value
            else:
                d["claim"] = {"pattern": a.claim.pattern, "speaker": a.claim.speaker, "topic": a.claim.topic}
            out.append(d)
        return out


def _claim_verdict(s: Scenario, claim: Claim, v: dict) -> bool:
    refs = s.reference_set(claim)
    return claim.holds([v[r] for r in refs])


def consistent_valuations(s: Scenario) -> list:
    """Every self-consistent valuation, ordered by the semantic values read
    in id order (false before true)."""
    sem = [a for a in s.assertions if not a.is_ground]
    if len(sem) > MAX_SEMANTIC:
        raise ScenarioError(f"{len(sem)} semantic assertions exceeds the budget of {MAX_SEMANTIC}")
    for a in sem:
        if not s.reference_set(a.claim):
            raise ScenarioError(f"claim {a.claim} of {a.id!r} refers to no assertion")
    sem.sort(key=lambda a: a.id)
    fixed = {a.id: a.value for a in s.assertions if a.is_ground}
    out = []
    for values in itertools.product((False, True), repeat=len(sem)):
        v = dict(fixed)
        v.update(zip((a.id for a in sem), values))
        if all(v[a.id] == _claim_verdict(s, a.claim, v) for a in sem):
            out.append(dict(sorted(v.items())))
    return out


@dataclass(frozen=True)
class ExplainRow:
    id: str
    claim: Claim
    reference_set: tuple
    n_true: int
    n_false: int
    verdict: bool
    assigned: bool

    @property
    def consistent(self) -> bool:
        return self.verdict == self.assigned

    def line(self) -> str:
        mark = "consistent" if self.consistent else "INCONSISTENT"
        return (f"{self.id}: {self.claim} over [{', '.join(self.reference_set)}] "
                f"true={self.n_true} false={self.n_false} claim={str(self.verdict).lower()} "
                f"assigned={str(self.assigned).lower()} {mark}")


def explain(s: Scenario, v: dict) -> list:
    rows = []
    for a in sorted((a for a in s.assertions if not a.is_ground), key=lambda a: a.id):
        refs = s.reference_set(a.claim)
        values = [v[r] for r in refs]
        rows.append(ExplainRow(a.id, a.claim, tuple(refs), sum(values), len(values) - sum(values),
                               a.claim.holds(values), v[a.id]))
    return rows


def format_valuation(v: dict) -> str:
    return " ".join(f"{k}={'T' if val else 'F'}" for k, val in v.items())


def watergate(k: int = 1, jones_extra_false: bool = False) -> Scenario:
    """Jones asserts (15) only, optionally plus one false ground statement;
    Nixon asserts (16) and 2k ground statements, half true and half false."""
    if k < 0:
        raise ValueError("k must be non-negative")
    assertions = [
        semantic("15", "Jones", "Watergate", "majority_false", "Nixon", "Watergate"),
        semantic("16", "Nixon", "Watergate", "all_true", "Jones", "Watergate"),
    ]
    for i in range(k):
        assertions.append(ground(f"nixon_t{i + 1}", "Nixon", "Watergate", True))
        assertions.append(ground(f"nixon_f{i + 1}", "Nixon", "Watergate", False))
    if jones_extra_false:
        assertions.append(ground("jones_f1", "Jones", "Watergate", False))
    return Scenario(tuple(assertions))
