"""Level inference for corpora of sentences that ascribe truth to each other.

Each sentence is ground (no truth predicate) or semantic (its body applies
``True(label)`` to other sentences of the corpus).  A sentence must sit at
least one level above every sentence it calls true or untrue.  Levels exist
exactly when the reference graph is acyclic; a cycle is reported instead.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .propositional import P, PAnd, PIff, PNot, POr

_TRUE_REF = re.compile(r"True\s*\(\s*([^()\s]+)\s*\)")
_BODY_TOKEN = re.compile(r"\s*(<->|->|True\s*\(\s*[^()\s]+\s*\)|[~&|()])")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledSentence:
    label: str
    kind: str  # "ground" | "semantic"
    body: str

    @property
    def refs(self) -> tuple:
        """Labels this sentence applies the truth predicate to, in order of
        first occurrence."""
        return tuple(dict.fromkeys(_TRUE_REF.findall(self.body)))


@dataclass(frozen=True)
class LeveledCorpus:
    sentences: tuple

    def __post_init__(self):
        sentences = tuple(self.sentences)
        object.__setattr__(self, "sentences", sentences)
        labels = [s.label for s in sentences]
        if len(set(labels)) != len(labels):
            raise CorpusError("sentence labels must be unique")
        known = set(labels)
        for s in sentences:
            if s.kind not in ("ground", "semantic"):
                raise CorpusError(f"{s.label}: kind must be 'ground' or 'semantic', got {s.kind!r}")
            if s.kind == "ground" and s.refs:
                raise CorpusError(f"{s.label}: ground sentences may not use the truth predicate")
            if s.kind == "semantic":
                if not s.refs:
                    raise CorpusError(f"{s.label}: semantic sentence without any True(...) reference")
                for ref in s.refs:
                    if ref not in known:
                        raise CorpusError(f"{s.label}: unresolved reference {ref!r}")
                parse_body(s.body)

    def __getitem__(self, label: str) -> LabeledSentence:
        for s in self.sentences:
            if s.label == label:
                return s
        raise KeyError(label)

    @property
    def labels(self) -> list:
        return [s.label for s in self.sentences]

    @classmethod
    def from_list(cls, items) -> "LeveledCorpus":
        try:
            return cls(tuple(LabeledSentence(str(d["label"]), d["kind"], d["body"]) for d in items))
        except (KeyError, TypeError) as exc:
            raise CorpusError(f"malformed corpus entry: {exc}") from exc

    @classmethod
    def load(cls, path: Union[str, Path]) -> "LeveledCorpus":
        with open(path, encoding="utf-8") as fh:
            return cls.from_list(json.load(fh))


@dataclass(frozen=True)
class Stratification:
    levels: Optional[dict]
    cycle: Optional[list]

    @property
    def ok(self) -> bool:
        return self.cycle is None

    def lines(self) -> list:
        if self.ok:
            return [f"{label}: {level}" for label, level in self.levels.items()]
        return ["VIOLATION: semantic closure, reference cycle " + " -> ".join(self.cycle)]


def find_cycle(c: LeveledCorpus) -> Optional[list]:
    """First reference cycle met by depth-first search in corpus order,
    as a closed walk ``[a, b, ..., a]``."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {label: WHITE for label in c.labels}
    refs = {s.label: s.refs for s in c.sentences}
    stack: list = []

    def visit(label):
        color[label] = GREY
        stack.append(label)
        for ref in refs[label]:
            if color[ref] == GREY:
                return stack[stack.index(ref):] + [ref]
            if color[ref] == WHITE:
                found = visit(ref)
                if found:
                    return found
        stack.pop()
        color[label] = BLACK
        return None

    for label in c.labels:
        if color[label] == WHITE:
            found = visit(label)
            if found:
                return found
    return None


def stratify(c: LeveledCorpus) -> Stratification:
    cycle = find_cycle(c)
    if cycle is not None:
        return Stratification(None, cycle)
    refs = {s.label: s.refs for s in c.sentences}
    levels: dict = {}

    def level(label):
        # longest path down to a ground sentence
        if label not in levels:
            levels[label] = 1 + max((level(r) for r in refs[label]), default=-1)
        return levels[label]

    for label in c.labels:
        level(label)
    return Stratification({label: levels[label] for label in c.labels}, None)


def parse_body(body: str):
    """Read a semantic body as a propositional formula over ``True(label)`` atoms."""
    toks = []
    pos = 0
    text = body.rstrip()
    while pos < len(text):
        m = _BODY_TOKEN.match(text, pos)
        if m is None:
            raise CorpusError(f"cannot read body {body!r} at position {pos}")
        toks.append(m.group(1))
        pos = m.end()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take():
        nonlocal i
        if i >= len(toks):
            raise CorpusError(f"unexpected end of body {body!r}")
        i += 1
        return toks[i - 1]

    ops = (("<->", PIff), ("->", None), ("|", POr), ("&", PAnd))

    def binary(level):
        if level == len(ops):
            return unary()
        op, build = ops[level]
        left = binary(level + 1)
        while peek() == op:
            take()
            right = binary(level + 1)
            left = POr(PNot(left), right) if build is None else build(left, right)
        return left

    def unary():
        tok = take()
        if tok == "~":
            return PNot(unary())
        if tok == "(":
            f = binary(0)
            if take() != ")":
                raise CorpusError(f"unbalanced parentheses in {body!r}")
            return f
        m = _TRUE_REF.fullmatch(tok)
        if m:
            return P(f"True({m.group(1)})")
        raise CorpusError(f"unexpected {tok!r} in body {body!r}")

    f = binary(0)
    if peek() is not None:
        raise CorpusError(f"trailing input in body {body!r}")
    return f
