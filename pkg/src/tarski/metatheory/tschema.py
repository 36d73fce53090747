"""T-schema instances, finite disjunctive truth definitions and a check that
such a definition agrees with direct evaluation on a model."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .. import godel
from ..semantics import Model, is_true
from ..syntax import Formula, check_formula, is_sentence, open_right, render


class Naming(enum.Enum):
    QUOTE = "quote"
    GODEL = "godel"


class TSchemaError(ValueError):
    pass


@dataclass(frozen=True)
class TInstance:
    name: str
    sentence: Formula
    naming: Naming

    @property
    def content(self) -> str:
        return render(self.sentence)

    @property
    def display(self) -> str:
        return f"True({self.name}) <-> {self.content}"

    def __str__(self):
        return self.display


def quote(text: str) -> str:
    return f"'{text}'"


def t_instance(s: Formula, naming: Naming = Naming.QUOTE, table: Optional[godel.SymbolTable] = None) -> TInstance:
    if not is_sentence(s):
        raise TSchemaError(f"T-instances are formed for sentences only, not {render(s)!r}")
    if naming is Naming.QUOTE:
        name = quote(render(s))
    else:
        name = str(godel.code_of_formula(table or godel.SymbolTable.default(), s))
    return TInstance(name, s, naming)


def named_text(inst: TInstance, table: Optional[godel.SymbolTable] = None) -> str:
    """Recover the text of the sentence that the name side of ``inst`` names."""
    if inst.naming is Naming.QUOTE:
        if len(inst.name) < 2 or inst.name[0] != "'" or inst.name[-1] != "'":
            raise TSchemaError(f"not a quotation name: {inst.name!r}")
        return inst.name[1:-1]
    return godel.decode_string(table or godel.SymbolTable.default(), godel.from_decimal(inst.name))


Sentence = Union[Formula, str]


def _text(s: Sentence) -> str:
    return s if isinstance(s, str) else render(s)


@dataclass(frozen=True)
class FiniteTruthDefinition:
    pairs: tuple = field()

    @property
    def names(self) -> list:
        return [name for name, _ in self.pairs]

    def disjunct(self, name: str, sentence: Sentence) -> str:
        content = _text(sentence)
        if not isinstance(sentence, str) and open_right(sentence):
            content = f"({content})"
        return f"(x = {name} & {content})"

    @property
    def definiens(self) -> str:
        return " | ".join(self.disjunct(n, s) for n, s in self.pairs)

    @property
    def display(self) -> str:
        return f"forall x . (True(x) <-> {self.definiens})"

    def __str__(self):
        return self.display


def finite_truth_definition(pairs: Sequence) -> FiniteTruthDefinition:
    """``pairs`` are ``(name, sentence)``; sentences are formulas or plain text.

    A bare formula (not a pair) is named by its quotation.
    """
    normalized = []
    for item in pairs:
        if isinstance(item, tuple):
            name, sentence = item
        else:
            name, sentence = quote(_text(item)), item
        normalized.append((name, sentence))
    if not normalized:
        raise TSchemaError("a truth definition needs at least one sentence")
    seen = set()
    for name, _ in normalized:
        if name in seen:
            raise TSchemaError(f"duplicate sentence name {name!r}")
        seen.add(name)
    return FiniteTruthDefinition(tuple(normalized))


@dataclass(frozen=True)
class AdequacyRow:
    name: str
    sentence: Formula
    definitional: bool
    direct: bool

    @property
    def agrees(self) -> bool:
        return self.definitional == self.direct


@dataclass(frozen=True)
class AdequacyReport:
    rows: tuple

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agrees]

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def lines(self) -> list:
        out = [
            f"{'agree' if r.agrees else 'DISAGREE'}\t{r.name}\tdefinition={str(r.definitional).lower()}"
            f"\tdirect={str(r.direct).lower()}"
            for r in self.rows
        ]
        out.append("PASS" if self.passed else f"FAIL: {len(self.disagreements)} disagreement(s)")
        return out


def verify_material_adequacy(d: FiniteTruthDefinition, m: Model) -> AdequacyReport:
    """Compare, for each listed sentence, the verdict the definition yields
    when ``x`` is that sentence's name against direct evaluation on ``m``."""
    for name, s in d.pairs:
        if isinstance(s, str):
            raise TSchemaError(f"{name} is plain text; adequacy needs formulas")
        check_formula(s, m.signature)
        if not is_sentence(s):
            raise TSchemaError(f"{name} is not a sentence")
    rows = []
    for name, s in d.pairs:
        # Instantiate the definiens at x := name, evaluating each disjunct.
        definitional = any(other == name and is_true(m, body) for other, body in d.pairs)
        rows.append(AdequacyRow(name, s, definitional, is_true(m, s)))
    return AdequacyReport(tuple(rows))
