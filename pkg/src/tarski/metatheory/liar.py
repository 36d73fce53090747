"""The liar argument as a chain of truth-table certified steps.

``S`` is the sentence ``~True(S)``.  Its T-instance relates the truth of the
quoted sentence to the sentence itself; replacing the quotation by the
co-referring label ``S`` yields the biconditional from which, together with
excluded middle, the contradiction follows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .propositional import P, PAnd, PIff, PNot, POr, prop_entails

TRUE_S = P("True(S)")
TRUE_QUOTED = P("True('~True(S)')")
# 'S' and the quotation name the same sentence.
CO_REFERENCE = PIff(TRUE_QUOTED, TRUE_S)


@dataclass(frozen=True)
class Step:
    number: int
    role: str
    formula: object
    premises: tuple  # step numbers, or "co-reference"
    certified: bool

    def line(self) -> str:
        by = ", ".join(f"({p})" if isinstance(p, int) else p for p in self.premises) or "no premises"
        status = "certified" if self.certified else "NOT CERTIFIED"
        return f"({self.number}) {self.formula}    [{self.role}; from {by}; {status}]"


@dataclass(frozen=True)
class LiarReport:
    steps: tuple

    @property
    def certified(self) -> bool:
        return all(s.certified for s in self.steps)

    def lines(self) -> list:
        out = [s.line() for s in self.steps]
        out.append("contradiction derived" if self.certified else "derivation incomplete")
        return out


def liar_report() -> LiarReport:
    t_instance = PIff(TRUE_QUOTED, PNot(TRUE_S))
    substituted = PIff(TRUE_S, PNot(TRUE_S))
    excluded_middle = POr(TRUE_S, PNot(TRUE_S))
    contradiction = PAnd(TRUE_S, PNot(TRUE_S))

    steps = (
        # an instance of the schema is taken as an assumption
        Step(3, "T-instance", t_instance, (), prop_entails([t_instance], t_instance)),
        Step(4, "substitution of co-referring names", substituted, (3, "co-reference"),
             prop_entails([t_instance, CO_REFERENCE], substituted)),
        Step(5, "excluded middle", excluded_middle, (), prop_entails([], excluded_middle)),
        Step(6, "contradiction", contradiction, (4, 5),
             prop_entails([substituted, excluded_middle], contradiction)),
    )
    return LiarReport(steps)
