"""Truth-table engine for sentential reasoning about truth ascriptions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Union

MAX_ATOMS = 20


class AtomBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class P:
    """Propositional atom."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class PNot:
    sub: "PropFormula"

    def __str__(self):
        return f"~{self.sub}"


@dataclass(frozen=True)
class POr:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class PAnd:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class PIff:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return f"({self.left} <-> {self.right})"


PropFormula = Union[P, PNot, POr, PAnd, PIff]


def atoms(f: PropFormula) -> frozenset:
    if isinstance(f, P):
        return frozenset({f.name})
    if isinstance(f, PNot):
        return atoms(f.sub)
    return atoms(f.left) | atoms(f.right)


def evaluate(f: PropFormula, row: dict) -> bool:
    if isinstance(f, P):
        return row[f.name]
    if isinstance(f, PNot):
        return not evaluate(f.sub, row)
    if isinstance(f, POr):
        return evaluate(f.left, row) or evaluate(f.right, row)
    if isinstance(f, PAnd):
        return evaluate(f.left, row) and evaluate(f.right, row)
    if isinstance(f, PIff):
        return evaluate(f.left, row) == evaluate(f.right, row)
    raise TypeError(f"not a propositional formula: {f!r}")


def rows(names: Iterable[str]):
    """Every valuation of ``names``, in truth-table order (all-false first)."""
    names = sorted(names)
    if len(names) > MAX_ATOMS:
        raise AtomBudgetExceeded(f"{len(names)} atoms exceeds the budget of {MAX_ATOMS}")
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def prop_satisfiable(f: PropFormula) -> tuple:
    """``(True, row)`` for the first satisfying row, else ``(False, None)``."""
    for row in rows(atoms(f)):
        if evaluate(f, row):
            return True, row
    return False, None


def is_tautology(f: PropFormula) -> bool:
    return all(evaluate(f, row) for row in rows(atoms(f)))


def prop_entails(premises, conclusion: PropFormula) -> bool:
    return countermodel(premises, conclusion) is None


def countermodel(premises, conclusion: PropFormula) -> Optional[dict]:
    premises = list(premises)
    names = atoms(conclusion).union(*(atoms(p) for p in premises))
    for row in rows(names):
        if all(evaluate(p, row) for p in premises) and not evaluate(conclusion, row):
            return row
    return None
