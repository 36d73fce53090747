"""Finite models, variable assignments and the satisfaction relation.

An assignment stands in for an infinite sequence of domain objects: a finite
table of bindings plus one default element returned for every other index.
Quantifiers range over the (finite, non-empty) domain in its listed order.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .syntax import (
    Atom,
    Const,
    Forall,
    Formula,
    Not,
    Or,
    Signature,
    UnknownSymbolError,
    ArityError,
    Var,
    free_variables,
    is_sentence,
)

DEFAULT_ENUMERATION_CAP = 10**6


class ModelError(ValueError):
    pass


class NotASentenceError(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Model:
    domain: tuple
    predicates: Mapping[str, frozenset]
    constants: Mapping[str, str] = field(default_factory=dict)
    # Needed only for predicates whose extension is empty.
    arities: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        domain = tuple(self.domain)
        if not domain:
            raise ModelError("domain must be non-empty")
        if len(set(domain)) != len(domain):
            raise ModelError("domain elements must be distinct")
        members = set(domain)
        preds = {}
        arities = dict(self.arities)
        for name, ext in self.predicates.items():
            tuples = frozenset(tuple(t) for t in ext)
            lengths = {len(t) for t in tuples}
            if name in arities:
                lengths.add(arities[name])
            if len(lengths) > 1:
                raise ModelError(f"predicate {name!r} mixes tuple lengths {sorted(lengths)}")
            if not lengths:
                raise ModelError(f"predicate {name!r} has an empty extension and no declared arity")
            arities[name] = lengths.pop()
            for t in tuples:
                for d in t:
                    if d not in members:
                        raise ModelError(f"predicate {name!r}: {d!r} is not in the domain")
            preds[name] = tuples
        for name, d in self.constants.items():
            if d not in members:
                raise ModelError(f"constant {name!r} denotes {d!r}, which is not in the domain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "predicates", preds)
        object.__setattr__(self, "constants", dict(self.constants))
        object.__setattr__(self, "arities", {k: arities[k] for k in preds})
        try:
            self.signature
        except ValueError as exc:
            raise ModelError(str(exc)) from exc

    @property
    def signature(self) -> Signature:
        return Signature(self.arities, frozenset(self.constants))

    def __hash__(self):
        return hash((self.domain, tuple(sorted(self.predicates.items()))))

    @classmethod
    def from_dict(cls, data: Mapping) -> "Model":
        preds = {}
        for name, ext in data.get("predicates", {}).items():
            preds[name] = [(t,) if isinstance(t, str) else tuple(t) for t in ext]
        return cls(
            tuple(data["domain"]),
            preds,
            dict(data.get("constants", {})),
            dict(data.get("arities", {})),
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Model":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "domain": list(self.domain),
            "predicates": {k: sorted(list(t) for t in v) for k, v in sorted(self.predicates.items())},
            "constants": dict(sorted(self.constants.items())),
            "arities": dict(sorted(self.arities.items())),
        }


@dataclass(frozen=True)
class Assignment:
    """Total map from variable indices to domain elements."""

    bindings: Mapping[int, str]
    default: str

    def __post_init__(self):
        object.__setattr__(self, "bindings", dict(self.bindings))
        for k in self.bindings:
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"variable index must be a positive integer, got {k!r}")

    def __hash__(self):
        return hash((tuple(sorted(self.bindings.items())), self.default))

    def __getitem__(self, k: int) -> str:
        return lookup(self, k)

    def rebind(self, k: int, d: str) -> "Assignment":
        """The assignment differing from this one at most at place ``k``."""
        bindings = dict(self.bindings)
        bindings[k] = d
        return Assignment(bindings, self.default)

    def check(self, m: Model) -> None:
        members = set(m.domain)
        if self.default not in members:
            raise ModelError(f"default {self.default!r} is not in the domain")
        for k, d in self.bindings.items():
            if d not in members:
                raise ModelError(f"x{k} is bound to {d!r}, which is not in the domain")

    @classmethod
    def from_sequence(cls, values: Sequence[str], default: Optional[str] = None) -> "Assignment":
        """Bind x1, x2, ... to ``values`` in order; later places get ``default``."""
        if default is None:
            default = values[-1]
        return cls({i: v for i, v in enumerate(values, start=1)}, default)


def lookup(a: Assignment, k: int) -> str:
    if k < 1:
        raise ValueError(f"variable index must be positive, got {k}")
    return a.bindings.get(k, a.default)


@dataclass(frozen=True)
class TruthVerdict:
    value: bool
    # (variable index, element) deciding the outermost quantifier, if any
    witness: Optional[tuple] = None


def _denote(m: Model, a: Assignment, t) -> str:
    if isinstance(t, Var):
        return lookup(a, t.index)
    if isinstance(t, Const):
        try:
            return m.constants[t.name]
        except KeyError:
            raise UnknownSymbolError("constant", t.name) from None
    raise TypeError(f"not a term: {t!r}")


def satisfies(m: Model, a: Assignment, f: Formula) -> bool:
    if isinstance(f, Atom):
        try:
            ext = m.predicates[f.predicate]
        except KeyError:
            raise UnknownSymbolError("predicate", f.predicate) from None
        if len(f.terms) != m.arities[f.predicate]:
            raise ArityError(f.predicate, m.arities[f.predicate], len(f.terms))
        return tuple(_denote(m, a, t) for t in f.terms) in ext
    if isinstance(f, Not):
        return not satisfies(m, a, f.sub)
    if isinstance(f, Or):
        return satisfies(m, a, f.left) or satisfies(m, a, f.right)
    if isinstance(f, Forall):
        k = f.var.index
        return all(satisfies(m, a.rebind(k, d), f.body) for d in m.domain)
    raise TypeError(f"not a formula: {f!r}")


def verdict(m: Model, a: Assignment, f: Formula) -> TruthVerdict:
    """Like :func:`satisfies`, also naming the element that settles an
    outermost universal (a counterexample) or negated universal (a witness)."""
    value = satisfies(m, a, f)
    inner = f
    while isinstance(inner, Not):
        inner = inner.sub
    if isinstance(inner, Forall):
        k = inner.var.index
        for d in m.domain:
            if not satisfies(m, a.rebind(k, d), inner.body):
                return TruthVerdict(value, (k, d))
    return TruthVerdict(value)


def is_true(m: Model, s: Formula) -> bool:
    # A sentence is satisfied by all assignments or by none, so one suffices.
    if not is_sentence(s):
        raise NotASentenceError("truth is defined for sentences only; free variables: "
                                + ", ".join(str(v) for v in sorted(free_variables(s))))
    return satisfies(m, Assignment({}, m.domain[0]), s)


def satisfying_assignments(m: Model, f: Formula, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """Bindings of the free variables of ``f`` (as ``{index: element}``) that
    satisfy it, in lexicographic domain order."""
    ks = sorted(v.index for v in free_variables(f))
    if len(m.domain) ** len(ks) > cap:
        raise EnumerationCapExceeded(
            f"{len(m.domain)}^{len(ks)} candidate bindings exceeds the cap of {cap}")
    out = []
    for values in itertools.product(m.domain, repeat=len(ks)):
        binding = dict(zip(ks, values))
        if satisfies(m, Assignment(binding, m.domain[0]), f):
            out.append(binding)
    return out


# -- preset models ---------------------------------------------------------

MAX_CLASS_RANK = 3


def render_set(s: frozenset) -> str:
    return "{" + ",".join(sorted((render_set(x) for x in s), key=_set_key)) + "}"


def _set_key(text: str):
    return (len(text), text)


def hereditarily_finite_sets(rank: int) -> list:
    """Sets of rank at most ``rank``: rank 0 is just the empty set, each
    further rank adds every subset of the previous level."""
    level = {frozenset()}
    for _ in range(rank):
        items = list(level)
        level = {
            frozenset(itertools.compress(items, mask))
            for mask in itertools.product((0, 1), repeat=len(items))
        }
    return sorted(level, key=lambda s: _set_key(render_set(s)))


def build_class_model(rank: int) -> Model:
    """Hereditarily finite sets with ``I`` read as inclusion."""
    if not isinstance(rank, int) or not 0 <= rank <= MAX_CLASS_RANK:
        raise ValueError(f"class-model rank must be an integer in 0..{MAX_CLASS_RANK}, got {rank!r}")
    sets = hereditarily_finite_sets(rank)
    names = {s: render_set(s) for s in sets}
    inclusion = {(names[s], names[t]) for s in sets for t in sets if s <= t}
    return Model(tuple(names[s] for s in sets), {"I": inclusion}, {}, {"I": 2})


SOCRATES, PLATO, ARISTOTLE, KANT = "Sócrates", "Platão", "Aristóteles", "Kant"


def philosophers_model() -> Model:
    return Model(
        (SOCRATES, PLATO, ARISTOTLE, KANT),
        {
            "Filosofo": {(SOCRATES,), (PLATO,), (ARISTOTLE,), (KANT,)},
            "Grego": {(SOCRATES,), (PLATO,), (ARISTOTLE,)},
            "Mestre": {(SOCRATES, PLATO), (PLATO, ARISTOTLE)},
            "Discipulo": {(PLATO, SOCRATES), (ARISTOTLE, PLATO)},
        },
        {"socrates": SOCRATES, "platao": PLATO, "aristoteles": ARISTOTLE, "kant": KANT},
    )


# The four sequences tabulated for the philosophers' domain (places x1..x5).
SEQUENCE_TABLE = {
    "f1": (SOCRATES, PLATO, ARISTOTLE, PLATO, PLATO),
    "f2": (SOCRATES, SOCRATES, KANT, ARISTOTLE, KANT),
    "f3": (ARISTOTLE, PLATO, SOCRATES, KANT, SOCRATES),
    "f4": (PLATO, ARISTOTLE, PLATO, ARISTOTLE, ARISTOTLE),
}


def table_sequence(name: str) -> Assignment:
    return Assignment.from_sequence(SEQUENCE_TABLE[name])
