"""Object-language syntax: signatures, terms, formulas, parser and printer.

Concrete grammar (whitespace between tokens is ignored)::

    formula  := quant | iff
    quant    := ("forall" | "exists") VAR "." formula
    iff      := imp ("<->" imp)*
    imp      := or ("->" or)*
    or       := and ("|" and)*
    and      := unary ("&" unary)*
    unary    := "~" unary | quant | atom | "(" formula ")"
    atom     := NAME "(" term ("," term)* ")"
    term     := VAR | NAME

Variables are written ``x1``, ``x2``, ...  Binary connectives associate to the
left and quantifier bodies extend as far to the right as possible.  ``&``,
``->``, ``<->`` and ``exists`` are desugared while parsing, so every
:class:`Formula` is built from :class:`Atom`, :class:`Not`, :class:`Or` and
:class:`Forall` only.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Mapping, Optional, Union

MAX_VARIABLE_INDEX = 10**6

KEYWORDS = frozenset({"forall", "exists"})
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_VARIABLE_RE = re.compile(r"x[0-9]+\Z")


class SyntaxErrorBase(ValueError):
    """Base class for every error raised while reading formulas."""


class LexError(SyntaxErrorBase):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"unknown token {char!r} at position {position}")


class ParseError(SyntaxErrorBase):
    def __init__(self, found: str, position: int, expected):
        self.found = found
        self.position = position
        self.expected = frozenset(expected)
        wanted = ", ".join(sorted(self.expected))
        super().__init__(f"unexpected {found} at position {position}; expected one of: {wanted}")


class ArityError(SyntaxErrorBase):
    def __init__(self, predicate: str, expected: int, got: int):
        self.predicate = predicate
        self.expected = expected
        self.got = got
        super().__init__(f"arity mismatch: {predicate} expects {expected}, got {got}")


class UnknownSymbolError(SyntaxErrorBase):
    def __init__(self, kind: str, name: str):
        self.kind = kind
        self.name = name
        super().__init__(f"unknown {kind} {name!r}")


def _is_plain_name(name: str) -> bool:
    return bool(_NAME_RE.match(name)) and name not in KEYWORDS and not _VARIABLE_RE.match(name)


@dataclass(frozen=True)
class Signature:
    """Relational vocabulary: predicate arities plus individual constants."""

    predicates: Mapping[str, int]
    constants: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "predicates", dict(self.predicates))
        object.__setattr__(self, "constants", frozenset(self.constants))
        for name, arity in self.predicates.items():
            if not _is_plain_name(name):
                raise ValueError(f"bad predicate name {name!r}")
            if not isinstance(arity, int) or isinstance(arity, bool) or arity < 1:
                raise ValueError(f"predicate {name!r} needs a positive integer arity, got {arity!r}")
        for name in self.constants:
            if not _is_plain_name(name):
                raise ValueError(f"bad constant name {name!r}")
        clash = self.constants & self.predicates.keys()
        if clash:
            raise ValueError(f"names used both as predicate and constant: {sorted(clash)}")

    def __hash__(self):
        return hash((tuple(sorted(self.predicates.items())), self.constants))

    @classmethod
    def from_dict(cls, data: Mapping) -> "Signature":
        return cls(dict(data.get("predicates", {})), frozenset(data.get("constants", [])))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Signature":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {"predicates": dict(sorted(self.predicates.items())), "constants": sorted(self.constants)}


# The language of the calculus of classes: one binary predicate, no constants.
LCC = Signature({"I": 2})


# -- terms -----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Var:
    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"variable index must be a positive integer, got {self.index!r}")

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Union[Var, Const]


# -- formulas --------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    predicate: str
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class Not:
    sub: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Var
    body: "Formula"


Formula = Union[Atom, Not, Or, Forall]


def And(a: Formula, b: Formula) -> Formula:
    return Not(Or(Not(a), Not(b)))


def Implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def Iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def Exists(var: Var, body: Formula) -> Formula:
    return Not(Forall(var, Not(body)))


# -- structural queries ----------------------------------------------------

def free_variables(f: Formula) -> frozenset:
    if isinstance(f, Atom):
        return frozenset(t for t in f.terms if isinstance(t, Var))
    if isinstance(f, Not):
        return free_variables(f.sub)
    if isinstance(f, Or):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, Forall):
        return free_variables(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_variables(f)


def subformulas(f: Formula, path: tuple = ()) -> list:
    """All ``(path, subformula)`` pairs in post-order, ``f`` itself last.

    A path is the tuple of child indices leading from the root: ``0`` for
    the operand of ``Not``/``Forall`` and the left disjunct, ``1`` for the
    right disjunct.
    """
    out = []
    for i, child in enumerate(_children(f)):
        out.extend(subformulas(child, path + (i,)))
    out.append((path, f))
    return out


def _children(f: Formula) -> tuple:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, Not):
        return (f.sub,)
    if isinstance(f, Or):
        return (f.left, f.right)
    if isinstance(f, Forall):
        return (f.body,)
    raise TypeError(f"not a formula: {f!r}")


def subformula_at(f: Formula, path: tuple) -> Formula:
    for i in path:
        f = _children(f)[i]
    return f


def predicates_used(f: Formula) -> dict:
    """Map each predicate occurring in ``f`` to the number of its arguments."""
    return {p.predicate: len(p.terms) for _, p in subformulas(f) if isinstance(p, Atom)}


def constants_used(f: Formula) -> frozenset:
    return frozenset(
        t.name for _, p in subformulas(f) if isinstance(p, Atom) for t in p.terms if isinstance(t, Const)
    )


def check_formula(f: Formula, sig: Signature) -> None:
    """Raise unless every predicate and constant of ``f`` is declared in ``sig``."""
    for _, sub in subformulas(f):
        if isinstance(sub, Atom):
            _check_atom(sub.predicate, sub.terms, sig)


def _check_atom(name: str, terms, sig: Signature) -> None:
    if name not in sig.predicates:
        raise UnknownSymbolError("predicate", name)
    if len(terms) != sig.predicates[name]:
        raise ArityError(name, sig.predicates[name], len(terms))
    for t in terms:
        if isinstance(t, Const) and t.name not in sig.constants:
            raise UnknownSymbolError("constant", t.name)


# -- printing --------------------------------------------------------------

def render(f: Formula) -> str:
    """Canonical text; ``parse_formula(render(f), sig) == f``."""
    if isinstance(f, Atom):
        return f"{f.predicate}({','.join(str(t) for t in f.terms)})"
    if isinstance(f, Not):
        return "~" + render(f.sub)
    if isinstance(f, Or):
        left = render(f.left)
        if open_right(f.left):
            # a trailing quantifier body would swallow "| ..."
            left = f"({left})"
        return f"({left} | {render(f.right)})"
    if isinstance(f, Forall):
        return f"forall {f.var} . {render(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def open_right(f: Formula) -> bool:
    while isinstance(f, Not):
        f = f.sub
    return isinstance(f, Forall)


# -- lexing ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->|[~|&().,])
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "op", "var", "name", "kw", "eof"
    text: str
    position: int
    value: Optional[int] = field(default=None, compare=False)


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LexError(text[pos], pos)
        kind = m.lastgroup
        tok = m.group()
        if kind == "op":
            tokens.append(Token("op", tok, pos))
        elif kind == "word":
            if tok in KEYWORDS:
                tokens.append(Token("kw", tok, pos))
            elif _VARIABLE_RE.match(tok):
                index = int(tok[1:])
                if index < 1 or index > MAX_VARIABLE_INDEX or tok[1] == "0":
                    raise LexError(tok, pos)
                tokens.append(Token("var", tok, pos, index))
            else:
                tokens.append(Token("name", tok, pos))
        pos = m.end()
    tokens.append(Token("eof", "end of input", len(text)))
    return tokens


# -- parsing ---------------------------------------------------------------

class _Parser:
    # Binary levels from weakest to strongest binding.
    LEVELS = (
        ("<->", Iff),
        ("->", Implies),
        ("|", Or),
        ("&", And),
    )

    def __init__(self, text: str, sig: Optional[Signature]):
        self.tokens = tokenize(text)
        self.pos = 0
        self.sig = sig
        # arities seen so far when no signature is given
        self.seen: dict = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(found, tok.position, expected)

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            return self.advance()
        self.fail({text})

    def parse(self) -> Formula:
        f = self.formula()
        if self.peek().kind != "eof":
            self.fail({"end of input", "<->", "->", "|", "&"})
        return f

    def formula(self) -> Formula:
        return self.binary(0)

    def binary(self, level: int) -> Formula:
        if level == len(self.LEVELS):
            return self.unary()
        op, build = self.LEVELS[level]
        left = self.binary(level + 1)
        while self.peek().kind == "op" and self.peek().text == op:
            self.advance()
            left = build(left, self.binary(level + 1))
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "~":
            self.advance()
            return Not(self.unary())
        if tok.kind == "kw":
            return self.quantified()
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if tok.kind == "name":
            return self.atom()
        self.fail({"~", "(", "forall", "exists", "predicate name"})

    def quantified(self) -> Formula:
        kw = self.advance()
        var_tok = self.peek()
        if var_tok.kind != "var":
            self.fail({"variable"})
        self.advance()
        self.expect(".")
        body = self.formula()
        var = Var(var_tok.value)
        return Forall(var, body) if kw.text == "forall" else Exists(var, body)

    def atom(self) -> Formula:
        name_tok = self.advance()
        self.expect("(")
        terms = [self.term()]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.advance()
            terms.append(self.term())
        self.expect(")")
        name = name_tok.text
        if self.sig is not None:
            _check_atom(name, terms, self.sig)
        else:
            arity = self.seen.setdefault(name, len(terms))
            if arity != len(terms):
                raise ArityError(name, arity, len(terms))
        return Atom(name, tuple(terms))

    def term(self) -> Term:
        tok = self.peek()
        if tok.kind == "var":
            self.advance()
            return Var(tok.value)
        if tok.kind == "name":
            self.advance()
            return Const(tok.text)
        self.fail({"variable", "constant"})


def parse_formula(text: str, sig: Optional[Signature] = LCC) -> Formula:
    """Parse ``text`` against ``sig``.

    With ``sig=None`` any predicate and constant is accepted, provided each
    predicate is used with a single arity throughout the text.
    """
    return _Parser(text, sig).parse()


def is_well_formed(text: str, sig: Optional[Signature] = None) -> bool:
    try:
        parse_formula(text, sig)
    except SyntaxErrorBase:
        return False
    return True


def iter_variables(f: Formula) -> Iterator[Var]:
    """Every variable occurrence, bound or free, including binders."""
    for _, sub in subformulas(f):
        if isinstance(sub, Atom):
            yield from (t for t in sub.terms if isinstance(t, Var))
        elif isinstance(sub, Forall):
            yield sub.var


def ast_repr(f: Formula) -> str:
    """Constructor-style dump of the tree, e.g. ``Forall(x1, Atom(I, [x1, x2]))``."""
    if isinstance(f, Atom):
        return f"Atom({f.predicate}, [{', '.join(str(t) for t in f.terms)}])"
    if isinstance(f, Not):
        return f"Not({ast_repr(f.sub)})"
    if isinstance(f, Or):
        return f"Or({ast_repr(f.left)}, {ast_repr(f.right)})"
    if isinstance(f, Forall):
        return f"Forall({f.var}, {ast_repr(f.body)})"
    raise TypeError(f"not a formula: {f!r}")
