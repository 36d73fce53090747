"""Tarskian truth for finite first-order models, with Gödel coding of syntax,
T-schema checks, truth-level stratification and Kripke-style paradox search."""

from .godel import GodelCode, NotACode, SymbolTable, UnknownCode, code_of_formula, decode, encode, numeral
from .semantics import (
    Assignment,
    Model,
    build_class_model,
    is_true,
    lookup,
    philosophers_model,
    satisfies,
    satisfying_assignments,
)
from .syntax import (
    LCC,
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Iff,
    Implies,
    Not,
    Or,
    Signature,
    Var,
    free_variables,
    is_sentence,
    parse_formula,
    render,
    subformulas,
)

__version__ = "0.1.0"
