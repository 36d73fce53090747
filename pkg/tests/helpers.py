"""Random generators and independent oracles shared by the tests.

The satisfaction oracle evaluates by substitution: free variables are
replaced by names of domain elements and a universal quantifier is checked
by substituting each element in turn.  It never builds or updates an
assignment, so it shares no code path with the assignment-based evaluator.
"""

import itertools
import random

from tarski.semantics import Model
from tarski.syntax import Atom, Const, Forall, Not, Or, Signature, Var


class ElementName:
    """A term that names a domain element directly (used only by the oracle)."""

    def __init__(self, element):
        self.element = element


def substitute(f, k, element):
    if isinstance(f, Atom):
        return Atom(f.predicate, tuple(
            ElementName(element) if isinstance(t, Var) and t.index == k else t for t in f.terms))
    if isinstance(f, Not):
        return Not(substitute(f.sub, k, element))
    if isinstance(f, Or):
        return Or(substitute(f.left, k, element), substitute(f.right, k, element))
    if isinstance(f, Forall):
        if f.var.index == k:
            return f  # k is bound below this point
        return Forall(f.var, substitute(f.body, k, element))
    raise TypeError(f)


def oracle_true_closed(m, f):
    if isinstance(f, Atom):
        values = []
        for t in f.terms:
            if isinstance(t, ElementName):
                values.append(t.element)
            elif isinstance(t, Const):
                values.append(m.constants[t.name])
            else:
                raise AssertionError(f"free variable left after substitution: {t}")
        return tuple(values) in m.predicates[f.predicate]
    if isinstance(f, Not):
        return not oracle_true_closed(m, f.sub)
    if isinstance(f, Or):
        return oracle_true_closed(m, f.left) or oracle_true_closed(m, f.right)
    if isinstance(f, Forall):
        return all(oracle_true_closed(m, substitute(f.body, f.var.index, d)) for d in m.domain)
    raise TypeError(f)


def _free_indices(f, bound=frozenset()):
    if isinstance(f, Atom):
        return {t.index for t in f.terms if isinstance(t, Var) and t.index not in bound}
    if isinstance(f, Not):
        return _free_indices(f.sub, bound)
    if isinstance(f, Or):
        return _free_indices(f.left, bound) | _free_indices(f.right, bound)
    return _free_indices(f.body, bound | {f.var.index})


def oracle_satisfies(m, a, f):
    """Satisfaction of ``f`` by assignment ``a`` (read only through a[k])."""
    for k in sorted(_free_indices(f)):
        f = substitute(f, k, a[k])
    return oracle_true_closed(m, f)


# -- generators -------------------------------------------------------------

def random_signature(rng):
    preds = {"P": 1, "R": 2}
    if rng.random() < 0.5:
        preds["T"] = 3
    consts = {"c", "d"} if rng.random() < 0.5 else set()
    return Signature(preds, frozenset(consts))


def random_model(rng, sig, size=None):
    size = size or rng.randint(1, 3)
    domain = tuple(f"e{i}" for i in range(size))
    preds = {}
    for name, arity in sig.predicates.items():
        tuples = list(itertools.product(domain, repeat=arity))
        preds[name] = {t for t in tuples if rng.random() < 0.5}
    consts = {c: rng.choice(domain) for c in sig.constants}
    return Model(domain, preds, consts, dict(sig.predicates))


def random_term(rng, sig, nvars):
    if sig.constants and rng.random() < 0.2:
        return Const(rng.choice(sorted(sig.constants)))
    return Var(rng.randint(1, nvars))


def random_formula(rng, sig, depth, nvars=3, max_quant=3):
    """Random primitive formula; at most ``max_quant`` nested quantifiers."""
    if depth <= 0 or rng.random() < 0.2:
        name = rng.choice(sorted(sig.predicates))
        return Atom(name, tuple(random_term(rng, sig, nvars) for _ in range(sig.predicates[name])))
    choice = rng.random()
    if choice < 0.3:
        return Not(random_formula(rng, sig, depth - 1, nvars, max_quant))
    if choice < 0.6 or max_quant == 0:
        return Or(random_formula(rng, sig, depth - 1, nvars, max_quant),
                  random_formula(rng, sig, depth - 1, nvars, max_quant))
    return Forall(Var(rng.randint(1, nvars)), random_formula(rng, sig, depth - 1, nvars, max_quant - 1))


def close(f):
    """Universally bind every free variable of ``f``, in index order."""
    for k in sorted(_free_indices(f), reverse=True):
        f = Forall(Var(k), f)
    return f


def quantifier_depth(f):
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.sub)
    if isinstance(f, Or):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    return 1 + quantifier_depth(f.body)


def random_sentence(rng, sig, max_qdepth=3, depth=5, nvars=3):
    """A sentence of quantifier depth at most ``max_qdepth``."""
    while True:
        f = close(random_formula(rng, sig, depth, nvars, max_quant=max_qdepth))
        if quantifier_depth(f) <= max_qdepth:
            return f


def seeded(seed):
    return random.Random(seed)
