import pytest
from hypothesis import given, settings, strategies as st

from tarski.syntax import (
    LCC,
    And,
    ArityError,
    Atom,
    Const,
    Exists,
    Forall,
    Iff,
    Implies,
    LexError,
    Not,
    Or,
    ParseError,
    Signature,
    UnknownSymbolError,
    Var,
    free_variables,
    is_sentence,
    parse_formula,
    render,
    subformula_at,
    subformulas,
)

PHIL = Signature({"Grego": 1, "Filosofo": 1, "Mestre": 2, "I": 2}, frozenset({"aristoteles", "kant"}))

x1, x2, x3 = Var(1), Var(2), Var(3)
I12 = Atom("I", (x1, x2))
SENTENCE_7 = Forall(x1, Forall(x2, I12))


def test_parse_sentence_7():
    assert parse_formula("forall x1 . forall x2 . I(x1,x2)", LCC) == SENTENCE_7


def test_parse_atom():
    assert parse_formula("I(x1,x2)") == I12


def test_arity_mismatch():
    with pytest.raises(ArityError) as exc:
        parse_formula("I(x1)")
    assert (exc.value.expected, exc.value.got) == (2, 1)


def test_unknown_predicate_and_constant():
    with pytest.raises(UnknownSymbolError):
        parse_formula("J(x1,x2)")
    with pytest.raises(UnknownSymbolError):
        parse_formula("Grego(socrates)", PHIL)


def test_lex_error_reports_position():
    with pytest.raises(LexError) as exc:
        parse_formula("I(x1,x2) $ I(x2,x1)")
    assert exc.value.position == 9


def test_parse_error_reports_expected_set():
    with pytest.raises(ParseError) as exc:
        parse_formula("forall I(x1,x2)")
    assert exc.value.position == 7
    assert "variable" in exc.value.expected
    with pytest.raises(ParseError):
        parse_formula("(I(x1,x2)")
    with pytest.raises(ParseError):
        parse_formula("I(x1,x2) I(x1,x2)")
    with pytest.raises(ParseError):
        parse_formula("")


@pytest.mark.parametrize("text", ["I(x0,x1)", "I(x01,x1)", "I(x1000001,x1)"])
def test_variable_index_bounds(text):
    with pytest.raises(LexError):
        parse_formula(text)


def test_variable_index_cap_inclusive():
    assert parse_formula("I(x1000000,x1)") == Atom("I", (Var(10**6), x1))


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature({"P": 0})
    with pytest.raises(ValueError):
        Signature({"P": 1}, frozenset({"P"}))
    with pytest.raises(ValueError):
        Signature({"x1": 1})
    with pytest.raises(ValueError):
        Signature({"forall": 1})


@pytest.mark.parametrize("f, text", [
    (Forall(x1, Atom("Grego", (x1,))), "forall x1 . Grego(x1)"),
    (I12, "I(x1,x2)"),
    (Not(Atom("I", (x1, x1))), "~I(x1,x1)"),
])
def test_render(f, text):
    assert render(f) == text


def test_desugaring():
    p, q = Atom("I", (x1, x2)), Atom("I", (x2, x1))
    assert parse_formula("exists x1 . I(x1,x2)") == Not(Forall(x1, Not(p)))
    assert parse_formula("(I(x1,x2) & I(x2,x1))") == Not(Or(Not(p), Not(q)))
    assert parse_formula("(I(x1,x2) -> I(x2,x1))") == Or(Not(p), q)
    assert parse_formula("I(x1,x2) <-> I(x2,x1)") == Iff(p, q) == And(Implies(p, q), Implies(q, p))
    assert parse_formula("exists x2 . I(x1,x2)") == Exists(x2, p)


def test_precedence_and_associativity():
    a, b, c = (Atom("P", (Var(i),)) for i in (1, 2, 3))
    sig = Signature({"P": 1})
    assert parse_formula("P(x1) | P(x2) & P(x3)", sig) == Or(a, And(b, c))
    assert parse_formula("P(x1) | P(x2) | P(x3)", sig) == Or(Or(a, b), c)
    assert parse_formula("P(x1) -> P(x2) -> P(x3)", sig) == Implies(Implies(a, b), c)
    assert parse_formula("P(x1) -> P(x2) <-> P(x3)", sig) == Iff(Implies(a, b), c)
    assert parse_formula("~P(x1) | P(x2)", sig) == Or(Not(a), b)
    # quantifiers bind weakest: the body runs to the end
    assert parse_formula("forall x1 . P(x1) | P(x2)", sig) == Forall(x1, Or(a, b))
    assert parse_formula("(forall x1 . P(x1)) | P(x2)", sig) == Or(Forall(x1, a), b)
    assert parse_formula("P(x2) | forall x1 . P(x1) | P(x3)", sig) == Or(b, Forall(x1, Or(a, c)))


def test_shadowing_inner_binder_wins():
    f = parse_formula("forall x1 . forall x1 . I(x1,x2)")
    assert free_variables(f) == {x2}


def test_whitespace_insensitive():
    assert parse_formula("forall   x1.forall x2.\n I ( x1 , x2 )") == SENTENCE_7


def test_free_variables_examples():
    assert free_variables(I12) == {x1, x2}
    assert free_variables(Forall(x2, I12)) == {x1}
    assert free_variables(SENTENCE_7) == set()


def test_is_sentence_examples():
    assert is_sentence(SENTENCE_7)
    assert not is_sentence(I12)
    assert is_sentence(Atom("Grego", (Const("aristoteles"),)))


def test_subformulas_of_sentence_7():
    subs = subformulas(SENTENCE_7)
    assert [f for _, f in subs] == [I12, Forall(x2, I12), SENTENCE_7]
    for path, f in subs:
        assert subformula_at(SENTENCE_7, path) == f


def test_subformulas_counts():
    assert len(subformulas(I12)) == 1
    assert len(subformulas(Not(Atom("I", (x1, x1))))) == 2


# -- properties --------------------------------------------------------------

SIG = Signature({"P": 1, "R": 2, "T": 3}, frozenset({"a", "b"}))

terms = st.one_of(st.builds(Var, st.integers(1, 12)), st.sampled_from([Const("a"), Const("b")]))
atoms = st.one_of(
    st.builds(lambda t: Atom("P", (t,)), terms),
    st.builds(lambda s, t: Atom("R", (s, t)), terms, terms),
    st.builds(lambda s, t, u: Atom("T", (s, t, u)), terms, terms, terms),
)


def _extend(children):
    return st.one_of(
        st.builds(Not, children),
        st.builds(Or, children, children),
        st.builds(Forall, st.builds(Var, st.integers(1, 12)), children),
    )


def _depth(f):
    if isinstance(f, Atom):
        return 0
    if isinstance(f, (Not, Forall)):
        return 1 + _depth(f.sub if isinstance(f, Not) else f.body)
    return 1 + max(_depth(f.left), _depth(f.right))


formulas = st.recursive(atoms, _extend, max_leaves=40).filter(lambda f: _depth(f) <= 8)


@settings(max_examples=400)
@given(formulas)
def test_round_trip(f):
    assert parse_formula(render(f), SIG) == f


@settings(max_examples=200)
@given(formulas)
def test_idempotent_printing(f):
    once = render(parse_formula(render(f), SIG))
    assert render(parse_formula(once, SIG)) == once


@given(formulas, st.integers(1, 12))
def test_free_variables_of_forall(f, k):
    assert free_variables(Forall(Var(k), f)) == free_variables(f) - {Var(k)}


@given(formulas)
def test_subformula_count_is_node_count(f):
    def nodes(g):
        if isinstance(g, Atom):
            return 1
        if isinstance(g, Not):
            return 1 + nodes(g.sub)
        if isinstance(g, Forall):
            return 1 + nodes(g.body)
        return 1 + nodes(g.left) + nodes(g.right)

    subs = subformulas(f)
    assert len(subs) == nodes(f)
    assert subs[-1] == ((), f)
