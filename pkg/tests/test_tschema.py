import pytest

from helpers import random_model, random_sentence, random_signature, seeded
from tarski.godel import SymbolTable, decode_string, from_decimal
from tarski.metatheory import (
    Naming,
    TSchemaError,
    finite_truth_definition,
    named_text,
    t_instance,
    verify_material_adequacy,
)
from tarski.semantics import build_class_model, philosophers_model
from tarski.syntax import parse_formula, render

PHIL = philosophers_model()


def phil(text):
    return parse_formula(text, PHIL.signature)


def test_quote_instance():
    inst = t_instance(phil("Grego(aristoteles)"), Naming.QUOTE)
    assert inst.display == "True('Grego(aristoteles)') <-> Grego(aristoteles)"


def test_quote_instance_sentence_7():
    s = parse_formula("forall x1 . forall x2 . I(x1,x2)")
    inst = t_instance(s)
    assert inst.display == "True('forall x1 . forall x2 . I(x1,x2)') <-> forall x1 . forall x2 . I(x1,x2)"
    assert named_text(inst) == inst.content == render(s)


def test_godel_instance_names_the_sentence():
    s = phil("forall x1 . (Grego(x1) | ~Mestre(x1,kant))")
    inst = t_instance(s, Naming.GODEL)
    assert inst.name.isdigit()
    assert decode_string(SymbolTable.default(), from_decimal(inst.name)) == render(s)
    assert inst.display == f"True({inst.name}) <-> {render(s)}"


def test_instance_rejects_open_formula():
    with pytest.raises(TSchemaError):
        t_instance(phil("Grego(x1)"))


def test_naming_faithfulness_property():
    rng = seeded(41)
    for _ in range(100):
        sig = random_signature(rng)
        s = random_sentence(rng, sig)
        for naming in Naming:
            assert named_text(t_instance(s, naming)) == render(s)


def test_two_sentence_definition_shape():
    d = finite_truth_definition([("'a neve é branca'", "a neve é branca"),
                                 ("'a grama é verde'", "a grama é verde")])
    assert d.display == ("forall x . (True(x) <-> (x = 'a neve é branca' & a neve é branca)"
                         " | (x = 'a grama é verde' & a grama é verde))")


def test_definition_sizes():
    one = finite_truth_definition([("'p'", "p")])
    assert " | " not in one.display
    three = finite_truth_definition([("'p'", "p"), ("'q'", "q"), ("'r'", "r")])
    assert three.definiens == "(x = 'p' & p) | (x = 'q' & q) | (x = 'r' & r)"


def test_definition_errors():
    with pytest.raises(TSchemaError):
        finite_truth_definition([])
    with pytest.raises(TSchemaError):
        finite_truth_definition([("'p'", "p"), ("'p'", "q")])


def test_adequacy_philosophers():
    d = finite_truth_definition([phil("forall x1 . Filosofo(x1)"), phil("forall x1 . Grego(x1)")])
    report = verify_material_adequacy(d, PHIL)
    assert [(r.definitional, r.direct) for r in report.rows] == [(True, True), (False, False)]
    assert report.passed and report.disagreements == []


def test_adequacy_class_model_sentence_7():
    d = finite_truth_definition([parse_formula("forall x1 . forall x2 . I(x1,x2)")])
    (row,) = verify_material_adequacy(d, build_class_model(1)).rows
    assert (row.definitional, row.direct) == (False, False)


def test_adequacy_rejects_signature_mismatch_and_text():
    d = finite_truth_definition([parse_formula("forall x1 . I(x1,x1)")])
    with pytest.raises(ValueError):
        verify_material_adequacy(d, PHIL)
    with pytest.raises(TSchemaError):
        verify_material_adequacy(finite_truth_definition([("'p'", "p")]), PHIL)


def test_adequacy_agreement_property():
    rng = seeded(42)
    for _ in range(30):
        sig = random_signature(rng)
        m = random_model(rng, sig)
        sentences = {random_sentence(rng, sig) for _ in range(8)}
        report = verify_material_adequacy(finite_truth_definition(sorted(sentences, key=render)), m)
        assert report.passed
