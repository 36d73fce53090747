from .hierarchy import CorpusError, LabeledSentence, LeveledCorpus, Stratification, parse_body, stratify
from .liar import LiarReport, liar_report
from .propositional import (
    P,
    PAnd,
    PIff,
    PNot,
    POr,
    AtomBudgetExceeded,
    is_tautology,
    prop_entails,
    prop_satisfiable,
)
from .tschema import (
    AdequacyReport,
    FiniteTruthDefinition,
    Naming,
    TInstance,
    TSchemaError,
    finite_truth_definition,
    named_text,
    quote,
    t_instance,
    verify_material_adequacy,
)
