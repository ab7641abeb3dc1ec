"""Finite-automaton autograding toolkit.

Validate hand-drawn DFAs/NFAs against drawing conventions, decide language
equality with a reference solution, award density-difference partial
credit, and produce witness-string feedback. Ships as a library, a CLI
(``fsmgrader``), and an HTTP grading service.
"""

from .automata import (
    EPSILON,
    Alphabet,
    Dfa,
    Nfa,
    accepts,
    complement,
    epsilon_closure,
    minimize,
    nfa_to_dfa,
    product,
    trace,
)
from .counting import WordCountTable, count_words, enumerate_shortlex
from .equivalence import (
    INCORRECTLY_ACCEPTED,
    INCORRECTLY_REJECTED,
    WitnessString,
    equivalent,
    shortest_witness,
)
from .errors import (
    AlphabetMismatchError,
    DocumentParseError,
    DocumentSchemaError,
    FsmError,
    QuestionBankError,
    RegexParseError,
)
from .grading import (
    DFA_NONDETERMINISM,
    EMPTY_OR_DUPLICATE_STATE_NAME,
    INVALID_TRANSITION_SYMBOL,
    MISSING_TRANSITION,
    NON_ACCESSIBLE_STATE,
    START_STATE_COUNT,
    FeedbackReport,
    GradeResult,
    PartialCreditResult,
    ValidationError,
    ValidationReport,
    build_feedback,
    canonicalize,
    grade,
    grade_result_to_json,
    partial_credit,
    reference_dfa,
    validate,
)
from .question_format import (
    FsmDocument,
    QuestionConfig,
    document_from_value,
    document_to_value,
    load_question_bank,
    parse_fsm,
    parse_question_config,
    serialize_fsm,
)
from .regex import regex_to_nfa

__version__ = "0.1.0"

__all__ = [
    "EPSILON",
    "Alphabet",
    "Dfa",
    "Nfa",
    "accepts",
    "complement",
    "epsilon_closure",
    "minimize",
    "nfa_to_dfa",
    "product",
    "trace",
    "WordCountTable",
    "count_words",
    "enumerate_shortlex",
    "INCORRECTLY_ACCEPTED",
    "INCORRECTLY_REJECTED",
    "WitnessString",
    "equivalent",
    "shortest_witness",
    "AlphabetMismatchError",
    "DocumentParseError",
    "DocumentSchemaError",
    "FsmError",
    "QuestionBankError",
    "RegexParseError",
    "EMPTY_OR_DUPLICATE_STATE_NAME",
    "START_STATE_COUNT",
    "NON_ACCESSIBLE_STATE",
    "INVALID_TRANSITION_SYMBOL",
    "MISSING_TRANSITION",
    "DFA_NONDETERMINISM",
    "FeedbackReport",
    "GradeResult",
    "PartialCreditResult",
    "ValidationError",
    "ValidationReport",
    "build_feedback",
    "canonicalize",
    "grade",
    "grade_result_to_json",
    "partial_credit",
    "reference_dfa",
    "validate",
    "FsmDocument",
    "QuestionConfig",
    "document_from_value",
    "document_to_value",
    "load_question_bank",
    "parse_fsm",
    "parse_question_config",
    "serialize_fsm",
    "regex_to_nfa",
    "__version__",
]
