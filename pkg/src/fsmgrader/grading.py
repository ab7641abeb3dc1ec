"""The grading pipeline: conventions, equivalence, partial credit, feedback.

A submission is graded in four stages. Convention validation reports every
violated drawing rule with references to the offending elements so a canvas
can highlight them. Clean submissions are canonicalized to a total DFA and
checked for language equality with the reference; equal means full credit.
Unequal submissions get a partial-credit score from the density difference
between the two languages, plus feedback listing the first misclassified
words in shortlex order and, for the first word the submission wrongly
accepts, the run it takes through the submitted machine.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .automata import (
    EPSILON,
    Dfa,
    Nfa,
    accepts,
    minimize,
    nfa_to_dfa,
    product,
    trace,
)
from .counting import count_words, enumerate_shortlex
from .equivalence import (
    INCORRECTLY_ACCEPTED,
    INCORRECTLY_REJECTED,
    WitnessString,
    equivalent,
    shortest_witness,
)
from .question_format import FsmDocument, FsmType, QuestionConfig, document_from_value, parse_fsm
from .regex import regex_to_nfa

# Drawing-convention error codes, in the order the rules are checked.
EMPTY_OR_DUPLICATE_STATE_NAME = "EMPTY_OR_DUPLICATE_STATE_NAME"
START_STATE_COUNT = "START_STATE_COUNT"
NON_ACCESSIBLE_STATE = "NON_ACCESSIBLE_STATE"
INVALID_TRANSITION_SYMBOL = "INVALID_TRANSITION_SYMBOL"
MISSING_TRANSITION = "MISSING_TRANSITION"
DFA_NONDETERMINISM = "DFA_NONDETERMINISM"

# A highlightable element: a state name, or a (state, symbol, state) triple.
ElementRef = Union[str, tuple[str, str, str]]


@dataclass(frozen=True)
class ValidationError:
    code: str
    message: str
    element_refs: tuple[ElementRef, ...]


@dataclass(frozen=True)
class ValidationReport:
    """All convention violations, ordered by rule then element."""

    errors: tuple[ValidationError, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.errors)

    def __iter__(self):
        return iter(self.errors)

    def __len__(self) -> int:
        return len(self.errors)


@dataclass(frozen=True)
class LengthBreakdown:
    """One summand of the density difference, at a single word length."""

    length: int
    mismatched: int
    reference_count: int
    ratio: Fraction


@dataclass(frozen=True)
class PartialCreditResult:
    """Density difference between submission and reference languages.

    ``k`` is the state count of the minimal DFA for the reference language;
    lengths 0..2k each contribute the ratio of misclassified words to
    reference words of that length (denominator clamped to 1), and the
    density difference is the exact mean of those 2k+1 ratios. The score is
    1 - density, clamped at 0.
    """

    density_difference: Fraction
    k: int
    per_length: tuple[LengthBreakdown, ...]
    score: float


@dataclass(frozen=True)
class FeedbackReport:
    witnesses: tuple[WitnessString, ...]
    accepted_trace: tuple[str, ...] | None
    validation: ValidationReport


@dataclass(frozen=True)
class GradeResult:
    valid: bool
    score: float
    equivalent: bool
    partial_credit: PartialCreditResult | None
    feedback: FeedbackReport


Submission = Union[str, dict, FsmDocument]


def _as_document(submission: Submission, fsm_type: FsmType) -> FsmDocument:
    if isinstance(submission, FsmDocument):
        return submission
    if isinstance(submission, str):
        return parse_fsm(submission, fsm_type)
    return document_from_value(submission, fsm_type)


def validate(submission: Submission, config: QuestionConfig) -> ValidationReport:
    """Check the six drawing conventions; nothing raises, all are reported.

    Every violated rule is reported (not only the first), in rule order,
    each carrying the state names or transition triples to highlight.
    """
    doc = _as_document(submission, config.fsm_type)
    errors: list[ValidationError] = []

    # 1. state names nonempty and unique
    seen: set[str] = set()
    flagged: set[str] = set()
    for name in doc.states:
        if name == "" or (name in seen and name not in flagged):
            flagged.add(name)
        seen.add(name)
    for name in sorted(flagged):
        message = (
            "state names must be nonempty"
            if name == ""
            else f"state name {name!r} is used more than once"
        )
        errors.append(ValidationError(EMPTY_OR_DUPLICATE_STATE_NAME, message, (name,)))

    # 2. exactly one start state
    if len(doc.initial_states) != 1:
        errors.append(
            ValidationError(
                START_STATE_COUNT,
                f"exactly one start state must be marked, found {len(doc.initial_states)}",
                tuple(sorted(doc.initial_states)),
            )
        )

    # 3. every state accessible from the start; edges of any label count.
    # Unreportable without a start state, so skipped when rule 2 found none.
    if doc.initial_states:
        reachable = set(doc.initial_states)
        stack = list(doc.initial_states)
        while stack:
            state = stack.pop()
            for targets in doc.transitions.get(state, {}).values():
                for target in targets:
                    if target not in reachable:
                        reachable.add(target)
                        stack.append(target)
        for name in sorted(set(doc.states) - reachable):
            errors.append(
                ValidationError(
                    NON_ACCESSIBLE_STATE,
                    f"state {name!r} cannot be reached from the start state",
                    (name,),
                )
            )

    # 4. transition labels drawn from the question alphabet
    epsilon_ok = config.fsm_type == "nfa"
    for state in sorted(doc.transitions):
        for sym in sorted(doc.transitions[state]):
            valid = sym in config.alphabet or (sym == EPSILON and epsilon_ok)
            if not valid:
                label = "epsilon" if sym == EPSILON else repr(sym)
                errors.append(
                    ValidationError(
                        INVALID_TRANSITION_SYMBOL,
                        f"transition from {state!r} on {label} is not over the question alphabet",
                        tuple((state, sym, t) for t in sorted(doc.transitions[state][sym])),
                    )
                )

    # 5. a transition for every (state, symbol), unless the dump state is on
    if not config.implicit_dump_state:
        unique_states = sorted(set(doc.states))
        for state in unique_states:
            row = doc.transitions.get(state, {})
            for sym in config.alphabet:
                if not row.get(sym):
                    errors.append(
                        ValidationError(
                            MISSING_TRANSITION,
                            f"state {state!r} has no transition on {sym!r}",
                            (state,),
                        )
                    )

    # 6. DFAs: at most one transition per (state, symbol)
    if config.fsm_type == "dfa":
        for state in sorted(doc.transitions):
            for sym in sorted(doc.transitions[state]):
                targets = doc.transitions[state][sym]
                if sym in config.alphabet and len(targets) > 1:
                    errors.append(
                        ValidationError(
                            DFA_NONDETERMINISM,
                            f"state {state!r} has {len(targets)} transitions on {sym!r}",
                            tuple((state, sym, t) for t in sorted(targets)),
                        )
                    )

    return ValidationReport(tuple(errors))


def _fresh_dump_name(states: set[str]) -> str:
    name = "__dump"
    while name in states:
        name += "'"
    return name


def canonicalize(submission: Submission, config: QuestionConfig) -> Dfa:
    """Turn a validated submission into a total DFA over the question alphabet.

    NFA submissions are determinized. With ``implicit_dump_state`` on,
    missing transitions are routed to a fresh absorbing non-accepting state
    whose name cannot collide with a student state.
    """
    doc = _as_document(submission, config.fsm_type)
    report = validate(doc, config)
    if report:
        raise ValueError(f"submission failed validation ({report.errors[0].code}); cannot canonicalize")

    states = set(doc.states)
    if config.fsm_type == "nfa":
        transitions = {
            state: {
                sym: frozenset(targets)
                for sym, targets in doc.transitions.get(state, {}).items()
            }
            for state in states
        }
        nfa = Nfa(
            states=frozenset(states),
            alphabet=config.alphabet,
            transitions=transitions,
            initial_state=doc.initial_states[0],
            final_states=frozenset(doc.final_states),
        )
        # subset construction is total on its own: the empty subset is the
        # absorbing reject state, so the dump convention needs nothing extra
        return nfa_to_dfa(nfa)

    table: dict[str, dict[str, str]] = {
        state: {
            sym: targets[0]
            for sym, targets in doc.transitions.get(state, {}).items()
        }
        for state in states
    }
    missing = [
        (state, sym)
        for state in table
        for sym in config.alphabet
        if sym not in table[state]
    ]
    if missing:
        dump = _fresh_dump_name(states)
        states.add(dump)
        table[dump] = {sym: dump for sym in config.alphabet}
        for state, sym in missing:
            table[state][sym] = dump
    return Dfa(
        states=frozenset(states),
        alphabet=config.alphabet,
        transitions=table,
        initial_state=doc.initial_states[0],
        final_states=frozenset(doc.final_states),
    )


def reference_dfa(config: QuestionConfig) -> Dfa:
    """The question's reference solution as a total DFA."""
    if config.reference_regex is not None:
        return nfa_to_dfa(regex_to_nfa(config.reference_regex, config.alphabet))
    return canonicalize(config.reference_fsm, config)


def partial_credit(student: Dfa, reference: Dfa) -> PartialCreditResult:
    """Density difference of the two languages, scored as max(0, 1 - d).

    Asymmetric on purpose: the reference language supplies both the length
    horizon (2k, with k the size of its minimal DFA) and the per-length
    denominators.
    """
    k = len(minimize(reference).states)
    difference = product(student, reference, "symmetric_difference")
    diff_counts = count_words(difference, 2 * k)
    ref_counts = count_words(reference, 2 * k)
    rows = []
    total = Fraction(0)
    for n in range(2 * k + 1):
        ratio = Fraction(diff_counts[n], max(ref_counts[n], 1))
        rows.append(LengthBreakdown(n, diff_counts[n], ref_counts[n], ratio))
        total += ratio
    density = total / (2 * k + 1)
    score = float(max(Fraction(0), 1 - density))
    return PartialCreditResult(
        density_difference=density,
        k=k,
        per_length=tuple(rows),
        score=score,
    )


def build_feedback(student: Dfa, reference: Dfa, config: QuestionConfig) -> FeedbackReport:
    """Witness strings for an inequivalent pair, shortlex order, capped.

    Enumerates the symmetric difference up to the configured length bound;
    if every disagreement is longer than the bound, falls back to the
    single shortest witness. The first incorrectly accepted word, if any,
    comes with the submission's accepting run.
    """
    difference = product(student, reference, "symmetric_difference")
    words = enumerate_shortlex(
        difference, config.feedback_length_bound, config.max_feedback_strings
    )
    if words:
        witnesses = tuple(
            WitnessString(
                word,
                INCORRECTLY_ACCEPTED if accepts(student, word) else INCORRECTLY_REJECTED,
            )
            for word in words
        )
    else:
        fallback = shortest_witness(student, reference, reference="b")
        if fallback is None:
            raise ValueError("machines are equivalent; there is no feedback to build")
        witnesses = (fallback,)

    accepted_trace = None
    for witness in witnesses:
        if witness.classification == INCORRECTLY_ACCEPTED:
            accepted_trace = trace(student, witness.word)
            break
    return FeedbackReport(
        witnesses=witnesses,
        accepted_trace=accepted_trace,
        validation=ValidationReport(),
    )


def grade(submission: Submission, config: QuestionConfig) -> GradeResult:
    """Full pipeline; deterministic, and total on any parseable submission.

    Malformed documents raise (that is a transport problem, not a grading
    outcome); convention violations grade to zero with the violations in
    the feedback; clean submissions score 1.0 exactly when their language
    equals the reference's, and the clamped density-difference score
    otherwise.
    """
    doc = _as_document(submission, config.fsm_type)
    report = validate(doc, config)
    if report:
        return GradeResult(
            valid=False,
            score=0.0,
            equivalent=False,
            partial_credit=None,
            feedback=FeedbackReport(witnesses=(), accepted_trace=None, validation=report),
        )
    student = canonicalize(doc, config)
    reference = reference_dfa(config)
    if equivalent(student, reference):
        return GradeResult(
            valid=True,
            score=1.0,
            equivalent=True,
            partial_credit=None,
            feedback=FeedbackReport(witnesses=(), accepted_trace=None, validation=ValidationReport()),
        )
    credit = partial_credit(student, reference)
    feedback = build_feedback(student, reference, config)
    return GradeResult(
        valid=True,
        score=credit.score,
        equivalent=False,
        partial_credit=credit,
        feedback=feedback,
    )


def _element_ref_to_json(ref: ElementRef):
    return list(ref) if isinstance(ref, tuple) else ref


def grade_result_to_json(result: GradeResult) -> dict:
    """Stable JSON value for a GradeResult; the CLI and service both emit it."""
    credit = None
    if result.partial_credit is not None:
        credit = {
            "k": result.partial_credit.k,
            "density_difference": float(result.partial_credit.density_difference),
            "score": result.partial_credit.score,
            "per_length": [
                {
                    "length": row.length,
                    "mismatched": row.mismatched,
                    "reference_count": row.reference_count,
                    "ratio": float(row.ratio),
                }
                for row in result.partial_credit.per_length
            ],
        }
    return {
        "valid": result.valid,
        "score": result.score,
        "equivalent": result.equivalent,
        "density_difference": (
            float(result.partial_credit.density_difference)
            if result.partial_credit is not None
            else None
        ),
        "partial_credit": credit,
        "witnesses": [
            {"word": w.word, "classification": w.classification}
            for w in result.feedback.witnesses
        ],
        "accepted_trace": (
            list(result.feedback.accepted_trace)
            if result.feedback.accepted_trace is not None
            else None
        ),
        "validation_errors": [
            {
                "code": err.code,
                "message": err.message,
                "element_refs": [_element_ref_to_json(ref) for ref in err.element_refs],
            }
            for err in result.feedback.validation
        ],
    }
