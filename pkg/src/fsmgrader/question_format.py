"""Wire format for machines and question configurations.

An FSM document is a JSON object with exactly five keys::

    {
      "states": ["0", "1"],
      "input_symbols": ["0", "1"],
      "transitions": {"0": {"0": "1", "1": "0"}, "1": {"0": "1", "1": "1"}},
      "initial_state": "0",
      "final_states": ["1"]
    }

DFA documents map each symbol to a single target state; NFA documents map
each symbol to a list of targets, with the empty-string key denoting
epsilon moves. Submissions drawn on a canvas may be ill-formed as automata
(duplicate labels, several start arrows, parallel same-symbol edges...);
the document layer keeps those representable - list-valued cells and
list-valued ``initial_state`` parse fine - and leaves judging them to the
grading rules. What the parser does reject is anything that could never
have come off a canvas: unknown keys, non-string entries, whitespace-padded
names, and references to undeclared states.

A question configuration is a sibling JSON object pairing a prompt with a
hidden reference solution (an FSM document under ``"reference"`` or a
pattern under ``"reference_regex"``). A question bank is a directory with
one subdirectory per question, each holding a ``question.json``.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from .automata import Alphabet
from .errors import DocumentParseError, DocumentSchemaError, QuestionBankError

FsmType = Literal["dfa", "nfa"]

_DOCUMENT_KEYS = ("states", "input_symbols", "transitions", "initial_state", "final_states")


@dataclass(frozen=True)
class FsmDocument:
    """Parsed FSM document; orders are preserved exactly as written."""

    states: tuple[str, ...]
    input_symbols: tuple[str, ...]
    transitions: dict[str, dict[str, tuple[str, ...]]]
    initial_states: tuple[str, ...]
    final_states: tuple[str, ...]
    fsm_type: FsmType

    __hash__ = None  # type: ignore[assignment]


def _schema(key: str, message: str):
    raise DocumentSchemaError(key, message)


def _string_list(value, key: str) -> list[str]:
    if not isinstance(value, list):
        _schema(key, "must be a list")
    for entry in value:
        if not isinstance(entry, str):
            _schema(key, f"entries must be strings, got {entry!r}")
    return value


def _check_name(name: str, key: str):
    if name != name.strip():
        _schema(key, f"name {name!r} has leading or trailing whitespace")


def document_from_value(value, fsm_type: FsmType | Literal["auto"] = "auto") -> FsmDocument:
    """Build an FsmDocument from a decoded JSON value."""
    if not isinstance(value, dict):
        _schema("document", "top level must be a JSON object")
    for key in _DOCUMENT_KEYS:
        if key not in value:
            _schema(key, "required key missing")
    for key in value:
        if key not in _DOCUMENT_KEYS:
            _schema(key, "unknown key")

    states = _string_list(value["states"], "states")
    for name in states:
        _check_name(name, "states")
    declared = set(states)

    symbols = _string_list(value["input_symbols"], "input_symbols")
    if not symbols:
        _schema("input_symbols", "must not be empty")
    seen_syms = set()
    for sym in symbols:
        if len(sym) != 1 or sym.isspace() or not sym.isprintable():
            _schema("input_symbols", f"symbols must be single visible characters, got {sym!r}")
        if sym in seen_syms:
            _schema("input_symbols", f"duplicate symbol {sym!r}")
        seen_syms.add(sym)

    raw_transitions = value["transitions"]
    if not isinstance(raw_transitions, dict):
        _schema("transitions", "must be an object")

    if fsm_type == "auto":
        fsm_type = "nfa" if any(
            isinstance(row, dict) and any(isinstance(t, list) or sym == "" for sym, t in row.items())
            for row in raw_transitions.values()
        ) else "dfa"

    transitions: dict[str, dict[str, tuple[str, ...]]] = {}
    for state, row in raw_transitions.items():
        if state not in declared:
            _schema("transitions", f"transitions from undeclared state {state!r}")
        if not isinstance(row, dict):
            _schema("transitions", f"value for state {state!r} must be an object")
        new_row: dict[str, tuple[str, ...]] = {}
        for sym, target in row.items():
            if isinstance(target, str):
                if fsm_type == "nfa":
                    _schema("transitions", f"({state!r}, {sym!r}): NFA targets must be a list")
                targets = [target]
            elif isinstance(target, list):
                targets = target
            else:
                _schema("transitions", f"({state!r}, {sym!r}): target must be a state or list of states")
            deduped: list[str] = []
            for t in targets:
                if not isinstance(t, str):
                    _schema("transitions", f"({state!r}, {sym!r}): target {t!r} is not a string")
                if t not in declared:
                    _schema("transitions", f"({state!r}, {sym!r}): target {t!r} is not a declared state")
                if t not in deduped:
                    deduped.append(t)
            if deduped:
                new_row[sym] = tuple(deduped)
        transitions[state] = new_row

    raw_initial = value["initial_state"]
    if raw_initial is None:
        initial: list[str] = []
    elif isinstance(raw_initial, str):
        initial = [raw_initial]
    elif isinstance(raw_initial, list):
        initial = _string_list(raw_initial, "initial_state")
    else:
        _schema("initial_state", "must be a state name or a list of state names")
    for name in initial:
        if name not in declared:
            _schema("initial_state", f"{name!r} is not a declared state")

    finals = _string_list(value["final_states"], "final_states")
    deduped_finals: list[str] = []
    for name in finals:
        if name not in declared:
            _schema("final_states", f"{name!r} is not a declared state")
        if name not in deduped_finals:
            deduped_finals.append(name)

    return FsmDocument(
        states=tuple(states),
        input_symbols=tuple(symbols),
        transitions=transitions,
        initial_states=tuple(initial),
        final_states=tuple(deduped_finals),
        fsm_type=fsm_type,
    )


def parse_fsm(text: str, fsm_type: FsmType | Literal["auto"] = "auto") -> FsmDocument:
    """Parse FSM document text; malformed JSON raises DocumentParseError."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(exc.msg, exc.lineno, exc.colno) from exc
    return document_from_value(value, fsm_type)


def document_to_value(doc: FsmDocument) -> dict:
    """JSON value with keys in canonical order, original entry order kept."""
    transitions: dict[str, dict] = {}
    for state, row in doc.transitions.items():
        out_row: dict[str, object] = {}
        for sym, targets in row.items():
            if doc.fsm_type == "dfa" and len(targets) == 1:
                out_row[sym] = targets[0]
            else:
                out_row[sym] = list(targets)
        transitions[state] = out_row
    initial: object
    if len(doc.initial_states) == 1:
        initial = doc.initial_states[0]
    else:
        initial = list(doc.initial_states)
    return {
        "states": list(doc.states),
        "input_symbols": list(doc.input_symbols),
        "transitions": transitions,
        "initial_state": initial,
        "final_states": list(doc.final_states),
    }


def serialize_fsm(doc: FsmDocument) -> str:
    return json.dumps(document_to_value(doc), indent=2, ensure_ascii=False)


@dataclass(frozen=True)
class QuestionConfig:
    """One gradable question: prompt, alphabet, and hidden reference."""

    question_id: str
    fsm_type: FsmType
    alphabet: Alphabet
    prompt: str
    reference_fsm: FsmDocument | None = None
    reference_regex: str | None = None
    implicit_dump_state: bool = False
    feedback_length_bound: int = 8
    max_feedback_strings: int = 10

    def __post_init__(self):
        if (self.reference_fsm is None) == (self.reference_regex is None):
            raise ValueError("exactly one of reference_fsm / reference_regex is required")

    __hash__ = None  # type: ignore[assignment]


_CONFIG_KEYS = {
    "question_id", "fsm_type", "alphabet", "prompt", "reference", "reference_regex",
    "implicit_dump_state", "feedback_length_bound", "max_feedback_strings",
}


def parse_question_config(value, source: str = "<config>") -> QuestionConfig:
    """Build a QuestionConfig from a decoded JSON value (or JSON text)."""
    if isinstance(value, str):
        try:
            value = json.loads(value)
        except json.JSONDecodeError as exc:
            raise QuestionBankError(source, f"malformed JSON: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(value, dict):
        raise QuestionBankError(source, "top level must be a JSON object")
    unknown = set(value) - _CONFIG_KEYS
    if unknown:
        raise QuestionBankError(source, f"unknown keys {sorted(unknown)}")
    try:
        question_id = value["question_id"]
        fsm_type = value["fsm_type"]
        alphabet = value["alphabet"]
        prompt = value["prompt"]
    except KeyError as exc:
        raise QuestionBankError(source, f"required key missing: {exc.args[0]}") from exc
    if not isinstance(question_id, str) or not question_id:
        raise QuestionBankError(source, "question_id must be a nonempty string")
    if fsm_type not in ("dfa", "nfa"):
        raise QuestionBankError(source, f"fsm_type must be 'dfa' or 'nfa', got {fsm_type!r}")
    if not isinstance(prompt, str):
        raise QuestionBankError(source, "prompt must be a string")
    if not isinstance(alphabet, list):
        raise QuestionBankError(source, "alphabet must be a list of symbols")
    try:
        alphabet_value = Alphabet(alphabet)
    except ValueError as exc:
        raise QuestionBankError(source, f"bad alphabet: {exc}") from exc

    reference_fsm = None
    reference_regex = None
    if "reference" in value and "reference_regex" in value:
        raise QuestionBankError(source, "give either 'reference' or 'reference_regex', not both")
    if "reference" in value:
        try:
            reference_fsm = document_from_value(value["reference"], fsm_type)
        except (DocumentParseError, DocumentSchemaError) as exc:
            raise QuestionBankError(source, f"bad reference document: {exc}") from exc
    elif "reference_regex" in value:
        reference_regex = value["reference_regex"]
        if not isinstance(reference_regex, str):
            raise QuestionBankError(source, "reference_regex must be a string")
    else:
        raise QuestionBankError(source, "missing reference: give 'reference' or 'reference_regex'")

    dump = value.get("implicit_dump_state", False)
    if not isinstance(dump, bool):
        raise QuestionBankError(source, "implicit_dump_state must be a boolean")
    length_bound = value.get("feedback_length_bound", 8)
    max_strings = value.get("max_feedback_strings", 10)
    if not isinstance(length_bound, int) or isinstance(length_bound, bool) or length_bound < 0:
        raise QuestionBankError(source, "feedback_length_bound must be a nonnegative integer")
    if not isinstance(max_strings, int) or isinstance(max_strings, bool) or max_strings < 1:
        raise QuestionBankError(source, "max_feedback_strings must be a positive integer")

    return QuestionConfig(
        question_id=question_id,
        fsm_type=fsm_type,
        alphabet=alphabet_value,
        prompt=prompt,
        reference_fsm=reference_fsm,
        reference_regex=reference_regex,
        implicit_dump_state=dump,
        feedback_length_bound=length_bound,
        max_feedback_strings=max_strings,
    )


def load_question_bank(directory: str | Path) -> dict[str, QuestionConfig]:
    """Load every question under ``directory``; abort on the first bad one.

    Each question lives in its own subdirectory as ``question.json``. Every
    loaded reference is graded against itself and must score 1.0, so a bank
    that loads is a bank whose answers are internally consistent.
    """
    from .grading import grade, reference_dfa  # deferred: grading imports this module

    directory = Path(directory)
    if not directory.is_dir():
        raise QuestionBankError(str(directory), "not a directory")
    bank: dict[str, QuestionConfig] = {}
    for sub in sorted(p for p in directory.iterdir() if p.is_dir()):
        config_path = sub / "question.json"
        if not config_path.is_file():
            continue
        try:
            text = config_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise QuestionBankError(str(config_path), f"unreadable: {exc}") from exc
        config = parse_question_config(text, source=str(config_path))
        if config.question_id in bank:
            raise QuestionBankError(str(config_path), f"duplicate question_id {config.question_id!r}")
        try:
            if config.reference_fsm is not None:
                result = grade(config.reference_fsm, config)
                if result.score != 1.0:
                    raise QuestionBankError(
                        str(config_path),
                        f"reference does not grade 1.0 against itself (got {result.score})",
                    )
            else:
                reference_dfa(config)  # regex references must at least build
        except QuestionBankError:
            raise
        except Exception as exc:
            raise QuestionBankError(str(config_path), f"reference failed self-validation: {exc}") from exc
        bank[config.question_id] = config
    if not bank:
        raise QuestionBankError(str(directory), "no questions found")
    return bank
