"""Command-line interface.

Exit codes: 0 success (for ``grade``: full credit; for ``equiv``: equal),
1 for a negative answer (violations found / languages differ), 2 for
unreadable or malformed input, and 3 for a graded submission short of
full credit.
"""

import json
import sys
from pathlib import Path

import click

from .automata import Dfa, Nfa, nfa_to_dfa
from .counting import count_words
from .equivalence import shortest_witness
from .errors import FsmError
from .grading import grade, grade_result_to_json, validate
from .question_format import (
    FsmDocument,
    load_question_bank,
    parse_fsm,
    parse_question_config,
)

EXIT_VIOLATIONS = 1
EXIT_UNREADABLE = 2
EXIT_NOT_FULL_CREDIT = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc.strerror}", err=True)
        sys.exit(EXIT_UNREADABLE)


def _fail(exc: Exception):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_UNREADABLE)


def _load_document(path: str) -> FsmDocument:
    try:
        return parse_fsm(_read(path), "auto")
    except FsmError as exc:
        _fail(exc)


def _load_config(path: str):
    try:
        return parse_question_config(_read(path), source=path)
    except FsmError as exc:
        _fail(exc)


def _document_to_dfa(doc: FsmDocument) -> Dfa:
    """Standalone documents become total DFAs via the subset construction."""
    from .automata import Alphabet

    alphabet = Alphabet(doc.input_symbols)
    transitions = {
        state: {sym: frozenset(targets) for sym, targets in doc.transitions.get(state, {}).items()}
        for state in set(doc.states)
    }
    if len(doc.initial_states) != 1:
        raise FsmError(f"expected exactly one initial state, found {len(doc.initial_states)}")
    nfa = Nfa(
        states=frozenset(doc.states),
        alphabet=alphabet,
        transitions=transitions,
        initial_state=doc.initial_states[0],
        final_states=frozenset(doc.final_states),
    )
    return nfa_to_dfa(nfa)


def _load_dfa(path: str) -> Dfa:
    try:
        return _document_to_dfa(_load_document(path))
    except (FsmError, ValueError) as exc:
        _fail(exc)


def _display_word(word: str) -> str:
    return word if word else "ε"


def _format_ref(ref) -> str:
    if isinstance(ref, (list, tuple)):
        state, sym, target = ref
        return f"{state} --{_display_word(sym)}--> {target}"
    return str(ref)


@click.group()
def main():
    """Grade hand-drawn finite automata against reference solutions."""


@main.command("validate")
@click.argument("fsm_file", type=click.Path())
@click.argument("question_file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cli_validate(fsm_file: str, question_file: str, as_json: bool):
    """Check FSM_FILE against the drawing conventions of QUESTION_FILE."""
    config = _load_config(question_file)
    try:
        doc = parse_fsm(_read(fsm_file), config.fsm_type)
    except FsmError as exc:
        _fail(exc)
    report = validate(doc, config)
    if as_json:
        click.echo(
            json.dumps(
                [
                    {
                        "code": e.code,
                        "message": e.message,
                        "element_refs": [list(r) if isinstance(r, tuple) else r for r in e.element_refs],
                    }
                    for e in report
                ],
                indent=2,
            )
        )
    else:
        for err in report:
            refs = ", ".join(_format_ref(r) for r in err.element_refs)
            click.echo(f"{err.code}: {err.message} [{refs}]")
        if not report:
            click.echo("ok")
    sys.exit(EXIT_VIOLATIONS if report else 0)


@main.command("grade")
@click.argument("fsm_file", type=click.Path())
@click.argument("question_file", type=click.Path())
@click.option("--json/--human", "as_json", default=False, help="Output format.")
def cli_grade(fsm_file: str, question_file: str, as_json: bool):
    """Grade FSM_FILE against QUESTION_FILE; exit 0 only on full credit."""
    config = _load_config(question_file)
    try:
        doc = parse_fsm(_read(fsm_file), config.fsm_type)
        result = grade(doc, config)
    except FsmError as exc:
        _fail(exc)
    if as_json:
        click.echo(json.dumps(grade_result_to_json(result), indent=2))
    else:
        click.echo(f"score: {result.score:g}")
        click.echo(f"equivalent: {'yes' if result.equivalent else 'no'}")
        for err in result.feedback.validation:
            refs = ", ".join(_format_ref(r) for r in err.element_refs)
            click.echo(f"{err.code}: {err.message} [{refs}]")
        for witness in result.feedback.witnesses:
            label = witness.classification.replace("_", " ")
            click.echo(f"{label}: {_display_word(witness.word)}")
        if result.feedback.accepted_trace is not None:
            click.echo("trace: " + " → ".join(result.feedback.accepted_trace))
    sys.exit(0 if result.score == 1.0 else EXIT_NOT_FULL_CREDIT)


@main.command("equiv")
@click.argument("fsm_a", type=click.Path())
@click.argument("fsm_b", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cli_equiv(fsm_a: str, fsm_b: str, as_json: bool):
    """Decide whether two machines accept the same language."""
    from .equivalence import equivalent

    a, b = _load_dfa(fsm_a), _load_dfa(fsm_b)
    try:
        result = equivalent(a, b)
    except FsmError as exc:
        _fail(exc)
    click.echo(json.dumps({"equivalent": result}) if as_json else ("equivalent" if result else "inequivalent"))
    sys.exit(0 if result else EXIT_VIOLATIONS)


@main.command("witness")
@click.argument("fsm_a", type=click.Path())
@click.argument("fsm_b", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cli_witness(fsm_a: str, fsm_b: str, as_json: bool):
    """Print a shortest word the two machines disagree on, if any.

    FSM_A plays the reference: the witness is classified by FSM_B's mistake.
    """
    a, b = _load_dfa(fsm_a), _load_dfa(fsm_b)
    try:
        witness = shortest_witness(a, b, reference="a")
    except FsmError as exc:
        _fail(exc)
    if as_json:
        payload = (
            {"word": witness.word, "classification": witness.classification}
            if witness is not None
            else None
        )
        click.echo(json.dumps({"witness": payload}))
    elif witness is None:
        click.echo("equivalent")
    else:
        click.echo(f"{_display_word(witness.word)} ({witness.classification.replace('_', ' ')})")
    sys.exit(0)


@main.command("count")
@click.argument("fsm_file", type=click.Path())
@click.argument("max_len", type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def cli_count(fsm_file: str, max_len: int, as_json: bool):
    """Count accepted words of each length 0..MAX_LEN."""
    dfa = _load_dfa(fsm_file)
    table = count_words(dfa, max_len)
    if as_json:
        click.echo(json.dumps({"counts": list(table)}))
    else:
        for n, c in enumerate(table):
            click.echo(f"{n}: {c}")
    sys.exit(0)


@main.command("serve")
@click.option(
    "--bank",
    "bank_dir",
    envvar="FSMGRADER_BANK",
    required=True,
    type=click.Path(),
    help="Question bank directory (env: FSMGRADER_BANK).",
)
@click.option(
    "--bind",
    envvar="FSMGRADER_BIND",
    default="127.0.0.1:8000",
    show_default=True,
    help="host:port to listen on (env: FSMGRADER_BIND).",
)
@click.option("--cors-origin", multiple=True, help="Origin allowed to call the API; repeatable.")
def cli_serve(bank_dir: str, bind: str, cors_origin: tuple[str, ...]):
    """Serve the grading API over a question bank."""
    import uvicorn

    from .service import create_app

    try:
        bank = load_question_bank(bank_dir)
    except FsmError as exc:
        _fail(exc)
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        click.echo(f"error: --bind must look like host:port, got {bind!r}", err=True)
        sys.exit(EXIT_UNREADABLE)
    click.echo(f"serving {len(bank)} question(s) from {bank_dir} on {bind}")
    uvicorn.run(create_app(bank, cors_origin), host=host, port=int(port), log_level="warning")


if __name__ == "__main__":
    main()
