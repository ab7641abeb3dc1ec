from pathlib import Path

import pytest

from fixtures import (
    RAW_ALL_STRINGS,
    RAW_EMPTY_LANGUAGE,
    RAW_FOUR_ZEROS,
    RAW_THREE_ZEROS,
    RAW_THREE_ZEROS_PADDED,
    RAW_TWO_ZEROS,
    build_dfa,
)

QUESTIONS_DIR = Path(__file__).resolve().parent.parent / "questions"


@pytest.fixture(scope="session")
def three_zeros():
    return build_dfa(RAW_THREE_ZEROS)


@pytest.fixture(scope="session")
def three_zeros_padded():
    return build_dfa(RAW_THREE_ZEROS_PADDED)


@pytest.fixture(scope="session")
def two_zeros():
    return build_dfa(RAW_TWO_ZEROS)


@pytest.fixture(scope="session")
def four_zeros():
    return build_dfa(RAW_FOUR_ZEROS)


@pytest.fixture(scope="session")
def all_strings():
    return build_dfa(RAW_ALL_STRINGS)


@pytest.fixture(scope="session")
def empty_language():
    return build_dfa(RAW_EMPTY_LANGUAGE)


@pytest.fixture(scope="session")
def questions_dir():
    return QUESTIONS_DIR


@pytest.fixture(scope="session")
def three_zeros_config(questions_dir):
    from fsmgrader import parse_question_config

    path = questions_dir / "at-least-three-zeros" / "question.json"
    return parse_question_config(path.read_text(), source=str(path))
