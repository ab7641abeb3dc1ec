import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from fixtures import THREE_ZEROS_DOCUMENT
from fsmgrader.question_format import load_question_bank
from fsmgrader.service import create_app

TWO_ZEROS_DOCUMENT = {
    "states": ["a", "b", "c"],
    "input_symbols": ["0", "1"],
    "transitions": {
        "a": {"0": "b", "1": "a"},
        "b": {"0": "c", "1": "b"},
        "c": {"0": "c", "1": "c"},
    },
    "initial_state": "a",
    "final_states": ["c"],
}


@pytest.fixture(scope="module")
def client(questions_dir):
    bank = load_question_bank(questions_dir)
    return TestClient(create_app(bank))


def test_list_questions(client):
    response = client.get("/questions")
    assert response.status_code == 200
    entries = response.json()
    assert [e["question_id"] for e in entries] == [
        "at-least-three-zeros",
        "contains-000-substring",
        "ends-with-01",
    ]
    for entry in entries:
        assert set(entry) == {"question_id", "prompt"}


def test_question_detail(client):
    response = client.get("/questions/at-least-three-zeros")
    assert response.status_code == 200
    body = response.json()
    assert body == {
        "question_id": "at-least-three-zeros",
        "prompt": body["prompt"],
        "alphabet": ["0", "1"],
        "fsm_type": "dfa",
        "implicit_dump_state": False,
    }
    assert "transitions" not in response.text
    assert "reference" not in response.text


def test_unknown_question_is_404(client):
    assert client.get("/questions/nope").status_code == 404
    assert client.post("/questions/nope/grade", json=THREE_ZEROS_DOCUMENT).status_code == 404


def test_grade_full_credit(client):
    response = client.post("/questions/at-least-three-zeros/grade", json=THREE_ZEROS_DOCUMENT)
    assert response.status_code == 200
    body = response.json()
    assert body["score"] == 1.0 and body["equivalent"] is True


def test_grade_partial_credit(client):
    response = client.post("/questions/at-least-three-zeros/grade", json=TWO_ZEROS_DOCUMENT)
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is True and body["score"] < 1.0
    assert body["witnesses"][0] == {"word": "00", "classification": "incorrectly_accepted"}
    assert body["accepted_trace"] == ["a", "b", "c"]


def test_grade_validation_failure_is_a_result_not_an_error(client):
    submission = dict(THREE_ZEROS_DOCUMENT, initial_state=[])
    response = client.post("/questions/at-least-three-zeros/grade", json=submission)
    assert response.status_code == 200
    body = response.json()
    assert body["valid"] is False and body["score"] == 0.0
    assert body["validation_errors"][0]["code"] == "START_STATE_COUNT"


def test_malformed_body_is_400_with_diagnostics(client):
    response = client.post(
        "/questions/at-least-three-zeros/grade",
        content=b'{"states": [',
        headers={"content-type": "application/json"},
    )
    assert response.status_code == 400
    assert response.json()["error"] == "PARSE_ERROR"
    assert "line" in response.json()["detail"]


def test_schema_error_is_400(client):
    response = client.post(
        "/questions/at-least-three-zeros/grade",
        json={"states": ["0"], "input_symbols": ["0"]},
    )
    assert response.status_code == 400
    assert response.json()["error"] == "SCHEMA_ERROR"


def test_reference_never_leaks_into_grade_response(client):
    response = client.post("/questions/at-least-three-zeros/grade", json=TWO_ZEROS_DOCUMENT)
    body = response.json()
    assert set(body) == {
        "valid", "score", "equivalent", "density_difference",
        "partial_credit", "witnesses", "accepted_trace", "validation_errors",
    }
    # no reference state names can appear: the submission used its own names
    assert "transitions" not in response.text


def test_identical_requests_get_byte_identical_responses(client):
    serial = client.post("/questions/at-least-three-zeros/grade", json=TWO_ZEROS_DOCUMENT).content

    def one_request(_):
        return client.post("/questions/at-least-three-zeros/grade", json=TWO_ZEROS_DOCUMENT).content

    with ThreadPoolExecutor(max_workers=16) as pool:
        bodies = list(pool.map(one_request, range(100)))
    assert all(body == serial for body in bodies)


def test_cors_flag_enables_preflight(questions_dir):
    bank = load_question_bank(questions_dir)
    app = create_app(bank, cors_origins=("http://localhost:5173",))
    with TestClient(app) as cors_client:
        response = cors_client.options(
            "/questions",
            headers={
                "origin": "http://localhost:5173",
                "access-control-request-method": "GET",
            },
        )
        assert response.status_code == 200
        assert response.headers["access-control-allow-origin"] == "http://localhost:5173"
