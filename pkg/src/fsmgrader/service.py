"""Stateless HTTP grading service over a loaded question bank.

Endpoints:

* ``GET /questions`` - id and prompt of every question.
* ``GET /questions/{id}`` - prompt, alphabet, machine kind, dump-state flag.
* ``POST /questions/{id}/grade`` - grade an FSM document body.

Responses never include the reference solution, and every response is a
pure function of the request and the bank, so identical requests produce
byte-identical bodies no matter how many arrive concurrently.
"""

import json

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import DocumentParseError, DocumentSchemaError
from .grading import grade, grade_result_to_json
from .question_format import QuestionConfig, document_from_value


def create_app(bank: dict[str, QuestionConfig], cors_origins: tuple[str, ...] = ()) -> FastAPI:
    app = FastAPI(title="fsmgrader", docs_url=None, redoc_url=None)
    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def not_found(question_id: str) -> JSONResponse:
        return JSONResponse({"error": f"unknown question id {question_id!r}"}, status_code=404)

    @app.get("/questions")
    def list_questions():
        return [
            {"question_id": qid, "prompt": bank[qid].prompt}
            for qid in sorted(bank)
        ]

    @app.get("/questions/{question_id}")
    def question_detail(question_id: str):
        config = bank.get(question_id)
        if config is None:
            return not_found(question_id)
        return {
            "question_id": config.question_id,
            "prompt": config.prompt,
            "alphabet": list(config.alphabet),
            "fsm_type": config.fsm_type,
            "implicit_dump_state": config.implicit_dump_state,
        }

    @app.post("/questions/{question_id}/grade")
    async def grade_submission(question_id: str, request: Request):
        config = bank.get(question_id)
        if config is None:
            return not_found(question_id)
        raw = await request.body()
        try:
            value = json.loads(raw)
        except json.JSONDecodeError as exc:
            return JSONResponse(
                {"error": "PARSE_ERROR", "detail": f"{exc.msg} (line {exc.lineno}, column {exc.colno})"},
                status_code=400,
            )
        try:
            document = document_from_value(value, config.fsm_type)
        except (DocumentParseError, DocumentSchemaError) as exc:
            return JSONResponse({"error": "SCHEMA_ERROR", "detail": str(exc)}, status_code=400)
        result = grade(document, config)
        return grade_result_to_json(result)

    return app
