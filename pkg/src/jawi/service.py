"""Stateless HTTP/JSON API over the engine, for the web UI and scripts.

Every response is a pure function of the request body and the loaded rule
table; composer state travels inside the requests, so the server keeps no
sessions and requests may be served concurrently.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import composer
from .corpus import default_corpus
from .errors import JawiError
from .letters import render_logical
from .rules import RuleTable, default_table, load_rule_table
from .translit import jawi_to_latin, latin_to_jawi

DEFAULT_PORT = 8808


class TransliterateRequest(BaseModel):
    direction: str = Field(pattern="^to-(jawi|latin)$")
    word: str
    mode: str | None = None
    limit: int | None = Field(default=None, ge=1)


class CandidateModel(BaseModel):
    latin: str
    score: float
    trace: list[str]


class ComposerStepRequest(BaseModel):
    state: dict = Field(default_factory=dict)
    event: dict


class ApiError(BaseModel):
    code: str
    message: str
    detail: dict | None = None


def _letter_example_index(table: RuleTable) -> dict[str, str]:
    examples: dict[str, str] = {}
    try:
        entries = default_corpus()
    except Exception:
        return examples
    for entry in entries:
        for ch in entry.jawi:
            letter = table.by_codepoint(ord(ch))
            if letter is not None and letter.id not in examples:
                examples[letter.id] = entry.latin
    return examples


def create_app(table: RuleTable | None = None, cors_origins=("*",),
               static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="jawi-toolkit", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    table = table if table is not None else default_table()
    examples = _letter_example_index(table)

    @app.exception_handler(JawiError)
    async def engine_error(_request: Request, exc: JawiError):
        return JSONResponse(
            status_code=400,
            content=ApiError(code=exc.code, message=str(exc), detail=exc.detail()).model_dump(),
        )

    @app.get("/api/health")
    def health():
        return {"ok": True}

    @app.get("/api/letters")
    def letters():
        out = []
        for letter in table.letters:
            out.append({
                "id": letter.id,
                "char": letter.char,
                "codepoint": f"U+{letter.codepoint:04X}",
                "display_name": letter.display_name,
                "joining": letter.joining.value,
                "joins_left": letter.joins_left(),
                "category": letter.category.value,
                "readings": list(letter.readings),
                "forms": [form.label for form in letter.available_forms()],
                "example": examples.get(letter.id),
                "note": letter.note,
            })
        return out

    @app.post("/api/transliterate")
    def transliterate(req: TransliterateRequest):
        if req.direction == "to-jawi":
            shaped = latin_to_jawi(req.word.lower(), table, req.mode)
            return {
                "jawi": render_logical(shaped, table),
                "letters": list(shaped.letters),
                "forms": [form.label for form in shaped.forms],
            }
        candidates = jawi_to_latin(req.word, table, req.limit)
        return {
            "candidates": [
                CandidateModel(latin=c.latin, score=c.score, trace=list(c.trace)).model_dump()
                for c in candidates
            ]
        }

    @app.post("/api/composer/step")
    def composer_step(req: ComposerStepRequest):
        state = composer.state_from_dict(req.state, table)
        event = composer.event_from_dict(req.event)
        state = composer.apply_event(state, event, table)
        jawi, latin, forms = composer.render(state, table)
        consistency = [
            {"index": index, "chosen": chosen.label, "actual": actual.label}
            for index, chosen, actual in composer.check_filter_consistency(state, table)
        ]
        return {
            "state": composer.state_to_dict(state),
            "render": {"jawi": jawi, "latin": latin,
                       "forms": [form.label for form in forms]},
            "consistency": consistency,
        }

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run(host="127.0.0.1", port=DEFAULT_PORT, table_path: str | None = None,
        cors_origins=("*",), static_dir: str | None = None):
    import uvicorn

    table = None
    if table_path is not None:
        with open(table_path, "rb") as handle:
            table = load_rule_table(handle)
    app = create_app(table=table, cors_origins=cors_origins, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")


__all__ = ["create_app", "run", "DEFAULT_PORT", "ApiError"]
