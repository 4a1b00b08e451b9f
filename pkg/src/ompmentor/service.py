"""HTTP/JSON service: conversations, knowledge base, snippet advisor.

Wire shapes are documented in docs/api.md. All error responses carry a
JSON body of the form ``{"error": {"code": ..., "message": ...}}``.

Configuration comes from ServiceConfig; the CLI maps flags and the
BIND / CONTENT_DIR / DEFAULT_LANG / SEED / UNMATCHED_LOG environment
variables onto it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import advisor as advisor_mod
from .conversation import ChatEngine, Conversation, UnmatchedLog, UnsupportedLanguage
from .dialogdoc.model import ParseError
from .dialogdoc.xmlio import parse_document
from .kb.catalog import MistakeEntry, entries_by_id, list_entries
from .matching.index import CompiledIndex, DocumentInvalid

MAX_ADVISE_BODY = 256 * 1024


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    content_dir: Path | None = None  # None: packaged content
    default_language: str = "EN"
    autolearn_override: bool | None = None
    seed: int | None = None  # None: entropy per conversation
    unmatched_log_path: Path | None = None
    cors_origins: tuple[str, ...] = ("*",)

    def __post_init__(self):
        if not (1 <= self.port <= 65535):
            raise ValueError(f"port {self.port} out of range")


def _default_content_dir() -> Path:
    return Path(__file__).resolve().parent / "content"


def load_indexes(content_dir: Path) -> dict[str, CompiledIndex]:
    """Compile every usable dialog document in a directory, keyed by language."""
    indexes: dict[str, CompiledIndex] = {}
    for path in sorted(content_dir.glob("*.xml")):
        try:
            doc = parse_document(path.read_bytes())
            index = CompiledIndex(doc)
        except (ParseError, DocumentInvalid):
            continue
        indexes[index.language] = index
    return indexes


class Service:
    """Engine plus conversation registry behind the HTTP surface."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.entries: list[MistakeEntry] = list_entries()
        self.entry_map = entries_by_id(self.entries)
        self.unmatched_log = UnmatchedLog(config.unmatched_log_path)
        self.conversations: dict[str, Conversation] = {}
        self.engine: ChatEngine | None = None
        self.reload()

    @property
    def content_dir(self) -> Path:
        return self.config.content_dir or _default_content_dir()

    def reload(self) -> None:
        """Re-scan the content directory and swap the engine atomically."""
        indexes = load_indexes(self.content_dir)
        if indexes:
            self.engine = ChatEngine(
                indexes,
                unmatched_log=self.unmatched_log,
                autolearn_override=self.config.autolearn_override,
            )
        else:
            self.engine = None

    @property
    def healthy(self) -> bool:
        return self.engine is not None

    def next_seed(self) -> int:
        if self.config.seed is not None:
            return self.config.seed
        return random.SystemRandom().randrange(2**63)


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        self.status = status
        self.code = code
        self.message = message


async def _read_json(request: Request, max_bytes: int | None = None) -> dict:
    body = await request.body()
    if max_bytes is not None and len(body) > max_bytes:
        raise ApiError(400, "body_too_large", f"request body exceeds {max_bytes} bytes")
    if not body:
        return {}
    try:
        data = json.loads(body)
    except ValueError:
        raise ApiError(400, "bad_json", "request body is not valid JSON")
    if not isinstance(data, dict):
        raise ApiError(400, "bad_json", "request body must be a JSON object")
    return data


def _reply_payload(reply) -> dict:
    payload = {"kind": reply.kind.value, "text": reply.text}
    if reply.node_id is not None:
        payload["node_id"] = reply.node_id
    if reply.suggested_question is not None:
        payload["suggestion"] = reply.suggested_question
    return payload


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    service = Service(config or ServiceConfig())
    app = FastAPI(title="ompmentor", docs_url=None, redoc_url=None)
    app.state.service = service
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(service.config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def on_api_error(_request, exc: ApiError):
        return _error(exc.status, exc.code, exc.message)

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(_request, exc: StarletteHTTPException):
        code = {404: "not_found", 405: "method_not_allowed"}.get(exc.status_code, "error")
        return _error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(_request, exc: RequestValidationError):
        return _error(400, "bad_request", str(exc))

    def engine_or_503() -> ChatEngine:
        if service.engine is None:
            raise ApiError(503, "no_content", "no dialog content is loaded")
        return service.engine

    @app.post("/v1/conversations", status_code=201)
    async def create_conversation(request: Request):
        engine = engine_or_503()
        data = await _read_json(request)
        language = str(data.get("language") or service.config.default_language)
        try:
            conv, welcome = engine.start_conversation(language, service.next_seed())
        except UnsupportedLanguage as exc:
            raise ApiError(400, "unsupported_language", str(exc))
        service.conversations[conv.id] = conv
        return {
            "conversation_id": conv.id,
            "language": conv.language,
            "welcome": _reply_payload(welcome),
        }

    @app.post("/v1/conversations/{conversation_id}/messages")
    async def post_message(conversation_id: str, request: Request):
        engine = engine_or_503()
        conv = service.conversations.get(conversation_id)
        if conv is None:
            raise ApiError(404, "unknown_conversation", f"no conversation {conversation_id!r}")
        data = await _read_json(request)
        if "text" not in data or not isinstance(data["text"], str):
            raise ApiError(400, "missing_text", "body must carry a string `text` field")
        reply = engine.post_message(conv, data["text"])
        return _reply_payload(reply)

    @app.post("/v1/advise")
    async def advise(request: Request):
        data = await _read_json(request, max_bytes=MAX_ADVISE_BODY)
        if "code" not in data or not isinstance(data["code"], str):
            raise ApiError(400, "missing_code", "body must carry a string `code` field")
        lang = service.config.default_language
        findings = []
        for f in advisor_mod.scan_snippet(data["code"]):
            entry = service.entry_map.get(f.entry_id)
            findings.append(
                {
                    "rule_id": f.rule_id,
                    "entry_id": f.entry_id,
                    "line": f.line,
                    "excerpt": f.excerpt,
                    "severity": f.severity.value,
                    "message": f.message,
                    "answer": entry.answer(lang) if entry else None,
                }
            )
        return {"findings": findings}

    @app.get("/v1/kb")
    async def knowledge_base(lang: str = ""):
        language = (lang or service.config.default_language).upper()
        entries = []
        for entry in service.entries:
            if language not in entry.variants:
                raise ApiError(400, "unsupported_language", f"no content for language {language!r}")
            entries.append(
                {
                    "id": entry.id,
                    "category": entry.category.value,
                    "title": entry.title_for(language),
                    "reason": entry.reason_for(language),
                    "primary_variation": entry.primary_variation(language),
                    "answer": entry.answer(language),
                }
            )
        return {"entries": entries}

    @app.get("/v1/unmatched")
    async def unmatched(limit: int = 100):
        records = service.unmatched_log.records(newest_first=True, limit=max(0, limit))
        return {
            "records": [
                {
                    "conversation_id": r.conversation_id,
                    "language": r.language,
                    "text": r.text,
                    "timestamp": r.timestamp,
                }
                for r in records
            ]
        }

    @app.get("/v1/health")
    async def health():
        if not service.healthy:
            raise ApiError(503, "no_content", "no dialog content is loaded")
        return {
            "status": "ok",
            "languages": service.engine.languages,
            "entry_count": len(service.entries),
        }

    return app
