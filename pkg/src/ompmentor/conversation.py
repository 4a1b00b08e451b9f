"""Conversation state machine.

A conversation is a per-session wrapper around a compiled index: it
issues the welcome message, answers questions, falls back to the default
output, offers "did you mean" suggestions when the document enables
autolearn, and records every unanswered question for expert review.

Distinct conversations may run concurrently; one conversation handles
one message at a time. Replies are deterministic for a fixed (language,
seed, message sequence).
"""

from __future__ import annotations

import json
import random
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Mapping

from .dialogdoc.model import Output
from .matching.index import CompiledIndex, NoMatch
from .matching.normalize import normalize


class ReplyKind(str, Enum):
    ANSWER = "answer"
    SUGGESTION = "suggestion"
    DEFAULT = "default"
    WELCOME = "welcome"


_SUGGESTION_TEMPLATES = {
    "EN": "Did you mean: {question}?",
    "ES": "¿Quiso decir: {question}?",
}


@dataclass(frozen=True)
class Reply:
    kind: ReplyKind
    text: str
    node_id: str | None = None
    item_index_chosen: int | None = None
    suggested_question: str | None = None


@dataclass(frozen=True)
class UnmatchedRecord:
    conversation_id: str
    language: str
    text: str
    timestamp: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "conversation_id": self.conversation_id,
                "language": self.language,
                "text": self.text,
                "timestamp": self.timestamp,
            },
            ensure_ascii=False,
        )


class UnmatchedLog:
    """Append-only log of questions that fell through to the default reply.

    Records live in memory; when a path is given each record is also
    appended to the file as one JSON object per line (UTF-8). Appends are
    atomic per record.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._records: list[UnmatchedRecord] = []
        self._lock = threading.Lock()

    def append(self, record: UnmatchedRecord) -> None:
        with self._lock:
            self._records.append(record)
            if self.path is not None:
                with self.path.open("a", encoding="utf-8") as fh:
                    fh.write(record.to_json() + "\n")

    def records(self, newest_first: bool = False, limit: int | None = None):
        with self._lock:
            records = list(self._records)
        if newest_first:
            records.reverse()
        if limit is not None:
            records = records[:limit]
        return records

    def __len__(self) -> int:
        return len(self._records)


class UnsupportedLanguage(ValueError):
    def __init__(self, language: str, available):
        self.language = language
        self.available = sorted(available)
        super().__init__(f"no content for language {language!r}; available: {', '.join(self.available)}")


@dataclass
class Conversation:
    """Per-session state. History is append-only; language is fixed."""

    id: str
    language: str
    rng: random.Random
    created_at: str
    history: list[tuple[str, Reply]] = field(default_factory=list)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


def select_output(output: Output, rng: random.Random) -> tuple[str, int]:
    """Uniform choice over an output's items with the session generator."""
    if not output.items:
        raise ValueError("output has no items")
    index = rng.randrange(len(output.items)) if len(output.items) > 1 else 0
    return output.items[index], index


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class ChatEngine:
    """Dialog engine over one compiled index per language."""

    def __init__(
        self,
        indexes: Mapping[str, CompiledIndex],
        unmatched_log: UnmatchedLog | None = None,
        autolearn_override: bool | None = None,
    ):
        self.indexes = {lang.upper(): idx for lang, idx in indexes.items()}
        self.unmatched_log = unmatched_log if unmatched_log is not None else UnmatchedLog()
        self.autolearn_override = autolearn_override

    @property
    def languages(self) -> list[str]:
        return sorted(self.indexes)

    def index_for(self, language: str) -> CompiledIndex:
        lang = language.upper()
        if lang not in self.indexes:
            raise UnsupportedLanguage(language, self.indexes)
        return self.indexes[lang]

    def start_conversation(self, language: str, seed: int) -> tuple[Conversation, Reply]:
        """Create a session and return it with its welcome reply."""
        index = self.index_for(language)
        conv = Conversation(
            id=uuid.uuid4().hex,
            language=language.upper(),
            rng=random.Random(seed),
            created_at=_now(),
        )
        welcome = index.welcome_output
        if welcome is None or not welcome.items:
            raise ValueError(f"document for {conv.language} has no welcome output")
        text, chosen = select_output(welcome, conv.rng)
        reply = Reply(kind=ReplyKind.WELCOME, text=text, item_index_chosen=chosen)
        conv.history.append(("", reply))
        return conv, reply

    def post_message(self, conv: Conversation, text: str) -> Reply:
        """Answer one user message. Every input maps to exactly one reply."""
        with conv._lock:
            index = self.index_for(conv.language)
            tokens = normalize(text, index.concepts)
            try:
                result = index.best_match(tokens)
            except NoMatch:
                reply = self._fallback(conv, index, text, tokens)
            else:
                node = index.node(result.node_id)
                answer, chosen = select_output(node.output, conv.rng)
                reply = Reply(
                    kind=ReplyKind.ANSWER,
                    text=answer,
                    node_id=result.node_id,
                    item_index_chosen=chosen,
                )
            conv.history.append((text, reply))
            return reply

    def _fallback(self, conv: Conversation, index: CompiledIndex, text: str, tokens) -> Reply:
        autolearn = (
            self.autolearn_override
            if self.autolearn_override is not None
            else index.autolearn
        )
        if autolearn:
            suggestion = index.suggest(tokens)
            if suggestion is not None:
                template = _SUGGESTION_TEMPLATES.get(conv.language, _SUGGESTION_TEMPLATES["EN"])
                question = suggestion.primary_variation.rstrip("?¿ ").strip()
                return Reply(
                    kind=ReplyKind.SUGGESTION,
                    text=template.format(question=question),
                    node_id=suggestion.node_id,
                    suggested_question=suggestion.primary_variation,
                )
        default_text, chosen = select_output(index.default_output, conv.rng)
        self.unmatched_log.append(
            UnmatchedRecord(
                conversation_id=conv.id,
                language=conv.language,
                text=text,
                timestamp=_now(),
            )
        )
        return Reply(kind=ReplyKind.DEFAULT, text=default_text, item_index_chosen=chosen)
