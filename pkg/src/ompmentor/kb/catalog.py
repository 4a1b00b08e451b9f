"""The curated catalog of common OpenMP mistakes.

Entries live in ``mistakes.entries``, a line-oriented text file designed
for hand editing (see docs/entry-catalog-format.md). Each entry carries
a category, localized question variants and answers, and the advisor
rules that can point at it. The dialog XML shipped under ``content/`` is
generated from this catalog and never edited by hand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable

_WILDCARDS = ("$", "*")

#: Languages every entry must cover.
REQUIRED_LANGUAGES = ("EN", "ES")


class Category(str, Enum):
    PERFORMANCE = "Performance"
    LOGICAL = "Logical"


class ContentError(ValueError):
    """Raised when catalog content violates its invariants."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class MistakeEntry:
    """One catalogued mistake with per-language Q&A content.

    ``variants`` maps language -> grammar items (first item is the
    literal primary variation). ``answers`` maps language -> answer
    texts; the first answer is the canonical one, the rest are phrasing
    variations served by random selection.
    """

    id: str
    category: Category
    title: str
    reason: str
    variants: dict[str, tuple[str, ...]] = field(default_factory=dict)
    answers: dict[str, tuple[str, ...]] = field(default_factory=dict)
    titles: dict[str, str] = field(default_factory=dict)
    reasons: dict[str, str] = field(default_factory=dict)
    advisor_rules: tuple[str, ...] = ()

    def title_for(self, language: str) -> str:
        return self.titles.get(language.upper(), self.title)

    def reason_for(self, language: str) -> str:
        return self.reasons.get(language.upper(), self.reason)

    def primary_variation(self, language: str) -> str:
        return self.variants[language.upper()][0]

    def answer(self, language: str) -> str:
        return self.answers[language.upper()][0]

    def problems(self) -> list[str]:
        """Invariant violations for this entry, empty when it is sound."""
        problems = []
        for lang in REQUIRED_LANGUAGES:
            variants = self.variants.get(lang, ())
            answers = self.answers.get(lang, ())
            if not variants:
                problems.append(f"{self.id}: no {lang} variants")
                continue
            if not answers:
                problems.append(f"{self.id}: no {lang} answer")
            primary = variants[0]
            if any(w in primary for w in _WILDCARDS):
                problems.append(f"{self.id}: {lang} primary variation contains a wildcard")
            wildcard_count = sum(1 for v in variants[1:] if any(w in v for w in _WILDCARDS))
            if wildcard_count < 2:
                problems.append(f"{self.id}: {lang} needs at least two wildcard variations")
        return problems


_SECTION = re.compile(r"^\[entry\s+([a-z0-9-]+)\]$")
_KEY = re.compile(r"^([a-z_.]+)\s*=\s*(.*)$")

_LIST_KEYS = {"rule"}
_LANG_LIST_KEYS = {"variant", "answer"}
_LANG_SCALAR_KEYS = {"title", "reason"}


def parse_catalog(text: str) -> list[MistakeEntry]:
    """Parse the entries file format. Raises ContentError on bad syntax."""
    problems: list[str] = []
    raw: list[tuple[str, dict]] = []
    current: dict | None = None

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        section = _SECTION.match(stripped)
        if section:
            current = {"id": section.group(1), "fields": []}
            raw.append((section.group(1), current))
            continue
        if current is None:
            problems.append(f"line {lineno}: content before any [entry ...] section")
            continue
        kv = _KEY.match(stripped)
        if not kv:
            problems.append(f"line {lineno}: expected `key = value`")
            continue
        current["fields"].append((lineno, kv.group(1), kv.group(2).strip()))

    entries = []
    seen: set[str] = set()
    for entry_id, data in raw:
        if entry_id in seen:
            problems.append(f"duplicate entry id {entry_id!r}")
            continue
        seen.add(entry_id)
        entry, entry_problems = _build_entry(entry_id, data["fields"])
        problems.extend(entry_problems)
        if entry is not None:
            entries.append(entry)

    if problems:
        raise ContentError(problems)
    return entries


def _build_entry(entry_id: str, fields) -> tuple[MistakeEntry | None, list[str]]:
    problems: list[str] = []
    scalars: dict[str, str] = {}
    titles: dict[str, str] = {}
    reasons: dict[str, str] = {}
    variants: dict[str, list[str]] = {}
    answers: dict[str, list[str]] = {}
    rules: list[str] = []

    for lineno, key, value in fields:
        base, _, lang = key.partition(".")
        lang = lang.upper()
        if base in _LIST_KEYS and not lang:
            rules.append(value)
        elif base in _LANG_LIST_KEYS and lang:
            target = variants if base == "variant" else answers
            target.setdefault(lang, []).append(value)
        elif base in _LANG_SCALAR_KEYS:
            if base == "title":
                if lang:
                    titles[lang] = value
                else:
                    scalars["title"] = value
            else:
                if lang:
                    reasons[lang] = value
                else:
                    scalars["reason"] = value
        elif base == "category" and not lang:
            scalars["category"] = value
        else:
            problems.append(f"{entry_id} line {lineno}: unknown key {key!r}")

    category_raw = scalars.get("category", "")
    try:
        category = Category(category_raw.capitalize())
    except ValueError:
        problems.append(f"{entry_id}: bad category {category_raw!r}")
        return None, problems
    if "title" not in scalars:
        problems.append(f"{entry_id}: missing title")
        return None, problems
    if "reason" not in scalars:
        problems.append(f"{entry_id}: missing reason")
        return None, problems

    titles.setdefault("EN", scalars["title"])
    reasons.setdefault("EN", scalars["reason"])
    entry = MistakeEntry(
        id=entry_id,
        category=category,
        title=scalars["title"],
        reason=scalars["reason"],
        variants={k: tuple(v) for k, v in variants.items()},
        answers={k: tuple(v) for k, v in answers.items()},
        titles=titles,
        reasons=reasons,
        advisor_rules=tuple(rules),
    )
    problems.extend(entry.problems())
    return entry, problems


def _category_rank(entry: MistakeEntry) -> tuple[int, str]:
    return (0 if entry.category is Category.PERFORMANCE else 1, entry.id)


def load_catalog(text: str | None = None) -> list[MistakeEntry]:
    """Load and order the catalog (shipped file unless text is given)."""
    if text is None:
        text = (
            resources.files("ompmentor.kb").joinpath("mistakes.entries").read_text("utf-8")
        )
    entries = parse_catalog(text)
    entries.sort(key=_category_rank)
    return entries


_CACHE: list[MistakeEntry] | None = None


def list_entries() -> list[MistakeEntry]:
    """The shipped catalog, sorted by category then id; stable across calls."""
    global _CACHE
    if _CACHE is None:
        _CACHE = load_catalog()
    return list(_CACHE)


def entries_by_id(entries: Iterable[MistakeEntry] | None = None) -> dict[str, MistakeEntry]:
    return {e.id: e for e in (entries if entries is not None else list_entries())}
