"""Matcher quality measurement and survey-percentage arithmetic.

The paraphrase corpus is tab-separated UTF-8: ``language<TAB>question<TAB>
expected-node-id`` with ``#`` comment lines; the sentinel ``DEFAULT``
expects no match. Rows are independent, so accuracy is invariant under
row permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping

from .matching.index import CompiledIndex, NoMatch
from .matching.normalize import normalize

DEFAULT_SENTINEL = "DEFAULT"


class CorpusError(ValueError):
    """Raised for malformed corpus rows; carries 1-based row numbers."""

    def __init__(self, problems: list[tuple[int, str]]):
        self.problems = problems
        super().__init__("; ".join(f"row {n}: {msg}" for n, msg in problems))


class ZeroTotal(ValueError):
    """Raised when Likert counts sum to zero."""


@dataclass(frozen=True)
class CorpusRow:
    language: str
    question: str
    expected: str
    row_number: int = field(default=0, compare=False)


@dataclass(frozen=True)
class EvalReport:
    total: int
    correct: int
    accuracy: float
    per_entry: dict[str, float]
    confusion: list[tuple[str, str, str]]  # (question, expected, got)

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "correct": self.correct,
            "accuracy": self.accuracy,
            "per_entry": self.per_entry,
            "confusion": [
                {"question": q, "expected": e, "got": g} for q, e, g in self.confusion
            ],
        }


def parse_corpus(text: str) -> list[CorpusRow]:
    """Parse corpus TSV text. Raises CorpusError listing every bad row."""
    rows: list[CorpusRow] = []
    problems: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            problems.append((lineno, f"expected 3 tab-separated fields, got {len(parts)}"))
            continue
        language, question, expected = (p.strip() for p in parts)
        if not language or not question or not expected:
            problems.append((lineno, "empty field"))
            continue
        rows.append(CorpusRow(language.upper(), question, expected, lineno))
    if problems:
        raise CorpusError(problems)
    return rows


def run_eval(indexes: Mapping[str, CompiledIndex], corpus: list[CorpusRow]) -> EvalReport:
    """Run best_match over every row and aggregate accuracy.

    A row is correct when the matched node id equals the expected id, or
    when a DEFAULT row produces no match. Deterministic; row order does
    not affect the totals.
    """
    if not corpus:
        raise CorpusError([(0, "corpus is empty")])
    indexes = {lang.upper(): idx for lang, idx in indexes.items()}

    problems: list[tuple[int, str]] = []
    known_ids = {
        lang: {node.node_id for _, node in idx.document.iter_nodes()}
        for lang, idx in indexes.items()
    }
    for row in corpus:
        if row.language not in indexes:
            problems.append((row.row_number, f"no index for language {row.language!r}"))
        elif row.expected != DEFAULT_SENTINEL and row.expected not in known_ids[row.language]:
            problems.append((row.row_number, f"unknown expected id {row.expected!r}"))
    if problems:
        raise CorpusError(problems)

    per_entry_total: dict[str, int] = {}
    per_entry_correct: dict[str, int] = {}
    confusion: list[tuple[str, str, str]] = []
    correct = 0
    for row in corpus:
        index = indexes[row.language]
        try:
            got = index.best_match(normalize(row.question, index.concepts)).node_id
        except NoMatch:
            got = DEFAULT_SENTINEL
        per_entry_total[row.expected] = per_entry_total.get(row.expected, 0) + 1
        if got == row.expected:
            correct += 1
            per_entry_correct[row.expected] = per_entry_correct.get(row.expected, 0) + 1
        else:
            confusion.append((row.question, row.expected, got))

    per_entry = {
        entry: per_entry_correct.get(entry, 0) / total
        for entry, total in sorted(per_entry_total.items())
    }
    return EvalReport(
        total=len(corpus),
        correct=correct,
        accuracy=correct / len(corpus),
        per_entry=per_entry,
        confusion=confusion,
    )


@dataclass(frozen=True)
class LikertCounts:
    """Respondent counts for a 1-star .. 5-star agreement question."""

    counts: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.counts) != 5 or any(c < 0 for c in self.counts):
            raise ValueError("counts must be 5 non-negative integers")


def likert_percentages(c: LikertCounts) -> tuple[float, float, float, float, float]:
    """Percentage per star level, half-up rounded to one decimal.

    Raises ZeroTotal when no responses were counted. Per-bucket rounding
    means the five values can drift from 100.0 by up to 0.2.
    """
    total = sum(c.counts)
    if total == 0:
        raise ZeroTotal("cannot compute percentages of zero responses")
    result = []
    for count in c.counts:
        pct = Decimal(100 * count) / Decimal(total)
        result.append(float(pct.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP)))
    return tuple(result)
