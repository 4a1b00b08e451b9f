"""Input text normalization.

All text compared by the matcher, whether user input or a pattern's
literal segments, goes through the same pipeline: lowercase, punctuation
removal, whitespace collapsing, and synonym folding via the document's
concept groups. Keeping both sides on one pipeline is what makes the
matcher's behavior self-consistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

# Punctuation is replaced by spaces so "flush(x)" splits into two tokens;
# apostrophes are deleted so contractions stay one token.
_SPACED = "?!.,;:\"()¿¡«»…“”"
_DELETED = "'‘’"
_TABLE = {ord(c): " " for c in _SPACED}
_TABLE.update({ord(c): None for c in _DELETED})


@dataclass(frozen=True)
class TokenSequence:
    """Normalized word tokens plus the original text they came from."""

    tokens: tuple[str, ...]
    source: str = field(default="", compare=False)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def normalize(text: str, concepts: Mapping[str, str] | None = None) -> TokenSequence:
    """Normalize text into a TokenSequence.

    Lowercases, strips punctuation, collapses whitespace, and replaces
    any token found among a concept group's synonyms with the group's
    canonical token. Empty or whitespace-only text yields an empty
    sequence.
    """
    lowered = text.lower().translate(_TABLE)
    tokens = lowered.split()
    if concepts:
        tokens = [concepts.get(tok, tok) for tok in tokens]
    return TokenSequence(tokens=tuple(tokens), source=text)
