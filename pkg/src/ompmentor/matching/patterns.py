"""Grammar item compilation and single-pattern matching.

A grammar item compiles to one of three pattern kinds:

* Literal: no wildcard; the input must equal the token run exactly.
* VerbAnchored (``$`` prefix): any lead-in, then the rest of the item as
  an exact suffix. The anchor is the run's first token, standing in for
  the first verb of the question.
* Slotted (``*``): literal runs that must appear in order as contiguous
  sub-runs; each interior gap absorbs at least one token, and tokens are
  always allowed before the first run and after the last.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from . import kernel
from .normalize import TokenSequence, normalize


class PatternKind(Enum):
    LITERAL = "literal"
    VERB_ANCHORED = "verb_anchored"
    SLOTTED = "slotted"

    @property
    def precedence(self) -> int:
        return {"literal": 0, "verb_anchored": 1, "slotted": 2}[self.value]


class PatternError(ValueError):
    """Raised for grammar items the matcher cannot use."""


@dataclass(frozen=True)
class Pattern:
    """A compiled grammar item.

    ``runs`` holds the literal token runs in order. For Slotted patterns
    the gaps between consecutive runs come from ``*``; ``leading_gap`` /
    ``trailing_gap`` record whether the item itself started or ended with
    ``*`` (those gaps capture tokens, while the implicit flexibility at
    the ends does not).
    """

    kind: PatternKind
    runs: tuple[tuple[str, ...], ...]
    source_item: str
    node_id: str
    item_index: int
    leading_gap: bool = False
    trailing_gap: bool = False

    @property
    def literal_token_count(self) -> int:
        return sum(len(run) for run in self.runs)

    @property
    def literal_tokens(self) -> tuple[str, ...]:
        return tuple(tok for run in self.runs for tok in run)


@dataclass(frozen=True)
class MatchOutcome:
    matched: bool
    captures: tuple[tuple[str, ...], ...] = ()
    literal_token_count: int = 0


_NO_MATCH = MatchOutcome(matched=False)


def compile_pattern(
    item: str,
    node_id: str,
    item_index: int,
    concepts: Mapping[str, str] | None = None,
) -> Pattern:
    """Compile one grammar item, normalizing literal text like input."""
    has_dollar = "$" in item
    has_star = "*" in item
    if has_dollar and has_star:
        raise PatternError(f"item mixes $ and * wildcards: {item!r}")

    if has_dollar:
        stripped = item.strip()
        if not stripped.startswith("$"):
            raise PatternError(f"$ must be the leading token: {item!r}")
        rest = stripped[1:]
        if "$" in rest:
            raise PatternError(f"item has more than one $: {item!r}")
        run = normalize(rest, concepts).tokens
        if not run:
            raise PatternError(f"item has no literal content: {item!r}")
        return Pattern(
            kind=PatternKind.VERB_ANCHORED,
            runs=(run,),
            source_item=item,
            node_id=node_id,
            item_index=item_index,
        )

    if has_star:
        segments = [normalize(seg, concepts).tokens for seg in item.split("*")]
        runs = tuple(seg for seg in segments if seg)
        if not runs:
            raise PatternError(f"item has no literal content: {item!r}")
        return Pattern(
            kind=PatternKind.SLOTTED,
            runs=runs,
            source_item=item,
            node_id=node_id,
            item_index=item_index,
            leading_gap=not segments[0],
            trailing_gap=not segments[-1],
        )

    run = normalize(item, concepts).tokens
    if not run:
        raise PatternError(f"item has no literal content: {item!r}")
    return Pattern(
        kind=PatternKind.LITERAL,
        runs=(run,),
        source_item=item,
        node_id=node_id,
        item_index=item_index,
    )


def _intern(pattern: Pattern, tokens: tuple[str, ...]):
    """Map pattern and input tokens onto small ints for the kernel.

    Input tokens absent from the pattern vocabulary map to -1; they can
    never equal a pattern token, which is all the alignment needs.
    """
    vocab: dict[str, int] = {}
    run_ids: list[int] = []
    offsets: list[int] = [0]
    for run in pattern.runs:
        for tok in run:
            run_ids.append(vocab.setdefault(tok, len(vocab)))
        offsets.append(len(run_ids))
    input_ids = array("i", (vocab.get(tok, -1) for tok in tokens))
    return input_ids, array("i", run_ids), array("i", offsets)


def slotted_alignment(pattern: Pattern, tokens: tuple[str, ...]) -> list[int] | None:
    """Leftmost-earliest run placement for a Slotted pattern, or None."""
    input_ids, run_ids, offsets = _intern(pattern, tokens)
    return kernel.find_alignment(input_ids, run_ids, offsets)


def match_pattern(pattern: Pattern, input: TokenSequence) -> MatchOutcome:
    """Match a compiled pattern against normalized input.

    Captures align one-to-one with the pattern's gaps: the single lead-in
    gap for VerbAnchored patterns, interior (and explicit end) gaps for
    Slotted ones.
    """
    tokens = input.tokens if isinstance(input, TokenSequence) else tuple(input)

    if pattern.kind is PatternKind.LITERAL:
        run = pattern.runs[0]
        if tokens == run:
            return MatchOutcome(True, (), len(run))
        return _NO_MATCH

    if pattern.kind is PatternKind.VERB_ANCHORED:
        run = pattern.runs[0]
        k = len(run)
        if len(tokens) >= k and tokens[len(tokens) - k:] == run:
            return MatchOutcome(True, (tokens[: len(tokens) - k],), k)
        return _NO_MATCH

    positions = slotted_alignment(pattern, tokens)
    if positions is None:
        return _NO_MATCH
    captures: list[tuple[str, ...]] = []
    if pattern.leading_gap:
        captures.append(tokens[: positions[0]])
    for i in range(len(pattern.runs) - 1):
        gap_start = positions[i] + len(pattern.runs[i])
        captures.append(tokens[gap_start: positions[i + 1]])
    if pattern.trailing_gap:
        captures.append(tokens[positions[-1] + len(pattern.runs[-1]):])
    return MatchOutcome(True, tuple(captures), pattern.literal_token_count)
