"""Document-level matching: the compiled index, ranking, suggestions.

A CompiledIndex is built from a validated document and is immutable;
all operations here are pure functions of their inputs, so an index can
be shared freely across threads.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction

from ..dialogdoc.model import DialogDocument, FolderLabel, InputNode, Output
from ..dialogdoc.validate import has_errors, validate_document
from . import kernel
from .normalize import TokenSequence
from .patterns import Pattern, PatternKind, compile_pattern, match_pattern

#: Partial-overlap ratio a node must reach before it is suggested.
SUGGESTION_THRESHOLD = Fraction(1, 2)

#: Fallback answer when a document ships no default node.
BUILTIN_DEFAULT = Output(
    items=("I am sorry, I did not understand your question. Please try another question.",),
)


class DocumentInvalid(ValueError):
    """Raised when an index is built from a document with validation Errors."""

    def __init__(self, issues):
        self.issues = issues
        summary = "; ".join(str(i) for i in issues)
        super().__init__(f"document has validation errors: {summary}")


class NoMatch(Exception):
    """Raised by best_match when no pattern matches the input."""


@dataclass(frozen=True)
class MatchResult:
    node_id: str
    item_index: int
    kind: PatternKind
    literal_token_count: int
    captures: tuple[tuple[str, ...], ...]
    score: float


@dataclass(frozen=True)
class Suggestion:
    node_id: str
    primary_variation: str
    overlap: float


class CompiledIndex:
    """All patterns of one document, compiled and ready to match."""

    def __init__(self, doc: DialogDocument):
        issues = validate_document(doc)
        if has_errors(issues):
            raise DocumentInvalid([i for i in issues if i.severity.value == "Error"])
        self.document = doc
        self.language = doc.language or "EN"
        self.autolearn = doc.autolearn
        self.concepts = {k.lower(): v.lower() for k, v in doc.concept_map().items()}
        self.default_output = doc.default.output if doc.default else BUILTIN_DEFAULT
        self.patterns: list[Pattern] = []
        self._nodes: dict[str, InputNode] = {}
        self._node_order: dict[str, int] = {}
        self._vocab: dict[str, int] = {}
        self._interned: list[tuple[array, array] | None] = []

        for order, (_folder, node) in enumerate(doc.iter_nodes()):
            self._nodes[node.node_id] = node
            self._node_order[node.node_id] = order
            for idx, item in enumerate(node.grammar):
                self.patterns.append(compile_pattern(item, node.node_id, idx, self.concepts))

        main = doc.folder(FolderLabel.MAIN)
        self.welcome_output: Output | None = (
            main.nodes[0].output if main and main.nodes and main.nodes[0].output else None
        )

        for pattern in self.patterns:
            for tok in pattern.literal_tokens:
                self._vocab.setdefault(tok, len(self._vocab))
        for pattern in self.patterns:
            run_ids = array("i", (self._vocab[t] for t in pattern.literal_tokens))
            offsets = [0]
            for run in pattern.runs:
                offsets.append(offsets[-1] + len(run))
            self._interned.append((run_ids, array("i", offsets)))

    def node(self, node_id: str) -> InputNode:
        return self._nodes[node_id]

    def _input_ids(self, tokens: tuple[str, ...]) -> array:
        vocab = self._vocab
        return array("i", (vocab.get(t, -1) for t in tokens))

    def best_match(self, input: TokenSequence) -> MatchResult:
        """Rank all matching patterns and return the best one.

        Ordering: Literal beats VerbAnchored beats Slotted, then more
        matched literal tokens, then lower item index, then document
        order of nodes. Raises NoMatch when nothing matches.
        """
        tokens = input.tokens
        n = len(tokens)
        best_key = None
        best: tuple[Pattern, object] | None = None
        input_ids = self._input_ids(tokens)

        for pattern, interned in zip(self.patterns, self._interned):
            if pattern.literal_token_count > n:
                continue
            if pattern.kind is PatternKind.SLOTTED:
                run_ids, offsets = interned
                positions = kernel.find_alignment(input_ids, run_ids, offsets)
                if positions is None:
                    continue
                outcome_data = positions
            else:
                outcome = match_pattern(pattern, input)
                if not outcome.matched:
                    continue
                outcome_data = outcome
            key = (
                pattern.kind.precedence,
                -pattern.literal_token_count,
                pattern.item_index,
                self._node_order[pattern.node_id],
            )
            if best_key is None or key < best_key:
                best_key = key
                best = (pattern, outcome_data)

        if best is None:
            raise NoMatch()
        pattern, data = best
        if pattern.kind is PatternKind.SLOTTED:
            captures = self._slotted_captures(pattern, tokens, data)
        else:
            captures = data.captures
        score = min(1.0, pattern.literal_token_count / n) if n else 0.0
        return MatchResult(
            node_id=pattern.node_id,
            item_index=pattern.item_index,
            kind=pattern.kind,
            literal_token_count=pattern.literal_token_count,
            captures=captures,
            score=score,
        )

    @staticmethod
    def _slotted_captures(pattern: Pattern, tokens, positions) -> tuple[tuple[str, ...], ...]:
        captures: list[tuple[str, ...]] = []
        if pattern.leading_gap:
            captures.append(tokens[: positions[0]])
        for i in range(len(pattern.runs) - 1):
            gap_start = positions[i] + len(pattern.runs[i])
            captures.append(tokens[gap_start: positions[i + 1]])
        if pattern.trailing_gap:
            captures.append(tokens[positions[-1] + len(pattern.runs[-1]):])
        return tuple(captures)

    def suggest(self, input: TokenSequence) -> Suggestion | None:
        """Closest node by partial overlap, for "Did you mean" prompts.

        Overlap for a pattern is LCS(input, pattern literals) over the
        pattern's literal token count; a node scores its best Slotted or
        VerbAnchored pattern. Nodes below the threshold are never
        suggested; ties go to document order.
        """
        if not input.tokens:
            return None
        input_ids = self._input_ids(input.tokens)
        best: tuple[Fraction, int, str] | None = None
        for pattern, interned in zip(self.patterns, self._interned):
            if pattern.kind is PatternKind.LITERAL:
                continue
            run_ids, _offsets = interned
            overlap = Fraction(kernel.lcs_length(input_ids, run_ids), len(run_ids))
            if overlap < SUGGESTION_THRESHOLD:
                continue
            key = (-overlap, self._node_order[pattern.node_id], pattern.node_id)
            if best is None or key < best:
                best = key
        if best is None:
            return None
        node = self._nodes[best[2]]
        return Suggestion(
            node_id=node.node_id,
            primary_variation=node.primary_variation,
            overlap=float(-best[0]),
        )
