"""Text normalization, pattern compilation, and grammar matching."""

from .index import (
    BUILTIN_DEFAULT,
    CompiledIndex,
    DocumentInvalid,
    MatchResult,
    NoMatch,
    SUGGESTION_THRESHOLD,
    Suggestion,
)
from .normalize import TokenSequence, normalize
from .patterns import (
    MatchOutcome,
    Pattern,
    PatternError,
    PatternKind,
    compile_pattern,
    match_pattern,
)

__all__ = [
    "BUILTIN_DEFAULT",
    "CompiledIndex",
    "DocumentInvalid",
    "MatchOutcome",
    "MatchResult",
    "NoMatch",
    "Pattern",
    "PatternError",
    "PatternKind",
    "SUGGESTION_THRESHOLD",
    "Suggestion",
    "TokenSequence",
    "compile_pattern",
    "match_pattern",
    "normalize",
]
