"""Heuristic scanner that maps OpenMP pragmas in pasted code to catalog entries.

This is retrieval, not static analysis: each rule recognizes the textual
shape of one catalogued mistake and points at the matching Q&A entry.
The scanner is token- and brace-depth-based so it copes with incomplete
snippets a real C frontend would reject. Comments and string literals
are stripped before scanning; pragma continuation lines are joined.

Pure function of its input; safe for concurrent calls.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

_OMP_KEYWORDS = frozenset(
    ("parallel", "for", "sections", "critical", "atomic", "flush", "ordered", "barrier", "single")
)

_IDENT = re.compile(r"[A-Za-z_]\w*")
_PRAGMA = re.compile(r"^\s*#\s*pragma\b")
_FOR_STMT = re.compile(r"^\s*for\b")
_SET_LOCK = re.compile(r"\bomp_set_lock\s*\(\s*&?\s*([A-Za-z_]\w*)")
_INIT_LOCK = re.compile(r"\bomp_init_lock\s*\(\s*&?\s*([A-Za-z_]\w*)")
_SIMPLE_UPDATE = re.compile(
    r"^[A-Za-z_]\w*\s*(\[[^\]]*\]\s*)?(\+\+|--|\+=|-=|\*=|/=|&=|\^=)"
)


class RuleSeverity(str, Enum):
    PROBLEM = "Problem"
    HINT = "Hint"


@dataclass(frozen=True)
class Rule:
    rule_id: str
    entry_id: str
    severity: RuleSeverity
    description: str


# R-missing-for stays a Hint although its entry is a logical mistake: the
# next-line sniff is a heuristic, unlike the other logical rules.
RULES = (
    Rule("R-critical-vs-atomic", "critical-vs-atomic", RuleSeverity.HINT,
         "critical region guarding a single simple update; atomic is faster"),
    Rule("R-flush-no-list", "unnecessary-flush", RuleSeverity.HINT,
         "flush without a variable list synchronizes everything"),
    Rule("R-lock-no-init", "lock-without-init", RuleSeverity.PROBLEM,
         "omp_set_lock on a lock that is never initialized"),
    Rule("R-missing-for", "missing-for", RuleSeverity.HINT,
         "parallel region directly over a for loop without a for directive"),
    Rule("R-missing-omp", "missing-omp", RuleSeverity.PROBLEM,
         "pragma uses an OpenMP keyword but omp is missing; the pragma is ignored"),
    Rule("R-missing-parallel", "missing-parallel", RuleSeverity.PROBLEM,
         "omp for outside any parallel region runs sequentially"),
    Rule("R-nested-parallel", "unnecessary-parallelization", RuleSeverity.PROBLEM,
         "parallel keyword inside an already parallel region multiplies the work"),
    Rule("R-ordered-mismatch", "incorrect-ordered", RuleSeverity.PROBLEM,
         "ordered clause and ordered directive must be used together"),
    Rule("R-set-threads-in-parallel", "redefine-num-threads", RuleSeverity.PROBLEM,
         "changing the number of threads inside a parallel region fails at run time"),
)

_RULES_BY_ID = {r.rule_id: r for r in RULES}


def list_rules() -> tuple[Rule, ...]:
    """Static rule registry, ordered by rule id."""
    return RULES


@dataclass(frozen=True)
class Finding:
    rule_id: str
    entry_id: str
    line: int
    excerpt: str
    severity: RuleSeverity
    message: str


@dataclass(frozen=True)
class PragmaLine:
    line_number: int
    raw: str
    tokens: tuple[str, ...]
    brace_depth_at_line: int
    enclosing_parallel_depth: int


def _strip_comments_and_strings(code: str) -> str:
    """Blank out comments and string/char literals, keeping line layout."""
    out = []
    i = 0
    n = len(code)
    state = "code"
    while i < n:
        c = code[i]
        nxt = code[i + 1] if i + 1 < n else ""
        if state == "code":
            if c == "/" and nxt == "/":
                state = "line_comment"
                out.append("  ")
                i += 2
                continue
            if c == "/" and nxt == "*":
                state = "block_comment"
                out.append("  ")
                i += 2
                continue
            if c == '"':
                state = "string"
                out.append(" ")
                i += 1
                continue
            if c == "'":
                state = "char"
                out.append(" ")
                i += 1
                continue
            out.append(c)
        elif state == "line_comment":
            if c == "\n":
                state = "code"
                out.append("\n")
            else:
                out.append(" ")
        elif state == "block_comment":
            if c == "*" and nxt == "/":
                state = "code"
                out.append("  ")
                i += 2
                continue
            out.append("\n" if c == "\n" else " ")
        else:  # string or char literal
            if c == "\\":
                out.append("  ")
                i += 2
                continue
            if (state == "string" and c == '"') or (state == "char" and c == "'"):
                state = "code"
                out.append(" ")
            else:
                out.append("\n" if c == "\n" else " ")
        i += 1
    return "".join(out)


def _join_pragma_continuations(lines: list[str]) -> list[str]:
    joined = list(lines)
    for i, line in enumerate(joined):
        if not _PRAGMA.match(line):
            continue
        j = i
        while joined[j].rstrip().endswith("\\") and j + 1 < len(joined):
            joined[i] = joined[i].rstrip()[:-1] + " " + joined[j + 1].strip()
            joined[j + 1] = ""
            j += 1
    return joined


@dataclass
class _Region:
    pragma_line: int
    tokens: tuple[str, ...]
    is_parallel: bool
    is_for: bool
    is_critical: bool
    ordered_clause: bool
    open_depth: int | None = None  # None while pending
    start: int = 0  # first body line
    end: int = 0  # last body line (inclusive)
    closed: bool = False


def _directive_tokens(line: str) -> tuple[str, ...]:
    return tuple(_IDENT.findall(line))


def _classify(tokens: tuple[str, ...]) -> dict:
    # tokens[0] is "pragma"
    rest = tokens[1:]
    is_omp = bool(rest) and rest[0] == "omp"
    body = rest[1:] if is_omp else rest
    return {
        "is_omp": is_omp,
        "is_parallel": is_omp and "parallel" in body,
        "is_for_construct": is_omp and "for" in body,
        "is_plain_for": is_omp and bool(body) and body[0] == "for",
        "is_critical": is_omp and bool(body) and body[0] == "critical",
        "is_flush": is_omp and bool(body) and body[0] == "flush",
        "is_ordered_directive": is_omp and bool(body) and body[0] == "ordered",
        "ordered_clause": is_omp and "for" in body and "ordered" in body,
    }


class _Scan:
    """One pass over the cleaned lines, resolving regions and depths."""

    def __init__(self, cleaned_lines: list[str]):
        self.lines = cleaned_lines
        self.regions: list[_Region] = []
        self.pragma_lines: list[PragmaLine] = []
        self.call_depths: dict[int, int] = {}  # line -> parallel depth (non-pragma lines)
        self._active: list[_Region] = []
        self._pending: list[_Region] = []
        self._depth = 0
        self._paren = 0
        self._run()

    def _parallel_depth(self) -> int:
        return sum(1 for r in self._active if r.is_parallel) + sum(
            1 for r in self._pending if r.is_parallel
        )

    def enclosing_for_regions(self, line: int) -> list[_Region]:
        return [
            r
            for r in self.regions
            if r.is_for and r.start <= line <= r.end and r.pragma_line != line
        ]

    def _run(self) -> None:
        for lineno, line in enumerate(self.lines, start=1):
            if _PRAGMA.match(line):
                self._on_pragma(lineno, line)
                continue
            self.call_depths[lineno] = self._parallel_depth()
            self._on_code(lineno, line)
        # Unterminated constructs: close whatever is left at the last line.
        last = len(self.lines)
        for region in self._pending:
            region.open_depth = -1
            region.start = region.pragma_line + 1
            region.end = last
            region.closed = True
            self.regions.append(region)
        for region in self._active:
            region.end = last
            region.closed = True
        self._pending.clear()
        self._active.clear()

    def _on_pragma(self, lineno: int, line: str) -> None:
        tokens = _directive_tokens(line)
        info = _classify(tokens)
        self.pragma_lines.append(
            PragmaLine(
                line_number=lineno,
                raw=line,
                tokens=tokens,
                brace_depth_at_line=self._depth,
                enclosing_parallel_depth=self._parallel_depth(),
            )
        )
        if info["is_omp"] and (info["is_parallel"] or info["is_for_construct"] or info["is_critical"]):
            self._pending.append(
                _Region(
                    pragma_line=lineno,
                    tokens=tokens,
                    is_parallel=info["is_parallel"],
                    is_for=info["is_for_construct"],
                    is_critical=info["is_critical"],
                    ordered_clause=info["ordered_clause"],
                )
            )

    def _activate_pending(self, lineno: int) -> None:
        for region in self._pending:
            region.open_depth = self._depth
            region.start = region.pragma_line + 1
            self._active.append(region)
        self._pending.clear()

    def _complete_pending_statement(self, lineno: int) -> None:
        for region in self._pending:
            region.open_depth = -1
            region.start = region.pragma_line + 1
            region.end = lineno
            region.closed = True
            self.regions.append(region)
        self._pending.clear()

    def _on_code(self, lineno: int, line: str) -> None:
        for c in line:
            if c == "(":
                self._paren += 1
            elif c == ")":
                self._paren = max(0, self._paren - 1)
            elif c == "{":
                if self._pending and self._paren == 0:
                    self._activate_pending(lineno)
                self._depth += 1
            elif c == "}":
                self._depth = max(0, self._depth - 1)
                still_open = []
                for region in self._active:
                    if region.open_depth is not None and self._depth <= region.open_depth:
                        region.end = lineno
                        region.closed = True
                        self.regions.append(region)
                    else:
                        still_open.append(region)
                self._active = still_open
            elif c == ";":
                if self._pending and self._paren == 0:
                    self._complete_pending_statement(lineno)


def _is_blank_or_brace(line: str) -> bool:
    return not line.strip(" \t{}\r")


def scan_snippet(code: str) -> list[Finding]:
    """Apply every rule over the snippet; findings sorted by line then rule.

    Non-C input simply yields no findings.
    """
    cleaned = _strip_comments_and_strings(code)
    lines = _join_pragma_continuations(cleaned.splitlines())
    raw_lines = code.splitlines()
    scan = _Scan(lines)
    findings: list[Finding] = []

    def excerpt(lineno: int) -> str:
        if 1 <= lineno <= len(raw_lines):
            return raw_lines[lineno - 1].strip()
        return ""

    def add(rule_id: str, lineno: int) -> None:
        rule = _RULES_BY_ID[rule_id]
        findings.append(
            Finding(
                rule_id=rule.rule_id,
                entry_id=rule.entry_id,
                line=lineno,
                excerpt=excerpt(lineno),
                severity=rule.severity,
                message=rule.description,
            )
        )

    regions_by_pragma = {r.pragma_line: r for r in scan.regions}
    pragma_by_line = {p.line_number: p for p in scan.pragma_lines}

    for pragma in scan.pragma_lines:
        tokens = pragma.tokens
        info = _classify(tokens)
        rest = tokens[1:]

        if rest and rest[0] in _OMP_KEYWORDS and "omp" not in tokens:
            add("R-missing-omp", pragma.line_number)
            continue
        if not info["is_omp"]:
            continue

        if info["is_plain_for"] and pragma.enclosing_parallel_depth == 0:
            add("R-missing-parallel", pragma.line_number)

        if info["is_parallel"] and pragma.enclosing_parallel_depth >= 1:
            add("R-nested-parallel", pragma.line_number)

        if info["is_parallel"] and not info["is_for_construct"]:
            if _missing_for(scan, regions_by_pragma, pragma_by_line, pragma):
                add("R-missing-for", pragma.line_number)

        if info["is_critical"]:
            region = regions_by_pragma.get(pragma.line_number)
            if region is not None and _is_single_simple_update(scan, region):
                add("R-critical-vs-atomic", pragma.line_number)

        if info["is_flush"] and "(" not in pragma.raw:
            add("R-flush-no-list", pragma.line_number)

        if info["ordered_clause"]:
            region = regions_by_pragma.get(pragma.line_number)
            if region is None or not _region_has_ordered_directive(scan, region):
                add("R-ordered-mismatch", pragma.line_number)

        if info["is_ordered_directive"]:
            enclosing = scan.enclosing_for_regions(pragma.line_number)
            if not enclosing or not any(r.ordered_clause for r in enclosing):
                add("R-ordered-mismatch", pragma.line_number)

    inits = set()
    for line in scan.lines:
        inits.update(_INIT_LOCK.findall(line))
    for lineno, line in enumerate(scan.lines, start=1):
        for var in _SET_LOCK.findall(line):
            if var not in inits:
                add("R-lock-no-init", lineno)
        if "omp_set_num_threads" in line and not _PRAGMA.match(line):
            if scan.call_depths.get(lineno, 0) >= 1:
                add("R-set-threads-in-parallel", lineno)

    findings.sort(key=lambda f: (f.line, f.rule_id))
    return findings


def _missing_for(scan: _Scan, regions_by_pragma, pragma_by_line, pragma: PragmaLine) -> bool:
    nxt = None
    for lineno in range(pragma.line_number + 1, len(scan.lines) + 1):
        line = scan.lines[lineno - 1]
        if _is_blank_or_brace(line):
            continue
        nxt = line
        break
    if nxt is None or not _FOR_STMT.match(nxt):
        return False
    region = regions_by_pragma.get(pragma.line_number)
    if region is None:
        return True
    for lineno in range(region.start, region.end + 1):
        inner = pragma_by_line.get(lineno)
        if inner is None or lineno == pragma.line_number:
            continue
        inner_info = _classify(inner.tokens)
        if inner_info["is_omp"] and inner_info["is_for_construct"]:
            return False
    return True


def _is_single_simple_update(scan: _Scan, region: _Region) -> bool:
    body = "\n".join(scan.lines[region.start - 1: region.end])
    first, last = body.find("{"), body.rfind("}")
    if first != -1 and last != -1 and first < last:
        body = body[:first] + " " + body[first + 1: last] + " " + body[last + 1:]
    if "{" in body or "}" in body:
        return False  # compound inner statements are never a single update
    statements = []
    depth = 0
    current = []
    for c in body:
        if c == "(":
            depth += 1
        elif c == ")":
            depth = max(0, depth - 1)
        if c == ";" and depth == 0:
            statements.append("".join(current).strip())
            current = []
        else:
            current.append(c)
    tail = "".join(current).strip()
    if tail:
        statements.append(tail)
    statements = [s for s in statements if s and not _PRAGMA.match(s)]
    if len(statements) != 1:
        return False
    return bool(_SIMPLE_UPDATE.match(statements[0].replace("\n", " ").strip()))


def _region_has_ordered_directive(scan: _Scan, region: _Region) -> bool:
    for pragma in scan.pragma_lines:
        if region.start <= pragma.line_number <= region.end:
            info = _classify(pragma.tokens)
            if info["is_ordered_directive"]:
                return True
    return False
