"""Structural validation of parsed dialog documents.

Errors are exactly the conditions that make a document unusable by the
match engine; everything else that merits attention is a Warning. The
engine refuses to load a document if and only if this validator reports
at least one Error.
"""

from __future__ import annotations

from collections import Counter

from .model import (
    DialogDocument,
    FolderLabel,
    InputNode,
    SELECTION_RANDOM,
    Severity,
    ValidationIssue,
)

_KNOWN_LANGUAGES = ("EN", "ES")


def _issue(sev: Severity, location: str, message: str, line: int | None = None) -> ValidationIssue:
    return ValidationIssue(sev, location, message, line)


def validate_document(doc: DialogDocument) -> list[ValidationIssue]:
    """Return all issues for a document, sorted by location.

    The list is deterministic for a given document. An empty Error set
    means the match engine will accept the document.
    """
    issues: list[ValidationIssue] = list(doc.parse_warnings)

    label_counts = Counter(f.label for f in doc.folders)
    for label, count in sorted(label_counts.items(), key=lambda kv: kv[0].value):
        if count > 1:
            issues.append(
                _issue(Severity.ERROR, "flow", f"{count} folders labeled \"{label.value}\"; at most one is allowed")
            )

    lang = doc.setting("LANGUAGE")
    if lang is not None and lang.value.strip().upper() not in _KNOWN_LANGUAGES:
        issues.append(
            _issue(Severity.WARNING, "settings/LANGUAGE", f"language {lang.value!r} is not one of {', '.join(_KNOWN_LANGUAGES)}")
        )
    auto = doc.setting("AUTOLEARN")
    if auto is not None and auto.as_bool() is None:
        issues.append(
            _issue(Severity.WARNING, "settings/AUTOLEARN", f"value {auto.value!r} is not a boolean")
        )

    seen_ids: dict[str, str] = {}
    for folder, node in doc.iter_nodes():
        loc = f"folder[{folder.label.value}]/input[{node.node_id}]"
        if node.node_id in seen_ids:
            issues.append(
                _issue(Severity.ERROR, loc, f"duplicate node id {node.node_id!r}", node.line)
            )
        else:
            seen_ids[node.node_id] = loc
        issues.extend(_check_node(node, loc))

    concepts = doc.folder(FolderLabel.CONCEPTS)
    if concepts is not None:
        issues.extend(_check_concepts(concepts.concepts))

    if doc.default is not None:
        issues.extend(_check_output_items(doc.default.output, "default"))

    issues.sort(key=lambda i: (i.line if i.line is not None else 0, i.location, i.message))
    return issues


def _check_node(node: InputNode, loc: str) -> list[ValidationIssue]:
    # Imported here: the matching package depends on this module for its
    # load-time validation, so a top-level import would be circular.
    from ..matching.patterns import PatternError, compile_pattern

    issues: list[ValidationIssue] = []

    if not node.grammar:
        issues.append(_issue(Severity.ERROR, loc, "input node has an empty grammar", node.line))
    else:
        primary = node.grammar[0]
        if "$" in primary or "*" in primary:
            issues.append(
                _issue(Severity.WARNING, loc, "wildcard in primary variation", node.line)
            )
        dupes = [item for item, n in Counter(node.grammar).items() if n > 1]
        for item in sorted(dupes):
            issues.append(
                _issue(Severity.WARNING, loc, f"duplicate grammar item {item!r}", node.line)
            )
        for idx, item in enumerate(node.grammar):
            try:
                compile_pattern(item, node.node_id, idx)
            except PatternError as exc:
                issues.append(
                    _issue(Severity.ERROR, f"{loc}/grammar[{idx}]", f"unusable grammar item: {exc}", node.line)
                )

    if node.output is None:
        issues.append(_issue(Severity.ERROR, loc, "input node has no output", node.line))
    else:
        issues.extend(_check_output_items(node.output, loc))

    return issues


def _check_output_items(output, loc: str) -> list[ValidationIssue]:
    issues = []
    if output.selection_type != SELECTION_RANDOM:
        issues.append(
            _issue(Severity.ERROR, loc, f"unsupported selectionType {output.selection_type!r}")
        )
    if not output.items:
        issues.append(_issue(Severity.ERROR, loc, "output has no items"))
    elif output.selection_type == SELECTION_RANDOM and len(output.items) == 1:
        issues.append(
            _issue(Severity.WARNING, loc, "RANDOM output with a single item")
        )
    return issues


def _check_concepts(groups) -> list[ValidationIssue]:
    issues = []
    seen: dict[str, str] = {}
    for group in groups:
        loc = f"folder[Concepts]/concept[{group.canonical}]"
        if not group.canonical.strip():
            issues.append(_issue(Severity.ERROR, loc, "concept canonical token is empty"))
            continue
        tokens = (group.canonical,) + group.synonyms
        local_dupes = [t for t, n in Counter(group.synonyms).items() if n > 1]
        for t in sorted(local_dupes):
            issues.append(_issue(Severity.ERROR, loc, f"synonym {t!r} listed twice"))
        for t in tokens:
            if t in seen and seen[t] != loc:
                issues.append(
                    _issue(Severity.ERROR, loc, f"token {t!r} already used by {seen[t]}")
                )
            else:
                seen.setdefault(t, loc)
    return issues


def has_errors(issues: list[ValidationIssue]) -> bool:
    return any(i.severity is Severity.ERROR for i in issues)
