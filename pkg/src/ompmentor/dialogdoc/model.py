"""Data model for dialog documents.

A dialog document describes a rule-based Q&A agent: account settings,
folders that organize the content (Main, Library, Global, Concepts),
input nodes whose grammar items are question variations, output prompts,
and a default answer used when nothing matches.

All model values are immutable; parsed documents are safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator


class FolderLabel(str, Enum):
    MAIN = "Main"
    LIBRARY = "Library"
    GLOBAL = "Global"
    CONCEPTS = "Concepts"


class Severity(str, Enum):
    ERROR = "Error"
    WARNING = "Warning"


#: Setting names with defined semantics. Unrecognized names are preserved.
KNOWN_SETTINGS = ("DISPLAYNAME", "LANGUAGE", "AUTOLEARN")

#: Output selection strategy understood by the engine.
SELECTION_RANDOM = "RANDOM"


class ParseError(ValueError):
    """Raised when text cannot be parsed into a usable DialogDocument."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class NodeNotFound(KeyError):
    """Raised by lookup_node for an unknown node id."""


@dataclass(frozen=True)
class Setting:
    """One <setting> entry: name, scope (the ``type`` attribute), value."""

    name: str
    scope: str
    value: str

    def as_bool(self) -> bool | None:
        low = self.value.strip().lower()
        if low in ("true", "false"):
            return low == "true"
        return None


@dataclass(frozen=True)
class Output:
    """An answer prompt: a selection strategy over one or more texts."""

    items: tuple[str, ...]
    selection_type: str = SELECTION_RANDOM


@dataclass(frozen=True)
class DefaultNode:
    """Fallback answer used when no grammar item matches."""

    output: Output


@dataclass(frozen=True)
class ConceptGroup:
    """A canonical token plus synonyms folded onto it during matching."""

    canonical: str
    synonyms: tuple[str, ...]


@dataclass(frozen=True)
class InputNode:
    """One question node: grammar variations, its answer, child nodes.

    ``node_id`` is the effective id: the declared ``id`` attribute when
    present, otherwise a synthesized ``<folderLabel>/<index>`` id assigned
    in folder preorder.
    """

    node_id: str
    grammar: tuple[str, ...]
    output: Output | None
    children: tuple["InputNode", ...] = ()
    declared_id: str | None = None
    line: int | None = field(default=None, compare=False)

    @property
    def primary_variation(self) -> str:
        return self.grammar[0]


@dataclass(frozen=True)
class Folder:
    """A labeled content folder.

    Main and Library folders carry input nodes; the Concepts folder
    carries concept groups; Global content is preserved opaquely as
    canonical XML strings and otherwise ignored.
    """

    label: FolderLabel
    nodes: tuple[InputNode, ...] = ()
    concepts: tuple[ConceptGroup, ...] = ()
    opaque_content: tuple[str, ...] = ()
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class ValidationIssue:
    severity: Severity
    location: str
    message: str
    line: int | None = None

    def __str__(self) -> str:
        where = f"{self.location}" + (f":{self.line}" if self.line else "")
        return f"{self.severity.value}: {where}: {self.message}"


@dataclass(frozen=True)
class DialogDocument:
    """A parsed dialog document.

    Element order from the file is preserved: folders, grammar items and
    output items appear in file order.
    """

    settings: tuple[Setting, ...]
    folders: tuple[Folder, ...]
    default: DefaultNode | None = None
    parse_warnings: tuple[ValidationIssue, ...] = field(default=(), compare=False)

    def folder(self, label: FolderLabel) -> Folder | None:
        for f in self.folders:
            if f.label is label:
                return f
        return None

    @property
    def main_folder(self) -> Folder:
        f = self.folder(FolderLabel.MAIN)
        if f is None:
            raise ParseError("document has no Main folder")
        return f

    @property
    def library_folder(self) -> Folder:
        f = self.folder(FolderLabel.LIBRARY)
        if f is None:
            raise ParseError("document has no Library folder")
        return f

    def setting(self, name: str) -> Setting | None:
        for s in self.settings:
            if s.name == name:
                return s
        return None

    @property
    def language(self) -> str | None:
        s = self.setting("LANGUAGE")
        return s.value.strip().upper() if s else None

    @property
    def autolearn(self) -> bool:
        s = self.setting("AUTOLEARN")
        if s is None:
            return False
        return s.as_bool() or False

    def concept_map(self) -> dict[str, str]:
        """Synonym token -> canonical token, from the Concepts folder."""
        mapping: dict[str, str] = {}
        folder = self.folder(FolderLabel.CONCEPTS)
        if folder is None:
            return mapping
        for group in folder.concepts:
            for syn in group.synonyms:
                mapping[syn] = group.canonical
        return mapping

    def iter_nodes(self) -> Iterator[tuple[Folder, InputNode]]:
        """All input nodes in document order, depth-first within folders."""
        for folder in self.folders:
            stack = list(reversed(folder.nodes))
            while stack:
                node = stack.pop()
                yield folder, node
                stack.extend(reversed(node.children))


def synthesize_ids(label: FolderLabel, nodes: tuple[InputNode, ...]) -> tuple[InputNode, ...]:
    """Assign effective ids to a folder's nodes in preorder.

    Declared ids win; nodes without one get ``<label>/<preorder index>``.
    Index positions are consumed by every node, declared or not, so ids
    stay stable when a declared id is added elsewhere.
    """
    counter = 0

    def assign(node: InputNode) -> InputNode:
        nonlocal counter
        idx = counter
        counter += 1
        children = tuple(assign(c) for c in node.children)
        effective = node.declared_id if node.declared_id else f"{label.value}/{idx}"
        return InputNode(
            node_id=effective,
            grammar=node.grammar,
            output=node.output,
            children=children,
            declared_id=node.declared_id,
            line=node.line,
        )

    return tuple(assign(n) for n in nodes)


def lookup_node(doc: DialogDocument, node_id: str) -> InputNode:
    """Exact-id lookup across all folders, depth-first.

    Raises NodeNotFound for unknown ids.
    """
    for _, node in doc.iter_nodes():
        if node.node_id == node_id:
            return node
    raise NodeNotFound(node_id)
