"""XML reader and writer for dialog documents.

Parsing is built directly on expat so every element carries its source
line for error reporting. The reader is deliberately tolerant: unknown
elements produce warnings instead of failures, Global folder content is
preserved verbatim, and the legacy ``type"USER"`` attribute spelling
(missing ``=``) seen in old exports is accepted.

The writer emits a canonical form: UTF-8, two-space indent, double-quoted
attributes. ``parse(serialize(parse(text)))`` equals ``parse(text)`` for
any document this module accepts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from xml.parsers import expat

from .model import (
    ConceptGroup,
    DefaultNode,
    DialogDocument,
    Folder,
    FolderLabel,
    InputNode,
    Output,
    ParseError,
    SELECTION_RANDOM,
    Setting,
    Severity,
    ValidationIssue,
    synthesize_ids,
)

_ENCODING_DECL = re.compile(r'<\?xml[^>]*?encoding\s*=\s*["\']([A-Za-z0-9._-]+)["\']')

# Once decoded to str the prolog's encoding attribute no longer applies;
# it is dropped so expat always sees plain UTF-8.
_ENCODING_ATTR = re.compile(r'(<\?xml[^>]*?)\s+encoding\s*=\s*["\'][A-Za-z0-9._-]+["\']')

# Legacy exports wrote `type"USER"` instead of `type="USER"` on settings.
_SETTING_TYPE_TYPO = re.compile(r'(<setting\b[^<>]*?\btype)\s*(")')

# Attributes tied to external schema tooling; read and ignored.
_SCHEMA_ATTRS = ("xmlns:xsi", "xsi:noNamespaceSchemaLocation")


@dataclass
class XmlElement:
    """Minimal element tree node used by the reader and writer."""

    tag: str
    attrs: dict[str, str]
    line: int
    children: list["XmlElement"] = field(default_factory=list)
    text_parts: list[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        return "".join(self.text_parts)

    def find_all(self, tag: str) -> list["XmlElement"]:
        return [c for c in self.children if c.tag == tag]


def _decode(xml_text: str | bytes) -> str:
    if isinstance(xml_text, str):
        return xml_text
    match = _ENCODING_DECL.search(xml_text[:200].decode("ascii", "replace"))
    encoding = match.group(1) if match else "utf-8"
    try:
        return xml_text.decode(encoding)
    except (LookupError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot decode document as {encoding}: {exc}") from exc


def _build_tree(text: str) -> XmlElement:
    parser = expat.ParserCreate()
    root: list[XmlElement] = []
    stack: list[XmlElement] = []

    def start(tag: str, attrs: dict[str, str]) -> None:
        elem = XmlElement(tag=tag, attrs=dict(attrs), line=parser.CurrentLineNumber)
        if stack:
            stack[-1].children.append(elem)
        else:
            root.append(elem)
        stack.append(elem)

    def end(_tag: str) -> None:
        stack.pop()

    def chars(data: str) -> None:
        if stack:
            stack[-1].text_parts.append(data)

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    try:
        parser.Parse(text.encode("utf-8"), True)
    except expat.ExpatError as exc:
        raise ParseError(f"malformed XML: {expat.errors.messages[exc.code]}", exc.lineno) from exc
    if not root:
        raise ParseError("empty document")
    return root[0]


class _Reader:
    def __init__(self) -> None:
        self.warnings: list[ValidationIssue] = []

    def warn(self, location: str, message: str, line: int | None = None) -> None:
        self.warnings.append(
            ValidationIssue(Severity.WARNING, location, message, line)
        )

    def read(self, root: XmlElement) -> DialogDocument:
        if root.tag != "dialog":
            raise ParseError(f"root element must be <dialog>, got <{root.tag}>", root.line)
        for name in root.attrs:
            if name not in _SCHEMA_ATTRS:
                self.warn("dialog", f"unknown attribute {name!r} ignored", root.line)

        settings: list[Setting] = []
        flow: XmlElement | None = None
        default: DefaultNode | None = None
        for child in root.children:
            if child.tag == "settings":
                settings.extend(self.read_settings(child))
            elif child.tag == "flow":
                if flow is None:
                    flow = child
                else:
                    self.warn("dialog", "extra <flow> element ignored", child.line)
            else:
                self.warn("dialog", f"unknown element <{child.tag}> ignored", child.line)
        if flow is None:
            raise ParseError("<dialog> is missing its mandatory <flow> child", root.line)

        folders: list[Folder] = []
        for child in flow.children:
            if child.tag == "folder":
                folders.append(self.read_folder(child))
            elif child.tag == "default":
                node = self.read_default(child)
                if default is None:
                    default = node
                else:
                    self.warn("flow", "extra <default> element ignored", child.line)
            else:
                self.warn("flow", f"unknown element <{child.tag}> ignored", child.line)

        labels = [f.label for f in folders]
        if FolderLabel.MAIN not in labels:
            raise ParseError("document has no folder labeled \"Main\"")
        if FolderLabel.LIBRARY not in labels:
            raise ParseError("document has no folder labeled \"Library\"")

        return DialogDocument(
            settings=tuple(settings),
            folders=tuple(folders),
            default=default,
            parse_warnings=tuple(self.warnings),
        )

    def read_settings(self, elem: XmlElement) -> list[Setting]:
        settings = []
        for child in elem.children:
            if child.tag != "setting":
                self.warn("settings", f"unknown element <{child.tag}> ignored", child.line)
                continue
            name = child.attrs.get("name", "").strip()
            if not name:
                self.warn("settings", "<setting> without a name ignored", child.line)
                continue
            settings.append(
                Setting(name=name, scope=child.attrs.get("type", ""), value=child.text.strip())
            )
        return settings

    def read_folder(self, elem: XmlElement) -> Folder:
        raw_label = elem.attrs.get("label", "")
        try:
            label = FolderLabel(raw_label)
        except ValueError:
            raise ParseError(f"unknown folder label {raw_label!r}", elem.line)

        if label is FolderLabel.GLOBAL:
            opaque = tuple(serialize_element(child) for child in elem.children)
            return Folder(label=label, opaque_content=opaque, line=elem.line)

        if label is FolderLabel.CONCEPTS:
            groups = []
            for child in elem.children:
                if child.tag != "concept":
                    self.warn("folder[Concepts]", f"unknown element <{child.tag}> ignored", child.line)
                    continue
                groups.append(self.read_concept(child))
            return Folder(label=label, concepts=tuple(groups), line=elem.line)

        nodes = []
        for child in elem.children:
            if child.tag != "input":
                self.warn(f"folder[{label.value}]", f"unknown element <{child.tag}> ignored", child.line)
                continue
            nodes.append(self.read_input(child, f"folder[{label.value}]"))
        return Folder(label=label, nodes=synthesize_ids(label, tuple(nodes)), line=elem.line)

    def read_concept(self, elem: XmlElement) -> ConceptGroup:
        canonical = elem.attrs.get("canonical", "").strip()
        if not canonical:
            raise ParseError("<concept> requires a canonical attribute", elem.line)
        synonyms = []
        for child in elem.children:
            if child.tag != "synonym":
                self.warn("concept", f"unknown element <{child.tag}> ignored", child.line)
                continue
            synonyms.append(child.text.strip())
        return ConceptGroup(canonical=canonical, synonyms=tuple(synonyms))

    def read_input(self, elem: XmlElement, location: str) -> InputNode:
        grammar: list[str] = []
        output: Output | None = None
        children: list[InputNode] = []
        for child in elem.children:
            if child.tag == "grammar":
                for item in child.children:
                    if item.tag != "item":
                        self.warn(location, f"unknown element <{item.tag}> in grammar ignored", item.line)
                        continue
                    grammar.append(item.text.strip())
            elif child.tag == "output":
                output = self.read_output(child, location)
            elif child.tag == "input":
                children.append(self.read_input(child, location))
            else:
                self.warn(location, f"unknown element <{child.tag}> in input ignored", child.line)
        if not grammar:
            raise ParseError("input node has an empty grammar", elem.line)
        return InputNode(
            node_id="",  # assigned by synthesize_ids once the folder is complete
            grammar=tuple(grammar),
            output=output,
            children=tuple(children),
            declared_id=elem.attrs.get("id") or None,
            line=elem.line,
        )

    def read_output(self, elem: XmlElement, location: str) -> Output:
        prompts = elem.find_all("prompt")
        if not prompts:
            self.warn(location, "<output> without <prompt> ignored", elem.line)
            return Output(items=())
        prompt = prompts[0]
        selection = prompt.attrs.get("selectionType", SELECTION_RANDOM)
        items = []
        for c in prompt.children:
            if c.tag == "item":
                items.append(c.text.strip())
            else:
                self.warn(location, f"unknown element <{c.tag}> in prompt ignored", c.line)
        return Output(items=tuple(items), selection_type=selection)

    def read_default(self, elem: XmlElement) -> DefaultNode:
        outputs = elem.find_all("output")
        if not outputs:
            raise ParseError("<default> requires an <output> child", elem.line)
        return DefaultNode(output=self.read_output(outputs[0], "default"))


def parse_document(xml_text: str | bytes) -> DialogDocument:
    """Parse dialog-document XML into an immutable DialogDocument.

    Accepts str or bytes; bytes are decoded per the XML prolog (UTF-8
    when none is declared). Raises ParseError, with a line number where
    one is known, for malformed XML or a structurally unusable document.
    """
    text = _decode(xml_text)
    text = _ENCODING_ATTR.sub(r"\1", text, count=1)
    text = _SETTING_TYPE_TYPO.sub(r"\1=\2", text)
    return _Reader().read(_build_tree(text))


_ESCAPES = {"&": "&amp;", "<": "&lt;", ">": "&gt;"}


def _esc_text(value: str) -> str:
    for raw, rep in _ESCAPES.items():
        value = value.replace(raw, rep)
    return value


def _esc_attr(value: str) -> str:
    return _esc_text(value).replace('"', "&quot;")


def serialize_element(elem: XmlElement) -> str:
    """Canonical single-line rendering of a raw element subtree.

    Used for opaque Global content: text is kept verbatim, so the result
    reparses to an identical tree.
    """
    attrs = "".join(f' {k}="{_esc_attr(v)}"' for k, v in elem.attrs.items())
    inner = _esc_text(elem.text) + "".join(serialize_element(c) for c in elem.children)
    if not inner:
        return f"<{elem.tag}{attrs}/>"
    return f"<{elem.tag}{attrs}>{inner}</{elem.tag}>"


class _Writer:
    def __init__(self) -> None:
        self.lines: list[str] = ['<?xml version="1.0" encoding="UTF-8"?>']
        self.depth = 0

    def emit(self, line: str) -> None:
        self.lines.append("  " * self.depth + line)

    def open(self, line: str) -> None:
        self.emit(line)
        self.depth += 1

    def close(self, line: str) -> None:
        self.depth -= 1
        self.emit(line)

    def leaf(self, tag: str, text: str, attrs: str = "") -> None:
        self.emit(f"<{tag}{attrs}>{_esc_text(text)}</{tag}>")

    def write(self, doc: DialogDocument) -> str:
        self.open("<dialog>")
        if doc.settings:
            self.open("<settings>")
            for s in doc.settings:
                self.leaf("setting", s.value, f' name="{_esc_attr(s.name)}" type="{_esc_attr(s.scope)}"')
            self.close("</settings>")
        self.open("<flow>")
        for folder in doc.folders:
            self.write_folder(folder)
        if doc.default is not None:
            self.open("<default>")
            self.write_output(doc.default.output)
            self.close("</default>")
        self.close("</flow>")
        self.close("</dialog>")
        return "\n".join(self.lines) + "\n"

    def write_folder(self, folder: Folder) -> None:
        self.open(f'<folder label="{folder.label.value}">')
        for raw in folder.opaque_content:
            self.emit(raw)
        for group in folder.concepts:
            self.open(f'<concept canonical="{_esc_attr(group.canonical)}">')
            for syn in group.synonyms:
                self.leaf("synonym", syn)
            self.close("</concept>")
        for node in folder.nodes:
            self.write_input(node)
        self.close("</folder>")

    def write_input(self, node: InputNode) -> None:
        id_attr = f' id="{_esc_attr(node.declared_id)}"' if node.declared_id else ""
        self.open(f"<input{id_attr}>")
        self.open("<grammar>")
        for item in node.grammar:
            self.leaf("item", item)
        self.close("</grammar>")
        if node.output is not None:
            self.write_output(node.output)
        for child in node.children:
            self.write_input(child)
        self.close("</input>")

    def write_output(self, output: Output) -> None:
        self.open("<output>")
        self.open(f'<prompt selectionType="{_esc_attr(output.selection_type)}">')
        for item in output.items:
            self.leaf("item", item)
        self.close("</prompt>")
        self.close("</output>")


def serialize_document(doc: DialogDocument) -> str:
    """Emit canonical XML for a document.

    The result round-trips: parsing it yields a document structurally
    equal to ``doc`` (synthesized ids are re-derived, not written).
    """
    return _Writer().write(doc)
