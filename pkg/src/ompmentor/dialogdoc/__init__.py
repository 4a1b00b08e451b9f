"""Dialog-document format: model, parser, serializer, validator."""

from .model import (
    ConceptGroup,
    DefaultNode,
    DialogDocument,
    Folder,
    FolderLabel,
    InputNode,
    NodeNotFound,
    Output,
    ParseError,
    Setting,
    Severity,
    ValidationIssue,
    lookup_node,
)
from .validate import has_errors, validate_document
from .xmlio import parse_document, serialize_document

__all__ = [
    "ConceptGroup",
    "DefaultNode",
    "DialogDocument",
    "Folder",
    "FolderLabel",
    "InputNode",
    "NodeNotFound",
    "Output",
    "ParseError",
    "Setting",
    "Severity",
    "ValidationIssue",
    "has_errors",
    "lookup_node",
    "parse_document",
    "serialize_document",
    "validate_document",
]
