"""Curated OpenMP-mistake content and the dialog documents built from it."""

from .build import CoverageIssue, build_documents, check_coverage, content_dir, write_content
from .catalog import Category, ContentError, MistakeEntry, entries_by_id, list_entries, load_catalog

__all__ = [
    "Category",
    "ContentError",
    "CoverageIssue",
    "MistakeEntry",
    "build_documents",
    "check_coverage",
    "content_dir",
    "entries_by_id",
    "list_entries",
    "load_catalog",
    "write_content",
]
