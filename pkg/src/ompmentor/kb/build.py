"""Compile the mistake catalog into per-language dialog documents.

Run ``python -m ompmentor.kb.build`` to regenerate the XML under
``src/ompmentor/content/``; the generated files are committed and a test
keeps them in sync with this builder.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..dialogdoc.model import (
    ConceptGroup,
    DefaultNode,
    DialogDocument,
    Folder,
    FolderLabel,
    InputNode,
    Output,
    Setting,
    synthesize_ids,
)
from ..dialogdoc.validate import has_errors, validate_document
from ..dialogdoc.xmlio import serialize_document
from ..matching.index import CompiledIndex, NoMatch
from ..matching.normalize import normalize
from .catalog import ContentError, MistakeEntry, list_entries

LANGUAGES = ("EN", "ES")

_WELCOME = {
    "EN": (
        "Hello! Ask me about common OpenMP mistakes.",
        "Hi! I can help you avoid common OpenMP mistakes. Ask me a question.",
    ),
    "ES": (
        "¡Hola! Pregúntame sobre errores comunes de OpenMP.",
        "¡Bienvenido! Puedo ayudarte a evitar errores comunes de OpenMP.",
    ),
}

_WELCOME_GRAMMAR = {
    "EN": ("Hello",),
    "ES": ("Hola",),
}

_DEFAULTS = {
    "EN": (
        "I did not understand the question. Please try again.",
        "I am sorry, I did not understand your question. Please try another question.",
    ),
    "ES": (
        "No he entendido la pregunta. Por favor, inténtelo de nuevo.",
        "Lo siento, no he entendido su pregunta. Por favor, haga otra pregunta.",
    ),
}

_DISPLAY_NAMES = {"EN": "OpenMP Mentor", "ES": "Mentor OpenMP"}

# Synonyms folded onto canonical tokens during matching. Grouped per
# language; Spanish groups also fold accented spellings and inflections
# onto the unaccented canonical form used by the patterns.
_CONCEPTS = {
    "EN": (
        ("pragma", ("directive",)),
        ("change", ("modify", "alter")),
        ("protect", ("protection", "protecting", "protected", "guard")),
        ("local", ("private",)),
        ("region", ("regions",)),
        ("forget", ("forgot", "omit", "omitted", "skip")),
        ("parallel", ("parallelism", "parallelization")),
        ("initialize", ("init", "initialized", "initializing", "initialization")),
        ("unset", ("unsetting", "release", "released", "unlock", "unlocking")),
        ("lock", ("locks",)),
        ("array", ("arrays",)),
        ("sequentially", ("sequential",)),
        ("depends", ("depend", "depending")),
    ),
    "ES": (
        ("pragma", ("directiva",)),
        ("cambiar", ("modificar", "modifican", "modifica", "alterar", "alteran")),
        ("bucle", ("ciclo", "ciclos", "loop")),
        ("proteger", ("proteccion", "protección", "protegerse", "protegida", "protegidas", "protegido", "protegidos")),
        ("local", ("locales", "privada", "privadas", "privado", "privados")),
        ("region", ("región", "regiones", "seccion", "sección", "secciones")),
        ("hilos", ("hilo", "threads", "thread")),
        ("olvidar", ("olvido", "olvida", "olvide", "olvidé", "olvidas")),
        ("paralela", ("paralelo", "paralelos", "paralelas", "paralelismo", "paralelización", "paralelizacion", "parallel")),
        ("inicializar", ("inicializo", "inicializa", "inicializarla", "inicializarlo", "inicialización", "inicializacion", "init")),
        ("liberar", ("libero", "libera", "liberarlo", "desbloquear", "desbloqueo", "quitar", "quita")),
        ("lock", ("locks", "candado", "cerrojo")),
        ("arreglo", ("array", "arrays", "arreglos", "vector", "vectores")),
        ("iteraciones", ("iteracion", "iteración")),
        ("numero", ("número", "numeros", "números")),
        ("variable", ("variables",)),
        ("compartida", ("compartidas", "compartido", "compartidos", "comparten")),
        ("condicion", ("condición",)),
        ("secuencial", ("secuencialmente",)),
        ("ignorar", ("ignora", "ignoran", "ignorado", "ignorada", "ignorados", "ignoradas")),
        ("habilitar", ("habilito", "habilita", "activar", "activa", "activan")),
        ("clausula", ("cláusula", "clausulas", "cláusulas")),
        ("vacio", ("vacío",)),
        ("dividir", ("divido", "divide", "reparte", "repartir")),
        ("recomienda", ("recomiendan", "recomendado", "recomendable")),
        ("bloquear", ("bloqueo", "bloquea")),
        ("anidado", ("anidar", "anidada", "anidadas", "anidados", "anidamiento")),
        ("codigo", ("código", "códigos")),
        ("parametros", ("parámetros", "parametro", "parámetro")),
        ("faltar", ("falta", "faltan")),
    ),
}


@dataclass(frozen=True)
class CoverageIssue:
    kind: str  # missing-node | orphan-node | self-consistency
    entry_id: str | None
    node_id: str | None
    message: str


def build_documents(entries: list[MistakeEntry] | None = None) -> dict[str, DialogDocument]:
    """One validated dialog document per language.

    Raises ContentError listing every entry that violates its
    invariants; the resulting documents validate with zero Errors.
    """
    if entries is None:
        entries = list_entries()
    problems = [p for e in entries for p in e.problems()]
    if problems:
        raise ContentError(problems)

    documents = {}
    for lang in LANGUAGES:
        settings = (
            Setting("DISPLAYNAME", "USER", _DISPLAY_NAMES[lang]),
            Setting("LANGUAGE", "USER", lang),
            Setting("AUTOLEARN", "USER", "true"),
        )
        welcome = InputNode(
            node_id="welcome",
            declared_id="welcome",
            grammar=_WELCOME_GRAMMAR[lang],
            output=Output(items=_WELCOME[lang]),
        )
        main = Folder(label=FolderLabel.MAIN, nodes=synthesize_ids(FolderLabel.MAIN, (welcome,)))
        library_nodes = tuple(
            InputNode(
                node_id=e.id,
                declared_id=e.id,
                grammar=e.variants[lang],
                output=Output(items=e.answers[lang]),
            )
            for e in entries
        )
        library = Folder(
            label=FolderLabel.LIBRARY,
            nodes=synthesize_ids(FolderLabel.LIBRARY, library_nodes),
        )
        concepts = Folder(
            label=FolderLabel.CONCEPTS,
            concepts=tuple(ConceptGroup(c, tuple(s)) for c, s in _CONCEPTS[lang]),
        )
        doc = DialogDocument(
            settings=settings,
            folders=(main, library, concepts),
            default=DefaultNode(output=Output(items=_DEFAULTS[lang])),
        )
        issues = validate_document(doc)
        if has_errors(issues):
            raise ContentError([str(i) for i in issues])
        documents[lang] = doc
    return documents


def check_coverage(doc: DialogDocument, entries: list[MistakeEntry]) -> list[CoverageIssue]:
    """Cross-check a compiled document against the catalog.

    Flags entries with no Library node, Library nodes with no entry, and
    entries whose primary variation does not best-match their own node.
    """
    lang = doc.language or "EN"
    issues: list[CoverageIssue] = []
    library = doc.folder(FolderLabel.LIBRARY)
    node_ids = {n.node_id for n in (library.nodes if library else ())}
    entry_ids = {e.id for e in entries}

    for entry in entries:
        if entry.id not in node_ids:
            issues.append(
                CoverageIssue("missing-node", entry.id, None, f"entry {entry.id!r} has no node in the document")
            )
    for node_id in sorted(node_ids - entry_ids):
        issues.append(
            CoverageIssue("orphan-node", None, node_id, f"node {node_id!r} has no catalog entry")
        )

    index = CompiledIndex(doc)
    for entry in entries:
        if entry.id not in node_ids or lang not in entry.variants:
            continue
        question = entry.primary_variation(lang)
        try:
            result = index.best_match(normalize(question, index.concepts))
        except NoMatch:
            issues.append(
                CoverageIssue("self-consistency", entry.id, None,
                              f"primary variation of {entry.id!r} matches nothing")
            )
            continue
        if result.node_id != entry.id:
            issues.append(
                CoverageIssue("self-consistency", entry.id, result.node_id,
                              f"primary variation of {entry.id!r} answers node {result.node_id!r}")
            )
    return issues


def content_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "content"


def write_content(target: Path | None = None) -> list[Path]:
    """Serialize the generated documents into the content directory."""
    target = target or content_dir()
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for lang, doc in build_documents().items():
        path = target / f"{lang.lower()}.xml"
        path.write_text(serialize_document(doc), encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    for path in write_content():
        print(f"wrote {path}")
