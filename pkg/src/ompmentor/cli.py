"""Command-line interface.

Subcommands: chat (REPL), validate (parse + validate + coverage),
eval (corpus accuracy), advise (scan a source file), serve (HTTP API).

Exit codes: 0 success, 1 failed validation or accuracy below threshold,
2 usage errors. ``--json`` on validate/eval/advise prints one JSON
document instead of line-oriented text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .conversation import ChatEngine, UnsupportedLanguage
from .dialogdoc.model import ParseError, Severity
from .dialogdoc.validate import validate_document
from .dialogdoc.xmlio import parse_document
from .eval_harness import CorpusError, parse_corpus, run_eval
from .kb.build import check_coverage
from .kb.catalog import list_entries
from .service import ServiceConfig, create_app, load_indexes


def _content_dir(value: str | None) -> Path:
    if value:
        return Path(value)
    env = os.environ.get("CONTENT_DIR")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "content"


def _build_engine(content: str | None) -> ChatEngine:
    indexes = load_indexes(_content_dir(content))
    if not indexes:
        raise SystemExit("error: no usable dialog documents found in content directory")
    return ChatEngine(indexes)


def cmd_chat(args) -> int:
    engine = _build_engine(args.content)
    try:
        conv, welcome = engine.start_conversation(args.lang, args.seed)
    except UnsupportedLanguage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(welcome.text)
    while True:
        try:
            line = input("> ")
        except EOFError:
            print()
            return 0
        if line.strip() == ":quit":
            return 0
        if not line.strip():
            continue
        reply = engine.post_message(conv, line)
        print(reply.text)


def cmd_validate(args) -> int:
    target = Path(args.path)
    if not target.exists():
        print(f"error: {target} does not exist", file=sys.stderr)
        return 2
    paths = sorted(target.glob("*.xml")) if target.is_dir() else [target]
    if not paths:
        print(f"error: no XML documents under {target}", file=sys.stderr)
        return 2

    entries = list_entries()
    report = []
    failed = False
    for path in paths:
        record = {"file": str(path), "errors": [], "warnings": [], "coverage": []}
        try:
            doc = parse_document(path.read_bytes())
        except ParseError as exc:
            record["errors"].append(str(exc))
            failed = True
            report.append(record)
            continue
        for issue in validate_document(doc):
            bucket = "errors" if issue.severity is Severity.ERROR else "warnings"
            record[bucket].append(str(issue))
        if record["errors"]:
            failed = True
        else:
            for issue in check_coverage(doc, entries):
                record["coverage"].append(issue.message)
        report.append(record)

    if args.json:
        print(json.dumps({"documents": report, "ok": not failed}, ensure_ascii=False, indent=2))
    else:
        for record in report:
            status = "FAIL" if record["errors"] else "ok"
            print(f"{record['file']}: {status}")
            for line in record["errors"]:
                print(f"  error: {line}")
            for line in record["warnings"]:
                print(f"  warning: {line}")
            for line in record["coverage"]:
                print(f"  coverage: {line}")
    return 1 if failed else 0


def cmd_eval(args) -> int:
    corpus_path = Path(args.corpus)
    if not corpus_path.exists():
        print(f"error: corpus file {corpus_path} does not exist", file=sys.stderr)
        return 2
    try:
        corpus = parse_corpus(corpus_path.read_text("utf-8"))
    except CorpusError as exc:
        print(f"error: malformed corpus: {exc}", file=sys.stderr)
        return 2
    if args.lang:
        corpus = [row for row in corpus if row.language == args.lang.upper()]
        if not corpus:
            print(f"error: corpus has no rows for language {args.lang!r}", file=sys.stderr)
            return 2

    indexes = load_indexes(_content_dir(args.content))
    try:
        report = run_eval(indexes, corpus)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        print(f"total: {report.total}")
        print(f"correct: {report.correct}")
        print(f"accuracy: {report.accuracy:.4f}")
        for entry, acc in report.per_entry.items():
            print(f"  {entry}: {acc:.4f}")
        for question, expected, got in report.confusion:
            print(f"  miss: {question!r} expected {expected} got {got}")
    return 0 if report.accuracy >= args.threshold else 1


def cmd_advise(args) -> int:
    path = Path(args.file)
    if not path.exists():
        print(f"error: {path} does not exist", file=sys.stderr)
        return 2
    from . import advisor
    from .kb.catalog import entries_by_id

    entries = entries_by_id()
    findings = advisor.scan_snippet(path.read_text("utf-8", errors="replace"))
    if args.json:
        print(
            json.dumps(
                {
                    "findings": [
                        {
                            "rule_id": f.rule_id,
                            "entry_id": f.entry_id,
                            "line": f.line,
                            "severity": f.severity.value,
                            "message": f.message,
                            "excerpt": f.excerpt,
                            "answer": entries[f.entry_id].answer(args.lang.upper()),
                        }
                        for f in findings
                    ]
                },
                ensure_ascii=False,
                indent=2,
            )
        )
        return 0
    if not findings:
        print("no known mistake patterns found")
        return 0
    for f in findings:
        print(f"{path.name}:{f.line}: [{f.severity.value}] {f.rule_id}: {f.message}")
        print(f"  > {f.excerpt}")
        print(f"  {entries[f.entry_id].answer(args.lang.upper())}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    bind = args.bind or os.environ.get("BIND", "127.0.0.1:8080")
    host, _, port = bind.rpartition(":")
    seed_env = os.environ.get("SEED")
    seed = args.seed if args.seed is not None else (int(seed_env) if seed_env else None)
    log_path = args.unmatched_log or os.environ.get("UNMATCHED_LOG")
    config = ServiceConfig(
        host=host or "127.0.0.1",
        port=int(port),
        content_dir=_content_dir(args.content),
        default_language=(args.default_lang or os.environ.get("DEFAULT_LANG", "EN")).upper(),
        seed=seed,
        unmatched_log_path=Path(log_path) if log_path else None,
    )
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ompmentor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chat", help="interactive chat session (:quit to exit)")
    p.add_argument("--lang", default="EN", help="session language (EN or ES)")
    p.add_argument("--seed", type=int, default=0, help="seed for answer selection")
    p.add_argument("--content", help="directory of dialog XML documents")
    p.set_defaults(func=cmd_chat)

    p = sub.add_parser("validate", help="parse + validate + coverage-check documents")
    p.add_argument("path", help="XML file or directory of XML files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("eval", help="run the paraphrase corpus against the matcher")
    p.add_argument("--corpus", required=True, help="TSV corpus file")
    p.add_argument("--lang", help="restrict to one language")
    p.add_argument("--threshold", type=float, default=0.9, help="exit 0 iff accuracy >= threshold")
    p.add_argument("--content", help="directory of dialog XML documents")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("advise", help="scan a C/C++ file for catalogued OpenMP mistakes")
    p.add_argument("file", help="source file to scan")
    p.add_argument("--lang", default="EN", help="answer language")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_advise)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--bind", help="host:port (default 127.0.0.1:8080)")
    p.add_argument("--content", help="directory of dialog XML documents")
    p.add_argument("--default-lang", help="default conversation language")
    p.add_argument("--seed", type=int, help="fixed seed mode for reproducible replies")
    p.add_argument("--unmatched-log", help="append-only JSONL log of unanswered questions")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
