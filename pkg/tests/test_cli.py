"""Command-line behavior: subcommands, exit codes, --json output."""

import json

import pytest

from ompmentor.cli import main

MISSING_OMP_SNIPPET = "#pragma parallel for\nfor (int i = 0; i < n; i++) { a[i] = i; }\n"


class TestValidate:
    def test_shipped_content_passes(self, shipped_content_dir, capsys):
        code = main(["validate", str(shipped_content_dir)])
        assert code == 0
        out = capsys.readouterr().out
        assert "en.xml: ok" in out and "es.xml: ok" in out

    def test_single_file(self, shipped_content_dir):
        assert main(["validate", str(shipped_content_dir / "en.xml")]) == 0

    def test_broken_document_fails_with_1(self, tmp_path, capsys):
        bad = tmp_path / "bad.xml"
        bad.write_text("<dialog><flow></flow></dialog>", encoding="utf-8")
        assert main(["validate", str(bad)]) == 1
        assert "error" in capsys.readouterr().out

    def test_missing_path_is_usage_error(self, tmp_path):
        assert main(["validate", str(tmp_path / "nope.xml")]) == 2

    def test_json_mode(self, shipped_content_dir, capsys):
        assert main(["validate", str(shipped_content_dir / "en.xml"), "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["ok"] is True
        assert payload["documents"][0]["errors"] == []


class TestEval:
    def test_shipped_corpus_passes_default_threshold(self, shipped_content_dir, capsys):
        corpus = shipped_content_dir / "paraphrases.tsv"
        assert main(["eval", "--corpus", str(corpus)]) == 0
        assert "accuracy" in capsys.readouterr().out

    def test_missing_corpus_is_usage_error(self, tmp_path, capsys):
        assert main(["eval", "--corpus", str(tmp_path / "missing.tsv")]) == 2
        assert "does not exist" in capsys.readouterr().err

    def test_unreachable_threshold_fails_with_1(self, shipped_content_dir):
        corpus = shipped_content_dir / "paraphrases.tsv"
        assert main(["eval", "--corpus", str(corpus), "--threshold", "1.01"]) == 1

    def test_language_filter_and_json(self, shipped_content_dir, capsys):
        corpus = shipped_content_dir / "paraphrases.tsv"
        assert main(["eval", "--corpus", str(corpus), "--lang", "ES", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["total"] > 0
        assert payload["accuracy"] >= 0.9

    def test_malformed_corpus_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.tsv"
        bad.write_text("just one field\n", encoding="utf-8")
        assert main(["eval", "--corpus", str(bad)]) == 2

    def test_missing_required_flag_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["eval"])
        assert err.value.code == 2


class TestAdvise:
    def test_findings_with_answers(self, tmp_path, capsys):
        src = tmp_path / "bad.c"
        src.write_text(MISSING_OMP_SNIPPET, encoding="utf-8")
        assert main(["advise", str(src)]) == 0
        out = capsys.readouterr().out
        assert "R-missing-omp" in out
        assert "bad.c:1" in out

    def test_clean_file_reports_no_patterns(self, tmp_path, capsys):
        src = tmp_path / "ok.c"
        src.write_text("int main(void) { return 0; }\n", encoding="utf-8")
        assert main(["advise", str(src)]) == 0
        assert "no known mistake patterns found" in capsys.readouterr().out

    def test_json_mode(self, tmp_path, capsys):
        src = tmp_path / "bad.c"
        src.write_text(MISSING_OMP_SNIPPET, encoding="utf-8")
        assert main(["advise", str(src), "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["findings"][0]["rule_id"] == "R-missing-omp"
        assert payload["findings"][0]["answer"]

    def test_missing_file_is_usage_error(self, tmp_path):
        assert main(["advise", str(tmp_path / "nope.c")]) == 2

    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2


class TestChat:
    def test_repl_answers_then_quits(self, monkeypatch, capsys):
        lines = iter(["Can I change a variable inside a pragma omp loop?", ":quit"])
        monkeypatch.setattr("builtins.input", lambda _prompt="": next(lines))
        assert main(["chat", "--seed", "1"]) == 0
        out = capsys.readouterr().out
        assert "It is explicitly forbidden to change the loop variable" in out

    def test_spanish_session(self, monkeypatch, capsys):
        lines = iter([":quit"])
        monkeypatch.setattr("builtins.input", lambda _prompt="": next(lines))
        assert main(["chat", "--lang", "ES", "--seed", "1"]) == 0
        assert "OpenMP" in capsys.readouterr().out

    def test_eof_ends_session(self, monkeypatch):
        def raise_eof(_prompt=""):
            raise EOFError

        monkeypatch.setattr("builtins.input", raise_eof)
        assert main(["chat", "--seed", "1"]) == 0

    def test_unsupported_language_is_usage_error(self, monkeypatch):
        assert main(["chat", "--lang", "FR", "--seed", "1"]) == 2
