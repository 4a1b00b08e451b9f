"""Corpus evaluation and Likert percentage arithmetic."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ompmentor.eval_harness import (
    CorpusError,
    CorpusRow,
    LikertCounts,
    ZeroTotal,
    likert_percentages,
    parse_corpus,
    run_eval,
)


class TestParseCorpus:
    def test_parses_rows_and_skips_comments(self):
        text = "# header\nEN\tIs atomic faster than critical?\tcritical-vs-atomic\n\nES\thola\tDEFAULT\n"
        rows = parse_corpus(text)
        assert [(r.language, r.expected) for r in rows] == [
            ("EN", "critical-vs-atomic"),
            ("ES", "DEFAULT"),
        ]

    def test_malformed_rows_reported_with_numbers(self):
        text = "EN\tonly two fields\nEN\tq\tid\textra\n"
        with pytest.raises(CorpusError) as err:
            parse_corpus(text)
        assert [n for n, _ in err.value.problems] == [1, 2]


class TestRunEval:
    def test_primary_variations_score_perfectly(self, indexes, entries):
        corpus = [
            CorpusRow(lang, e.primary_variation(lang), e.id)
            for lang in ("EN", "ES")
            for e in entries
        ]
        report = run_eval(indexes, corpus)
        assert report.total == 30
        assert report.accuracy == 1.0
        assert report.confusion == []

    def test_gibberish_rows_expecting_default(self, indexes):
        corpus = [
            CorpusRow("EN", f"gibberish blob {i} zz", "DEFAULT") for i in range(15)
        ]
        report = run_eval(indexes, corpus)
        assert report.accuracy == 1.0

    def test_deliberate_miss_lands_in_confusion(self, indexes, entries):
        corpus = [
            CorpusRow("EN", entries[0].primary_variation("EN"), entries[0].id),
            # expects the wrong node on purpose
            CorpusRow("EN", entries[1].primary_variation("EN"), entries[0].id),
        ]
        report = run_eval(indexes, corpus)
        assert report.correct == 1
        assert len(report.confusion) == 1
        question, expected, got = report.confusion[0]
        assert expected == entries[0].id and got == entries[1].id

    def test_row_permutation_does_not_change_accuracy(self, indexes, entries):
        corpus = [
            CorpusRow("EN", e.primary_variation("EN"), e.id) for e in entries
        ] + [CorpusRow("EN", "zz qq ww", "DEFAULT")]
        shuffled = corpus[:]
        random.Random(5).shuffle(shuffled)
        assert run_eval(indexes, corpus).accuracy == run_eval(indexes, shuffled).accuracy

    def test_unknown_expected_id_is_a_corpus_error(self, indexes):
        with pytest.raises(CorpusError):
            run_eval(indexes, [CorpusRow("EN", "hi", "no-such-entry", 3)])

    def test_unknown_language_is_a_corpus_error(self, indexes):
        with pytest.raises(CorpusError):
            run_eval(indexes, [CorpusRow("FR", "salut", "DEFAULT", 1)])

    def test_empty_corpus_rejected(self, indexes):
        with pytest.raises(CorpusError):
            run_eval(indexes, [])

    def test_per_entry_accuracies_in_unit_interval(self, indexes, entries):
        corpus = [CorpusRow("EN", e.primary_variation("EN"), e.id) for e in entries]
        report = run_eval(indexes, corpus)
        assert all(0.0 <= v <= 1.0 for v in report.per_entry.values())


class TestLikert:
    def test_survey_row_1(self):
        assert likert_percentages(LikertCounts((0, 0, 1, 3, 4))) == (0.0, 0.0, 12.5, 37.5, 50.0)

    def test_survey_row_2(self):
        assert likert_percentages(LikertCounts((0, 1, 2, 2, 3))) == (0.0, 12.5, 25.0, 25.0, 37.5)

    def test_survey_row_3(self):
        assert likert_percentages(LikertCounts((0, 1, 0, 1, 6))) == (0.0, 12.5, 0.0, 12.5, 75.0)

    def test_survey_row_4(self):
        assert likert_percentages(LikertCounts((0, 2, 1, 2, 3))) == (0.0, 25.0, 12.5, 25.0, 37.5)

    def test_unanimous(self):
        assert likert_percentages(LikertCounts((8, 0, 0, 0, 0))) == (100.0, 0.0, 0.0, 0.0, 0.0)

    def test_half_up_rounding(self):
        # 1/8 of 3 = 37.5 exact; 1/3 rounds 33.333 -> 33.3; .25 rounds up to .3
        assert likert_percentages(LikertCounts((1, 1, 1, 0, 0))) == (33.3, 33.3, 33.3, 0.0, 0.0)
        assert likert_percentages(LikertCounts((1, 399, 0, 0, 0)))[0] == 0.3

    def test_zero_total(self):
        with pytest.raises(ZeroTotal):
            likert_percentages(LikertCounts((0, 0, 0, 0, 0)))

    def test_negative_counts_rejected(self):
        with pytest.raises(ValueError):
            LikertCounts((1, -1, 0, 0, 0))

    @given(
        st.lists(st.integers(min_value=0, max_value=1000), min_size=5, max_size=5).filter(
            lambda c: 0 < sum(c) <= 1000
        )
    )
    def test_rounded_sum_stays_close_to_100(self, counts):
        # Per-bucket half-up rounding keeps the sum within 0.2 of 100.0;
        # 0.2 is tight: (1, 1, 1, 1, 396) rounds to 0.3 x 4 + 99.0 = 100.2.
        total = sum(likert_percentages(LikertCounts(tuple(counts))))
        assert abs(total - 100.0) <= 0.2 + 1e-9

    def test_extremal_rounding_case(self):
        assert sum(likert_percentages(LikertCounts((1, 1, 1, 1, 396)))) == pytest.approx(100.2)
