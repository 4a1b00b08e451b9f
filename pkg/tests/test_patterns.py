"""Pattern compilation and single-pattern matching semantics."""

import pytest

from ompmentor.matching.normalize import normalize
from ompmentor.matching.patterns import (
    PatternError,
    PatternKind,
    compile_pattern,
    match_pattern,
)


def compile_item(item, **kwargs):
    return compile_pattern(item, node_id="n", item_index=kwargs.pop("item_index", 0), **kwargs)


class TestCompile:
    def test_literal(self):
        p = compile_item("Can I change a variable inside a pragma omp loop?")
        assert p.kind is PatternKind.LITERAL
        assert p.runs == (("can", "i", "change", "a", "variable", "inside", "a", "pragma", "omp", "loop"),)

    def test_verb_anchored(self):
        p = compile_item("$ Change a variable inside a loop?")
        assert p.kind is PatternKind.VERB_ANCHORED
        assert p.runs == (("change", "a", "variable", "inside", "a", "loop"),)

    def test_slotted(self):
        p = compile_item("change * variable * loop")
        assert p.kind is PatternKind.SLOTTED
        assert p.runs == (("change",), ("variable",), ("loop",))
        assert not p.leading_gap and not p.trailing_gap

    def test_slotted_explicit_end_gaps(self):
        p = compile_item("* shared variable *")
        assert p.runs == (("shared", "variable"),)
        assert p.leading_gap and p.trailing_gap

    def test_adjacent_stars_collapse(self):
        p = compile_item("change * * loop")
        assert p.runs == (("change",), ("loop",))

    def test_wildcard_only_rejected(self):
        with pytest.raises(PatternError):
            compile_item("* * *")

    def test_empty_item_rejected(self):
        with pytest.raises(PatternError):
            compile_item("  ?!  ")

    def test_dollar_not_leading_rejected(self):
        with pytest.raises(PatternError):
            compile_item("Change $ a variable")

    def test_mixed_wildcards_rejected(self):
        with pytest.raises(PatternError):
            compile_item("$ change * loop")

    def test_double_dollar_rejected(self):
        with pytest.raises(PatternError):
            compile_item("$ change $ loop")

    def test_bare_dollar_rejected(self):
        with pytest.raises(PatternError):
            compile_item("$")

    def test_literal_runs_use_input_normalization(self):
        p = compile_item("CHANGE, a Variable!")
        assert p.runs == (("change", "a", "variable"),)

    def test_concepts_apply_to_runs(self):
        p = compile_item("the directive omp", concepts={"directive": "pragma"})
        assert p.runs == (("the", "pragma", "omp"),)


class TestMatch:
    def test_verb_anchored_lead_in_captured(self):
        p = compile_item("$ Change a variable inside a loop?")
        outcome = match_pattern(p, normalize("Is it possible to change a variable inside a loop?"))
        assert outcome.matched
        assert outcome.captures == (("is", "it", "possible", "to"),)
        assert outcome.literal_token_count == 6

    def test_verb_anchored_may_i_to(self):
        p = compile_item("$ Change a variable inside a loop?")
        assert match_pattern(p, normalize("May I to change a variable inside a loop?")).matched

    def test_verb_anchored_empty_prefix(self):
        p = compile_item("$ Change a variable inside a loop?")
        outcome = match_pattern(p, normalize("change a variable inside a loop"))
        assert outcome.matched
        assert outcome.captures == ((),)

    def test_verb_anchored_requires_exact_suffix(self):
        p = compile_item("$ Change a variable inside a loop?")
        assert not match_pattern(p, normalize("change a variable inside a loop quickly")).matched

    def test_slotted_captures(self):
        p = compile_item("change * variable * loop")
        outcome = match_pattern(p, normalize("can i change a variable inside a loop"))
        assert outcome.matched
        assert outcome.captures == (("a",), ("inside", "a"))

    def test_literal_identity_zero_captures(self):
        p = compile_item("change a variable")
        outcome = match_pattern(p, normalize("change a variable"))
        assert outcome.matched and outcome.captures == ()

    def test_literal_rejects_extra_tokens(self):
        p = compile_item("change a variable")
        assert not match_pattern(p, normalize("please change a variable")).matched

    def test_interior_gap_needs_a_token(self):
        p = compile_item("change * variable")
        assert not match_pattern(p, normalize("change variable")).matched
        assert match_pattern(p, normalize("change the variable")).matched

    def test_flexible_ends_without_explicit_stars(self):
        p = compile_item("change * variable")
        assert match_pattern(p, normalize("may i change the variable today")).matched

    def test_explicit_end_gaps_capture(self):
        p = compile_item("* shared variable *")
        outcome = match_pattern(p, normalize("is a shared variable safe here"))
        assert outcome.matched
        assert outcome.captures == (("is", "a"), ("safe", "here"))

    def test_leftmost_earliest_alignment(self):
        p = compile_item("a * b")
        outcome = match_pattern(p, normalize("a x a y b z b"))
        # earliest a, then earliest b after it
        assert outcome.captures == (("x", "a", "y"),)

    def test_empty_input_never_matches(self):
        for item in ("hello", "$ hello", "hello * there"):
            assert not match_pattern(compile_item(item), normalize("")).matched
