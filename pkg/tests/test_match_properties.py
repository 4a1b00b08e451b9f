"""Property tests for the matcher."""

from hypothesis import given, settings
from hypothesis import strategies as st

from ompmentor.dialogdoc.xmlio import parse_document
from ompmentor.matching.index import CompiledIndex, NoMatch
from ompmentor.matching.normalize import TokenSequence, normalize
from ompmentor.matching.patterns import PatternKind, compile_pattern, match_pattern

words = st.sampled_from(["alpha", "beta", "gamma", "delta", "omp", "loop"])
token_lists = st.lists(words, min_size=0, max_size=10)
run_lists = st.lists(words, min_size=1, max_size=5)


def seq(tokens) -> TokenSequence:
    return TokenSequence(tokens=tuple(tokens))


@given(run_lists, token_lists)
def test_literal_equivalence(run, tokens):
    pattern = compile_pattern(" ".join(run), "n", 0)
    outcome = match_pattern(pattern, seq(tokens))
    assert outcome.matched == (normalize(" ".join(run)).tokens == tuple(tokens))


@given(run_lists)
def test_verb_anchored_subsumes_literal(run):
    sentence = " ".join(run)
    anchored = compile_pattern("$ " + sentence, "n", 0)
    assert match_pattern(anchored, normalize(sentence)).matched


@given(run_lists, token_lists)
def test_verb_anchored_matches_iff_suffix(run, prefix):
    anchored = compile_pattern("$ " + " ".join(run), "n", 0)
    tokens = tuple(prefix) + tuple(run)
    outcome = match_pattern(anchored, seq(tokens))
    assert outcome.matched
    assert outcome.captures == (tuple(prefix),)


@given(st.data())
def test_slotted_monotone_under_gap_insertion(data):
    n_runs = data.draw(st.integers(min_value=2, max_value=4))
    runs = [data.draw(st.lists(words, min_size=1, max_size=2)) for _ in range(n_runs)]
    pattern = compile_pattern(" * ".join(" ".join(r) for r in runs), "n", 0)

    # minimal matching input: runs joined by single filler tokens
    tokens: list[str] = []
    for i, run in enumerate(runs):
        if i:
            tokens.append("filler")
        tokens.extend(run)
    assert match_pattern(pattern, seq(tokens)).matched

    # inserting extra tokens inside a gap keeps it matched
    gap_index = data.draw(st.integers(min_value=0, max_value=n_runs - 2))
    insert_at = sum(len(r) for r in runs[: gap_index + 1]) + gap_index
    extra = data.draw(st.lists(words, min_size=1, max_size=3))
    grown = tokens[: insert_at + 1] + extra + tokens[insert_at + 1 :]
    assert match_pattern(pattern, seq(grown)).matched


def test_deleting_a_run_token_breaks_minimal_distinct_match():
    # distinct tokens so the deleted token cannot be supplied elsewhere
    pattern = compile_pattern("a b * c * d e", "n", 0)
    tokens = ["a", "b", "x", "c", "y", "d", "e"]
    assert match_pattern(pattern, seq(tokens)).matched
    for i, tok in enumerate(tokens):
        if tok in ("x", "y"):
            continue
        clipped = tokens[:i] + tokens[i + 1 :]
        assert not match_pattern(pattern, seq(clipped)).matched


_TOY_XML = None


def _toy_index() -> CompiledIndex:
    global _TOY_XML
    xml = (
        "<dialog><flow>"
        "<folder label=\"Main\"><input><grammar><item>alpha beta</item>"
        "<item>$ alpha beta?</item><item>alpha * loop</item></grammar>"
        "<output><prompt selectionType=\"RANDOM\"><item>x</item><item>y</item></prompt></output>"
        "</input></folder><folder label=\"Library\"/>"
        "</flow></dialog>"
    )
    if _TOY_XML is None:
        _TOY_XML = CompiledIndex(parse_document(xml))
    return _TOY_XML


@given(token_lists)
def test_score_in_unit_interval_and_determinism(tokens):
    index = _toy_index()
    sequence = seq(tokens)
    try:
        first = index.best_match(sequence)
    except NoMatch:
        first = None
    try:
        second = index.best_match(sequence)
    except NoMatch:
        second = None
    assert first == second
    if first is not None:
        assert 0.0 <= first.score <= 1.0


def test_no_match_iff_no_pattern_matched(indexes):
    index = indexes["EN"]
    inputs = [
        "Can I change a variable inside a pragma omp loop?",
        "what is the weather today",
        "",
        "flush",
    ]
    for text in inputs:
        sequence = normalize(text, index.concepts)
        matched_any = any(
            match_pattern(p, sequence).matched for p in index.patterns
        )
        try:
            index.best_match(sequence)
            assert matched_any
        except NoMatch:
            assert not matched_any


def test_ranking_prefers_literal_then_coverage(indexes):
    index = indexes["EN"]
    # primary variation: literal beats the $ and * forms of the same node
    result = index.best_match(
        normalize("Can I change a variable inside a pragma omp loop?", index.concepts)
    )
    assert result.kind is PatternKind.LITERAL
    assert result.score == 1.0
    # lead-in phrasing: verb-anchored beats slotted
    result = index.best_match(
        normalize("Is it possible to change a variable inside a loop?", index.concepts)
    )
    assert result.kind is PatternKind.VERB_ANCHORED


@settings(max_examples=60)
@given(st.lists(st.sampled_from(["change", "a", "variable", "loop", "flush", "the"]), max_size=8))
def test_shipped_index_is_deterministic(tokens):
    index = _shipped()
    sequence = seq(tokens)
    results = []
    for _ in range(2):
        try:
            results.append(index.best_match(sequence))
        except NoMatch:
            results.append(None)
    assert results[0] == results[1]


_SHIPPED = None


def _shipped() -> CompiledIndex:
    global _SHIPPED
    if _SHIPPED is None:
        from ompmentor.kb.build import build_documents

        _SHIPPED = CompiledIndex(build_documents()["EN"])
    return _SHIPPED
