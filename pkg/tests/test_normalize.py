"""Normalization pipeline behavior."""

from hypothesis import given
from hypothesis import strategies as st

from ompmentor.matching.normalize import normalize

PUNCT = set("?!.,;:'\"()¿¡")


def test_full_question_tokens():
    tokens = normalize("Can I change a variable inside a pragma omp loop?").tokens
    assert tokens == ("can", "i", "change", "a", "variable", "inside", "a", "pragma", "omp", "loop")


def test_empty_and_whitespace():
    assert normalize("").tokens == ()
    assert normalize("   \t \n ").tokens == ()


def test_punctuation_stripping_and_case():
    assert normalize("FLUSH(x), please!").tokens == ("flush", "x", "please")
    assert normalize("don't").tokens == ("dont",)


def test_spanish_inverted_marks():
    assert normalize("¿Puedo cambiar una variable?").tokens[0] == "puedo"
    assert normalize("¡Hola!").tokens == ("hola",)


def test_concept_replacement():
    concepts = {"directive": "pragma"}
    assert normalize("the directive omp", concepts).tokens == ("the", "pragma", "omp")


def test_concept_replacement_after_lowercasing():
    concepts = {"directive": "pragma"}
    assert normalize("The DIRECTIVE omp", concepts).tokens == ("the", "pragma", "omp")


def test_source_is_kept():
    seq = normalize("Hello there")
    assert seq.source == "Hello there"


@given(st.text(max_size=80))
def test_tokens_are_lowercase_nonempty_and_punctuation_free(text):
    tokens = normalize(text).tokens
    for tok in tokens:
        assert tok == tok.lower()
        assert tok
        assert not (set(tok) & PUNCT)


@given(st.text(max_size=80))
def test_deterministic(text):
    assert normalize(text) == normalize(text)
