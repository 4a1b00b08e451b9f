"""Brute-force oracle for the pattern matcher.

The enumerator below tries every placement of every run independently of
the matcher's greedy algorithm; agreement over randomized cases is the
correctness argument for the fast path (and for the compiled kernel,
which the fast path may be running on).
"""

import random

from ompmentor.matching.normalize import normalize
from ompmentor.matching.patterns import compile_pattern, match_pattern, slotted_alignment

ALPHABET = ("a", "b", "c", "d")


def enumerate_alignments(runs, tokens):
    """Every valid run placement: in-order, >=1 token between runs."""
    n = len(tokens)
    results = []

    def rec(run_idx, min_start, acc):
        if run_idx == len(runs):
            results.append(tuple(acc))
            return
        run = runs[run_idx]
        for pos in range(min_start, n - len(run) + 1):
            if tuple(tokens[pos : pos + len(run)]) == tuple(run):
                rec(run_idx + 1, pos + len(run) + 1, acc + [pos])

    rec(0, 0, [])
    return results


def oracle_slotted(runs, tokens):
    alignments = enumerate_alignments(runs, tokens)
    return (min(alignments) if alignments else None)


def oracle_verb_anchored(run, tokens):
    splits = [i for i in range(len(tokens) + 1) if tuple(tokens[i:]) == tuple(run)]
    return splits[0] if splits else None


def random_slotted(rng):
    n_runs = rng.randint(1, 4)
    runs = [
        [rng.choice(ALPHABET) for _ in range(rng.randint(1, 3))] for _ in range(n_runs)
    ]
    item = " * ".join(" ".join(run) for run in runs)
    if rng.random() < 0.3:
        item = "* " + item
    if rng.random() < 0.3:
        item = item + " *"
    return compile_pattern(item, "n", 0)


def test_spec_worked_slotted_case():
    pattern = compile_pattern("change * variable * loop", "n", 0)
    tokens = normalize("can i change a variable inside a loop").tokens
    expected = oracle_slotted(pattern.runs, tokens)
    assert expected is not None
    assert slotted_alignment(pattern, tokens) == list(expected)


def test_gap_needs_token_confirmed_by_enumeration():
    pattern = compile_pattern("change * variable", "n", 0)
    tokens = ("change", "variable")
    assert enumerate_alignments(pattern.runs, tokens) == []
    assert slotted_alignment(pattern, tokens) is None


def test_randomized_agreement_slotted():
    rng = random.Random(12345)
    checked = 0
    for _ in range(1000):
        pattern = random_slotted(rng)
        tokens = tuple(rng.choice(ALPHABET) for _ in range(rng.randint(0, 12)))
        expected = oracle_slotted(pattern.runs, tokens)
        got = slotted_alignment(pattern, tokens)
        assert (got is None) == (expected is None), (pattern.source_item, tokens)
        if expected is not None:
            assert got == list(expected), (pattern.source_item, tokens)
        checked += 1
    assert checked == 1000


def test_randomized_agreement_verb_anchored():
    rng = random.Random(54321)
    for _ in range(500):
        run = [rng.choice(ALPHABET) for _ in range(rng.randint(1, 4))]
        pattern = compile_pattern("$ " + " ".join(run), "n", 0)
        tokens = tuple(rng.choice(ALPHABET) for _ in range(rng.randint(0, 12)))
        split = oracle_verb_anchored(pattern.runs[0], tokens)
        outcome = match_pattern(pattern, normalize(" ".join(tokens)))
        assert outcome.matched == (split is not None)
        if split is not None:
            assert outcome.captures == (tokens[:split],)
