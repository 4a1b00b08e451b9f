"""Benchmark the matching hot path on both kernel backends.

Builds the shipped EN index, replays the paraphrase corpus repeatedly
through best_match and suggest, and times the compiled kernel against
the pure-Python fallback.

    python3 benchmarks/bench_match.py [--repeats 200]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from ompmentor.eval_harness import parse_corpus
from ompmentor.kb.build import build_documents
from ompmentor.matching import kernel
from ompmentor.matching.index import CompiledIndex, NoMatch
from ompmentor.matching.normalize import normalize

CORPUS = Path(__file__).resolve().parent.parent / "src" / "ompmentor" / "content" / "paraphrases.tsv"


def build_workload():
    index = CompiledIndex(build_documents()["EN"])
    rows = [r for r in parse_corpus(CORPUS.read_text("utf-8")) if r.language == "EN"]
    inputs = [normalize(r.question, index.concepts) for r in rows]
    return index, inputs


def run_once(index, inputs) -> int:
    matched = 0
    for seq in inputs:
        try:
            index.best_match(seq)
            matched += 1
        except NoMatch:
            index.suggest(seq)
    return matched


def time_backend(name: str, index, inputs, repeats: int) -> float:
    kernel.use(name)
    run_once(index, inputs)  # warm-up
    started = time.perf_counter()
    for _ in range(repeats):
        run_once(index, inputs)
    return time.perf_counter() - started


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    args = parser.parse_args()

    index, inputs = build_workload()
    total_calls = args.repeats * len(inputs)
    original = kernel.backend_name()
    print(f"workload: {len(inputs)} questions x {args.repeats} repeats "
          f"({total_calls} best_match calls, {len(index.patterns)} patterns)")

    results = {}
    try:
        for name in kernel.available_backends():
            elapsed = time_backend(name, index, inputs, args.repeats)
            results[name] = elapsed
            rate = total_calls / elapsed
            print(f"  {name:>6}: {elapsed:8.3f} s  ({rate:,.0f} matches/s)")
    finally:
        kernel.use(original)

    if {"c", "python"} <= results.keys():
        print(f"speedup (python/c): {results['python'] / results['c']:.2f}x")
    else:
        print("compiled kernel not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
