"""Pure-Python implementations of the matching inner loops.

Used when the compiled extension is unavailable. Both backends implement
the same contract over integer token ids:

``find_alignment(input_ids, run_ids, run_offsets)`` places each literal
run, in order, at the earliest position that leaves at least one token
between consecutive runs, and returns the list of start positions, or
None when no placement exists. Greedy earliest placement is complete
(taking the earliest occurrence never blocks a later run) and yields the
lexicographically smallest alignment.

``lcs_length(a, b)`` is the classic longest-common-subsequence length.
"""

from __future__ import annotations

from typing import Sequence


def find_alignment(
    input_ids: Sequence[int],
    run_ids: Sequence[int],
    run_offsets: Sequence[int],
) -> list[int] | None:
    n = len(input_ids)
    positions: list[int] = []
    start = 0
    for r in range(len(run_offsets) - 1):
        lo, hi = run_offsets[r], run_offsets[r + 1]
        run_len = hi - lo
        pos = -1
        i = start
        while i + run_len <= n:
            for j in range(run_len):
                if input_ids[i + j] != run_ids[lo + j]:
                    break
            else:
                pos = i
                break
            i += 1
        if pos < 0:
            return None
        positions.append(pos)
        start = pos + run_len + 1
    return positions


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            if x == y:
                cur.append(prev[j] + 1)
            else:
                cur.append(max(prev[j + 1], cur[j]))
        prev = cur
    return prev[len(b)]
