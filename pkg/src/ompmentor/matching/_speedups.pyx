# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the matching inner loops.

Mirrors the contract of ``_pure``; see that module for the semantics.
"""


def find_alignment(int[::1] input_ids, int[::1] run_ids, int[::1] run_offsets):
    cdef Py_ssize_t n = input_ids.shape[0]
    cdef Py_ssize_t n_runs = run_offsets.shape[0] - 1
    cdef Py_ssize_t start = 0
    cdef Py_ssize_t r, lo, hi, run_len, i, j, pos
    cdef bint ok
    positions = []
    for r in range(n_runs):
        lo = run_offsets[r]
        hi = run_offsets[r + 1]
        run_len = hi - lo
        pos = -1
        i = start
        while i + run_len <= n:
            ok = True
            for j in range(run_len):
                if input_ids[i + j] != run_ids[lo + j]:
                    ok = False
                    break
            if ok:
                pos = i
                break
            i += 1
        if pos < 0:
            return None
        positions.append(pos)
        start = pos + run_len + 1
    return positions


def lcs_length(int[::1] a, int[::1] b):
    cdef Py_ssize_t la = a.shape[0]
    cdef Py_ssize_t lb = b.shape[0]
    if la == 0 or lb == 0:
        return 0
    cdef list prev = [0] * (lb + 1)
    cdef list cur
    cdef Py_ssize_t i, j
    cdef int x
    for i in range(la):
        x = a[i]
        cur = [0] * (lb + 1)
        for j in range(lb):
            if x == b[j]:
                cur[j + 1] = prev[j] + 1
            else:
                cur[j + 1] = prev[j + 1] if prev[j + 1] >= cur[j] else cur[j]
        prev = cur
    return prev[lb]
