"""Pure-Python kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` is a typed
transliteration and must return identical results for identical input.
"""
from __future__ import annotations

from typing import Sequence

_MASK64 = (1 << 64) - 1


def _mix(c: int) -> int:
    # splitmix64 finaliser
    z = (c + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _refine(n: int, adj: Sequence[int], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            h = 0
            row = adj[v]
            while row:
                low = row & -row
                h = (h + _mix(colors[low.bit_length() - 1])) & _MASK64
                row ^= low
            keys.append((colors[v], h))
        ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranks[k] for k in keys]
        if len(ranks) == ncolors:
            return new
        colors = new
        ncolors = len(ranks)


def _leaf_code(n: int, adj: Sequence[int], colors: list[int]) -> int:
    inv = [0] * n
    for v, c in enumerate(colors):
        inv[c] = v
    code = 0
    for j in range(1, n):
        vj = inv[j]
        for i in range(j):
            code = (code << 1) | (adj[inv[i]] >> vj & 1)
    return code


def canonical_code(n: int, adj: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Minimum upper-triangle code over the individualisation-refinement tree.

    Returns ``(code, order)`` where ``order[p]`` is the vertex placed at
    canonical position ``p``.  Bits are in graph6 order, most significant
    first.
    """
    if n == 0:
        return 0, ()
    best_code = -1
    best_colors: list[int] = []

    def search(colors: list[int]) -> None:
        nonlocal best_code, best_colors
        sizes = [0] * n
        for c in colors:
            sizes[c] += 1
        target = -1
        for c in range(n):
            if sizes[c] > 1:
                target = c
                break
        if target < 0:
            code = _leaf_code(n, adj, colors)
            if best_code < 0 or code < best_code:
                best_code = code
                best_colors = colors
            return
        reps: list[int] = []
        for v in range(n):
            if colors[v] != target:
                continue
            twin = False
            for r in reps:
                if (adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)):
                    twin = True
                    break
            if twin:
                continue
            reps.append(v)
            child = [2 * c + 1 for c in colors]
            child[v] = 2 * colors[v]
            search(_refine(n, adj, child))

    search(_refine(n, adj, [0] * n))
    order = [0] * n
    for v, c in enumerate(best_colors):
        order[c] = v
    return best_code, tuple(order)


def stable_set_counts(n: int, adj: Sequence[int]) -> list[int]:
    """``counts[k]`` = number of stable sets of size ``k``, by exhaustive
    backtracking over stable sets in increasing-vertex order."""
    counts = [0] * (n + 1)

    def rec(cand: int, size: int) -> None:
        counts[size] += 1
        while cand:
            low = cand & -cand
            cand ^= low
            rec(cand & ~adj[low.bit_length() - 1], size + 1)

    rec((1 << n) - 1, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts
