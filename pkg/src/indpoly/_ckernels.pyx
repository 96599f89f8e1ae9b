# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; semantics mirror ``_kernels_py`` exactly."""

from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memcpy

cdef enum:
    MAXN = 64
    MAXBITS = 2016  # 64 * 63 / 2


cdef inline uint64_t _mix(uint64_t c) nogil:
    cdef uint64_t z = c + 0x9E3779B97F4A7C15ULL
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct Ctx:
    int n
    uint64_t adj[MAXN]
    int have_best
    unsigned char best[MAXBITS]
    int best_colors[MAXN]


cdef int _count_distinct(int n, int* colors) nogil:
    cdef unsigned char seen[2 * MAXN + 2]
    cdef int i, k = 0
    for i in range(2 * MAXN + 2):
        seen[i] = 0
    for i in range(n):
        if not seen[colors[i]]:
            seen[colors[i]] = 1
            k += 1
    return k


cdef void _refine(Ctx* ctx, int* colors) nogil:
    """Refine ``colors`` in place to a stable colouring with dense ranks."""
    cdef int n = ctx.n
    cdef int ncolors = _count_distinct(n, colors)
    cdef uint64_t h[MAXN]
    cdef int idx[MAXN]
    cdef int newc[MAXN]
    cdef int v, i, j, t, rank
    cdef uint64_t row
    while True:
        for v in range(n):
            h[v] = 0
            row = ctx.adj[v]
            while row:
                h[v] += _mix(<uint64_t>colors[_lowbit(row)])
                row &= row - 1
            idx[v] = v
        # insertion sort of vertex indices by (colour, hash)
        for i in range(1, n):
            t = idx[i]
            j = i - 1
            while j >= 0 and (colors[idx[j]] > colors[t] or
                              (colors[idx[j]] == colors[t] and h[idx[j]] > h[t])):
                idx[j + 1] = idx[j]
                j -= 1
            idx[j + 1] = t
        rank = 0
        newc[idx[0]] = 0
        for i in range(1, n):
            if colors[idx[i]] != colors[idx[i - 1]] or h[idx[i]] != h[idx[i - 1]]:
                rank += 1
            newc[idx[i]] = rank
        for v in range(n):
            colors[v] = newc[v]
        if rank + 1 == ncolors:
            return
        ncolors = rank + 1


cdef int _compare_leaf(Ctx* ctx, int* colors) nogil:
    """Write the leaf code into ``best`` if it beats the incumbent."""
    cdef int n = ctx.n
    cdef int inv[MAXN]
    cdef unsigned char code[MAXBITS]
    cdef int v, i, j, k = 0, state = 0
    cdef unsigned char bit
    for v in range(n):
        inv[colors[v]] = v
    for j in range(1, n):
        for i in range(j):
            bit = (ctx.adj[inv[i]] >> inv[j]) & 1
            code[k] = bit
            if ctx.have_best and state == 0:
                if bit < ctx.best[k]:
                    state = -1
                elif bit > ctx.best[k]:
                    return 0
            k += 1
    if ctx.have_best and state == 0:
        return 0
    memcpy(ctx.best, code, k)
    memcpy(ctx.best_colors, colors, n * sizeof(int))
    ctx.have_best = 1
    return 1


cdef void _search(Ctx* ctx, int* colors) nogil:
    cdef int n = ctx.n
    cdef int sizes[MAXN]
    cdef int reps[MAXN]
    cdef int child[MAXN]
    cdef int nreps = 0
    cdef int c, v, r, target = -1, twin
    for c in range(n):
        sizes[c] = 0
    for v in range(n):
        sizes[colors[v]] += 1
    for c in range(n):
        if sizes[c] > 1:
            target = c
            break
    if target < 0:
        _compare_leaf(ctx, colors)
        return
    for v in range(n):
        if colors[v] != target:
            continue
        twin = 0
        for r in range(nreps):
            if (ctx.adj[v] & ~(1ULL << reps[r])) == (ctx.adj[reps[r]] & ~(1ULL << v)):
                twin = 1
                break
        if twin:
            continue
        reps[nreps] = v
        nreps += 1
        for c in range(n):
            child[c] = 2 * colors[c] + 1
        child[v] = 2 * colors[v]
        _refine(ctx, child)
        _search(ctx, child)


def canonical_code(int n, adj):
    """See ``_kernels_py.canonical_code``."""
    if n < 0 or n > MAXN:
        raise ValueError("compiled kernel supports 0 <= n <= 64")
    if n == 0:
        return 0, ()
    cdef Ctx ctx
    cdef int colors[MAXN]
    cdef int v, k, nbits
    ctx.n = n
    ctx.have_best = 0
    for v in range(n):
        ctx.adj[v] = <uint64_t>adj[v]
        colors[v] = 0
    with nogil:
        _refine(&ctx, colors)
        _search(&ctx, colors)
    nbits = n * (n - 1) // 2
    code = 0
    for k in range(nbits):
        code = (code << 1) | ctx.best[k]
    order = [0] * n
    for v in range(n):
        order[ctx.best_colors[v]] = v
    return code, tuple(order)


cdef void _count(uint64_t* adj, uint64_t cand, int size, int64_t* counts) nogil:
    cdef uint64_t low
    counts[size] += 1
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        _count(adj, cand & ~adj[_lowbit(low)], size + 1, counts)


def stable_set_counts(int n, adj):
    """See ``_kernels_py.stable_set_counts``."""
    if n < 0 or n > MAXN:
        raise ValueError("compiled kernel supports 0 <= n <= 64")
    cdef uint64_t cadj[MAXN]
    cdef int64_t counts[MAXN + 1]
    cdef int v, top
    cdef uint64_t full
    for v in range(n):
        cadj[v] = <uint64_t>adj[v]
    for v in range(n + 1):
        counts[v] = 0
    full = 0xFFFFFFFFFFFFFFFFULL if n == 64 else ((1ULL << n) - 1)
    with nogil:
        _count(cadj, full, 0, counts)
    top = n
    while top > 0 and counts[top] == 0:
        top -= 1
    return [counts[v] for v in range(top + 1)]
