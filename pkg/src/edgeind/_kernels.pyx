# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernels for ordered induced-copy search.

Twin of ``edgeind._kernels_py``; see that module for the contract.
"""

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef struct Ctx:
    int k
    u64 g_adj[64]
    u64 comp[64]
    u64 deg_ok[64]
    u64 nbr_mask[64]
    u64 non_mask[64]
    int placed[64]


cdef int _prepare(Ctx* ctx, g_adj, h_adj, order, pin_hosts) except -1:
    """Fill ctx; return the start depth, or -2 when the pins are inconsistent."""
    cdef int n = len(g_adj)
    cdef int k = len(h_adj)
    cdef int i, j, p, v, need
    cdef u64 full = <u64> 0 - 1 if n == 64 else ((<u64> 1 << n) - 1)
    cdef u64 row, used
    cdef long h_row
    ctx.k = k
    for v in range(n):
        row = <u64> g_adj[v]
        ctx.g_adj[v] = row
        ctx.comp[v] = full & ~row
    for i in range(k):
        p = order[i]
        h_row = h_adj[p]
        ctx.nbr_mask[i] = 0
        ctx.non_mask[i] = 0
        for j in range(i):
            if (h_row >> (<int> order[j])) & 1:
                ctx.nbr_mask[i] |= <u64> 1 << j
            else:
                ctx.non_mask[i] |= <u64> 1 << j
        need = __builtin_popcountll(<u64> h_row)
        ctx.deg_ok[i] = 0
        for v in range(n):
            if __builtin_popcountll(ctx.g_adj[v]) >= need:
                ctx.deg_ok[i] |= <u64> 1 << v
    # seed pins
    used = 0
    for i in range(len(pin_hosts)):
        v = pin_hosts[i]
        if (used >> v) & 1:
            return -2
        p = order[i]
        h_row = h_adj[p]
        for j in range(i):
            if ((h_row >> (<int> order[j])) & 1) != <long> ((ctx.g_adj[v] >> (<int> pin_hosts[j])) & 1):
                return -2
        ctx.placed[i] = v
        used |= <u64> 1 << v
    return len(pin_hosts)


cdef u64 _candidates(Ctx* ctx, int i, u64 used) nogil:
    cdef u64 cand = ctx.deg_ok[i] & ~used
    cdef u64 mm = ctx.nbr_mask[i]
    cdef int j
    while mm:
        j = __builtin_ctzll(mm)
        mm &= mm - 1
        cand &= ctx.g_adj[ctx.placed[j]]
    mm = ctx.non_mask[i]
    while mm:
        j = __builtin_ctzll(mm)
        mm &= mm - 1
        cand &= ctx.comp[ctx.placed[j]]
    return cand


cdef long long _count(Ctx* ctx, int i, u64 used) nogil:
    cdef u64 cand = _candidates(ctx, i, used)
    cdef u64 bit
    cdef long long total = 0
    if i == ctx.k - 1:
        return __builtin_popcountll(cand)
    while cand:
        bit = cand & (<u64> 0 - cand)
        cand ^= bit
        ctx.placed[i] = __builtin_ctzll(bit)
        total += _count(ctx, i + 1, used | bit)
    return total


cdef _emit(Ctx* ctx, order, list out):
    copy = [0] * ctx.k
    cdef int i
    for i in range(ctx.k):
        copy[<int> order[i]] = ctx.placed[i]
    out.append(tuple(copy))


cdef _enumerate(Ctx* ctx, int i, u64 used, order, list out):
    cdef u64 cand = _candidates(ctx, i, used)
    cdef u64 bit
    while cand:
        bit = cand & (<u64> 0 - cand)
        cand ^= bit
        ctx.placed[i] = __builtin_ctzll(bit)
        if i == ctx.k - 1:
            _emit(ctx, order, out)
        else:
            _enumerate(ctx, i + 1, used | bit, order, out)


def count_ordered(g_adj, h_adj, order, pin_hosts):
    cdef Ctx ctx
    cdef int k = len(h_adj)
    if k == 0:
        return 1
    if len(g_adj) < k:
        return 0
    cdef int start = _prepare(&ctx, g_adj, h_adj, order, pin_hosts)
    if start == -2:
        return 0
    cdef u64 used = 0
    cdef int i
    for i in range(start):
        used |= <u64> 1 << ctx.placed[i]
    if start == k:
        return 1
    return _count(&ctx, start, used)


def enumerate_ordered(g_adj, h_adj, order, pin_hosts):
    cdef Ctx ctx
    cdef int k = len(h_adj)
    if k == 0:
        return [()]
    if len(g_adj) < k:
        return []
    cdef int start = _prepare(&ctx, g_adj, h_adj, order, pin_hosts)
    if start == -2:
        return []
    out = []
    cdef u64 used = 0
    cdef int i
    for i in range(start):
        used |= <u64> 1 << ctx.placed[i]
    if start == k:
        _emit(&ctx, order, out)
        return out
    _enumerate(&ctx, start, used, order, out)
    return out
