"""Pure-Python backtracking kernels for ordered induced-copy search.

Twin of the compiled module ``edgeind._kernels``; both expose the same
functions and must produce identical results.  Adjacency rows are integer
bitmasks (hosts have at most 64 vertices).  ``order`` is the sequence in
which pattern vertices are assigned; the first ``len(pin_hosts)`` of them
are forced to the given host vertices.
"""

BACKEND = "pure"


def _prepare(g_adj, h_adj, order, pin_hosts):
    n = len(g_adj)
    k = len(h_adj)
    g_deg = [row.bit_count() for row in g_adj]
    full = (1 << n) - 1
    comp = [full & ~row for row in g_adj]
    # For each step i: earlier steps split into pattern-neighbors / others,
    # plus a degree floor on the host candidate.
    prev_nbr = []
    prev_non = []
    deg_ok = []
    for i, p in enumerate(order):
        row = h_adj[p]
        nbr = [j for j in range(i) if row >> order[j] & 1]
        non = [j for j in range(i) if not row >> order[j] & 1]
        prev_nbr.append(nbr)
        prev_non.append(non)
        need = row.bit_count()
        deg_ok.append(sum(1 << v for v in range(n) if g_deg[v] >= need))
    return n, k, comp, prev_nbr, prev_non, deg_ok


def _pin_state(g_adj, h_adj, order, pin_hosts):
    """Seed used/placed with the pinned assignment; None if inconsistent."""
    used = 0
    placed = [0] * len(h_adj)
    for i, v in enumerate(pin_hosts):
        if used >> v & 1:
            return None
        p = order[i]
        for j in range(i):
            want = h_adj[p] >> order[j] & 1
            got = g_adj[v] >> pin_hosts[j] & 1
            if want != got:
                return None
        placed[i] = v
        used |= 1 << v
    return used, placed


def count_ordered(g_adj, h_adj, order, pin_hosts):
    k = len(h_adj)
    if k == 0:
        return 1
    if len(g_adj) < k:
        return 0
    n, k, comp, prev_nbr, prev_non, deg_ok = _prepare(g_adj, h_adj, order, pin_hosts)
    seed = _pin_state(g_adj, h_adj, order, pin_hosts)
    if seed is None:
        return 0
    used0, placed = seed
    start = len(pin_hosts)
    if start == k:
        return 1

    def rec(i, used):
        cand = deg_ok[i] & ~used
        for j in prev_nbr[i]:
            cand &= g_adj[placed[j]]
        for j in prev_non[i]:
            cand &= comp[placed[j]]
        if i == k - 1:
            return cand.bit_count()
        total = 0
        while cand:
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            placed[i] = v
            total += rec(i + 1, used | bit)
        return total

    return rec(start, used0)


def enumerate_ordered(g_adj, h_adj, order, pin_hosts):
    k = len(h_adj)
    if k == 0:
        return [()]
    if len(g_adj) < k:
        return []
    n, k, comp, prev_nbr, prev_non, deg_ok = _prepare(g_adj, h_adj, order, pin_hosts)
    seed = _pin_state(g_adj, h_adj, order, pin_hosts)
    if seed is None:
        return []
    used0, placed = seed
    start = len(pin_hosts)
    out = []

    def emit():
        copy = [0] * k
        for i in range(k):
            copy[order[i]] = placed[i]
        out.append(tuple(copy))

    if start == k:
        emit()
        return out

    def rec(i, used):
        cand = deg_ok[i] & ~used
        for j in prev_nbr[i]:
            cand &= g_adj[placed[j]]
        for j in prev_non[i]:
            cand &= comp[placed[j]]
        while cand:
            bit = cand & -cand
            cand ^= bit
            placed[i] = bit.bit_length() - 1
            if i == k - 1:
                emit()
            else:
                rec(i + 1, used | bit)

    rec(start, used0)
    return out
