"""Induced-copy counting and the tuple statistics used by the entropy lab.

An *oriented edge tuple* is a sequence of host edges written as ordered
endpoint pairs (u_i, v_i), pairwise vertex-disjoint.  The tuple is
*well-ordered* when the head-to-tail links v_i u_{i+1} are edges and no
other edge joins endpoints of distinct entries; it *characterizes* an
induced even cycle when additionally the wrap link v_t u_1 closes the
cycle.  Tuples arising as the odd-indexed edges of ordered induced paths
or cycles are well-ordered with the orientation inherited from the copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .families import parse_family
from . import kernels
from .canon import automorphism_order


class InvalidTupleError(ValueError):
    pass


@dataclass(frozen=True)
class CountSummary:
    ordered: int
    unordered: int
    aut: int


def count_induced(g: Graph, h: Graph) -> CountSummary:
    """Induced copies of the pattern ``h`` in the host ``g``.

    ``unordered`` is the number of vertex subsets inducing a copy of h;
    ``ordered`` counts injective maps preserving adjacency and
    non-adjacency, so ordered = unordered * |Aut(h)|.  Patterns with
    isolated vertices are rejected (the maximum over hosts would be
    unbounded in padding vertices).
    """
    if h.n == 0 or h.isolated_vertices():
        raise ValueError("pattern must have no isolated vertices")
    aut = automorphism_order(h)
    ordered = kernels.count_ordered(g, h)
    if ordered % aut:
        raise AssertionError("ordered copy count not divisible by |Aut|")
    return CountSummary(ordered, ordered // aut, aut)


def validate_edge_tuple(g: Graph, t):
    """Check entries are host edges, oriented, and pairwise vertex-disjoint."""
    if not t:
        raise InvalidTupleError("empty edge tuple")
    seen = set()
    for u, v in t:
        if u == v or not g.has_edge(u, v):
            raise InvalidTupleError(f"({u}, {v}) is not an edge of the host")
        if u in seen or v in seen:
            raise InvalidTupleError("tuple entries share a vertex")
        seen.add(u)
        seen.add(v)


def _links_ok(g, t, wrap):
    """Shared predicate body: required links present, all other
    cross-entry endpoint pairs absent."""
    tt = len(t)
    for i in range(tt):
        ui, vi = t[i]
        for j in range(i + 1, tt):
            uj, vj = t[j]
            required = set()
            if j == i + 1:
                required.add((vi, uj))
            if wrap and i == 0 and j == tt - 1:
                required.add((vj, ui))
            for a, b in ((ui, uj), (ui, vj), (vi, uj), (vi, vj)):
                want = (a, b) in required or (b, a) in required
                if g.has_edge(a, b) != want:
                    return False
    return True


def is_well_ordered(g: Graph, t) -> bool:
    validate_edge_tuple(g, t)
    return _links_ok(g, t, wrap=False)


def characterizes_cycle(g: Graph, t) -> bool:
    """True when the oriented tuple's links close a chordless cycle of
    length 2*len(t)."""
    validate_edge_tuple(g, t)
    if len(t) < 2:
        return False
    return _links_ok(g, t, wrap=True)


def alpha_extension_edges(g: Graph, t, mode="path-extend", k=None):
    """Edges e admitting an orientation such that appending e to the tuple
    is well-ordered ("path-extend") or characterizes an induced C_k
    ("cycle-close").  At most one orientation can work per edge, so these
    are plain edge sets.  Returns sorted (u, v) pairs with u < v."""
    t = tuple(tuple(e) for e in t)
    if not is_well_ordered(g, t):
        raise ValueError("tuple is not well-ordered")
    if mode == "cycle-close":
        if k is None:
            k = 2 * (len(t) + 1)
        if k % 2 or len(t) != k // 2 - 1:
            raise ValueError(f"cycle-close needs {k // 2 - 1} tuple entries for C_{k}")
        test = characterizes_cycle
    elif mode == "path-extend":
        test = is_well_ordered
    else:
        raise ValueError(f"unknown mode {mode!r}")
    used = set()
    for u, v in t:
        used.add(u)
        used.add(v)
    out = []
    for x, y in g.edges():
        if x in used or y in used:
            continue
        if test(g, t + ((x, y),)) or test(g, t + ((y, x),)):
            out.append((x, y))
    return out


def alpha_extensions(g: Graph, t, mode="path-extend", k=None) -> int:
    return len(alpha_extension_edges(g, t, mode, k))


def _odd_edge_pins(t):
    pins = []
    for i, (u, v) in enumerate(t):
        pins.append((2 * i, u))
        pins.append((2 * i + 1, v))
    return pins


def beta_embeddings(g: Graph, t, family) -> int:
    """Ordered induced copies of the family whose odd-indexed edges equal
    the tuple entrywise (orientation included).  The full odd-edge tuple
    of an even cycle carries the wrap link, so it is validated with the
    characterizing predicate instead of the well-ordered one."""
    t = tuple(tuple(e) for e in t)
    kind, k = parse_family(family)
    if kind == "P":
        pattern = Graph.path(k)
    elif kind == "C":
        pattern = Graph.cycle(k)
    else:
        raise ValueError("beta embeddings are defined for path/cycle families")
    if len(t) > k // 2:
        raise ValueError(f"tuple of {len(t)} edges too long for {kind}{k}")
    if kind == "C" and k % 2 == 0 and len(t) == k // 2:
        ok = characterizes_cycle(g, t)
    else:
        ok = is_well_ordered(g, t)
    if not ok:
        raise ValueError("tuple is neither well-ordered nor cycle-characterizing")
    return kernels.count_ordered(g, pattern, _odd_edge_pins(t))


@dataclass(frozen=True)
class GammaStats:
    """Final-edge statistics for odd-path completions of a well-ordered
    tuple: the set of feasible last edges, its size, and (once the last
    edge is fixed) the counts of feasible second-to-last / last-link
    edges."""

    s_set: tuple
    gamma0: int
    gamma1: int | None
    gamma2: int | None


def gamma_stats(g: Graph, t, e_last=None) -> GammaStats:
    """For the odd path on 2l+1 vertices with odd-edge prefix ``t``
    (l-1 entries, l >= 2): the feasible final edges, and with ``e_last``
    fixed, the feasible edges at positions 2l-2 and 2l-1."""
    t = tuple(tuple(e) for e in t)
    if not is_well_ordered(g, t):
        raise ValueError("tuple is not well-ordered")
    l = len(t) + 1
    if l < 2:
        raise ValueError("need at least one tuple entry")
    pattern = Graph.path(2 * l + 1)
    copies = kernels.enumerate_ordered(g, pattern, _odd_edge_pins(t))
    # Pattern vertices are 0-based: the free ones are 2l-2, 2l-1, 2l.
    s_set = sorted({_norm(c[2 * l - 1], c[2 * l]) for c in copies})
    if e_last is None:
        return GammaStats(tuple(s_set), len(s_set), None, None)
    e_last = _norm(*e_last)
    if e_last not in s_set:
        raise ValueError(f"{e_last} is not a feasible final edge")
    sel = [c for c in copies if _norm(c[2 * l - 1], c[2 * l]) == e_last]
    g1 = {_norm(c[2 * l - 3], c[2 * l - 2]) for c in sel}
    g2 = {_norm(c[2 * l - 2], c[2 * l - 1]) for c in sel}
    return GammaStats(tuple(s_set), len(s_set), len(g1), len(g2))


def _norm(u, v):
    return (u, v) if u < v else (v, u)
