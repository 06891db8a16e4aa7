"""Numeric instantiation of the entropy arguments behind the bounds.

Every check works on the uniform distribution over ordered induced copies
of a pattern in a host.  Entropies are computed from exact integer counts
(counts over counts) and converted to floats once, so the 1e-9 identity
and slack tolerances are honest.  Natural logarithm throughout.

The per-copy ledgers re-derive every extension count from the counting
module; ledger rows are a cross-check against those counts, never the
source of truth.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph
from .families import parse_family
from .counting import alpha_extension_edges, gamma_stats
from .canon import automorphism_order
from . import kernels

TOL = 1e-9


class EmptySupportError(ValueError):
    pass


# -- distributions -------------------------------------------------------


@dataclass(frozen=True)
class CopyDistribution:
    """Uniform distribution over the ordered induced copies of a pattern in
    a host; coordinates are pattern vertices (1-based in the entropy API)."""

    host: Graph
    pattern: Graph
    copies: tuple

    @classmethod
    def collect(cls, host: Graph, pattern: Graph):
        copies = kernels.enumerate_ordered(host, pattern)
        if not copies:
            raise EmptySupportError("host contains no induced copy of the pattern")
        return cls(host, pattern, tuple(copies))

    @property
    def arity(self):
        return self.pattern.n

    def __len__(self):
        return len(self.copies)

    def edge_tuples(self):
        """Copies viewed as tuples of oriented edges e_i = (w_i, w_{i+1});
        cycles wrap around, paths have arity-1 coordinates.  The pattern
        must carry the natural path/cycle labeling."""
        k = self.pattern.n
        if k >= 3 and self.pattern == Graph.cycle(k):
            return [tuple((c[i], c[(i + 1) % k]) for i in range(k)) for c in self.copies]
        if k >= 2 and self.pattern == Graph.path(k):
            return [tuple((c[i], c[i + 1]) for i in range(k - 1)) for c in self.copies]
        raise ValueError("edge view needs a naturally labeled path or cycle pattern")


def _project(t, coords):
    return tuple(t[i - 1] for i in coords)


def _check_coords(k, target, given):
    target = tuple(target)
    given = tuple(given)
    if not target:
        raise ValueError("empty target coordinate set")
    for i in (*target, *given):
        if not 1 <= i <= k:
            raise ValueError(f"coordinate {i} outside 1..{k}")
    if set(target) & set(given):
        raise ValueError("target and given coordinates overlap")
    return target, given


def projection_entropy(dist, target, given=()) -> float:
    """Empirical entropy (nats) of the target coordinates, optionally
    conditioned on the given coordinates, under the uniform distribution.
    ``dist`` may be a CopyDistribution or any list of equal-length tuples;
    coordinates are 1-based."""
    tuples = dist.copies if isinstance(dist, CopyDistribution) else list(dist)
    if not tuples:
        raise EmptySupportError("empty support")
    target, given = _check_coords(len(tuples[0]), target, given)
    n = len(tuples)
    if not given:
        counts = Counter(_project(t, target) for t in tuples)
        return math.log(n) - sum(c * math.log(c) for c in counts.values()) / n
    joint = Counter((_project(t, target), _project(t, given)) for t in tuples)
    marginal = Counter(_project(t, given) for t in tuples)
    total = 0.0
    for (_, g), c in joint.items():
        total += c * (math.log(marginal[g]) - math.log(c))
    return total / n


# -- reports --------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    name: str
    kind: str  # "identity" | "inequality" | "value"
    lhs: float
    rhs: float | None = None

    @property
    def slack(self):
        if self.rhs is None:
            return None
        if self.kind == "identity":
            return self.lhs - self.rhs
        return self.rhs - self.lhs

    @property
    def ok(self):
        if self.kind == "value":
            return True
        if self.kind == "identity":
            return abs(self.slack) <= TOL
        return self.slack >= -TOL


@dataclass
class EntropyReport:
    terms: list = field(default_factory=list)

    def add(self, name, kind, lhs, rhs=None):
        self.terms.append(Term(name, kind, float(lhs), None if rhs is None else float(rhs)))

    def value(self, name, v):
        self.terms.append(Term(name, "value", float(v)))

    @property
    def passed(self):
        return all(t.ok for t in self.terms)

    def __getitem__(self, name):
        for t in self.terms:
            if t.name == name:
                return t
        raise KeyError(name)

    def to_json(self):
        return {
            "terms": [
                {"name": t.name, "kind": t.kind, "lhs": t.lhs, "rhs": t.rhs, "slack": t.slack}
                for t in self.terms
            ],
            "pass": self.passed,
        }


def full_tuple_identity(dist: CopyDistribution) -> EntropyReport:
    """H(full tuple) = log(|copies|) = log(|Aut| * unordered count)."""
    report = EntropyReport()
    coords = tuple(range(1, dist.arity + 1))
    h = projection_entropy(dist, coords)
    n = len(dist)
    aut = automorphism_order(dist.pattern)
    report.add("uniform_support", "identity", h, math.log(n))
    report.add("aut_times_count", "identity", h, math.log(aut * (n // aut)))
    return report


def verify_chain_shearer(dist, ordering=None, covers=None, r=None) -> EntropyReport:
    """Chain-rule identity along an ordering (with per-step conditioning
    drop slacks) and/or the subadditivity inequality for an r-fold cover."""
    tuples = dist.copies if isinstance(dist, CopyDistribution) else [tuple(t) for t in dist]
    if not tuples:
        raise EmptySupportError("empty support")
    k = len(tuples[0])
    coords = tuple(range(1, k + 1))
    report = EntropyReport()
    h_full = projection_entropy(tuples, coords)
    report.value("full_entropy", h_full)
    report.add("uniform_support", "identity", h_full, math.log(len(tuples)))
    if ordering is not None:
        ordering = tuple(ordering)
        if sorted(ordering) != list(coords):
            raise ValueError("ordering must permute the coordinates")
        total = 0.0
        for i, c in enumerate(ordering):
            cond = projection_entropy(tuples, (c,), ordering[:i])
            total += cond
            report.add(f"drop_condition_{c}", "inequality",
                       cond, projection_entropy(tuples, (c,)))
        report.add("chain_rule", "identity", h_full, total)
    if covers is not None:
        covers = [tuple(a) for a in covers]
        if r is None:
            raise ValueError("cover family needs the covering multiplicity r")
        for c in coords:
            if sum(c in a for a in covers) < r:
                raise ValueError(f"coordinate {c} is covered fewer than {r} times")
        rhs = sum(projection_entropy(tuples, a) for a in covers) / r
        report.add("subadditive_cover", "inequality", h_full, rhs)
    return report


def drop_one_covers(k):
    """The k subsets each omitting one coordinate; an (k-1)-fold cover."""
    coords = range(1, k + 1)
    return [tuple(c for c in coords if c != omit) for omit in coords]


def cycle_path_shearer(host: Graph, k: int) -> EntropyReport:
    """For odd cycles: dropping any one vertex coordinate of an ordered
    induced C_k copy leaves an ordered induced path on k-1 vertices, so
    log(2k*cycles) <= k/(k-1) * log(2*paths)."""
    if k < 5 or k % 2 == 0:
        raise ValueError("odd cycles with at least 5 vertices only")
    dist = CopyDistribution.collect(host, Graph.cycle(k))
    report = verify_chain_shearer(dist, covers=drop_one_covers(k), r=k - 1)
    n_paths = kernels.count_ordered(host, Graph.path(k - 1))
    for omit in range(1, k + 1):
        sub = projection_entropy(dist, tuple(c for c in range(1, k + 1) if c != omit))
        report.add(f"drop_{omit}_path_support", "inequality", sub, math.log(n_paths))
    report.add("cycle_vs_path", "inequality",
               math.log(len(dist)), (k / (k - 1)) * math.log(n_paths))
    return report


# -- path decompositions ---------------------------------------------------
#
# Coordinate conventions matter here.  The first-edge marginal is only
# bounded by log m when the edge is read without orientation (there are at
# most m values); the extension-count bounds on the later conditionals
# need the conditioning prefix read with orientation (the extension count
# of a well-ordered tuple is orientation-specific); and the feasible-set
# bounds on the last three coordinates of an odd path need those
# coordinates read without orientation again.  The ledger therefore
# carries an explicit orientation-reveal term (at most log 2), making
# every reported identity and inequality valid on an arbitrary host.


def _odd_prefix(edges, count):
    return tuple(edges[2 * i] for i in range(count))


def _h(values) -> float:
    n = len(values)
    counts = Counter(values)
    return math.log(n) - sum(c * math.log(c) for c in counts.values()) / n


def _h_cond(pairs) -> float:
    """Conditional entropy from (target, given) value pairs, uniform."""
    n = len(pairs)
    joint = Counter(pairs)
    marginal = Counter(g for _, g in pairs)
    return sum(c * (math.log(marginal[g]) - math.log(c)) for (_, g), c in joint.items()) / n


def _norm2(e):
    return (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])


def verify_path_decomposition(host: Graph, family) -> EntropyReport:
    """Every term of the conditional-entropy decomposition of the uniform
    ordered induced path distribution: the chain identity, each conditional
    against its log-average extension bound, the per-copy edge budget, and
    the closed-form aggregate."""
    kind, k = parse_family(family)
    if kind != "P" or k < 4:
        raise ValueError("decomposition applies to paths on at least 4 vertices")
    pattern = Graph.path(k)
    copies = kernels.enumerate_ordered(host, pattern)
    if not copies:
        raise EmptySupportError("host contains no induced copy of the pattern")
    edge_tuples = [tuple((c[i], c[i + 1]) for i in range(k - 1)) for c in copies]
    m = host.m
    n = len(edge_tuples)
    report = EntropyReport()
    report.value("ordered_copies", n)
    report.add("uniform_support", "identity", _h(edge_tuples), math.log(n))
    first_u = [_norm2(t[0]) for t in edge_tuples]
    report.add("first_edge_support", "inequality", _h(first_u), math.log(m))
    report.add("orientation_reveal", "inequality",
               _h_cond([(t[0], _norm2(t[0])) for t in edge_tuples]), math.log(2))
    alpha_memo = {}

    def alpha(prefix):
        if prefix not in alpha_memo:
            alpha_memo[prefix] = len(alpha_extension_edges(host, prefix))
        return alpha_memo[prefix]

    if k % 2 == 0:
        _even_path_terms(host, edge_tuples, k, m, alpha, report)
    else:
        _odd_path_terms(host, edge_tuples, k, m, alpha, report)
    return report


def _even_path_terms(host, edge_tuples, k, m, alpha, report):
    l = k // 2
    n = len(edge_tuples)
    chain = _h([t[0] for t in edge_tuples])
    for i in range(1, l):
        cond = _h_cond([(t[2 * i], _odd_prefix(t, i)) for t in edge_tuples])
        chain += cond
        avg = sum(math.log(alpha(_odd_prefix(t, i))) for t in edge_tuples) / n
        report.add(f"conditional_{2 * i + 1}_vs_extensions", "inequality", cond, avg)
    h_evens = _h_cond([
        (tuple(t[j] for j in range(1, 2 * l - 2, 2)), _odd_prefix(t, l))
        for t in edge_tuples
    ])
    report.add("evens_determined", "identity", h_evens, 0.0)
    chain += h_evens
    report.add("chain_rule", "identity", _h(edge_tuples), chain)
    budgets = [sum(alpha(_odd_prefix(t, i)) for i in range(1, l)) for t in edge_tuples]
    report.add("per_copy_budget", "inequality", max(budgets), m)
    report.value("budget_equality_copies", sum(b == m for b in budgets))
    report.add("closed_form", "inequality",
               math.log(n), math.log(m ** l / (l - 1) ** (l - 1)))


def _odd_path_terms(host, edge_tuples, k, m, alpha, report):
    l = (k - 1) // 2
    n = len(edge_tuples)
    gamma_memo = {}
    gamma12_memo = {}

    def gammas0(prefix):
        if prefix not in gamma_memo:
            gamma_memo[prefix] = gamma_stats(host, prefix).gamma0
        return gamma_memo[prefix]

    def gammas12(prefix, e_last):
        key = (prefix, e_last)
        if key not in gamma12_memo:
            st = gamma_stats(host, prefix, e_last)
            gamma12_memo[key] = (st.gamma1, st.gamma2)
        return gamma12_memo[key]

    chain = _h([t[0] for t in edge_tuples])
    for i in range(1, l - 1):
        cond = _h_cond([(t[2 * i], _odd_prefix(t, i)) for t in edge_tuples])
        avg = sum(math.log(alpha(_odd_prefix(t, i))) for t in edge_tuples) / n
        report.add(f"conditional_{2 * i + 1}_vs_extensions", "inequality", cond, avg)
        chain += cond
    prefixes = [_odd_prefix(t, l - 1) for t in edge_tuples]
    last_u = [_norm2(t[2 * l - 1]) for t in edge_tuples]
    h_last = _h_cond(list(zip(last_u, prefixes)))
    avg0 = sum(math.log(gammas0(p)) for p in prefixes) / n
    report.add("conditional_final_vs_gamma0", "inequality", h_last, avg0)
    chain += h_last
    if l >= 3:
        middle = [(tuple(t[j] for j in range(1, 2 * l - 4, 2)), p)
                  for t, p in zip(edge_tuples, prefixes)]
        report.add("middle_evens_determined", "identity", _h_cond(middle), 0.0)
    given = list(zip(prefixes, last_u))
    g1_u = [_norm2(t[2 * l - 3]) for t in edge_tuples]
    g2_u = [_norm2(t[2 * l - 2]) for t in edge_tuples]
    h_pair = _h_cond([((a, b), g) for a, b, g in zip(g1_u, g2_u, given)])
    h_g1 = _h_cond(list(zip(g1_u, given)))
    h_g2 = _h_cond(list(zip(g2_u, given)))
    report.add("pair_equals_first", "identity", h_pair, h_g1)
    report.add("pair_equals_second", "identity", h_pair, h_g2)
    avg1 = 0.0
    avg2 = 0.0
    budgets = []
    worst_amgm = None
    for t, prefix, e_last in zip(edge_tuples, prefixes, last_u):
        g1, g2 = gammas12(prefix, e_last)
        g0 = gammas0(prefix)
        avg1 += math.log(g1)
        avg2 += math.log(g2)
        a = [alpha(_odd_prefix(t, i)) for i in range(1, l - 1)]
        budgets.append(sum(a) + g0 + g1 + g2)
        lhs = 2 * sum(math.log(x) for x in a) + 2 * math.log(g0) + math.log(g1) + math.log(g2)
        if worst_amgm is None or lhs > worst_amgm:
            worst_amgm = lhs
    avg1 /= n
    avg2 /= n
    report.add("conditional_secondlast_vs_gamma1", "inequality", h_g1, avg1)
    report.add("conditional_nexttolast_vs_gamma2", "inequality", h_g2, avg2)
    report.add("split_chain", "identity", _h(edge_tuples),
               chain + (h_g1 + h_g2) / 2)
    report.add("per_copy_budget", "inequality", max(budgets), m)
    report.value("budget_equality_copies", sum(b == m for b in budgets))
    report.add("per_copy_product_bound", "inequality",
               worst_amgm, math.log(0.25 * (m / l) ** (2 * l)))
    report.add("closed_form", "inequality",
               math.log(n), math.log(m ** (l + 1) / (2 * l ** l)))


# -- per-cycle extension ledgers -------------------------------------------


@dataclass(frozen=True)
class LedgerRow:
    edge: tuple
    adjacent_positions: tuple  # 0-based cycle positions adjacent to the edge
    plus: tuple  # Fractions, one per position
    minus: tuple
    plus_caps: tuple
    minus_caps: tuple
    flags: tuple

    @property
    def plus_total(self):
        return sum(self.plus, Fraction(0))

    @property
    def minus_total(self):
        return sum(self.minus, Fraction(0))


@dataclass(frozen=True)
class ClaimLedger:
    cycle: tuple
    m: int
    s_plus: tuple  # Fractions indexed by cycle position
    s_minus: tuple
    rows: tuple  # LedgerRow per host edge
    flagged: tuple

    @property
    def l(self):
        return len(self.cycle) // 2

    @property
    def total_plus(self):
        return sum(self.s_plus, Fraction(0))

    @property
    def total_minus(self):
        return sum(self.s_minus, Fraction(0))

    @property
    def budget(self):
        return self.m * self.l

    @property
    def fallback_budget(self):
        return self.m * (self.l + 1)

    @property
    def within_budget(self):
        return self.total_plus <= self.budget and self.total_minus <= self.budget

    @property
    def within_fallback(self):
        return (self.total_plus <= self.fallback_budget
                and self.total_minus <= self.fallback_budget)

    def to_json(self):
        return {
            "cycle": list(self.cycle),
            "m": self.m,
            "s_plus": [str(x) for x in self.s_plus],
            "s_minus": [str(x) for x in self.s_minus],
            "total_plus": str(self.total_plus),
            "total_minus": str(self.total_minus),
            "budget": self.budget,
            "fallback_budget": self.fallback_budget,
            "within_budget": self.within_budget,
            "within_fallback": self.within_fallback,
            "flagged": list(self.flagged),
            "rows": [
                {
                    "edge": list(r.edge),
                    "adjacent_positions": list(r.adjacent_positions),
                    "plus": [str(x) for x in r.plus],
                    "minus": [str(x) for x in r.minus],
                    "flags": list(r.flags),
                }
                for r in self.rows
            ],
        }

    def write_csv(self, fh):
        k = len(self.cycle)
        writer = csv.writer(fh)
        header = (["edge", "adjacent_positions"]
                  + [f"S{j + 1}+" for j in range(k)]
                  + [f"S{j + 1}-" for j in range(k)]
                  + ["plus_total", "minus_total", "flags"])
        writer.writerow(header)
        for r in self.rows:
            writer.writerow(
                [f"{r.edge[0]}-{r.edge[1]}",
                 " ".join(map(str, r.adjacent_positions))]
                + [str(x) for x in r.plus]
                + [str(x) for x in r.minus]
                + [str(r.plus_total), str(r.minus_total), ";".join(r.flags)]
            )
        writer.writerow(["totals", ""]
                        + [str(x) for x in self.s_plus]
                        + [str(x) for x in self.s_minus]
                        + [str(self.total_plus), str(self.total_minus), ""])


def _forward_tuple(seq, j, count):
    k = len(seq)
    return tuple((seq[(j + 2 * t) % k], seq[(j + 2 * t + 1) % k]) for t in range(count))


def _backward_tuple(seq, j, count):
    k = len(seq)
    return tuple((seq[(j - 2 * t + 1) % k], seq[(j - 2 * t) % k]) for t in range(count))


def _validate_induced_cycle(host, seq):
    k = len(seq)
    if k < 6 or k % 2:
        raise ValueError("ledger applies to even cycles on at least 6 vertices")
    if len(set(seq)) != k:
        raise ValueError("repeated vertex in cycle sequence")
    for i in range(k):
        for j in range(i + 1, k):
            want = (j - i) % k == 1 or (i - j) % k == 1
            if host.has_edge(seq[i], seq[j]) != want:
                raise ValueError("sequence is not an induced cycle")


def _contribution_cap(adjacent, j, k):
    """Per-position contribution cap as a function of which cycle positions
    are adjacent to the edge.  The caps are recorded and checked, not
    assumed: rows exceeding them are flagged."""
    jn = (j + 1) % k
    if j in adjacent and jn in adjacent:
        return Fraction(0)
    if j in adjacent:
        window_clear = all((j + t) % k not in adjacent for t in range(2, k - 3))
        if window_clear and (j + k - 3) % k in adjacent:
            return Fraction(3, 2)
        return Fraction(1, 2)
    if jn in adjacent:
        return Fraction(1, 2)
    if not adjacent:
        return Fraction(0)
    d = min((p - j) % k for p in adjacent)
    return Fraction(1) if d % 2 else Fraction(0)


def cycle_extension_ledger(host: Graph, cycle) -> ClaimLedger:
    """Per-position extension-count sums S_j+/S_j- for one induced even
    cycle, with the per-host-edge contribution rows, the adjacency
    bookkeeping, and the edge-budget verdicts (m*l, with the (l+1)*m
    fallback for 6-cycles)."""
    seq = tuple(cycle)
    _validate_induced_cycle(host, seq)
    k = len(seq)
    l = k // 2
    m = host.m
    plus_sets = []
    minus_sets = []
    for j in range(k):
        psets = [set(alpha_extension_edges(host, _forward_tuple(seq, j, 1)))]
        msets = [set(alpha_extension_edges(host, _backward_tuple(seq, j, 1)))]
        for i in range(2, l):
            mode = "path-extend" if i <= l - 2 else "cycle-close"
            psets.append(set(alpha_extension_edges(host, _forward_tuple(seq, j, i), mode, k)))
            msets.append(set(alpha_extension_edges(host, _backward_tuple(seq, j, i), mode, k)))
        plus_sets.append(psets)
        minus_sets.append(msets)
    s_plus = tuple(Fraction(len(ps[0]), 2) + sum(len(s) for s in ps[1:]) for ps in plus_sets)
    s_minus = tuple(Fraction(len(ms[0]), 2) + sum(len(s) for s in ms[1:]) for ms in minus_sets)

    rev = tuple(reversed(seq))
    rows = []
    flagged = []
    check_plus = [Fraction(0)] * k
    check_minus = [Fraction(0)] * k
    per_edge_cap = l if l >= 4 else l + 1
    for edge in host.edges():
        x, y = edge
        adjacent = tuple(j for j in range(k)
                         if host.has_edge(x, seq[j]) or host.has_edge(y, seq[j]))
        adjacent_rev = tuple(j for j in range(k)
                             if host.has_edge(x, rev[j]) or host.has_edge(y, rev[j]))
        plus = []
        minus = []
        pcaps = []
        mcaps = []
        flags = []
        for j in range(k):
            p = Fraction(edge in plus_sets[j][0], 2) + sum(edge in s for s in plus_sets[j][1:])
            q = Fraction(edge in minus_sets[j][0], 2) + sum(edge in s for s in minus_sets[j][1:])
            plus.append(p)
            minus.append(q)
            check_plus[j] += p
            check_minus[j] += q
            pcap = _contribution_cap(set(adjacent), j, k)
            # minus tuples at position j equal the plus tuples of the
            # reversed sequence at position k-2-j
            mcap = _contribution_cap(set(adjacent_rev), (k - 2 - j) % k, k)
            pcaps.append(pcap)
            mcaps.append(mcap)
            if p > pcap:
                flags.append(f"plus_{j}_exceeds_case_cap")
            if q > mcap:
                flags.append(f"minus_{j}_exceeds_case_cap")
        if sum(plus) > per_edge_cap:
            flags.append("plus_total_exceeds_edge_cap")
        if sum(minus) > per_edge_cap:
            flags.append("minus_total_exceeds_edge_cap")
        row = LedgerRow(edge, adjacent, tuple(plus), tuple(minus),
                        tuple(pcaps), tuple(mcaps), tuple(flags))
        rows.append(row)
        if flags:
            flagged.append((edge, tuple(flags)))
    if tuple(check_plus) != s_plus or tuple(check_minus) != s_minus:
        raise AssertionError("ledger rows do not reconstruct the extension sums")
    return ClaimLedger(seq, m, s_plus, s_minus, tuple(rows), tuple(flagged))


def induced_cycles(host: Graph, k: int):
    """Unordered induced k-cycles, each as one representative vertex
    sequence (lexicographically least ordered copy)."""
    copies = kernels.enumerate_ordered(host, Graph.cycle(k))
    seen = {}
    for c in copies:
        key = frozenset(c)
        if key not in seen:
            seen[key] = c
    return sorted(seen.values())


# -- the 6-cycle hypergraph chain ------------------------------------------


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


def is_capable(host: Graph, triple) -> bool:
    """Whether some ordering and orientation of the three edges
    characterizes an induced 6-cycle."""
    from itertools import permutations
    from .counting import characterizes_cycle

    edges = list(triple)
    if len({_norm_edge(*e) for e in edges}) != 3:
        return False
    for perm in permutations(edges):
        for bits in range(8):
            t = tuple(e if not bits >> i & 1 else (e[1], e[0]) for i, e in enumerate(perm))
            vertices = [v for e in t for v in e]
            if len(set(vertices)) != 6:
                continue
            if characterizes_cycle(host, t):
                return True
    return False


@dataclass(frozen=True)
class C6HypergraphReport:
    m: int
    gamma: int
    capable_triples: tuple
    codegrees: tuple  # ((edge_pair, count), ...)
    report: EntropyReport

    @property
    def passed(self):
        return self.report.passed

    def to_json(self):
        return {
            "m": self.m,
            "gamma": self.gamma,
            "capable_triples": [[list(e) for e in t] for t in self.capable_triples],
            "codegrees": [
                {"pair": [list(e) for e in pair], "count": c} for pair, c in self.codegrees
            ],
            **self.report.to_json(),
        }


def c6_hypergraph_check(host: Graph) -> C6HypergraphReport:
    """Build the 3-uniform hypergraph of capable edge triples and verify the
    counting chain that pins the induced 6-cycle count below 3*(m/6)^3."""
    m = host.m
    copies = kernels.enumerate_ordered(host, Graph.cycle(6))
    gamma = len(copies) // 12
    triples = set()
    for c in copies:
        triple = frozenset((_norm_edge(c[0], c[1]), _norm_edge(c[2], c[3]),
                            _norm_edge(c[4], c[5])))
        triples.add(triple)
    codegree = Counter()
    for t in triples:
        a, b, c_ = sorted(t)
        codegree[frozenset((a, b))] += 1
        codegree[frozenset((b, c_))] += 1
        codegree[frozenset((a, c_))] += 1
    codegree_sum = sum(
        codegree[frozenset(pair)] for t in triples
        for pair in _pairs(sorted(t))
    )
    sum_d = sum(codegree.values())
    sum_d_sq = sum(c * c for c in codegree.values())
    two_section = len(codegree)
    report = EntropyReport()
    report.add("hyperedges_twice_count", "identity", len(triples), 2 * gamma)
    report.add("codegree_total", "identity", sum_d, 6 * gamma)
    report.add("codegree_sum_square_identity", "identity", codegree_sum, sum_d_sq)
    report.add("codegree_sum_vs_budget", "inequality", codegree_sum, m * gamma)
    cauchy = (sum_d * sum_d / two_section) if two_section else 0.0
    report.add("cauchy_schwarz", "inequality", cauchy, sum_d_sq)
    report.add("two_section_vs_pairs", "inequality", two_section, m * m / 2)
    report.add("count_vs_closed_form", "inequality", gamma, 3 * (m / 6) ** 3)
    ordered_triples = tuple(sorted(tuple(sorted(t)) for t in triples))
    ordered_codegrees = tuple(sorted(
        (tuple(sorted(pair)), c) for pair, c in codegree.items()
    ))
    return C6HypergraphReport(m, gamma, ordered_triples, ordered_codegrees, report)


def _pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield (items[i], items[j])
