"""Exact edge-inducibility by isomorph-free exhaustive generation.

Graphs with m edges and no isolated vertices are generated one per
isomorphism class by canonical augmentation: every m-edge class is grown
from the (m-1)-edge class obtained by deleting its canonical-last edge,
so a candidate child is accepted exactly when deleting that edge (and any
vertices it isolates) reproduces the parent.  Each class therefore has a
unique generating parent and the enumeration never needs a global seen-set.

The maximum induced-copy count over a level, with all maximizers kept as
canonical certificates, is the exact value the closed-form bounds are
sandwiched against.
"""

from __future__ import annotations

import json
import os
import urllib.parse
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, parse_graph6, write_graph6
from .canon import canonical_form
from .counting import count_induced
from .families import family_graph, family_name
from .blowups import blow_up, bound_eval, effective_upper, optimize_part_sizes

DEFAULT_CEILING = 12
GENERATOR_VERSION = "1"
FLOAT_SLACK = 1e-9
_SHARD_DEPTH = 5


class CeilingError(RuntimeError):
    def __init__(self, m, ceiling, estimate):
        super().__init__(
            f"{m} edges exceeds the search ceiling {ceiling}; "
            f"roughly {estimate} isomorphism classes would be scanned"
        )
        self.estimate = estimate


class SandwichError(RuntimeError):
    def __init__(self, report, violated):
        super().__init__(f"bound {violated} violated: {report}")
        self.report = report
        self.violated = violated


def estimated_class_count(m):
    # Observed growth of the class counts is a factor of roughly 3.4
    # per extra edge beyond the sizes we enumerate routinely.
    return int(1476 * 3.4 ** (m - 9)) if m > 9 else 1476


def _canonical_last_edge(relabeled: Graph):
    return max(relabeled.edges(), key=lambda e: (e[1], e[0]))


def _children(parent: Graph, parent_label: str):
    """Accepted one-edge extensions of a canonical representative, each
    returned as (canonically relabeled graph, label), deduplicated."""
    candidates = []
    n = parent.n
    for u in range(n):
        for v in range(u + 1, n):
            if not parent.has_edge(u, v):
                candidates.append(parent.add_edge(u, v))
    for u in range(n):
        candidates.append(parent.add_vertex(1 << u))
    if n + 2 <= 64:
        candidates.append(parent.add_vertex(0).add_vertex(1 << n))
    out = {}
    for child in candidates:
        form = canonical_form(child)
        if form.label in out:
            continue
        canonical_child = child.relabel(form.perm)
        back = canonical_child.remove_edge(*_canonical_last_edge(canonical_child))
        if canonical_form(back.without_isolated()).label == parent_label:
            out[form.label] = canonical_child
    return sorted(out.items())


@lru_cache(maxsize=None)
def _level(m):
    """All m-edge classes without isolated vertices, as (label, graph)
    pairs sorted by label."""
    if m == 0:
        g = Graph.empty(0)
        return ((canonical_form(g).label, g),)
    if m == 1:
        g = Graph.complete(2)
        return ((canonical_form(g).label, g),)
    out = []
    for label, parent in _level(m - 1):
        out.extend(_children(parent, label))
    return tuple(sorted(out))


def _extend(pairs, steps):
    for _ in range(steps):
        nxt = []
        for label, parent in pairs:
            nxt.extend(_children(parent, label))
        pairs = sorted(nxt)
    return pairs


def enumerate_m_edge_graphs(m, ceiling=DEFAULT_CEILING):
    """One canonical representative per isomorphism class of graphs with m
    edges and no isolated vertices."""
    if m > ceiling:
        raise CeilingError(m, ceiling, estimated_class_count(m))
    for _, g in _level(m):
        yield g


@dataclass(frozen=True)
class SearchResult:
    pattern: str  # canonical graph6 of the pattern
    m: int
    rho: int
    extremal: tuple
    truncated: bool
    classes_scanned: int
    version: str = GENERATOR_VERSION

    def to_record(self):
        return {
            "h": self.pattern,
            "m": self.m,
            "rho": self.rho,
            "extremal": list(self.extremal),
            "truncated": self.truncated,
            "classes": self.classes_scanned,
            "version": self.version,
        }

    @classmethod
    def from_record(cls, rec):
        return cls(rec["h"], rec["m"], rec["rho"], tuple(rec["extremal"]),
                   rec["truncated"], rec["classes"], rec["version"])


def _scan(pairs, pattern: Graph):
    rho = 0
    maximizers = []
    scanned = 0
    for label, g in pairs:
        scanned += 1
        c = count_induced(g, pattern).unordered if g.n >= pattern.n else 0
        if c > rho:
            rho = c
            maximizers = [label]
        elif c == rho:
            maximizers.append(label)
    return rho, maximizers, scanned


def _shard_pairs(m, shards, index):
    depth = min(m, _SHARD_DEPTH)
    base = [p for i, p in enumerate(_level(depth)) if i % shards == index]
    return _extend(base, m - depth)


def _shard_worker(pattern_g6, m, shards, index):
    pattern = parse_graph6(pattern_g6)
    rho, maximizers, scanned = _scan(_shard_pairs(m, shards, index), pattern)
    return rho, maximizers, scanned


class ResultCache:
    """JSON-lines result store, one file per pattern canonical label.
    Records from other generator versions are ignored."""

    def __init__(self, directory):
        self.directory = directory

    def _path(self, pattern_label):
        name = urllib.parse.quote(pattern_label, safe="") + ".jsonl"
        return os.path.join(self.directory, name)

    def get(self, pattern_label, m):
        path = self._path(pattern_label)
        if not os.path.exists(path):
            return None
        with open(path) as fh:
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                if rec["h"] == pattern_label and rec["m"] == m and rec["version"] == GENERATOR_VERSION:
                    return SearchResult.from_record(rec)
        return None

    def put(self, result: SearchResult):
        os.makedirs(self.directory, exist_ok=True)
        with open(self._path(result.pattern), "a") as fh:
            fh.write(json.dumps(result.to_record(), sort_keys=True) + "\n")


def rho_exact(pattern: Graph, m: int, *, ceiling=DEFAULT_CEILING, shards=1,
              max_certificates=1000, cache: ResultCache | None = None) -> SearchResult:
    """Exact maximum induced-copy count of the pattern over all hosts with
    exactly m edges, with every maximizer retained as a certificate
    (capped, sorted by canonical label).  Deterministic: the result is
    identical for any shard count."""
    if pattern.n == 0 or pattern.isolated_vertices():
        raise ValueError("pattern must have no isolated vertices")
    if m < 0:
        raise ValueError("edge budget must be nonnegative")
    if m > ceiling:
        raise CeilingError(m, ceiling, estimated_class_count(m))
    pattern_label = canonical_form(pattern).label
    if cache is not None:
        hit = cache.get(pattern_label, m)
        if hit is not None and hit.truncated and len(hit.extremal) < max_certificates:
            hit = None  # cached under a smaller cap; recompute
        if hit is not None and len(hit.extremal) > max_certificates:
            hit = SearchResult(hit.pattern, hit.m, hit.rho, hit.extremal[:max_certificates],
                               True, hit.classes_scanned)
        if hit is not None:
            return hit
    canonical_pattern = parse_graph6(pattern_label)
    if shards <= 1:
        rho, maximizers, scanned = _scan(_level(m), canonical_pattern)
    else:
        parts = []
        with ProcessPoolExecutor(max_workers=min(shards, os.cpu_count() or 1)) as pool:
            futures = [pool.submit(_shard_worker, pattern_label, m, shards, i)
                       for i in range(shards)]
            parts = [f.result() for f in futures]
        rho = max(p[0] for p in parts)
        maximizers = sorted(set().union(*(p[1] for p in parts if p[0] == rho)))
        scanned = sum(p[2] for p in parts)
    maximizers = sorted(set(maximizers))
    truncated = len(maximizers) > max_certificates
    result = SearchResult(pattern_label, m, rho, tuple(maximizers[:max_certificates]),
                          truncated, scanned)
    if cache is not None:
        cache.put(result)
    return result


def verify_sandwich(family, m: int, *, ceiling=DEFAULT_CEILING, shards=1,
                    max_certificates=1000, cache: ResultCache | None = None) -> dict:
    """Check construction lower bound <= exact value <= tightest closed-form
    upper bound.  A violation raises SandwichError naming the bound: this
    is the regression alarm for the whole package."""
    pattern = family_graph(family)
    name = family_name(family)
    rows = bound_eval(family, m, include_construction=False)
    spec = optimize_part_sizes(family, m)
    lower = count_induced(blow_up(spec), pattern).unordered
    exact = rho_exact(pattern, m, ceiling=ceiling, shards=shards,
                      max_certificates=max_certificates, cache=cache)
    upper_row = effective_upper(rows)
    report = {
        "family": name,
        "m": m,
        "lower": lower,
        "exact": exact.rho,
        "upper": upper_row.value,
        "upper_provenance": upper_row.provenance,
        "construction": spec.to_json(),
        "bounds": [r.to_json() for r in rows],
        "classes_scanned": exact.classes_scanned,
        "extremal": list(exact.extremal[:10]),
        "ratios": {
            "exact_over_lower": exact.rho / lower if lower else None,
            "upper_over_exact": upper_row.value / exact.rho if exact.rho else None,
        },
        "pass": True,
    }
    if lower > exact.rho:
        report["pass"] = False
        raise SandwichError(report, "construction_lower")
    if exact.rho > upper_row.value + FLOAT_SLACK:
        report["pass"] = False
        raise SandwichError(report, upper_row.provenance)
    return report
