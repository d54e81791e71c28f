"""Repeated switching with fingerprint deduplication.

Fingerprints are isomorphism invariants, not canonical forms: the census
counts fingerprint-distinct graphs, a lower bound on isomorphism classes.
"""
from __future__ import annotations

import hashlib
import json
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .analysis import SrgParams, srg_check
from .cliques import k_cliques
from .graphcore import Graph, bits, graph6_encode
from .switching import PartitionSpec, apply_switch, verify_wqh_hypotheses

log = logging.getLogger(__name__)

# non-adjacent pairs tried per graph before giving up on new candidates
PAIR_BUDGET = 20000


@dataclass(frozen=True)
class Fingerprint:
    clique_count: int
    edge_clique_histogram: tuple[tuple[int, int], ...]
    triangle_histogram: tuple[tuple[int, int], ...]

    @property
    def digest(self) -> str:
        return hashlib.sha256(repr(self).encode()).hexdigest()[:16]

    def to_json(self):
        return {
            "clique_count": self.clique_count,
            "edge_clique_histogram": [list(x) for x in self.edge_clique_histogram],
            "triangle_histogram": [list(x) for x in self.triangle_histogram],
        }


def fingerprint(G: Graph, t: int) -> Fingerprint:
    per_edge: Counter[tuple[int, int]] = Counter()
    count = 0
    for C in k_cliques(G, t + 1):
        count += 1
        per_edge.update(combinations(C, 2))
    covered = sum(1 for _ in per_edge)
    hist = Counter(per_edge.values())
    zero = G.num_edges() - covered
    if zero:
        hist[0] = zero
    rows = G.rows
    tri = Counter(
        sum((rows[u] & rows[w]).bit_count() for w in bits(rows[u])) // 2
        for u in range(G.v)
    )
    return Fingerprint(count, tuple(sorted(hist.items())), tuple(sorted(tri.items())))


def _closure(G: Graph, u: int, w: int) -> int:
    # vertices outside N(u) u N(w) adjacent to everything u and w share
    rows = G.rows
    common = rows[u] & rows[w]
    outside = ~(rows[u] | rows[w] | common)
    out = 0
    for x in range(G.v):
        if outside >> x & 1 and rows[x] & common == common:
            out |= 1 << x
    return out


def _pairs(G: Graph, rng: random.Random):
    rows = G.rows
    total = G.v * (G.v - 1) // 2 - G.num_edges()
    if total <= PAIR_BUDGET:
        pairs = [(u, w) for u in range(G.v) for w in range(u + 1, G.v) if not rows[u] >> w & 1]
        rng.shuffle(pairs)
        yield from pairs
        return
    seen = set()
    while len(seen) < PAIR_BUDGET:
        u, w = sorted(rng.sample(range(G.v), 2))
        if rows[u] >> w & 1 or (u, w) in seen:
            continue
        seen.add((u, w))
        yield u, w


def find_generic_partitions(G: Graph, c: int, limit: int, seed: int = 0) -> list[PartitionSpec]:
    """Switching partitions found by pairing closure sets of non-adjacent vertices.

    For non-adjacent u, w the closure is every vertex adjacent to neither but
    to all common neighbours of u and w; in a line graph of T*_2(K) this is the
    parallel class through u and w in their plane.  Closures larger than ``c``
    are cut down to u, w plus a seeded random sample.  Results come out in
    search order, so a smaller ``limit`` returns a prefix of a larger one.
    """
    if c < 2:
        raise ValueError("class size must be at least 2")
    rng = random.Random(seed)
    found: list[PartitionSpec] = []
    seen_sets: set[tuple[int, ...]] = set()
    cands: list[tuple[int, ...]] = []
    if limit <= 0:
        return found
    for u, w in _pairs(G, rng):
        S = _closure(G, u, w)
        size = S.bit_count()
        if size < c:
            continue
        if size == c:
            cand = tuple(bits(S))
        else:
            rest = [x for x in bits(S) if x not in (u, w)]
            cand = tuple(sorted([u, w] + rng.sample(rest, c - 2)))
        if cand in seen_sets:
            continue
        seen_sets.add(cand)
        cset = set(cand)
        for other in cands:
            if cset.isdisjoint(other):
                ps = PartitionSpec(other, cand).normalized()
                if verify_wqh_hypotheses(G, ps).passed:
                    found.append(ps)
                    if len(found) >= limit:
                        return found
        cands.append(cand)
    return found


@dataclass
class CensusEntry:
    digest: str
    level: int
    graph: Graph
    fingerprint: Fingerprint


@dataclass
class Census:
    params: SrgParams
    t: int
    entries: list[CensusEntry] = field(default_factory=list)
    level_counts: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def to_json(self):
        return {
            "params": self.params.to_json(),
            "t": self.t,
            "fingerprint_distinct": len(self.entries),
            "lower_bound_note": "fingerprint-distinct count; a lower bound on isomorphism classes",
            "level_counts": self.level_counts,
            "graphs": [
                {"digest": e.digest, "level": e.level, "fingerprint": e.fingerprint.to_json()}
                for e in self.entries
            ],
        }

    def dump(self, outdir) -> None:
        outdir = Path(outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        for e in self.entries:
            (outdir / f"{e.digest}.g6").write_bytes(graph6_encode(e.graph) + b"\n")
        (outdir / "census.json").write_text(json.dumps(self.to_json(), indent=2) + "\n")


def explore(G: Graph, t: int, depth: int, limit: int, c: int, seed: int = 0) -> Census:
    """Breadth-first switching from ``G`` up to ``depth`` levels.

    Every retained graph is checked to have the root's SRG parameters.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    params = srg_check(G)
    fp = fingerprint(G, t)
    census = Census(params, t, [CensusEntry(fp.digest, 0, G, fp)], [1])
    seen = {fp}
    frontier = [G]
    for level in range(1, depth + 1):
        new = []
        for H in frontier:
            for ps in find_generic_partitions(H, c, limit, seed):
                if not verify_wqh_hypotheses(H, ps).switched:
                    continue
                H2 = apply_switch(H, ps)
                fp2 = fingerprint(H2, t)
                if fp2 in seen:
                    continue
                p2 = srg_check(H2)
                if p2 != params:
                    raise AssertionError(f"switching changed parameters {params} -> {p2}")
                seen.add(fp2)
                new.append(CensusEntry(fp2.digest, level, H2, fp2))
        new.sort(key=lambda e: e.digest)
        census.entries += new
        census.level_counts.append(len(new))
        frontier = [e.graph for e in new]
        log.info("level %d: %d new fingerprint-distinct graphs", level, len(new))
    return census
