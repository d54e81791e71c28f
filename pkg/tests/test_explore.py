import random

import pytest

from wqhswitch.analysis import srg_check
from wqhswitch.explore import explore, find_generic_partitions, fingerprint
from wqhswitch.graphcore import Graph
from wqhswitch.switching import build_partition, find_switching_config, verify_wqh_hypotheses


def permuted(G, seed):
    perm = list(range(G.v))
    random.Random(seed).shuffle(perm)
    return G.relabel(perm)


@pytest.fixture(scope="module")
def census(gq):
    return explore(gq.G, gq.t, depth=1, limit=1000, c=gq.q)


def geometric_partitions(c):
    # a hyperoval in PG(2, 4) has 15 secants, each with 2 arc points
    out = set()
    for si in range(15):
        for pi in range(2):
            for i in range(c.q):
                for j in range(i + 1, c.q):
                    cfg = find_switching_config(c.F, c.K, 1, secant=si, p_index=pi, planes=(i, j))
                    out.add(build_partition(cfg, c.L).normalized())
    return out


def test_geometric_partitions_are_found(gq):
    geo = geometric_partitions(gq)
    assert len(geo) == 15 * 2 * 6
    found = set(find_generic_partitions(gq.G, gq.q, limit=10**6))
    assert geo <= found
    for ps in found:
        assert verify_wqh_hypotheses(gq.G, ps).passed


def test_limit_gives_prefix(gq):
    a = find_generic_partitions(gq.G, gq.q, limit=7, seed=3)
    b = find_generic_partitions(gq.G, gq.q, limit=30, seed=3)
    assert len(a) == 7 and b[:7] == a
    assert find_generic_partitions(gq.G, gq.q, limit=30, seed=3) == b


def test_edgeless_graph_partitions():
    G = Graph(10, [0] * 10)
    parts = find_generic_partitions(G, 2, limit=5)
    assert len(parts) == 5
    for ps in parts:
        assert verify_wqh_hypotheses(G, ps).passed


def test_random_graph_partitions_empty():
    rng = random.Random(5)
    v = 40
    G = Graph.from_edges(v, [(i, j) for i in range(v) for j in range(i + 1, v) if rng.random() < 0.5])
    assert find_generic_partitions(G, 4, limit=10) == []


def test_class_size_validated(gq):
    with pytest.raises(ValueError):
        find_generic_partitions(gq.G, 1, limit=1)


def test_depth_zero(gq):
    c = explore(gq.G, gq.t, depth=0, limit=10, c=gq.q)
    assert len(c) == 1 and c.level_counts == [1]


def test_depth_one(census, gq):
    assert len(census) >= 2
    fps = [e.fingerprint for e in census.entries]
    assert fps[0].clique_count == 64
    assert any(fp.clique_count < 64 for fp in fps[1:])
    for e in census.entries:
        assert srg_check(e.graph).astuple() == (96, 20, 4, 4)


def test_fingerprint_distinguishes_gq_and_switched(gq):
    assert fingerprint(gq.G, gq.t) != fingerprint(gq.Gp, gq.t)


def test_fingerprint_invariant_under_relabeling(census):
    for e in census.entries:
        for seed in range(100):
            assert fingerprint(permuted(e.graph, seed), census.t) == e.fingerprint


def test_census_monotone(gq):
    small = explore(gq.G, gq.t, depth=1, limit=3, c=gq.q)
    big = explore(gq.G, gq.t, depth=1, limit=50, c=gq.q)
    deeper = explore(gq.G, gq.t, depth=2, limit=3, c=gq.q)
    digests = lambda c: {e.digest for e in c.entries}
    assert digests(small) <= digests(big)
    assert digests(small) <= digests(deeper)
    assert len(small) <= len(big) and len(small) <= len(deeper)


def test_census_dump(tmp_path, census):
    census.dump(tmp_path)
    files = sorted(p.name for p in tmp_path.glob("*.g6"))
    assert len(files) == len(census)
    assert (tmp_path / "census.json").exists()
