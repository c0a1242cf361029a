import networkx as nx
import pytest

from semitd.generators import (
    GenSpec,
    SplitMix64,
    generate,
    interval_graph,
    random_block_graph,
    random_interval_graph,
    random_intervals,
    random_tree,
)
from semitd.graph import serialize_edge_list, validate_connected
from semitd.ordering import find_seo, verify_seo
from support import definitional_seo


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_splitmix_reference_stream():
    # published reference outputs for seed 0
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix_helpers():
    r = SplitMix64(123)
    xs = [r.below(7) for _ in range(2000)]
    assert set(xs) == set(range(7))
    fs = [r.random() for _ in range(2000)]
    assert all(0.0 <= f < 1.0 for f in fs)
    items = list(range(20))
    r.shuffle(items)
    assert sorted(items) == list(range(20))
    with pytest.raises(ValueError):
        r.below(0)


@pytest.mark.parametrize("family", ["tree", "interval", "block"])
def test_deterministic(family):
    a = serialize_edge_list(generate(family, 60, 42))
    b = serialize_edge_list(generate(family, 60, 42))
    assert a == b
    assert a != serialize_edge_list(generate(family, 60, 43))


def test_genspec_validation():
    with pytest.raises(ValueError):
        GenSpec("cactus", 10, 1)
    with pytest.raises(ValueError):
        GenSpec("tree", 2, 1)
    with pytest.raises(ValueError):
        random_block_graph(10, 1, max_clique=1)


def test_tree_n3_is_p3():
    for seed in range(10):
        g = random_tree(3, seed)
        assert g.m == 2 and sorted(g.degree(v) for v in range(3)) == [1, 1, 2]


def test_trees_are_trees():
    for seed in range(50):
        g = random_tree(3 + seed * 4, seed)
        assert g.m == g.n - 1 and validate_connected(g)
        assert nx.is_tree(to_nx(g))


def test_tree_prufer_uniform_on_small_n():
    # 4 labelled vertices: 16 trees, 4 stars and 12 paths
    counts = {"star": 0, "path": 0}
    for seed in range(4000):
        g = random_tree(4, seed)
        counts["star" if max(g.degree(v) for v in range(4)) == 3 else "path"] += 1
    assert 0.2 < counts["star"] / 4000 < 0.3


def test_find_seo_on_tree_samples():
    for seed in range(1000):
        g = random_tree(3 + seed % 198, seed)
        assert verify_seo(g, find_seo(g).order)


@pytest.mark.parametrize("family", ["interval", "block"])
def test_find_seo_on_family_samples(family):
    for seed in range(300):
        g = generate(family, 3 + seed % 120, seed)
        assert validate_connected(g)
        assert verify_seo(g, find_seo(g).order)


def test_interval_graph_matches_intersection():
    for seed in range(20):
        iv = random_intervals(25, seed)
        g = interval_graph(iv)
        for u in range(25):
            for v in range(u + 1, 25):
                meet = iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
                assert g.has_edge(u, v) == meet
        assert nx.is_chordal(to_nx(g))


def test_nested_intervals_form_a_clique():
    iv = [(0.5 - k * 0.05, 0.5 + k * 0.05) for k in range(1, 7)]
    g = interval_graph(iv)
    assert g.m == 6 * 5 // 2


def test_interval_density_calibration():
    ratios = [random_interval_graph(4000, s).m / 4000 for s in range(10)]
    mean = sum(ratios) / len(ratios)
    assert 3.5 < mean < 4.5
    assert all(validate_connected(random_interval_graph(500, s)) for s in range(20))


def test_block_max_clique_two_is_tree():
    for seed in range(20):
        g = random_block_graph(40, seed, max_clique=2)
        assert nx.is_tree(to_nx(g))


def test_blocks_are_cliques():
    for seed in range(40):
        g = random_block_graph(10 + seed, seed, max_clique=5)
        h = to_nx(g)
        assert nx.is_connected(h)
        for comp in nx.biconnected_components(h):
            k = len(comp)
            assert 2 <= k <= 5
            assert h.subgraph(comp).number_of_edges() == k * (k - 1) // 2


def test_generated_orders_satisfy_definition():
    for family in ("tree", "interval", "block"):
        for seed in range(10):
            g = generate(family, 12, seed)
            assert definitional_seo(g, find_seo(g).order)
