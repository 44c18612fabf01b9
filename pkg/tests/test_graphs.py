import itertools
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from scipy.sparse.csgraph import shortest_path

from balstats.enumeration import connected_graphs
from balstats.families import complete, complete_bipartite, cycle, path, star
from balstats.graphs import (UNREACHABLE, DisconnectedGraphError, Graph,
                             all_pairs_distances, are_isomorphic, bfs_distances,
                             canonical_form, canonical_graph, canonical_labeling,
                             degree, delete_vertex, diameter, is_bipartite,
                             is_connected, non_cut_vertices, odd_cycle, relabel)

from conftest import random_graphs, relabelings, to_networkx


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(0)
    with pytest.raises(ValueError):
        Graph(65)
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b00])  # self-loop
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])
    with pytest.raises(ValueError):
        Graph(3, [0, 0])

def test_from_edges_collapses_repeats():
    g = Graph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.size() == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])

def test_graphs_compare_by_adjacency():
    assert path(3) == Graph.from_edges(3, [(1, 2), (0, 1)])
    assert path(3) != star(2)
    assert len(set([path(3), path(3), cycle(3)])) == 2

def test_degree():
    assert degree(star(3), 0) == 3
    assert degree(star(3), 2) == 1
    with pytest.raises(ValueError):
        degree(star(3), 4)

def test_bfs_distances():
    assert list(bfs_distances(path(4), 0)) == [0, 1, 2, 3]
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert list(bfs_distances(g, 0)) == [0, 1, UNREACHABLE, UNREACHABLE]
    with pytest.raises(ValueError):
        bfs_distances(g, 4)

def test_distance_matrix_is_read_only():
    dm = all_pairs_distances(cycle(5))
    assert dm[0, 2] == 2
    assert list(dm.row(0)) == [0, 1, 2, 2, 1]
    assert dm.connected
    with pytest.raises(ValueError):
        dm.dist[0, 1] = 5

def test_diameter():
    assert diameter(Graph(1)) == 0
    assert diameter(complete(4)) == 1
    assert diameter(path(4)) == 3
    assert diameter(cycle(7)) == 3
    with pytest.raises(DisconnectedGraphError, match="diameter undefined"):
        diameter(Graph(2))

def test_bipartite():
    assert is_bipartite(cycle(5)) == (False, None)
    assert is_bipartite(cycle(6)) == (True, (0, 1, 0, 1, 0, 1))
    assert is_bipartite(complete(3))[0] is False
    assert is_bipartite(complete_bipartite(2, 3)) == (True, (0, 0, 1, 1, 1))
    assert is_bipartite(Graph(3))[0]

def test_odd_cycle_of_cycle():
    c = odd_cycle(cycle(5))
    assert sorted(c) == [0, 1, 2, 3, 4]
    assert odd_cycle(cycle(6)) is None

def test_non_cut_vertices():
    assert non_cut_vertices(path(4)) == [0, 3]
    assert non_cut_vertices(star(3)) == [1, 2, 3]
    assert non_cut_vertices(cycle(4)) == [0, 1, 2, 3]

def test_delete_vertex():
    g = delete_vertex(path(4), 1)
    assert g.n == 3
    assert list(g.edges()) == [(1, 2)]
    with pytest.raises(ValueError):
        delete_vertex(Graph(1), 0)

def test_relabel():
    g = relabel(path(3), [1, 0, 2])
    assert list(g.edges()) == [(0, 1), (0, 2)]
    with pytest.raises(ValueError):
        relabel(path(3), [0, 0, 1])

def test_canonical_form_golden():
    assert canonical_form(complete(3)) == b"Bw"
    assert canonical_form(complete(4)) == b"C~"
    assert canonical_form(Graph(1)) == b"@"

def test_canonical_form_of_small_isomorphs():
    assert canonical_form(star(3)) == canonical_form(Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)]))
    assert canonical_form(cycle(4)) == canonical_form(complete_bipartite(2, 2))
    assert canonical_form(path(4)) != canonical_form(star(3))
    assert are_isomorphic(cycle(4), complete_bipartite(2, 2))
    assert not are_isomorphic(cycle(6), complete_bipartite(3, 3))


@given(random_graphs(max_n=9, connected=False))
def test_distances_match_scipy_and_networkx(g):
    dist = all_pairs_distances(g).dist
    ref = shortest_path(nx.to_scipy_sparse_array(to_networkx(g), nodelist=range(g.n)),
                        directed=False, unweighted=True)
    ref[np.isinf(ref)] = UNREACHABLE
    assert np.array_equal(dist, ref.astype(np.int64))
    assert is_connected(g) == nx.is_connected(to_networkx(g))

@given(random_graphs(max_n=10, connected=False))
def test_odd_cycle_is_a_witness(g):
    c = odd_cycle(g)
    assert (c is None) == is_bipartite(g)[0] == nx.is_bipartite(to_networkx(g))
    if c is not None:
        assert len(c) % 2 == 1
        assert len(set(c)) == len(c)
        assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))

@given(random_graphs(max_n=9))
def test_non_cut_vertices_match_networkx(g):
    G = to_networkx(g)
    expected = []
    for v in range(g.n):
        H = G.copy()
        H.remove_node(v)
        if H.number_of_nodes() == 0 or nx.is_connected(H):
            expected.append(v)
    assert non_cut_vertices(g) == expected

def _assert_relabelings_agree(g, count):
    form = canonical_form(g)
    rng = random.Random(g.n * 1000 + g.size())
    for _ in range(count):
        order = list(range(g.n))
        rng.shuffle(order)
        assert canonical_form(relabel(g, order)) == form

@settings(max_examples=50, deadline=None)
@given(random_graphs(min_n=2, max_n=9))
def test_canonical_form_invariant_under_relabeling(g):
    _assert_relabelings_agree(g, 20)

@pytest.mark.slow
@settings(max_examples=50, deadline=None)
@given(random_graphs(min_n=2, max_n=9))
def test_canonical_form_invariant_under_many_relabelings(g):
    _assert_relabelings_agree(g, 1000)

@settings(deadline=None)
@given(relabelings(max_n=9))
def test_canonical_graph_is_a_relabeling(pair):
    g, order = pair
    h = relabel(g, order)
    labeling = canonical_labeling(h)
    assert sorted(labeling) == list(range(g.n))
    assert canonical_graph(h) == canonical_graph(g)
    assert canonical_graph(canonical_graph(g)) == canonical_graph(g)

@settings(deadline=None)
@given(random_graphs(max_n=7), random_graphs(max_n=7))
def test_isomorphism_matches_networkx(g1, g2):
    assert are_isomorphic(g1, g2) == nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def _permutation_isomorphic(g1, g2):
    if g1.n != g2.n or g1.size() != g2.size():
        return False
    edges = set(g2.edges())
    for p in itertools.permutations(range(g1.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in edges for u, v in g1.edges()):
            return True
    return False

def _labeled_connected_graphs(n):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if is_connected(g):
            yield g

def test_isomorphism_matches_permutation_search_on_labeled_graphs():
    for n in range(1, 5):
        graphs = list(_labeled_connected_graphs(n))
        for g1, g2 in itertools.product(graphs, repeat=2):
            assert are_isomorphic(g1, g2) == _permutation_isomorphic(g1, g2)

def test_isomorphism_matches_permutation_search_on_five_vertices():
    classes = list(connected_graphs(5))
    for g in _labeled_connected_graphs(5):
        found = [c for c in classes if are_isomorphic(g, c)]
        assert len(found) == 1
        assert all(are_isomorphic(g, c) == _permutation_isomorphic(g, c) for c in classes)

@pytest.mark.slow
def test_isomorphism_matches_permutation_search_on_six_vertices():
    rng = random.Random(6)
    classes = list(connected_graphs(6))
    for g in classes:
        order = list(range(6))
        rng.shuffle(order)
        h = relabel(g, order)
        assert are_isomorphic(g, h) and _permutation_isomorphic(g, h)
        for c in classes:
            assert are_isomorphic(h, c) == _permutation_isomorphic(h, c) == (c == g)
