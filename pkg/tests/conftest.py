import networkx as nx
import pytest
from hypothesis import strategies as st

from balstats.graphs import Graph


def to_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G

def from_networkx(G):
    index = dict((v, i) for i, v in enumerate(G.nodes()))
    return Graph.from_edges(G.number_of_nodes(), [(index[u], index[v]) for u, v in G.edges()])


@st.composite
def random_graphs(draw, min_n=1, max_n=8, connected=True):
    """Random simple graphs; connected ones get a random spanning tree first."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges.update(extra)
    return Graph.from_edges(n, edges)

@st.composite
def relabelings(draw, max_n=8):
    g = draw(random_graphs(max_n=max_n))
    order = draw(st.permutations(list(range(g.n))))
    return g, order


@pytest.fixture
def k26():
    from balstats.families import complete_bipartite
    return complete_bipartite(2, 6)
