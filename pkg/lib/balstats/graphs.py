#!/usr/bin/env python
#
#    graphs.py
#    BalStats
#    Graph representation, hop distances, bipartiteness and canonical
#    labeling for small simple undirected graphs.
#
#    Part of GNDB
#    GNDB: Generalized Nicely Distance-Balanced graphs
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

import numpy as np

#a neighbor set is one 64 bit word
MAXN = 64

#distance between vertices in different components
UNREACHABLE = -1


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""
    pass


def iter_bits(mask):
    """Yield the positions of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def popcount(mask):
    return bin(mask).count("1")


class Graph(object):
    """Simple undirected graph on the vertices 0..n-1.

    adj is a tuple of n integer bitmasks: bit u of adj[v] is set
    when uv is an edge. Graphs are never modified after construction,
    so they are safe to share between worker processes.
    """
    __slots__ = ("n", "adj")

    def __init__(self, n, adj=None):
        if not 1 <= n <= MAXN:
            raise ValueError("vertex count %s outside 1..%d" % (n, MAXN))
        if adj is None:
            adj = (0,) * n
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ValueError("expected %d neighbor sets, got %d" % (n, len(adj)))
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a < 0 or a & ~full:
                raise ValueError("neighbor id out of range at vertex %d" % v)
            if a >> v & 1:
                raise ValueError("self-loop at vertex %d" % v)
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError("asymmetric adjacency between %d and %d" % (v, u))
        self.n = n
        self.adj = adj

    @classmethod
    def _trusted(cls, n, adj):
        #skip validation, for adjacency built internally from a valid graph
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        return g

    @classmethod
    def from_edges(cls, n, edges):
        """Build a graph from an iterable of (u, v) pairs. Repeated edges collapse."""
        if not 1 <= n <= MAXN:
            raise ValueError("vertex count %s outside 1..%d" % (n, MAXN))
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge %s-%s outside 0..%d" % (u, v, n - 1))
            if u == v:
                raise ValueError("self-loop at vertex %d" % u)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def neighbors(self, v):
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u, v):
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self):
        """Yield every edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def size(self):
        """Number of edges."""
        return sum(popcount(a) for a in self.adj) // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.size())


def degree(g, v):
    if not 0 <= v < g.n:
        raise ValueError("vertex %s outside 0..%d" % (v, g.n - 1))
    return popcount(g.adj[v])

def bfs_distances(g, src):
    """Hop distances from src to every vertex, UNREACHABLE where there is no path."""
    if not 0 <= src < g.n:
        raise ValueError("source vertex %s outside 0..%d" % (src, g.n - 1))
    row = np.full(g.n, UNREACHABLE, dtype=np.int16)
    seen = frontier = 1 << src
    depth = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            row[v] = depth
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        depth += 1
    return row


class DistanceMatrix(object):
    """All-pairs hop distances of a graph, read only."""

    def __init__(self, dist):
        self.dist = np.array(dist, dtype=np.int16)
        self.dist.setflags(write=False)
        self.n = self.dist.shape[0]

    def __getitem__(self, key):
        return self.dist[key]

    def row(self, v):
        return self.dist[v]

    @property
    def connected(self):
        return not np.any(self.dist == UNREACHABLE)


def all_pairs_distances(g):
    return DistanceMatrix(np.vstack([bfs_distances(g, v) for v in range(g.n)]))

def _reach(g, src, within=None):
    #bitmask of the vertices reachable from src without leaving the mask within
    if within is None:
        within = (1 << g.n) - 1
    seen = frontier = 1 << src
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen

def is_connected(g):
    return _reach(g, 0) == (1 << g.n) - 1

def diameter(g, dm=None):
    """Largest hop distance. Raises DisconnectedGraphError on a disconnected graph."""
    if dm is None:
        dm = all_pairs_distances(g)
    if not dm.connected:
        raise DisconnectedGraphError("diameter undefined: graph is disconnected")
    return int(dm.dist.max())

def is_bipartite(g):
    """Return (True, coloring) for a bipartite graph, (False, None) otherwise.

    coloring is a tuple of 0/1 per vertex; each component is colored
    starting from its lowest vertex with color 0.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False, None
    return True, tuple(color)

def odd_cycle(g):
    """Return the vertices of an odd cycle, in cycle order, or None if g is bipartite.

    Built from BFS layers: an edge inside one layer closes an odd cycle
    through the lowest common ancestor of its endpoints in the BFS tree.
    """
    depth = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = [root]
        for v in queue:
            for u in iter_bits(g.adj[v]):
                if depth[u] < 0:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
        for v in queue:
            for u in iter_bits(g.adj[v]):
                if u > v and depth[u] == depth[v]:
                    left, right = [v], [u]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return left + right[-2::-1]
    return None

def relabel(g, order):
    """Return the graph in which vertex order[i] of g becomes vertex i."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of 0..%d" % (g.n - 1))
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for v in range(g.n):
        mask = 0
        for u in iter_bits(g.adj[v]):
            mask |= 1 << pos[u]
        adj[pos[v]] = mask
    return Graph._trusted(g.n, adj)

def delete_vertex(g, v):
    """Remove v; vertices above v shift down by one."""
    if not 0 <= v < g.n:
        raise ValueError("vertex %s outside 0..%d" % (v, g.n - 1))
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    low = (1 << v) - 1
    adj = []
    for u in range(g.n):
        if u == v:
            continue
        a = g.adj[u]
        adj.append((a & low) | (a >> (v + 1) << v))
    return Graph._trusted(g.n - 1, adj)

def is_non_cut(g, v):
    """True when g minus v is connected (g itself assumed connected)."""
    if g.n <= 2:
        return True
    rest = ((1 << g.n) - 1) & ~(1 << v)
    start = 1 if v == 0 else 0
    return _reach(g, start, rest) == rest

def non_cut_vertices(g):
    return [v for v in range(g.n) if is_non_cut(g, v)]

def _refine(g, cells):
    #split the ordered cells by neighbor counts until the partition is equitable
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        split = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                split.append(cell)
                continue
            groups = {}
            for v in cell:
                a = g.adj[v]
                key = tuple(popcount(a & m) for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                split.append(cell)
            else:
                changed = True
                split.extend(groups[key] for key in sorted(groups))
        cells = split
        if not changed:
            return cells

def _twins(g, u, v):
    #swapping twins is an automorphism
    return (g.adj[u] & ~(1 << v)) == (g.adj[v] & ~(1 << u))

def _leaf_code(g, order):
    #adjacency bits of the relabeled graph in graph6 order, first bit most significant
    code = 0
    for j in range(1, len(order)):
        aj = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (aj >> order[i] & 1)
    return code

def canonical_labeling(g):
    """Return the canonical vertex order of g.

    Individualization/refinement search: the degree partition is refined
    to an equitable ordered partition, the first non-singleton cell is
    branched on (one branch per twin class), and among the discrete
    leaves the one with the lexicographically smallest adjacency bit
    string is kept.
    """
    best = [None, None]

    def search(cells):
        cells = _refine(g, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [cell[0] for cell in cells]
            code = _leaf_code(g, order)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best[1]

def canonical_graph(g):
    return relabel(g, canonical_labeling(g))

def canonical_form(g):
    """graph6 bytes of the canonically relabeled graph; equal exactly for isomorphic graphs."""
    from .codec import graph6_encode
    return graph6_encode(canonical_graph(g)).encode("ascii")

def are_isomorphic(g1, g2):
    if g1.n != g2.n or g1.size() != g2.size():
        return False
    if sorted(popcount(a) for a in g1.adj) != sorted(popcount(a) for a in g2.adj):
        return False
    return canonical_form(g1) == canonical_form(g2)
