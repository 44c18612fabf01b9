#!/usr/bin/env python
#
#    balance.py
#    BalStats
#    Distance-balance partitions of edges and classification of graphs as
#    DB, NDB, k-GDB and k-GNDB, with the theorem predicates checked by the
#    verification scans.
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

from .graphs import (DisconnectedGraphError, all_pairs_distances, degree,
                     is_bipartite, is_connected)

DEFAULT_KS = (1, 2, 3)


class PredicateInapplicableError(ValueError):
    """Raised when a theorem predicate is called outside its preconditions."""
    pass


def _check_k(k):
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise ValueError("k must be a positive integer, got %r" % (k,))
    return int(k)

def _check_ks(ks):
    ks = tuple(sorted(set(_check_k(k) for k in ks)))
    if not ks:
        raise ValueError("at least one k is required")
    return ks


class EdgeBalance(object):
    """Distance partition of the vertices with respect to the edge ab.

    w_ab  - number of vertices strictly closer to a than to b (a included)
    w_ba  - number of vertices strictly closer to b than to a (b included)
    eq_count - number of vertices at equal distance from a and b
    d_table - {(i, j): |D^i_j(a,b)|}, the number of vertices at distance i
        from a and j from b, for the pairs that occur
    """

    def __init__(self, a, b, w_ab, w_ba, eq_count, d_table):
        self.a = a
        self.b = b
        self.w_ab = w_ab
        self.w_ba = w_ba
        self.eq_count = eq_count
        self.d_table = d_table

    @property
    def edge(self):
        return (self.a, self.b)

    def as_dict(self):
        return {
            "a": self.a,
            "b": self.b,
            "w_ab": self.w_ab,
            "w_ba": self.w_ba,
            "eq_count": self.eq_count,
            "d_table": [[i, j, c] for (i, j), c in sorted(self.d_table.items())],
        }

    def __repr__(self):
        return "EdgeBalance(%d-%d, w_ab=%d, w_ba=%d, eq=%d)" % (self.a, self.b, self.w_ab, self.w_ba, self.eq_count)


def edge_partition(g, dm, a, b):
    """Partition the vertices of a connected graph g with respect to the edge ab.

    dm is all_pairs_distances(g).
    """
    if not g.has_edge(a, b):
        raise ValueError("%s-%s is not an edge" % (a, b))
    if not dm.connected:
        raise DisconnectedGraphError("edge partition needs a connected graph")
    da = dm.row(a).astype(np.int64)
    db = dm.row(b).astype(np.int64)
    w_ab = int(np.count_nonzero(da < db))
    w_ba = int(np.count_nonzero(db < da))
    eq_count = int(np.count_nonzero(da == db))
    #one code per (i, j) pair, distances are below n
    base = dm.n + 1
    codes, counts = np.unique(da * base + db, return_counts=True)
    d_table = dict(((int(c) // base, int(c) % base), int(m)) for c, m in zip(codes, counts))
    return EdgeBalance(a, b, w_ab, w_ba, eq_count, d_table)

def edge_profile(eb):
    """Layer sizes ([|D^1_2|, |D^2_3|, ...], [|D^2_1|, |D^3_2|, ...]) of an edge,
    trailing empty layers dropped."""
    top = max(max(i, j) for i, j in eb.d_table)
    closer_a = [eb.d_table.get((i, i + 1), 0) for i in range(1, top)]
    closer_b = [eb.d_table.get((i + 1, i), 0) for i in range(1, top)]
    while closer_a and not closer_a[-1]:
        closer_a.pop()
    while closer_b and not closer_b[-1]:
        closer_b.pop()
    return closer_a, closer_b

def check_sum_identity(eb, k):
    """Layer identity sum|D^i_{i+1}| = k sum|D^{i+1}_i| + (k-1), over i >= 1,
    with the larger side in the role of W_ab. For k=3 the constant is 2."""
    k = _check_k(k)
    closer_a, closer_b = edge_profile(eb)
    big, small = sum(closer_a), sum(closer_b)
    if eb.w_ab < eb.w_ba:
        big, small = small, big
    return big == k * small + (k - 1)

def is_consistent_edge(eb, k):
    """|W_ab| = k |W_ba| or conversely."""
    k = _check_k(k)
    return max(eb.w_ab, eb.w_ba) == k * min(eb.w_ab, eb.w_ba)

def _verdict(per_edge, k):
    #(every edge consistent, common small side or None)
    if not per_edge:
        return False, None
    if not all(is_consistent_edge(eb, k) for eb in per_edge):
        return False, None
    smalls = set(min(eb.w_ab, eb.w_ba) for eb in per_edge)
    return True, (smalls.pop() if len(smalls) == 1 else None)


class BalanceClass(object):
    """Classification verdict of one connected graph.

    is_db / ndb_gamma are the k=1 verdicts; kgdb[k] and kgndb[k] are
    given for every requested k, kgndb[k] being None when the graph is
    not k-GNDB. A graph without edges is none of these.
    """

    def __init__(self, graph, ks, per_edge, diameter, bipartite):
        self.graph = graph
        self.ks = ks
        self.per_edge = per_edge
        self.diameter = diameter
        self.bipartite = bipartite
        self.is_db, self.ndb_gamma = _verdict(per_edge, 1)
        self.kgdb = {}
        self.kgndb = {}
        for k in ks:
            self.kgdb[k], self.kgndb[k] = _verdict(per_edge, k)
        self._graph6 = None

    @property
    def graph6(self):
        if self._graph6 is None:
            from .codec import graph6_encode
            self._graph6 = graph6_encode(self.graph)
        return self._graph6

    def summary(self, k):
        return {
            "n": self.graph.n,
            "k": k,
            "gamma": self.kgndb[k],
            "diameter": self.diameter,
            "bipartite": self.bipartite,
        }

    def __repr__(self):
        verdicts = ", ".join("%d:%s" % (k, self.kgndb[k] if self.kgndb[k] is not None else self.kgdb[k]) for k in self.ks)
        return "BalanceClass(%s, db=%s, ndb_gamma=%s, {%s})" % (self.graph6, self.is_db, self.ndb_gamma, verdicts)


def classify(g, ks=DEFAULT_KS, dm=None):
    """Classify the connected graph g for every k in ks."""
    ks = _check_ks(ks)
    if dm is None:
        dm = all_pairs_distances(g)
    if not dm.connected:
        raise DisconnectedGraphError("classification needs a connected graph")
    per_edge = [edge_partition(g, dm, a, b) for a, b in g.edges()]
    return BalanceClass(g, ks, per_edge, int(dm.dist.max()), is_bipartite(g)[0])

def _classification(g, k, bc):
    if bc is None or k not in bc.kgdb:
        if not is_connected(g):
            raise PredicateInapplicableError("predicate inapplicable: graph is disconnected")
        bc = classify(g, (k,))
    return bc

def inconsistent_edges(bc, k):
    return [eb.edge for eb in bc.per_edge if not is_consistent_edge(eb, k)]

def degree_ratio_failures(g, k, bc=None):
    """Edges of a diameter 2 k-GNDB graph where the degrees are not in
    ratio k with the larger degree on the larger W side."""
    k = _check_k(k)
    bc = _classification(g, k, bc)
    if bc.diameter != 2 or bc.kgndb[k] is None:
        raise PredicateInapplicableError("predicate inapplicable: degree ratio needs a diameter 2 %d-GNDB graph" % k)
    failures = []
    for eb in bc.per_edge:
        da, db = degree(g, eb.a), degree(g, eb.b)
        if max(da, db) != k * min(da, db) or (da > db) != (eb.w_ab > eb.w_ba):
            failures.append(eb.edge)
    return failures

def degree_ratio_holds(g, k, bc=None):
    return not degree_ratio_failures(g, k, bc)

def diameter_bound_holds(d, k, gamma):
    """d <= k gamma."""
    k = _check_k(k)
    if gamma is None or gamma < 1:
        raise ValueError("gamma must be a positive integer, got %r" % (gamma,))
    return d <= k * gamma

def order_equals_expected(g, k, gamma, bc=None):
    """A bipartite k-GNDB graph has no equidistant vertices, so n = (k+1) gamma."""
    k = _check_k(k)
    bc = _classification(g, k, bc)
    if not bc.bipartite or bc.kgndb[k] != gamma:
        raise PredicateInapplicableError("predicate inapplicable: need a bipartite %d-GNDB graph with gamma %s" % (k, gamma))
    return g.n == (k + 1) * gamma

def complete_bipartite_parts(g):
    """(p, q) with p <= q when g is the complete bipartite graph K_{p,q}, else None."""
    ok, colors = is_bipartite(g)
    if not ok or g.n < 2:
        return None
    p = colors.count(0)
    q = g.n - p
    if p == 0 or g.size() != p * q:
        return None
    return (min(p, q), max(p, q))

def shape_holds(g, k, gamma):
    """g is K_{gamma, k gamma}."""
    k = _check_k(k)
    return complete_bipartite_parts(g) == (gamma, k * gamma)
