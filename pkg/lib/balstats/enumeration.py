#!/usr/bin/env python
#
#    enumeration.py
#    BalStats
#    Exhaustive generation of the connected graphs on n vertices, one per
#    isomorphism class, by canonical augmentation.
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

from functools import lru_cache

from .codec import graph6_encode
from .graphs import (Graph, canonical_graph, canonical_labeling, delete_vertex,
                     is_non_cut, iter_bits, popcount, relabel)

MAX_ORDER = 9


def _check_order(n):
    if isinstance(n, bool) or int(n) != n or not 1 <= n <= MAX_ORDER:
        raise ValueError("vertex count %r outside 1..%d" % (n, MAX_ORDER))
    return int(n)

def _check_shard(shard, shards):
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError("shard %r is not in 0..%r" % (shard, shards - 1))

def _attach(parent, mask):
    #parent plus a new last vertex joined to the vertices in mask
    x = parent.n
    adj = [a | (1 << x) if mask >> v & 1 else a for v, a in enumerate(parent.adj)]
    adj.append(mask)
    return Graph._trusted(x + 1, adj)

def _deletion_key(g, degs, v):
    #invariant ranking of the vertices that may be removed to find the parent
    return (degs[v], tuple(sorted(degs[u] for u in iter_bits(g.adj[v]))))

def _augmentations(parent):
    """Canonical graphs whose canonical parent is parent, in a fixed order.

    A connected graph g on n >= 2 vertices has the parent g - s, where s is
    the non-cut vertex of smallest deletion key, ties going to the vertex
    placed last by the canonical labeling. Every child is reached from
    the subset of parent vertices adjacent to the new vertex, and is kept
    only when deleting s gives back the parent.
    """
    m = parent.n
    x = m
    parent_form = graph6_encode(parent)
    decided = {}
    children = []
    for mask in range(1, 1 << m):
        g = _attach(parent, mask)
        degs = [popcount(a) for a in g.adj]
        keys = [_deletion_key(g, degs, v) for v in range(m + 1)]
        #some non-cut vertex ranks before the new one: g is reached from another subset
        if any(keys[v] < keys[x] and is_non_cut(g, v) for v in range(m)):
            continue
        order = canonical_labeling(g)
        canon = relabel(g, order)
        form = graph6_encode(canon)
        if form in decided:
            continue
        pos = [0] * (m + 1)
        for i, v in enumerate(order):
            pos[v] = i
        ties = [v for v in range(m + 1) if keys[v] == keys[x] and (v == x or is_non_cut(g, v))]
        s = max(ties, key=lambda v: pos[v])
        if s == x:
            keep = True
        else:
            keep = graph6_encode(canonical_graph(delete_vertex(g, s))) == parent_form
        decided[form] = keep
        if keep:
            children.append(canon)
    return children

@lru_cache(maxsize=None)
def _level(n):
    if n == 1:
        return (Graph(1),)
    children = []
    for parent in _level(n - 1):
        children.extend(_augmentations(parent))
    return tuple(children)

def connected_graphs(n, shard=0, shards=1):
    """Yield one canonical graph per isomorphism class of connected graphs on n vertices.

    Shards split the work by parent: shard i of s takes the parents whose
    position in the level below is i modulo s. Shards are disjoint and
    together give the whole level; the order is deterministic.
    """
    n = _check_order(n)
    _check_shard(shard, shards)
    if n == 1:
        if shard == 0:
            yield Graph(1)
        return
    for i, parent in enumerate(_level(n - 1)):
        if i % shards == shard:
            for g in _augmentations(parent):
                yield g

def count_classes(n_max):
    """{n: number of connected classes on n vertices} for n = 1..n_max."""
    n_max = _check_order(n_max)
    return dict((n, len(_level(n))) for n in range(1, n_max + 1))
