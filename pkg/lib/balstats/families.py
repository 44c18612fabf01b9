#!/usr/bin/env python
#
#    families.py
#    BalStats
#    Named graph families.
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

from .graphs import Graph, MAXN


def _check_order(name, n, low):
    if isinstance(n, bool) or int(n) != n or not low <= n <= MAXN:
        raise ValueError("%s: vertex count %r outside %d..%d" % (name, n, low, MAXN))
    return int(n)

def complete(n):
    n = _check_order("complete", n, 1)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])

def complete_bipartite(m, n):
    """K_{m,n} with parts {0..m-1} and {m..m+n-1}."""
    m = _check_order("complete_bipartite", m, 1)
    n = _check_order("complete_bipartite", n, 1)
    if m + n > MAXN:
        raise ValueError("complete_bipartite: %d + %d vertices is more than %d" % (m, n, MAXN))
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    return Graph(m + n, [right] * m + [left] * n)

def cycle(n):
    n = _check_order("cycle", n, 3)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

def path(n):
    n = _check_order("path", n, 1)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])

def star(n):
    """Center 0 with n leaves."""
    return complete_bipartite(1, n)

#name: (constructor, number of parameters)
FAMILIES = {
    "complete": (complete, 1),
    "bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
}

def from_spec(spec):
    """Build a graph from 'name:N' or 'bipartite:M,N'."""
    name, sep, params = spec.strip().partition(":")
    if name not in FAMILIES:
        raise ValueError("unknown family %r, expected one of %s" % (name, ", ".join(sorted(FAMILIES))))
    build, nparams = FAMILIES[name]
    try:
        args = [int(p) for p in params.split(",")] if sep else []
    except ValueError:
        raise ValueError("family %r: parameters must be integers, got %r" % (name, params))
    if len(args) != nparams:
        raise ValueError("family %r takes %d parameter%s" % (name, nparams, "s" if nparams > 1 else ""))
    return build(*args)
