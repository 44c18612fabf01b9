#!/usr/bin/env python
#
#    codec.py
#    BalStats
#    graph6 and adjacency-list formats, and report documents.
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

import json

from .graphs import Graph, MAXN, iter_bits

GRAPH6_HEADER = ">>graph6<<"

#bumped whenever a report field changes meaning
SCHEMA_VERSION = 1


class Graph6Error(ValueError):
    pass

class Graph6LengthError(Graph6Error):
    pass

class Graph6CharacterError(Graph6Error):
    pass

class Graph6PaddingError(Graph6Error):
    pass

class Graph6TrailingDataError(Graph6Error):
    pass

class AdjlistError(ValueError):
    pass


def graph6_encode(g):
    """Encode g as graph6 text, without header or newline."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))
    chars = []
    value = count = 0
    #upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            value = value << 1 | (aj >> i & 1)
            count += 1
            if count == 6:
                chars.append(chr(value + 63))
                value = count = 0
    if count:
        chars.append(chr((value << (6 - count)) + 63))
    return head + "".join(chars)

def graph6_decode(s):
    """Decode one graph6 string (str or bytes). An optional >>graph6<< header
    and surrounding whitespace are tolerated."""
    if isinstance(s, bytes):
        s = s.decode("latin-1")
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    codes = [ord(c) for c in s]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise Graph6CharacterError("character %r at position %d outside the graph6 range 63..126" % (s[pos], pos))
    if codes[0] == 126:
        if len(codes) > 1 and codes[1] == 126:
            raise Graph6LengthError("8-byte size field: more than %d vertices" % MAXN)
        if len(codes) < 4:
            raise Graph6LengthError("truncated size field")
        n = (codes[1] - 63) << 12 | (codes[2] - 63) << 6 | (codes[3] - 63)
        data = codes[4:]
    else:
        n = codes[0] - 63
        data = codes[1:]
    if not 1 <= n <= MAXN:
        raise Graph6LengthError("vertex count %d outside 1..%d" % (n, MAXN))
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < nbytes:
        raise Graph6LengthError("expected %d data bytes for n=%d, got %d" % (nbytes, n, len(data)))
    if len(data) > nbytes:
        raise Graph6TrailingDataError("%d bytes after the edge data" % (len(data) - nbytes))
    pad = nbytes * 6 - nbits
    if pad and (data[-1] - 63) & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)

def read_graph6(lines):
    """Return the graph6 records of an iterable of lines, blank lines skipped.

    Each record is decoded once so a malformed line fails here, with its line number.
    """
    records = []
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode("latin-1")
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        try:
            graph6_decode(line)
        except Graph6Error as e:
            raise type(e)("line %d: %s" % (lineno, e))
        records.append(line)
    return records

def adjlist_parse(text, n=None):
    """Parse 'v: u1 u2 ...' lines. Blank lines and # comments are ignored,
    edges are closed symmetrically and repeated mentions collapse.
    Without n the vertex count is one more than the largest id mentioned."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise AdjlistError("line %d: expected 'v: u1 u2 ...'" % lineno)
        try:
            v = int(head)
            nbrs = [int(t) for t in tail.split()]
        except ValueError:
            raise AdjlistError("line %d: non-integer vertex id" % lineno)
        entries.append((lineno, v, nbrs))
    if n is None:
        if not entries:
            raise AdjlistError("no vertices")
        n = 1 + max(max([v] + nbrs) for lineno, v, nbrs in entries)
    if not 1 <= n <= MAXN:
        raise AdjlistError("vertex count %d outside 1..%d" % (n, MAXN))
    adj = [0] * n
    for lineno, v, nbrs in entries:
        for u in [v] + nbrs:
            if not 0 <= u < n:
                raise AdjlistError("line %d: vertex id %d outside 0..%d" % (lineno, u, n - 1))
        for u in nbrs:
            if u == v:
                raise AdjlistError("line %d: self-loop at vertex %d" % (lineno, v))
            adj[v] |= 1 << u
            adj[u] |= 1 << v
    return Graph(n, adj)

def adjlist_emit(g):
    lines = []
    for v in range(g.n):
        lines.append(("%d: %s" % (v, " ".join(str(u) for u in iter_bits(g.adj[v])))).rstrip())
    return "\n".join(lines) + "\n"


def _classification_document(bc, edges=False):
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": "classification",
        "inputs": {"graph6": bc.graph6, "n": bc.graph.n, "ks": list(bc.ks)},
        "connected": True,
        "diameter": bc.diameter,
        "bipartite": bc.bipartite,
        "verdicts": [{"k": k, "gdb": bc.kgdb[k], "gamma": bc.kgndb[k]} for k in bc.ks],
        "db": bc.is_db,
        "ndb_gamma": bc.ndb_gamma,
    }
    if edges:
        doc["edges"] = [eb.as_dict() for eb in bc.per_edge]
    return doc

def _scan_document(r, timing=False):
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": r.kind,
        "inputs": {
            "n_range": list(r.n_range),
            "ks": list(r.ks),
            "gamma": r.gamma,
            "paranoid": r.paranoid,
            "corpus": r.corpus,
            "fault": r.fault,
        },
        "corpus_size": [{"n": n, "count": r.corpus_size[n], "pruned": r.pruned.get(n, 0)}
                        for n in sorted(r.corpus_size)],
        "matches": [dict([("graph6", g6)] + sorted(summary.items())) for g6, summary in r.matches],
        "violations": [dict(v) for v in r.violations],
        "notes": [dict(note) for note in r.notes],
    }
    if timing:
        doc["elapsed"] = [{"n": n, "seconds": round(r.elapsed[n], 3)} for n in sorted(r.elapsed)]
    return doc

def _edge_line(eb):
    table = " ".join("(%d,%d)=%d" % (i, j, c) for (i, j), c in sorted(eb.d_table.items()))
    return "   %d-%d: |W_ab|=%d |W_ba|=%d eq=%d  D: %s" % (eb.a, eb.b, eb.w_ab, eb.w_ba, eb.eq_count, table)

def _classification_summary(bc, edges=False):
    from .balance import inconsistent_edges
    g = bc.graph
    lines = [" Graph: %s (n=%d, m=%d)" % (bc.graph6, g.n, g.size()),
             " Diameter: %d   Bipartite: %s" % (bc.diameter, bc.bipartite)]
    if bc.is_db:
        if bc.ndb_gamma is not None:
            lines.append(" DB: True   NDB: gamma=%d" % bc.ndb_gamma)
        else:
            lines.append(" DB: True   NDB: False")
    else:
        lines.append(" DB: False")
    for k in bc.ks:
        if bc.kgndb[k] is not None:
            lines.append(" k=%d: %d-GDB True   %d-GNDB gamma=%d" % (k, k, k, bc.kgndb[k]))
        elif bc.kgdb[k]:
            lines.append(" k=%d: %d-GDB True   %d-GNDB False" % (k, k, k))
        else:
            bad = inconsistent_edges(bc, k)
            witness = " (edge %d-%d not consistent)" % bad[0] if bad else ""
            lines.append(" k=%d: %d-GDB False%s" % (k, k, witness))
    if edges:
        lines.append(" Edges:")
        lines.extend(_edge_line(eb) for eb in bc.per_edge)
    return "\n".join(lines) + "\n"

def _scan_summary(r, timing=True):
    lines = [" %s: n = %d..%d, k = %s%s" % (r.kind.capitalize(), r.n_range[0], r.n_range[1],
                                            " ".join(str(k) for k in r.ks),
                                            "" if r.gamma is None else ", gamma = %d" % r.gamma)]
    header = "   n    classes    pruned"
    if timing:
        header += "    elapsed"
    lines.append(header)
    for n in sorted(r.corpus_size):
        row = "  %2d %10d %9d" % (n, r.corpus_size[n], r.pruned.get(n, 0))
        if timing:
            row += " %9.2fs" % r.elapsed.get(n, 0.0)
        lines.append(row)
    lines.append(" Matches: %d" % len(r.matches))
    for g6, summary in r.matches:
        gamma = "-" if summary["gamma"] is None else "%d" % summary["gamma"]
        lines.append("   %-12s n=%d  k=%d  gamma=%s  d=%d  %s" % (
            g6, summary["n"], summary["k"], gamma, summary["diameter"],
            "bipartite" if summary["bipartite"] else "not bipartite"))
    lines.append(" Violations: %d" % len(r.violations))
    for v in r.violations:
        lines.append("   %s  %s  k=%s  witness=%s" % (v["predicate"], v["graph6"] or "-",
                                                     "-" if v["k"] is None else v["k"], v["witness"]))
    if r.notes:
        lines.append(" Notes: %d" % len(r.notes))
        for note in r.notes:
            lines.append("   %s  %s" % (note["graph6"], note["note"]))
    return "\n".join(lines) + "\n"

def report_serialize(r, mode="json", edges=False, timing=False):
    """Serialize a BalanceClass or ScanReport.

    mode "json" gives the machine document (stable field order, wall
    times only when timing is set); mode "summary" gives the human text.
    """
    from .balance import BalanceClass
    is_class = isinstance(r, BalanceClass)
    if mode == "json":
        doc = _classification_document(r, edges) if is_class else _scan_document(r, timing)
        return json.dumps(doc, indent=2) + "\n"
    elif mode == "summary":
        return _classification_summary(r, edges) if is_class else _scan_summary(r, timing)
    else:
        raise ValueError("unknown report mode %r" % mode)
