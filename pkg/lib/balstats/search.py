#!/usr/bin/env python
#
#    search.py
#    BalStats
#    Corpus scans: classification of every connected graph up to a given
#    order, the theorem predicate suite, and certificate replay.
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

import logging
import multiprocessing
import sys
import time
from collections import OrderedDict
from functools import partial

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path
from tqdm import tqdm

from .balance import (DEFAULT_KS, _check_ks, check_sum_identity, classify,
                      complete_bipartite_parts, degree_ratio_failures,
                      diameter_bound_holds, is_consistent_edge, order_equals_expected,
                      shape_holds)
from .codec import graph6_decode, graph6_encode, read_graph6
from .enumeration import _check_order, connected_graphs
from .families import complete_bipartite
from .graphs import (UNREACHABLE, all_pairs_distances, canonical_graph,
                     is_bipartite, is_connected, iter_bits, odd_cycle)
from resources import resources

#k values whose GNDB graphs are reported by verify_theorems
VERIFY_KS = (2, 3)


class ScanReport(object):
    """Result of a corpus scan.

    corpus_size, pruned and elapsed are keyed by vertex count. matches
    holds (canonical graph6, summary) pairs, violations holds certificate
    dicts and notes holds the k=1 carve-out entries. Partial reports from
    shards combine with merge() in any order; finalize() puts the lists
    in canonical order.
    """

    def __init__(self, kind, n_range, ks, gamma=None, paranoid=False, corpus=None, fault=None):
        self.kind = kind
        self.n_range = tuple(n_range)
        self.ks = tuple(ks)
        self.gamma = gamma
        self.paranoid = paranoid
        self.corpus = corpus
        self.fault = fault
        self.corpus_size = {}
        self.pruned = {}
        self.matches = []
        self.violations = []
        self.notes = []
        self.elapsed = {}

    def _partial(self):
        return ScanReport(self.kind, self.n_range, self.ks, self.gamma, self.paranoid, self.corpus, self.fault)

    def merge(self, other):
        for n, count in other.corpus_size.items():
            self.corpus_size[n] = self.corpus_size.get(n, 0) + count
        for n, count in other.pruned.items():
            self.pruned[n] = self.pruned.get(n, 0) + count
        for n, seconds in other.elapsed.items():
            self.elapsed[n] = self.elapsed.get(n, 0.0) + seconds
        self.matches.extend(other.matches)
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        return self

    def finalize(self):
        matches = dict(((g6, s["k"]), s) for g6, s in self.matches)
        self.matches = [(g6, matches[(g6, k)]) for g6, k in
                        sorted(matches, key=lambda key: (matches[key]["n"], key[1], key[0]))]
        self.violations.sort(key=lambda v: (v["graph6"] or "", v["predicate"], v["k"] or 0))
        self.notes.sort(key=lambda note: (len(note["graph6"]), note["graph6"]))
        return self

    def match_set(self, k=None, gamma=None):
        """graph6 strings of the matches for k (any k when None), optionally with the given gamma."""
        return set(g6 for g6, s in self.matches
                   if (k is None or s["k"] == k) and (gamma is None or s["gamma"] == gamma))

    @property
    def ok(self):
        return not self.violations


#Per-graph predicates. Each takes (g, bc, k, gamma_filter) and returns None
#when it does not apply, False when it holds, or a non-empty witness list
#when it is violated.

def _partition_complete(g, bc, k, gamma_filter):
    for eb in bc.per_edge:
        if eb.w_ab + eb.w_ba + eb.eq_count != g.n:
            return [eb.a, eb.b]
    return False

def _bipartite_no_equidistant(g, bc, k, gamma_filter):
    if not bc.bipartite:
        return None
    for eb in bc.per_edge:
        if eb.eq_count:
            return [eb.a, eb.b]
    return False

def _sum_identity(g, bc, k, gamma_filter):
    for eb in bc.per_edge:
        if check_sum_identity(eb, k) != is_consistent_edge(eb, k):
            return [eb.a, eb.b]
    return False

def _bipartite(g, bc, k, gamma_filter):
    if k < 2 or bc.kgndb[k] is None:
        return None
    if bc.bipartite:
        return False
    return odd_cycle(g)

def _order(g, bc, k, gamma_filter):
    gamma = bc.kgndb[k]
    if gamma is None or not bc.bipartite:
        return None
    if order_equals_expected(g, k, gamma, bc):
        return False
    return [g.n, (k + 1) * gamma]

def _diameter_bound(g, bc, k, gamma_filter):
    gamma = bc.kgndb[k]
    if gamma is None:
        return None
    if diameter_bound_holds(bc.diameter, k, gamma):
        return False
    return [bc.diameter, k * gamma]

def _degree_ratio(g, bc, k, gamma_filter):
    if k < 2 or bc.diameter != 2 or bc.kgndb[k] is None:
        return None
    failures = degree_ratio_failures(g, k, bc)
    return list(failures[0]) if failures else False

def _complete_bipartite_shape(g, bc, k, gamma_filter):
    gamma = bc.kgndb[k]
    if k < 2 or bc.diameter != 2 or gamma is None:
        return None
    if shape_holds(g, k, gamma):
        return False
    parts = complete_bipartite_parts(g)
    return list(parts) if parts else [g.n, g.size()]

def _scipy_distances(g):
    rows, cols = [], []
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            rows.append(v)
            cols.append(u)
    adjacency = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))
    dist = shortest_path(adjacency, directed=False, unweighted=True)
    dist[np.isinf(dist)] = UNREACHABLE
    return dist.astype(np.int64)

def _distance_oracle(g, bc, k, gamma_filter):
    diff = np.argwhere(all_pairs_distances(g).dist != _scipy_distances(g))
    return [int(i) for i in diff[0]] if len(diff) else False

def _prunable(bipartite, n, k, gamma):
    #necessary conditions for a k-GNDB graph (with the given gamma)
    if not bipartite:
        return k >= 2
    if n % (k + 1):
        return True
    return gamma is not None and n != (k + 1) * gamma

def _prefilter(g, bc, k, gamma_filter):
    if not _prunable(bc.bipartite, g.n, k, gamma_filter):
        return None
    gamma = bc.kgndb[k]
    if gamma is not None and (gamma_filter is None or gamma == gamma_filter):
        return [k, gamma]
    return False

#name: (predicate, evaluated once per k, paranoid mode only)
PREDICATES = OrderedDict([
    ("partition_complete", (_partition_complete, False, False)),
    ("bipartite_no_equidistant", (_bipartite_no_equidistant, False, False)),
    ("sum_identity", (_sum_identity, True, False)),
    ("bipartite", (_bipartite, True, False)),
    ("order", (_order, True, False)),
    ("diameter_bound", (_diameter_bound, True, False)),
    ("degree_ratio", (_degree_ratio, True, False)),
    ("complete_bipartite_shape", (_complete_bipartite_shape, True, False)),
    ("distance_oracle", (_distance_oracle, False, True)),
    ("prefilter", (_prefilter, True, True)),
])

#checked once per report rather than per graph
CORPUS_PREDICATES = ("class_count", "gamma_classification")


def _certificate(g6, name, k, gamma_filter, witness, inverted):
    return {"graph6": g6, "predicate": name, "k": k, "gamma_filter": gamma_filter,
            "witness": witness, "inverted": inverted}

def _outcome(name, fn, g, bc, k, gamma_filter, fault):
    #(violated, witness) after applying the fault inversion
    result = fn(g, bc, k, gamma_filter)
    if result is None:
        return False, None
    if name == fault:
        return result is False, ["holds"] if result is False else None
    return result is not False, result

def check_graph(g, ks, bc=None, fault=None, gamma_filter=None, paranoid=False):
    """Run the predicate suite on one connected graph and return its violation certificates."""
    if bc is None:
        bc = classify(g, ks)
    violations = []
    for name, (fn, per_k, paranoid_only) in PREDICATES.items():
        if paranoid_only and not paranoid:
            continue
        for k in (bc.ks if per_k else (None,)):
            violated, witness = _outcome(name, fn, g, bc, k, gamma_filter, fault)
            if violated:
                violations.append(_certificate(bc.graph6, name, k, gamma_filter, witness, name == fault))
    return violations

def _examine(g, report, verify):
    n = g.n
    report.corpus_size[n] = report.corpus_size.get(n, 0) + 1
    bipartite = is_bipartite(g)[0]
    if not report.paranoid and all(_prunable(bipartite, n, k, report.gamma) for k in report.ks):
        report.pruned[n] = report.pruned.get(n, 0) + 1
        return
    bc = classify(g, report.ks)
    report.violations.extend(check_graph(g, report.ks, bc, report.fault, report.gamma, report.paranoid))
    for k in report.ks:
        gamma = bc.kgndb[k]
        if verify and k not in VERIFY_KS:
            continue
        if gamma is not None and (report.gamma is None or gamma == report.gamma):
            report.matches.append((bc.graph6, bc.summary(k)))
    if verify and bc.ndb_gamma is not None and not bc.bipartite:
        report.notes.append({"graph6": bc.graph6,
                             "note": "k=1: NDB with gamma=%d and not bipartite" % bc.ndb_gamma})

def _scan_task(task, template, verify):
    #one shard of one level, or one chunk of corpus records
    n, shard, shards, records = task
    report = template._partial()
    if records is None:
        graphs = connected_graphs(n, shard, shards)
    else:
        graphs = (graph6_decode(r) for r in records)
    for g in graphs:
        _examine(g, report, verify)
    return report

def _load_corpus(corpus, n_max, my_logger):
    """Canonical graph6 records of a graph6 file, grouped by vertex count."""
    with open(corpus, "r") as f:
        records = read_graph6(f)
    levels = {}
    seen = set()
    skipped = duplicates = 0
    for lineno, record in enumerate(records, 1):
        g = graph6_decode(record)
        if g.n > n_max:
            skipped += 1
            continue
        if not is_connected(g):
            raise ValueError("corpus graph %s (record %d) is disconnected" % (record, lineno))
        form = graph6_encode(canonical_graph(g))
        if form in seen:
            duplicates += 1
            continue
        seen.add(form)
        levels.setdefault(g.n, []).append(form)
    my_logger.info('Corpus records: %d', len(records))
    my_logger.info('Corpus records above n_max: %d', skipped)
    my_logger.info('Corpus duplicate classes: %d', duplicates)
    return levels

def _tasks(n, levels, shards):
    if levels is None:
        return [(n, shard, shards, None) for shard in range(shards)]
    records = levels.get(n, [])
    return [(n, 0, 1, records[i::shards]) for i in range(shards) if records[i::shards]]

def _run(report, levels, jobs, quiet, verify, my_logger):
    n_min, n_max = report.n_range
    mapfunc = partial(_scan_task, template=report._partial(), verify=verify)
    #more shards than workers keeps the pool busy on uneven levels
    shards = 1 if jobs == 1 else 4 * jobs
    pool = multiprocessing.Pool(jobs) if jobs > 1 else None
    try:
        for n in range(n_min, n_max + 1):
            start = time.time()
            tasks = _tasks(n, levels, shards if n > 2 else 1)
            results = pool.imap_unordered(mapfunc, tasks) if pool else (mapfunc(t) for t in tasks)
            report.corpus_size.setdefault(n, 0)
            for part in tqdm(results, total=len(tasks), desc="n=%d" % n, disable=quiet, file=sys.stderr):
                report.merge(part)
            report.elapsed[n] = time.time() - start
            my_logger.info('n = %d: %d graphs, %d pruned, %.2f s', n, report.corpus_size[n],
                           report.pruned.get(n, 0), report.elapsed[n])
    except KeyboardInterrupt:
        if pool:
            pool.terminate()
        sys.exit(1)
    except Exception:
        if pool:
            pool.terminate()
        raise
    finally:
        if pool:
            pool.close()
            pool.join()
    return report.finalize()

def _check_jobs(jobs):
    if isinstance(jobs, bool) or int(jobs) != jobs or jobs < 1:
        raise ValueError("jobs must be a positive integer, got %r" % (jobs,))
    return int(jobs)

def scan(n_max, ks=DEFAULT_KS, gamma=None, corpus=None, jobs=1, paranoid=False, quiet=True,
         my_logger=logging.getLogger()):
    """Classify every connected graph with at most n_max vertices.

    The corpus is generated, or read from the graph6 file corpus (graphs
    above n_max are ignored, duplicates collapse to one class). Matches
    are the k-GNDB graphs for each k in ks, restricted to the given gamma
    when set. Graphs failing the necessary conditions for every k are
    pruned unless paranoid is set, in which case the prefilter and the
    distance oracle are checked instead.
    """
    n_max = _check_order(n_max)
    ks = _check_ks(ks)
    jobs = _check_jobs(jobs)
    if gamma is not None and (isinstance(gamma, bool) or int(gamma) != gamma or gamma < 1):
        raise ValueError("gamma must be a positive integer, got %r" % (gamma,))

    my_logger.info('Scan n_max: %d', n_max)
    my_logger.info('k values: %s', " ".join(str(k) for k in ks))
    my_logger.info('Gamma filter: %s', gamma)
    my_logger.info('Corpus: %s', corpus if corpus else "generated")
    my_logger.info('Paranoid: %s', paranoid)
    my_logger.info('Jobs: %d', jobs)

    levels = _load_corpus(corpus, n_max, my_logger) if corpus else None
    report = ScanReport("scan", (1, n_max), ks, gamma, paranoid, corpus)
    _run(report, levels, jobs, quiet, False, my_logger)

    my_logger.info('Matches: %d', len(report.matches))
    my_logger.info('Violations: %d', len(report.violations))
    return report

def _expected_classes(n_max):
    #gamma: canonical graph6 set of the 3-GNDB graphs with that gamma up to n_max
    expected = {}
    for gamma in (1, 2):
        g = complete_bipartite(gamma, 3 * gamma)
        expected[gamma] = set([graph6_encode(canonical_graph(g))]) if n_max >= g.n else set()
    return expected

def _corpus_checks(report, fault):
    n_max = report.n_range[1]
    checks = []
    for n in sorted(report.corpus_size):
        expected = resources.connected_counts[n]
        checks.append(("class_count", None, [n, report.corpus_size[n], expected],
                       report.corpus_size[n] == expected))
    for gamma, expected in sorted(_expected_classes(n_max).items()):
        found = report.match_set(3, gamma)
        checks.append(("gamma_classification", 3,
                       {"gamma": gamma, "found": sorted(found), "expected": sorted(expected)},
                       found == expected))
    for name, k, witness, holds in checks:
        inverted = name == fault
        if holds == inverted:
            report.violations.append(_certificate(None, name, k, None, witness, inverted))

def verify_theorems(n_max, jobs=1, fault=None, quiet=True, my_logger=logging.getLogger()):
    """Run the whole predicate suite over every connected graph up to n_max.

    Always paranoid and always for k = 1, 2, 3. Matches are the 2-GNDB and
    3-GNDB graphs; NDB graphs that are not bipartite go to the notes.
    fault names a predicate whose outcome is inverted, to check that
    violations are reported.
    """
    n_max = _check_order(n_max)
    jobs = _check_jobs(jobs)
    if fault is not None and fault not in PREDICATES and fault not in CORPUS_PREDICATES:
        raise ValueError("unknown predicate %r" % (fault,))

    my_logger.info('Verify n_max: %d', n_max)
    my_logger.info('Jobs: %d', jobs)
    if fault:
        my_logger.info('Inverted predicate: %s', fault)

    report = ScanReport("verify", (1, n_max), DEFAULT_KS, paranoid=True, fault=fault)
    _run(report, None, jobs, quiet, True, my_logger)
    _corpus_checks(report, fault)
    report.finalize()

    my_logger.info('Matches: %d', len(report.matches))
    my_logger.info('Notes: %d', len(report.notes))
    my_logger.info('Violations: %d', len(report.violations))
    return report

def replay_certificate(cert):
    """Re-run the predicate named by a violation certificate; True when the violation reproduces."""
    name = cert["predicate"]
    inverted = cert.get("inverted", False)
    if name in CORPUS_PREDICATES:
        witness = cert["witness"]
        if name == "class_count":
            n, found, expected = witness
            holds = found == expected and resources.connected_counts.get(n) == expected
        else:
            holds = witness["found"] == witness["expected"]
        return holds == inverted
    if name not in PREDICATES:
        raise ValueError("unknown predicate %r" % (name,))
    g = graph6_decode(cert["graph6"])
    k = cert.get("k")
    bc = classify(g, (k,) if k else DEFAULT_KS)
    fn = PREDICATES[name][0]
    violated, witness = _outcome(name, fn, g, bc, k, cert.get("gamma_filter"), name if inverted else None)
    return violated
