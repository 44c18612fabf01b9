import json

import networkx as nx
import pytest
from hypothesis import given

from balstats.balance import classify
from balstats.codec import (AdjlistError, Graph6CharacterError, Graph6Error,
                            Graph6LengthError, Graph6PaddingError,
                            Graph6TrailingDataError, adjlist_emit, adjlist_parse,
                            graph6_decode, graph6_encode, read_graph6,
                            report_serialize)
from balstats.enumeration import connected_graphs
from balstats.families import complete, complete_bipartite, cycle, path
from balstats.graphs import Graph
from balstats.search import ScanReport

from conftest import random_graphs, to_networkx


def test_golden_vectors():
    assert graph6_encode(complete(3)) == "Bw"
    assert graph6_encode(complete(4)) == "C~"
    assert graph6_decode("Bw") == complete(3)
    assert graph6_decode(b"C~") == complete(4)
    assert graph6_decode(">>graph6<<Bw\n") == complete(3)

def test_long_form():
    g = path(63)
    text = graph6_encode(g)
    assert text.startswith("~??~")
    assert graph6_decode(text) == g
    assert nx.to_graph6_bytes(to_networkx(g), header=False).strip() == text.encode("ascii")

@pytest.mark.parametrize("text, error", [
    ("", Graph6LengthError),
    ("   \n", Graph6LengthError),
    ("?", Graph6LengthError),
    ("A", Graph6LengthError),
    ("C", Graph6LengthError),
    ("~?", Graph6LengthError),
    ("~~??????", Graph6LengthError),
    ("~?@A", Graph6LengthError),
    ("B\x7f", Graph6CharacterError),
    ("B w", Graph6CharacterError),
    ("Bw?", Graph6TrailingDataError),
    ("Bx", Graph6PaddingError),
])
def test_decode_errors(text, error):
    with pytest.raises(error):
        graph6_decode(text)
    assert issubclass(error, Graph6Error) and issubclass(error, ValueError)

@given(random_graphs(max_n=12, connected=False))
def test_graph6_matches_networkx(g):
    text = graph6_encode(g)
    assert nx.to_graph6_bytes(to_networkx(g), header=False).strip() == text.encode("ascii")
    assert graph6_decode(text) == g
    assert nx.utils.graphs_equal(nx.from_graph6_bytes(text.encode("ascii")), to_networkx(g))

def test_corpus_round_trip():
    for n in range(1, 8):
        for g in connected_graphs(n):
            assert graph6_decode(graph6_encode(g)) == g

def test_read_graph6():
    assert read_graph6(["Bw\n", "\n", ">>graph6<<C~\n"]) == ["Bw", "C~"]
    with pytest.raises(Graph6PaddingError, match="line 2"):
        read_graph6(["Bw", "Bx"])

def test_adjlist_parse():
    g = adjlist_parse("# a path\n0: 1\n1: 2\n\n3:\n")
    assert g.n == 4
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert adjlist_parse("0: 1 1\n1: 0\n") == path(2)
    assert adjlist_parse("0: 1\n", n=3).n == 3

@pytest.mark.parametrize("text, kwargs", [
    ("0 1\n", {}),
    ("0: x\n", {}),
    ("0: 0\n", {}),
    ("0: 5\n", {"n": 3}),
    ("", {}),
    ("0: 1\n", {"n": 0}),
])
def test_adjlist_errors(text, kwargs):
    with pytest.raises(AdjlistError):
        adjlist_parse(text, **kwargs)

def test_adjlist_emit():
    text = adjlist_emit(Graph.from_edges(3, [(0, 1)]))
    assert text == "0: 1\n1: 0\n2:\n"
    assert adjlist_parse(text) == Graph.from_edges(3, [(0, 1)])
    assert adjlist_parse(adjlist_emit(cycle(6))) == cycle(6)


def test_classification_document():
    doc = json.loads(report_serialize(classify(complete_bipartite(2, 6), [1, 3])))
    assert doc["kind"] == "classification"
    assert doc["inputs"] == {"graph6": "G]rEE?", "n": 8, "ks": [1, 3]}
    assert doc["verdicts"] == [{"k": 1, "gdb": False, "gamma": None},
                               {"k": 3, "gdb": True, "gamma": 2}]
    assert doc["db"] is False and doc["ndb_gamma"] is None
    assert doc["bipartite"] is True and doc["diameter"] == 2
    assert "edges" not in doc

def test_classification_document_edges():
    doc = json.loads(report_serialize(classify(path(3), [2]), edges=True))
    assert doc["edges"][0] == {"a": 0, "b": 1, "w_ab": 1, "w_ba": 2, "eq_count": 0,
                               "d_table": [[0, 1, 1], [1, 0, 1], [2, 1, 1]]}

def test_classification_summary():
    text = report_serialize(classify(complete_bipartite(2, 6), [3]), mode="summary")
    assert "k=3: 3-GDB True   3-GNDB gamma=2" in text
    text = report_serialize(classify(path(4), [3]), mode="summary", edges=True)
    assert "k=3: 3-GDB False (edge 1-2 not consistent)" in text
    assert " Edges:" in text

def _report():
    r = ScanReport("scan", (1, 4), (3,), gamma=1)
    r.corpus_size = {1: 1, 2: 1, 3: 2, 4: 6}
    r.pruned = {3: 2}
    r.matches = [("Cs", {"n": 4, "k": 3, "gamma": 1, "diameter": 2, "bipartite": True})]
    r.elapsed = {1: 0.01, 2: 0.01, 3: 0.02, 4: 0.05}
    return r

def test_scan_document_is_deterministic():
    text = report_serialize(_report())
    doc = json.loads(text)
    assert "elapsed" not in doc
    assert doc["corpus_size"][2] == {"n": 3, "count": 2, "pruned": 2}
    assert doc["matches"] == [{"graph6": "Cs", "bipartite": True, "diameter": 2, "gamma": 1, "k": 3, "n": 4}]
    assert report_serialize(_report()) == text
    assert "elapsed" in json.loads(report_serialize(_report(), timing=True))

def test_scan_summary():
    text = report_serialize(_report(), mode="summary", timing=True)
    assert "Matches: 1" in text
    assert "Violations: 0" in text
    assert "elapsed" in text

def test_unknown_mode():
    with pytest.raises(ValueError):
        report_serialize(_report(), mode="xml")
