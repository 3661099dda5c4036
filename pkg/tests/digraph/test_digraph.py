"""TransitionDigraph, balance and connectivity tests."""

# pylint: disable=missing-function-docstring

import numpy as np
import pytest
from ucyc.classes import build_spec
from ucyc.core import Word
from ucyc.digraph import (
    UnionFind,
    UnknownVertexError,
    WordTooShortError,
    build,
    check_balance,
    check_connectivity,
)


def vertex(text, g):
    return Word.from_text(text, g.spec.alphabet)


def test_build_all_words():
    g = build(build_spec("all-words", 3, alphabet="0,1"))
    assert (g.vertex_count, g.edge_count, g.vertex_length) == (4, 8, 2)
    assert g.vertices.tolist() == [0, 1, 2, 3]
    assert g.out_edges(1).tolist() == [2, 3]
    assert g.successors(1).tolist() == [2, 3]
    assert g.vertex_word(2).to_text(g.spec.alphabet) == "10"
    assert g.degree(vertex("01", g)) == (2, 2)
    assert g.offsets.tolist() == [0, 2, 4, 6, 8]
    assert str(g) == (
        "Transition digraph of all-words words of length 3 over Alphabet {0, 1}: "
        "4 vertices, 8 edges"
    )


def test_build_keeps_only_windows_of_members():
    g = build(build_spec("equitable", 4, alphabet="0,1"))
    words = [g.vertex_word(i).to_text(g.spec.alphabet) for i in range(g.vertex_count)]
    assert words == ["001", "010", "011", "100", "101", "110"]
    assert g.edge_count == 6


def test_arrays_are_read_only():
    g = build(build_spec("monotone", 3, alphabet_size=3))
    for arr in (g.vertices, g.edges, g.sources, g.targets, g.in_degree, g.out_degree):
        with pytest.raises(ValueError):
            arr[0] = 0


def test_build_is_deterministic():
    spec = build_spec("lipschitz", 4, alphabet_size=5, c=1)
    first, second = build(spec), build(spec)
    for name in ("vertices", "edges", "sources", "targets", "offsets"):
        assert np.array_equal(getattr(first, name), getattr(second, name))


def test_word_too_short():
    with pytest.raises(WordTooShortError):
        build(build_spec("all-words", 1, alphabet_size=2))


def test_unknown_vertex():
    g = build(build_spec("equitable", 4, alphabet="0,1"))
    with pytest.raises(UnknownVertexError):
        g.index_of(vertex("000", g))
    with pytest.raises(UnknownVertexError):
        g.index_of(vertex("01", g))
    with pytest.raises(ValueError):
        g.degree(vertex("111", g))


@pytest.mark.parametrize(
    "kind, k, params, histogram",
    [
        ("all-words", 3, {"alphabet_size": 2}, {(2, 2): 4}),
        ("equitable", 4, {"alphabet_size": 2}, {(1, 1): 6}),
        ("lipschitz", 3, {"alphabet_size": 5, "c": 1}, {(3, 3): 15}),
        ("monotone", 4, {"alphabet_size": 2}, {(2, 2): 6, (1, 1): 2}),
    ],
)
def test_balanced_histograms(kind, k, params, histogram):
    report = check_balance(build(build_spec(kind, k, **params)))
    assert report.balanced
    assert report.witness is None
    assert dict(report.degree_histogram) == histogram


def test_unbalanced_witness():
    spec = build_spec("cyclic-categories", 5, alphabet_size=6, categories="a|bc|def")
    report = check_balance(build(spec))
    assert not report.balanced
    assert dict(report.degree_histogram) == {(3, 2): 6, (1, 3): 12, (2, 1): 18}
    assert report.witness.vertex.to_text(spec.alphabet) == "abda"
    assert (report.witness.in_degree, report.witness.out_degree) == (3, 2)
    assert report.to_dict()["witness"] == {
        "vertex": [0, 1, 3, 0],
        "in_degree": 3,
        "out_degree": 2,
    }


def test_components():
    g = build(build_spec("equitable", 4, alphabet="0,1"))
    report = check_connectivity(g)
    assert not report.weakly_connected
    assert report.component_count == 2
    assert report.component_sizes == (4, 2)
    assert [v.to_text(g.spec.alphabet) for v in report.sample_vertices] == ["001", "010"]
    assert str(report) == "2 weak components of sizes 4, 2"


def test_connected():
    report = check_connectivity(build(build_spec("monotone", 4, alphabet_size=3)))
    assert report.weakly_connected
    assert report.component_count == 1


def test_union_find():
    uf = UnionFind(6)
    uf.union(4, 5)
    uf.union(1, 4)
    uf.union(2, 3)
    assert uf.component_count == 3
    assert uf.find(5) == uf.find(1)
    assert uf.find(0) != uf.find(2)
    assert uf.components() == [[0], [1, 4, 5], [2, 3]]
