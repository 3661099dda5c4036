"""Eulerian circuit and folding tests."""

# pylint: disable=missing-function-docstring

import pytest
from ucyc.classes import build_spec
from ucyc.core import CyclicString, Word
from ucyc.digraph import build, follows_edges
from ucyc.euler import (
    Circuit,
    MalformedCircuitError,
    NonEulerian,
    eulerian_circuit,
    fold,
    fold_ranks,
)


def words(*texts):
    return [Word(tuple(int(c) for c in text)) for text in texts]


def test_circuit_of_all_words():
    spec = build_spec("all-words", 2, alphabet="0,1")
    circuit = eulerian_circuit(build(spec))
    assert isinstance(circuit, Circuit)
    assert circuit.edges == (0, 1, 3, 2)
    assert [w.to_text(spec.alphabet) for w in circuit.words()] == ["00", "01", "11", "10"]
    assert fold(circuit.words()).to_text(spec.alphabet) == "0011"


def test_circuit_uses_every_edge_once():
    g = build(build_spec("monotone", 4, alphabet_size=2))
    circuit = eulerian_circuit(g)
    assert len(circuit) == 14
    assert sorted(circuit.edges) == g.edges.tolist()


def test_circuit_of_disconnected_digraph():
    outcome = eulerian_circuit(build(build_spec("equitable", 4, alphabet="0,1")))
    assert isinstance(outcome, NonEulerian)
    assert outcome.reason == "disconnected"
    assert outcome.balance is None
    assert outcome.connectivity.component_sizes == (4, 2)
    assert outcome.to_dict()["component_sizes"] == [4, 2]


def test_circuit_of_unbalanced_digraph():
    spec = build_spec("cyclic-categories", 5, alphabet_size=6, categories="a|bc|def")
    outcome = eulerian_circuit(build(spec))
    assert outcome.reason == "unbalanced"
    assert outcome.connectivity is None
    assert not outcome.balance.balanced


def test_circuit_of_empty_class():
    spec = build_spec("injective", 3, alphabet_size=2)
    outcome = eulerian_circuit(build(spec))
    assert outcome.reason == "empty"
    assert str(outcome) == f"No U-cycle of {spec}: the class is empty"


def test_fold():
    assert fold(words("00", "01", "11", "10")) == CyclicString((0, 0, 1, 1))
    assert fold(words("010", "101")).letters == (0, 1)


def test_fold_malformed():
    with pytest.raises(MalformedCircuitError) as exc_info:
        fold(words("00", "11"))
    assert exc_info.value.position == 0
    with pytest.raises(MalformedCircuitError) as exc_info:
        fold(words("00", "01"))  # 01 does not lead back to 00
    assert exc_info.value.position == 1
    with pytest.raises(MalformedCircuitError):
        fold(words("00", "001"))
    with pytest.raises(ValueError):
        fold([])


def test_fold_ranks():
    assert fold_ranks([0, 1, 3, 2], 2, 2).tolist() == [0, 0, 1, 1]
    with pytest.raises(MalformedCircuitError) as exc_info:
        fold_ranks([0, 3], 2, 2)
    assert exc_info.value.position == 0
    with pytest.raises(ValueError):
        fold_ranks([], 2, 2)


def test_fold_ranks_agrees_with_fold():
    spec = build_spec("lipschitz", 4, alphabet_size=5, c=1)
    circuit = eulerian_circuit(build(spec))
    assert tuple(fold_ranks(circuit.edges, spec.n, spec.k).tolist()) == fold(
        circuit.words()
    ).letters


MONOTONE_TRACE_BINARY = (
    "0000 0001 0010 0100 1001 0011 0111 1111 1110 1101 1011 0110 1100 1000"
)
MONOTONE_TRACE_ABC = (
    "AAA AAB ABA BAB ABB BBB BBC BCC CCB CBC BCB CBB BBA BAA AAC ACA "
    "CAC ACC CCC CCA CAB ABC BCA CAA"
)


@pytest.mark.parametrize(
    "trace, alphabet, k, cycle",
    [
        (MONOTONE_TRACE_BINARY, "0,1", 4, "00010011110110"),
        (MONOTONE_TRACE_ABC, "A,B,C", 3, "AABABBBCCBCBBAACACCCABCA"),
    ],
)
def test_fold_hand_traced_monotone_circuits(trace, alphabet, k, cycle):
    spec = build_spec("monotone", k, alphabet=alphabet)
    edges = [Word.from_text(w, spec.alphabet) for w in trace.split()]
    folded = fold(edges)
    assert folded == CyclicString.from_text(cycle, spec.alphabet)
    assert folded.length == len(edges)
    vertices = [w.prefix() for w in edges]
    assert follows_edges(build(spec), vertices + vertices[:1])
