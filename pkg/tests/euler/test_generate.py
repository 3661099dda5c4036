"""U-cycle generation tests."""

# pylint: disable=missing-function-docstring

import pytest
from ucyc.classes import build_spec, count, enumerate_ranks, existence_claim
from ucyc.core import CyclicString, cyclic_windows, rank
from ucyc.digraph import WordTooShortError
from ucyc.euler import NonEulerian, UCycleReport, fold_ranks, generate
from ucyc.verify import verify


def test_generate_de_bruijn():
    spec = build_spec("all-words", 3, alphabet="0,1")
    report = generate(spec)
    assert isinstance(report, UCycleReport)
    assert report.to_text() == "00010111"
    assert report.length == 8
    assert report.construction_trace == (0, 1, 2, 5, 3, 7, 6, 4)
    assert str(report) == (
        "U-cycle of all-words words of length 3 over Alphabet {0, 1} (8 letters): "
        "00010111"
    )
    assert report.to_dict() == {
        "class": "all-words",
        "n": 2,
        "k": 3,
        "length": 8,
        "cycle": "00010111",
    }
    assert report.to_dict(trace=True)["trace"] == [
        "000",
        "001",
        "010",
        "101",
        "011",
        "111",
        "110",
        "100",
    ]


def test_generate_non_eulerian():
    outcome = generate(build_spec("equitable", 4, alphabet="0,1"))
    assert isinstance(outcome, NonEulerian)
    assert outcome.reason == "disconnected"


def test_generate_equitable_permutations():
    # k = n: the members are the permutations, two rotation classes of three.
    outcome = generate(build_spec("equitable", 3, alphabet_size=3))
    assert outcome.reason == "disconnected"
    assert outcome.connectivity.component_sizes == (3, 3)


def test_generate_empty_class():
    outcome = generate(build_spec("injective", 3, alphabet_size=2))
    assert outcome.reason == "empty"


def test_generate_needs_two_letters_per_word():
    with pytest.raises(WordTooShortError):
        generate(build_spec("monotone", 1, alphabet_size=3))


def test_generate_is_deterministic():
    spec = build_spec("augmented-onto", 5, alphabet_size=3, a=1, b=2)
    first, second = generate(spec), generate(spec)
    assert first.cycle.letters == second.cycle.letters
    assert first.construction_trace == second.construction_trace


def test_canonical_rotation_and_trace():
    spec = build_spec("monotone", 4, alphabet_size=3)
    raw = generate(spec, canonical=False)
    canonical = generate(spec)
    assert not raw.canonical
    assert canonical.canonical
    assert raw.cycle.letters == tuple(fold_ranks(raw.construction_trace, 3, 4).tolist())
    assert raw.cycle == canonical.cycle
    assert canonical.cycle.letters == canonical.cycle.canonical().letters
    assert sorted(canonical.construction_trace) == enumerate_ranks(spec).tolist()


def test_windows_of_generated_cycle_are_the_class():
    spec = build_spec("lipschitz", 4, alphabet_size=7, c=2)
    report = generate(spec)
    windows = [rank(w, spec.alphabet) for w in cyclic_windows(report.cycle, spec.k)]
    assert sorted(windows) == enumerate_ranks(spec).tolist()


@pytest.mark.parametrize(
    "kind, k, params",
    [
        ("all-words", 4, {"alphabet_size": 3}),
        ("injective", 2, {"alphabet_size": 4}),
        ("injective", 3, {"alphabet_size": 5}),
        ("onto", 4, {"alphabet_size": 3}),
        ("near-balanced", 5, {"alphabet_size": 2}),
        ("equitable", 5, {"alphabet_size": 3}),
        ("monotone", 5, {"alphabet_size": 4}),
        ("monotone", 5, {"alphabet_size": 4, "decreasing": True}),
        ("lipschitz", 5, {"alphabet_size": 5, "c": 1}),
        ("cyclic-categories", 4, {"alphabet_size": 5, "categories": "ab|cde"}),
        ("cyclic-categories", 4, {"honeycomb": True}),
        ("cyclic-categories", 8, {"alphabet_size": 6, "categories": "ab|cd|ef"}),
        ("augmented-onto", 7, {"alphabet_size": 4, "a": 1, "b": 2}),
        ("augmented-onto", 5, {"alphabet_size": 2, "a": 2, "b": 3}),
        ("lattice", 5, {"dimension": 3, "radius": 3}),
        ("lattice", 3, {"dimension": 2, "radius": 3}),
    ],
)
def test_generated_cycles_verify(kind, k, params):
    spec = build_spec(kind, k, **params)
    report = generate(spec)
    assert isinstance(report, UCycleReport), report
    assert report.length == count(spec)
    assert verify(report.cycle, spec).ok
    assert existence_claim(spec).agrees_with(True) is not False


def test_unequal_categories_break_the_multiple_rule():
    # Three categories of sizes 1, 2, 3 at k = c+2: the claim says a U-cycle exists,
    # but a vertex whose categories run C1 C2 C3 C1 has in-degree |C3| and
    # out-degree |C2|.
    spec = build_spec("cyclic-categories", 5, alphabet_size=6, categories="a|bc|def")
    claim = existence_claim(spec)
    assert claim.status == "exists"
    outcome = generate(spec)
    assert isinstance(outcome, NonEulerian)
    assert outcome.reason == "unbalanced"
    assert claim.agrees_with(False) is False


def test_cycle_equality_is_up_to_rotation():
    spec = build_spec("all-words", 3, alphabet="0,1")
    assert generate(spec).cycle == CyclicString.from_text("10111000", spec.alphabet)
