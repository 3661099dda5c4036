"""Reachability and walk tests."""

# pylint: disable=missing-function-docstring

import itertools
import pytest
from ucyc.classes import build_spec
from ucyc.core import Word
from ucyc.digraph import build, follows_edges, reaches, reaching_set
from ucyc.lattice import endpoint, l1_norm

AUGMENTED_WALK_K6 = (
    "cebad ebadc badce adceb dceba cebab ebabd babdc abdce bdcea dceab ceabc "
    "eabcd abcdd"
)

AUGMENTED_WALK_K9 = (
    "bdabdece dabdecec abdececb bdececba dececbaa ececbaab cecbaabd ecbaabdd "
    "cbaabdde baabddee aabddeec abddeecc bddeecca ddeeccaa deeccaab eeccaabb "
    "eccaabbd ccaabbdd caabbdde aabbddec abbddece bbddecea bddeceaa ddeceaab "
    "deceaabb eceaabbc ceaabbcd eaabbcdd aabbcdde abbcddee bbcddeea bcddeeaa "
    "cddeeaab ddeeaabb deeaabbc eeaabbcc eaabbccd aabbccdd"
)


LATTICE_3D_GRID = [(4, 3), (5, 3), (5, 4), (6, 3)]


def walk(text, spec):
    return [Word.from_text(v, spec.alphabet) for v in text.split()]


def lattice_points(dimension, bound):
    return [
        p
        for p in itertools.product(range(-bound, bound + 1), repeat=dimension)
        if sum(abs(c) for c in p) <= bound
    ]


@pytest.mark.parametrize("k, radius", LATTICE_3D_GRID)
def test_every_3d_lattice_vertex_reaches_full_degree(k, radius):
    g = build(build_spec("lattice", k, dimension=3, radius=radius))
    assert reaching_set(g, g.out_degree == 6).all()


@pytest.mark.parametrize("k, radius", LATTICE_3D_GRID)
def test_every_3d_lattice_vertex_reaches_the_center(k, radius):
    # Vertices have k-1 steps: odd k can return to the origin, even k to a neighbour.
    spec = build_spec("lattice", k, dimension=3, radius=radius)
    g = build(spec)
    target = 0 if k % 2 else 1

    def at_center(v):
        return l1_norm(endpoint(v, spec.steps)) == target

    assert reaching_set(g, at_center).all()
    for i in range(0, g.vertex_count, 17):
        assert reaches(g, g.vertex_word(i), at_center)


@pytest.mark.parametrize("k, radius", LATTICE_3D_GRID)
def test_3d_lattice_vertex_endpoints(k, radius):
    spec = build_spec("lattice", k, dimension=3, radius=radius)
    g = build(spec)
    ends = {
        endpoint(g.vertex_word(i), spec.steps).coordinates
        for i in range(g.vertex_count)
    }
    bound = min(radius + 1, k - 1)
    assert ends == {
        p for p in lattice_points(3, bound) if sum(abs(c) for c in p) % 2 == (k - 1) % 2
    }


def test_reaching_set_stops_at_components():
    g = build(build_spec("equitable", 4, alphabet="0,1"))
    reached = reaching_set(g, lambda v: v.letters == (0, 1, 0))
    words = [g.vertex_word(i).to_text(g.spec.alphabet) for i in range(g.vertex_count)]
    assert [w for w, r in zip(words, reached) if r] == ["010", "101"]
    assert not reaches(g, Word((0, 0, 1)), lambda v: v.letters == (0, 1, 0))
    assert reaches(g, Word((0, 0, 1)), lambda v: v.letters == (1, 0, 0))


def test_reaching_set_mask_shape():
    g = build(build_spec("all-words", 3, alphabet_size=2))
    with pytest.raises(ValueError):
        reaching_set(g, [True, False])


def test_follows_edges():
    spec = build_spec("augmented-onto", 6, alphabet_size=5, a=1, b=2)
    g = build(spec)
    vertices = walk(AUGMENTED_WALK_K6, spec)
    assert follows_edges(g, vertices)
    assert not follows_edges(g, vertices[::-1])
    assert not follows_edges(g, [vertices[0], vertices[2]])
    # "aaaaa" is not a vertex: a letter can occur at most twice
    assert not follows_edges(g, vertices + [Word((0, 0, 0, 0, 0))])


@pytest.mark.slow
def test_follows_edges_longer_walk():
    spec = build_spec("augmented-onto", 9, alphabet_size=5, a=1, b=2)
    assert follows_edges(build(spec), walk(AUGMENTED_WALK_K9, spec))
