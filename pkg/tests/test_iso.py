from __future__ import annotations

import pytest
from hypothesis import given

from cayleyrec.automata import Automaton, canonical, to_dfa
from cayleyrec.errors import SearchCapExceeded
from cayleyrec.fixtures import EVEN, PETERSEN, TRIANGLE_NOT_VT
from cayleyrec.graph import LabeledDigraph
from cayleyrec.iso import anchored_iso, automorphism, is_isomorphism, iso
from oracles import automorphism_exists
from strategies import graphs


def test_even_vs_canonical_and_renaming():
    can = canonical(to_dfa(Automaton(EVEN, {"p"}, {"p"})))
    m = iso(EVEN, can.graph)
    assert m is not None and is_isomorphism(m, EVEN, can.graph)
    renamed = EVEN.rename({"p": "x", "q": "y"})
    assert iso(EVEN, renamed) == {"p": "x", "q": "y"}


def test_label_count_mismatch():
    one_label = LabeledDigraph([("p", "a", "q"), ("q", "a", "p")])
    assert iso(EVEN, one_label) is None


def test_anchored_on_even():
    m = anchored_iso(EVEN, "p", EVEN, "q")
    assert m == {"p": "q", "q": "p"}


def test_cap():
    big = LabeledDigraph([(str(i), "a", str(j)) for i in range(14) for j in range(14) if i != j])
    with pytest.raises(SearchCapExceeded):
        automorphism(big, [], cap=12)


def test_automorphism_witnesses():
    assert automorphism(TRIANGLE_NOT_VT, [("1", "3")]) is None
    assert automorphism(PETERSEN, [("1", "2")]) is None


@given(graphs(max_vertices=4))
def test_automorphism_matches_bruteforce(g):
    base = g.vertices[0]
    for t in g.vertices:
        m = automorphism(g, [(base, t)])
        assert (m is not None) == automorphism_exists(g.edges, base, t)
        if m is not None:
            assert is_isomorphism(m, g, g)


@given(graphs(max_vertices=4))
def test_iso_with_relabelled_copy(g):
    mapping = {v: f"v{i}" for i, v in enumerate(reversed(g.vertices))}
    h = g.rename(mapping)
    m = iso(g, h)
    assert m is not None and is_isomorphism(m, g, h)
