from __future__ import annotations

import random

import pytest
from hypothesis import given

from cayleyrec.fixtures import graph_fixtures
from cayleyrec.graph import LabeledDigraph
from lemmas import LEMMAS, Facts, violations
from strategies import deterministic_graphs, graphs, random_cayley_graphs


@pytest.mark.parametrize("lemma", sorted(LEMMAS))
def test_lemma_on_fixture_corpus(lemma):
    bad = [(name, msg) for name, g in graph_fixtures().items() if (msg := LEMMAS[lemma](Facts(g)))]
    assert bad == []


def test_lemmas_on_random_cayley_graphs():
    gs = dict(random_cayley_graphs(random.Random(5), 30))
    assert violations(gs) == []


def test_vertex_deleted_mutants_break_a_hypothesis_or_hold():
    rng = random.Random(3)
    for name, g in random_cayley_graphs(rng, 20):
        if len(g.vertices) < 3:
            continue
        gone = rng.choice(g.vertices)
        es = [e for e in g.edges if gone not in (e[0], e[2])]
        if not es:
            continue
        f = Facts(LabeledDigraph(es))
        assert LEMMAS["RootTransitive"](f) is None, name
        assert LEMMAS["SymBasicFini"](f) is None, name


@given(graphs(max_vertices=4))
def test_lemmas_on_arbitrary_small_graphs(g):
    assert violations({"g": g}) == []


@given(deterministic_graphs(max_vertices=5))
def test_lemmas_on_deterministic_graphs(g):
    assert violations({"g": g}) == []
