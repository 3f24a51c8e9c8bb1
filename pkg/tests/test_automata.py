from __future__ import annotations

import random

import pytest
from hypothesis import given

from cayleyrec.automata import (
    Automaton,
    brzozowski,
    canonical,
    co_determinize,
    determinize,
    from_dfa,
    greatest_bisimulation,
    is_accessible,
    is_bisimulation,
    is_co_accessible,
    is_co_deterministic_automaton,
    is_deterministic_automaton,
    is_minimal,
    is_reduced,
    is_simulation,
    minimize,
    quotient,
    quotient_map,
    recognizes,
    residual,
    to_dfa,
)
from cayleyrec.cycles import path_language
from cayleyrec.dfa import Dfa, equivalent, from_words
from cayleyrec.errors import EmptyLanguage
from cayleyrec.fixtures import ABC, EVEN, graph_fixtures
from cayleyrec.graph import LabeledDigraph, is_co_deterministic, is_deterministic, is_strongly_connected
from cayleyrec.iso import anchored_iso, iso
from oracles import minimal_trim, nfa_accepts, words
from strategies import automata, random_automaton

L_EVEN = to_dfa(Automaton(EVEN, {"p"}, {"p"}))
L_EVEN_PRIME = to_dfa(Automaton(EVEN, {"p"}, {"q"}))


def test_recognizes_even():
    a = Automaton(EVEN, {"p"}, {"p"})
    assert recognizes(a, "abba")
    assert not recognizes(Automaton(EVEN, {"p"}, {"q"}), "b")
    assert recognizes(a, "") and not recognizes(Automaton(EVEN, {"p"}, {"q"}), "")


def test_simulation_clauses():
    a = Automaton(EVEN, {"p"}, {"p"})
    assert is_bisimulation({("p", "p"), ("q", "q")}, a, a)
    bare = Automaton(EVEN, (), ())
    assert is_bisimulation({("p", "q"), ("q", "p")}, bare, bare)
    res = is_simulation(set(), a, a)
    assert not res and res.witness[0] == "domain"
    res = is_simulation({("p", "q"), ("q", "p")}, a, a)
    assert not res and res.witness[0] in {"final", "initial"}


def test_greatest_bisimulation_examples():
    assert [set(b) for b in greatest_bisimulation(Automaton(EVEN, {"p"}, {"p"})).blocks] == [{"p"}, {"q"}]
    abc = Automaton(ABC, {"0"}, {"0"})
    assert [set(b) for b in greatest_bisimulation(abc).blocks] == [{"0"}, {"1", "2"}]
    uniform = Automaton(EVEN, {"p"}, {"p", "q"})
    assert len(greatest_bisimulation(uniform)) == 1


def test_minimize_abc():
    m = minimize(Automaton(ABC, {"0"}, {"0"}))
    assert len(m.states) == 2


def test_determinize_example():
    a = Automaton([("s", "a", "t"), ("s", "a", "u"), ("t", "b", "f"), ("u", "b", "f")], {"s"}, {"f"})
    d = determinize(a)
    assert sorted(d.states) == ["{f}", "{s}", "{t,u}"]
    assert len(d.edges) == 2 and is_deterministic_automaton(d)


def test_brzozowski_abc_has_two_states():
    b = brzozowski(Automaton(ABC, {"0"}, {"0"}))
    assert len(b.states) == 2
    can = canonical(to_dfa(Automaton(ABC, {"0"}, {"0"})))
    assert iso(b, can) is not None
    assert iso(ABC, can.graph) is None


def test_canonical_even():
    can = canonical(L_EVEN)
    assert iso(can.graph, EVEN) is not None
    assert iso(can, Automaton(EVEN, {"p"}, {"p"})) is not None
    prime = canonical(L_EVEN_PRIME)
    assert iso(prime.graph, can.graph) is not None
    assert iso(prime, can) is None
    eps = canonical(from_words([()], "a"))
    assert len(eps.states) == 1 and not eps.edges and eps.initial == eps.final
    with pytest.raises(EmptyLanguage):
        canonical(from_words([], "a"))


def test_residual_identities():
    assert equivalent(residual(L_EVEN, "a"), L_EVEN_PRIME)[0]
    assert equivalent(residual(L_EVEN, "b"), L_EVEN)[0]
    assert equivalent(residual(L_EVEN_PRIME, "b"), L_EVEN_PRIME)[0]
    assert equivalent(residual(L_EVEN, ""), L_EVEN)[0]
    assert equivalent(residual(L_EVEN, "ab"), L_EVEN_PRIME)[0]


def test_equivalent_witness():
    same, w = equivalent(L_EVEN, L_EVEN_PRIME)
    assert not same and w == ()
    assert equivalent(L_EVEN, L_EVEN) == (True, None)


def test_codet_idempotent_on_fixtures():
    for g in graph_fixtures().values():
        a = Automaton(g, {g.vertices[0]}, {g.vertices[-1]})
        c = co_determinize(a)
        assert is_co_deterministic_automaton(c) and is_co_accessible(c)
        assert iso(co_determinize(c), c, cap=40) is not None


def test_codet_min_lemma_on_fixtures():
    # a co-deterministic co-accessible automaton is minimal, and so is its determinisation
    for g in graph_fixtures().values():
        if not is_co_deterministic(g):
            continue
        for f in g.vertices[:3]:
            a = Automaton(g, g.vertices, {f})
            if not is_co_accessible(a):
                continue
            assert is_minimal(a)
            assert is_minimal(determinize(a))


def test_reduced_det_codet_is_canonical():
    for g in graph_fixtures().values():
        if not (is_deterministic(g) and is_co_deterministic(g)):
            continue
        s = g.vertices[0]
        a = Automaton(g, {s}, {s})
        if not is_reduced(a):
            continue
        assert iso(a, canonical(to_dfa(a)), cap=40) is not None


def test_equivres_anchored_on_fixtures():
    for g in graph_fixtures().values():
        if not (is_strongly_connected(g) and is_deterministic(g) and is_co_deterministic(g)):
            continue
        for s in g.vertices[:3]:
            for t in g.vertices[:3]:
                can = canonical(path_language(g, s, t))
                r0 = next(iter(can.initial))
                assert anchored_iso(g, s, can.graph, r0) is not None


@given(automata())
def test_quotient_map_is_bisimulation(a):
    p = greatest_bisimulation(a)
    q = quotient(a, p)
    m = quotient_map(a, p)
    assert is_bisimulation(set(m.items()), a, q)


@given(automata(max_vertices=4))
def test_nerode_on_deterministic_coaccessible(a):
    if not is_deterministic_automaton(Automaton(a.edges, {a.states[0]}, a.final)) or not a.final:
        return
    if not is_co_accessible(a):
        return
    p = greatest_bisimulation(a)
    langs = {s: to_dfa(Automaton(a.edges, {s}, a.final), a.labels) for s in a.states}
    for s in a.states:
        for t in a.states:
            assert (p.block[s] == p.block[t]) == equivalent(langs[s], langs[t])[0]


@given(automata())
def test_constructions_preserve_language(a):
    ref = lambda w: nfa_accepts(a.edges, a.initial, a.final, w)
    outs = [determinize(a), co_determinize(a), brzozowski(a), minimize(a)]
    for w in words(a.labels or ("a",), 6):
        want = ref(w)
        for b in outs:
            assert recognizes(b, w) == want
    d = to_dfa(a)
    for b in outs:
        assert equivalent(to_dfa(b, a.labels), d)[0]


@given(automata())
def test_brzozowski_is_minimal_deterministic(a):
    b = brzozowski(a)
    assert is_deterministic_automaton(b) and is_accessible(b)
    if not to_dfa(a).is_empty():
        assert is_reduced(b) and is_minimal(b)


def test_brzozowski_matches_moore_oracle_seeded():
    rng = random.Random(11)
    for _ in range(60):
        a = random_automaton(rng)
        ref = minimal_trim(a.edges, a.initial, a.final, "ab")
        b = brzozowski(a)
        if ref is None:
            assert not b.final
            continue
        es, s, f = ref
        ref_auto = Automaton({(str(x), c, str(y)) for x, c, y in es}, {str(s)}, {str(x) for x in f})
        assert iso(b, ref_auto, cap=40) is not None


def test_from_dfa_trims():
    d = Dfa(("a",), [(1,), (1,)], 0, frozenset({0}), sink=1)
    a = from_dfa(d)
    assert a.states == ("q0",) and not a.edges


def test_automaton_validation():
    with pytest.raises(ValueError):
        Automaton([("p", "a", "q")], {"x"}, ())
    g = LabeledDigraph([("p", "a", "q")])
    assert Automaton(g, {"p"}, {"q"}).labels == ("a",)
