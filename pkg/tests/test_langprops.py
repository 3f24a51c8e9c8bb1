from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cayleyrec.automata import Automaton, to_dfa
from cayleyrec.cycles import cycle_language
from cayleyrec.dfa import from_words
from cayleyrec.errors import EmptyLanguage, NotApplicable
from cayleyrec.fixtures import CYCLE6, EVEN, Z2XZ2
from cayleyrec.langprops import is_conjugacy_closed, is_stable, letter_set, presentation_conditions
from oracles import stable_bruteforce, words
from strategies import automata

L_EVEN = cycle_language(EVEN, "p")


def test_even_is_stable_with_full_letter_set():
    assert is_stable(L_EVEN)
    assert letter_set(L_EVEN) == {"a", "b"}
    assert is_conjugacy_closed(L_EVEN)


def test_unstable_witness_revalidates():
    lang = from_words(["", "a"], "a")
    v = is_stable(lang)
    assert not v
    u, x, w = v.witness
    assert lang.accepts(x) and lang.accepts(u + x + w) != lang.accepts(u + w)


def test_stability_requires_nonempty():
    with pytest.raises(EmptyLanguage):
        is_stable(from_words([], "a"))


def test_conjugacy_witness():
    res = is_conjugacy_closed(from_words(["ab"], "ab"))
    assert not res and res.witness == ("b", "a")
    assert is_conjugacy_closed(from_words(["ab", "ba"], "ab"))
    assert letter_set(from_words([""], "ab")) == frozenset()


def test_presentation_conditions():
    v = presentation_conditions(L_EVEN)
    assert v.holds and v.cond_i and v.cond_ii and v.cond_iii
    u = v.ii_witnesses["a"]
    assert L_EVEN.accepts(("a",) + u) and L_EVEN.accepts(u + ("a",))
    with pytest.raises(NotApplicable):
        presentation_conditions(from_words(["", "a"], "a"))
    loose = presentation_conditions(from_words(["", "a"], "a"), strict=False)
    assert not loose.applicable and loose.cond_i


def test_condition_iii_failure():
    # every word is in L: both letters collapse to the identity
    everything = to_dfa(Automaton([("0", "a", "0"), ("0", "b", "0")], {"0"}, {"0"}))
    v = presentation_conditions(everything)
    assert v.cond_i and v.cond_ii and not v.cond_iii
    a, b, u = v.iii_witness
    assert everything.accepts(u + (a,)) and everything.accepts(u + (b,))


def test_cayley_cycle_languages_are_presentations():
    for g in (CYCLE6, Z2XZ2):
        assert presentation_conditions(cycle_language(g, g.vertices[0])).holds


@given(automata(max_vertices=3))
def test_stability_matches_bruteforce(a):
    lang = to_dfa(a, "ab")
    if lang.is_empty():
        return
    v = is_stable(lang)
    found = stable_bruteforce(lang.accepts, "ab", 5)
    if v:
        assert found is None
    else:
        u, x, w = v.witness
        assert lang.accepts(x) and lang.accepts(u + x + w) != lang.accepts(u + w)


@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=4), min_size=1, max_size=4))
def test_conjugacy_matches_rotation_oracle(ws):
    lang = from_words(ws, "ab")
    closed = all(lang.accepts(w[i:] + w[:i]) for w in ws for i in range(len(w)))
    res = is_conjugacy_closed(lang)
    assert bool(res) == closed
    if not res:
        w = res.witness
        assert not lang.accepts(w)
        assert any(w == tuple(x[i:] + x[:i]) for x in ws for i in range(len(x)))


@given(automata(max_vertices=3))
def test_conjugacy_on_regular_languages(a):
    lang = to_dfa(a, "ab")
    res = is_conjugacy_closed(lang)
    bad = next(
        (w[i:] + w[:i] for w in words("ab", 5) if lang.accepts(w) for i in range(len(w)) if not lang.accepts(w[i:] + w[:i])),
        None,
    )
    if res:
        assert bad is None
    else:
        assert not lang.accepts(res.witness)
