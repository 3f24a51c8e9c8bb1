"""Cycle languages, circularity and transitivity of graphs."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .automata import Automaton, to_dfa
from .dfa import Dfa, Word, equivalent
from .errors import EnumerationCapExceeded
from .graph import (
    Check,
    LabeledDigraph,
    is_deterministic,
    is_strongly_connected,
)
from .iso import DEFAULT_CAP, automorphism

DEFAULT_CYCLE_CAP = 10**6


def path_language(g: LabeledDigraph, s: str, t: str) -> Dfa:
    """Minimal complete DFA of the labels of paths from ``s`` to ``t``, over ``A_G``."""
    return to_dfa(Automaton(g, {s}, {t}), g.labels).minimize()


def cycle_language(g: LabeledDigraph, s: str) -> Dfa:
    return path_language(g, s, s)


@dataclass(frozen=True)
class CircularityVerdict:
    circular: bool
    witness: tuple | None = None  # (s, t, word) with word in L(s,s) △ L(t,t)

    def __bool__(self):
        return self.circular


def is_circular(g: LabeledDigraph) -> CircularityVerdict:
    base = g.vertices[0]
    ref = cycle_language(g, base)
    for t in g.vertices[1:]:
        same, w = equivalent(ref, cycle_language(g, t))
        if not same:
            return CircularityVerdict(False, (base, t, w))
    return CircularityVerdict(True)


def common_cycle_language(g: LabeledDigraph) -> Dfa:
    """``L_G`` of a circular graph (the cycle language at any vertex)."""
    return cycle_language(g, g.vertices[0])


# -- elementary cycles ------------------------------------------------------------


def elementary_cycles(g: LabeledDigraph, s: str, cap: int = DEFAULT_CYCLE_CAP) -> frozenset:
    """Label words of the cycles closing at ``s`` whose vertices are pairwise distinct.

    Words are read from ``s``; the search only extends simple paths that can
    still get back to ``s`` without revisiting a vertex.
    """
    back = _can_reach(g, s)
    words: set[Word] = set()
    count = 0
    # stack of (vertex, word, on-path set)
    stack = [(s, (), frozenset([s]))]
    while stack:
        v, w, on_path = stack.pop()
        for a, ts in g.out[v].items():
            for t in ts:
                if t == s:
                    count += 1
                    if count > cap:
                        raise EnumerationCapExceeded(f"more than {cap} elementary cycles at {s}")
                    words.add(w + (a,))
                elif t not in on_path and t in back:
                    stack.append((t, w + (a,), on_path | {t}))
    return frozenset(words)


def _can_reach(g, s):
    rev = g.nx().reverse(copy=False)
    return nx.descendants(rev, s) | {s}


def is_elementary_circular(g: LabeledDigraph, cap: int = DEFAULT_CYCLE_CAP) -> Check:
    base = g.vertices[0]
    ref = elementary_cycles(g, base, cap)
    for t in g.vertices[1:]:
        other = elementary_cycles(g, t, cap)
        if other != ref:
            diff = sorted(ref ^ other, key=lambda w: (len(w), w))
            return Check(False, (base, t, diff[0]))
    return Check(True, ref)


# -- transitivity ----------------------------------------------------------------------


def is_vertex_transitive(g: LabeledDigraph, cap: int = DEFAULT_CAP, fast: bool = True) -> Check:
    """Every vertex is the image of the smallest one under some automorphism.

    For deterministic strongly connected graphs this is circularity, whose
    witness word separates two vertices. Otherwise an automorphism is
    searched for each target; the witness is a pair with no automorphism.
    """
    if fast and is_deterministic(g) and is_strongly_connected(g):
        verdict = is_circular(g)
        return Check(verdict.circular, verdict.witness)
    return vertex_transitivity_by_automorphisms(g, cap)


def vertex_transitivity_by_automorphisms(g: LabeledDigraph, cap: int = DEFAULT_CAP) -> Check:
    base = g.vertices[0]
    for t in g.vertices[1:]:
        if automorphism(g, [(base, t)], cap) is None:
            return Check(False, (base, t))
    return Check(True)


def is_edge_transitive(g: LabeledDigraph, cap: int = DEFAULT_CAP) -> Check:
    """Same-labelled edges are related by automorphisms (checked against one reference edge per label)."""
    by_label: dict[str, list] = {}
    for e in g.sorted_edges:
        by_label.setdefault(e[1], []).append(e)
    for a, edges in sorted(by_label.items()):
        s, _, t = edges[0]
        for e in edges[1:]:
            if automorphism(g, [(s, e[0]), (t, e[2])], cap) is None:
                return Check(False, (edges[0], e))
    return Check(True)

