"""Structural lemmas of circular graphs, each as ``hypothesis ⇒ conclusion``.

Every check returns ``None`` when the implication holds (including when the
hypothesis is false) and a short description of the violation otherwise.
Shared by the property tests and the acceptance suite.
"""

from __future__ import annotations

from cayleyrec.cycles import (
    common_cycle_language,
    elementary_cycles,
    is_circular,
    is_edge_transitive,
    is_elementary_circular,
    is_vertex_transitive,
    vertex_transitivity_by_automorphisms,
)
from cayleyrec.graph import (
    is_co_complete,
    is_co_deterministic,
    is_connected,
    is_deterministic,
    is_simple,
    is_source_complete,
    is_strongly_connected,
    roots,
)
from cayleyrec.langprops import is_conjugacy_closed, is_stable, letter_set, presentation_conditions
from cayleyrec.presentations import Presentation, bounded_class

# closure comparisons enumerate every word up to the cap, so the cap shrinks on big alphabets
WORD_BUDGET = 20000
MAX_CLOSURE_LEN = 8


def closure_len(g) -> int:
    k = max(len(g.labels), 1)
    n = MAX_CLOSURE_LEN
    while n > 0 and k**n > WORD_BUDGET:
        n -= 1
    return n


class Facts:
    """Lazily computed predicates of one graph."""

    def __init__(self, g):
        self.g = g
        self._cache = {}

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        if name not in self._cache:
            self._cache[name] = bool(getattr(self, "_" + name)())
        return self._cache[name]

    def _det(self):
        return is_deterministic(self.g)

    def _codet(self):
        return is_co_deterministic(self.g)

    def _simple(self):
        return is_simple(self.g)

    def _sc(self):
        return is_strongly_connected(self.g)

    def _connected(self):
        return is_connected(self.g)

    def _rooted(self):
        return roots(self.g)

    def _circular(self):
        return is_circular(self.g)

    def _vt(self):
        return vertex_transitivity_by_automorphisms(self.g)


def root_transitive(f: Facts):
    if f.rooted and f.vt and not f.sc:
        return "rooted and vertex-transitive but not strongly connected"


def co_det(f: Facts):
    if f.det and f.sc and f.circular and not f.codet:
        return "deterministic strongly connected circular but not co-deterministic"


def complete(f: Facts):
    if f.sc and f.circular and not (is_source_complete(f.g) and is_co_complete(f.g)):
        return "strongly connected circular but not complete"


def sym_fort(f: Facts):
    if f.sc and f.circular:
        lang = common_cycle_language(f.g)
        if not is_conjugacy_closed(lang):
            return "cycle language not closed under conjugacy"
        if letter_set(lang) != frozenset(f.g.labels):
            return "letter set of the cycle language differs from the label set"


def classe_vide(f: Facts):
    if f.det and f.circular and not is_stable(common_cycle_language(f.g)):
        return "cycle language of a deterministic circular graph is not stable"


def circ_pres(f: Facts):
    if f.sc and f.det and f.circular and f.simple:
        if not presentation_conditions(common_cycle_language(f.g)).holds:
            return "cycle language is not a group presentation language"


def circ_sym(f: Facts):
    if f.det and f.sc:
        fast = is_vertex_transitive(f.g, fast=True).ok
        if fast != f.vt:
            return f"fast path says {fast}, automorphism search says {f.vt}"


def edge_trans(f: Facts):
    if f.det and is_source_complete(f.g):
        if f.vt != bool(is_edge_transitive(f.g)):
            return "vertex-transitivity and edge-transitivity disagree"


def _closure(f: Facts):
    """Words of ``L_G`` up to the cap, and the bounded class of ε under ``E_G``."""
    if "closure" not in f._cache:
        g, n = f.g, closure_len(f.g)
        lang = frozenset(common_cycle_language(g).words(n))
        e = elementary_cycles(g, g.vertices[0])
        closure = bounded_class(Presentation(g.labels, e), n) if e else frozenset([()])
        f._cache["closure"] = (lang, closure)
    return f._cache["closure"]


def _closure_vs_language(f: Facts):
    in_lang, closure = _closure(f)
    if in_lang != closure:
        diff = sorted(in_lang ^ closure, key=lambda w: (len(w), w))
        return diff[0]
    return None


def circ_ele_circ(f: Facts):
    if not is_elementary_circular(f.g):
        return None
    if not f.circular:
        return "elementary circular but not circular"
    lang, closure = _closure(f)
    missing = sorted(lang - closure, key=lambda w: (len(w), w))
    if missing:
        return f"{''.join(missing[0])} does not reduce to ε by deleting elementary cycles"


def circ_circ_ele(f: Facts):
    if f.det and f.circular:
        if not is_elementary_circular(f.g):
            return "deterministic circular but not elementary circular"
        w = _closure_vs_language(f)
        if w is not None:
            return f"bounded closure and cycle language differ on {''.join(w)!r}"


def sym_basic_fini(f: Facts):
    if f.connected and f.vt and not f.sc:
        return "finite connected vertex-transitive but not strongly connected"


LEMMAS = {
    "RootTransitive": root_transitive,
    "CoDet": co_det,
    "Complete": complete,
    "SymFort": sym_fort,
    "ClasseVide": classe_vide,
    "CircPres": circ_pres,
    "CircSym": circ_sym,
    "EdgeTrans": edge_trans,
    "CircEleCirc": circ_ele_circ,
    "CircCircEle": circ_circ_ele,
    "SymBasicFini": sym_basic_fini,
}


def violations(graphs: dict) -> list[tuple[str, str, str]]:
    """``(graph name, lemma, message)`` for every violated implication."""
    out = []
    for name, g in graphs.items():
        f = Facts(g)
        for lemma, check in LEMMAS.items():
            msg = check(f)
            if msg:
                out.append((name, lemma, msg))
    return out
