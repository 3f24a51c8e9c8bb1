"""Decidable properties of regular languages given as DFAs.

Stability, closure under conjugacy, letter sets and the three conditions of
a group presentation language. Conditions (ii) and (iii) talk about Thue
classes, which are only computable here because a stable language ``L``
satisfies ``[ε]_L = L``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .automata import Automaton, to_dfa
from .dfa import Dfa, Word, difference, equivalent, included, intersection, require_nonempty
from .errors import NotApplicable
from .graph import Check


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    witness: tuple | None = None  # (u, v, w): v ∈ L and exactly one of uvw, uw in L

    def __bool__(self):
        return self.stable


def _access_words(d: Dfa) -> dict[int, Word]:
    """A shortest word reaching each reachable state."""
    words = {d.start: ()}
    for q in d.reachable_states():
        for a, t in zip(d.alphabet, d.delta[q]):
            if t not in words:
                words[t] = words[q] + (a,)
    return words


def _separator(d: Dfa, p: int, q: int) -> Word:
    """A shortest word accepted from exactly one of two states."""
    return equivalent(d.with_start(p), d.with_start(q))[1]


def is_stable(lang: Dfa) -> StabilityVerdict:
    """Decide ``uvw ∈ L ⟺ uw ∈ L`` for all ``v ∈ L``.

    In the minimal DFA, ``L`` is stable iff every word of ``L`` fixes every
    state: one inclusion ``L ⊆ Fix(q)`` per state.
    """
    require_nonempty(lang)
    m = lang.minimize()
    access = _access_words(m)
    for q in range(m.n):
        fix = m.with_start(q).with_accepting({q})
        bad = difference(m, fix).shortest_word()
        if bad is None:
            continue
        u = access[q]
        moved = m.run(bad, q)
        w = _separator(m, q, moved)
        return StabilityVerdict(False, (u, bad, w))
    return StabilityVerdict(True)


def letter_set(lang: Dfa) -> frozenset:
    return lang.letters


def shift_automaton(lang: Dfa) -> Automaton:
    """Automaton for the conjugates ``vu`` of words ``uv ∈ L``.

    A state ``(q, p, phase)`` guesses the split state ``q``: phase 1 reads
    ``v`` from ``q`` to an accepting state, phase 2 reads ``u`` from the
    start back to ``q``. The ε-move between phases is eliminated.
    """
    d = lang.minimize()
    live = d.live_states
    reach = set(d.reachable_states())
    useful = sorted(reach & live)

    def st(q, p, phase):
        return f"{q}.{p}.{phase}"

    edges, initial, final = set(), set(), set()
    for q in useful:
        initial.add(st(q, q, 1))
        for p in range(d.n):
            for a, t in zip(d.alphabet, d.delta[p]):
                edges.add((st(q, p, 1), a, st(q, t, 1)))
                edges.add((st(q, p, 2), a, st(q, t, 2)))
                if p in d.accepting:
                    # ε-jump from (q, p, 1) to (q, start, 2) folded into the next letter
                    t2 = d.delta[d.start][d.index[a]]
                    edges.add((st(q, p, 1), a, st(q, t2, 2)))
            if p in d.accepting and d.start == q:
                final.add(st(q, p, 1))
        final.add(st(q, q, 2))
    if not edges:
        # one-letter-free language such as {ε}
        return Automaton((), initial, final & initial)
    vs = {s for s, _, _ in edges} | {t for _, _, t in edges}
    return Automaton(edges, initial & vs, final & vs)


def is_conjugacy_closed(lang: Dfa):
    """``vu ∈ L`` whenever ``uv ∈ L``; witness is a shortest conjugate outside ``L``."""
    if not lang.alphabet:
        return Check(True)
    shifted = to_dfa(shift_automaton(lang), lang.alphabet)
    ok, w = included(shifted, lang)
    return Check(ok, w)


@dataclass(frozen=True)
class PresentationVerdict:
    applicable: bool
    cond_i: bool
    cond_ii: bool | None = None
    cond_iii: bool | None = None
    ii_witnesses: dict = field(default_factory=dict)  # letter -> u with au, ua ∈ L (or None)
    iii_witness: tuple | None = None  # (a, b, u) with ua, ub ∈ L

    @property
    def holds(self) -> bool:
        return bool(self.applicable and self.cond_i and self.cond_ii and self.cond_iii)

    def __bool__(self):
        return self.holds


def _right_residual(d: Dfa, a: str) -> Dfa:
    """DFA of ``{u | ua ∈ L}``."""
    i = d.index[a]
    return d.with_accepting(q for q in range(d.n) if d.delta[q][i] in d.accepting)


def presentation_conditions(lang: Dfa, strict: bool = True) -> PresentationVerdict:
    """Conditions (i)-(iii) of a group presentation language, for stable ``L``.

    With ``strict`` an unstable language raises :class:`NotApplicable`;
    otherwise only (i) is evaluated and ``applicable`` is False.
    """
    letters = sorted(letter_set(lang)) if not lang.is_empty() else []
    cond_i = bool(letters)
    stable = (not lang.is_empty()) and is_stable(lang).stable
    if not stable:
        if strict:
            raise NotApplicable("conditions (ii) and (iii) are only decided for stable languages")
        return PresentationVerdict(False, cond_i)
    d = lang.minimize()
    right = {a: _right_residual(d, a) for a in letters}
    ii = {}
    for a in letters:
        ii[a] = intersection(d.residual((a,)), right[a]).shortest_word()
    cond_ii = all(w is not None for w in ii.values())
    iii_witness = None
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            u = intersection(right[a], right[b]).shortest_word()
            if u is not None:
                iii_witness = (a, b, u)
                break
        if iii_witness:
            break
    return PresentationVerdict(True, cond_i, cond_ii, iii_witness is None, ii, iii_witness)
