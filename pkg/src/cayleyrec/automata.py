"""Automata ``(G, I, F)`` over labelled graphs.

Bisimulation quotients, subset construction, co-determinisation,
Brzozowski's double reversal and the canonical residual automaton.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .dfa import Dfa, as_word, require_nonempty
from .errors import EmptyGraph, SchemaError
from .graph import Check, LabeledDigraph, sort_vertices, vkey


@dataclass(frozen=True)
class Automaton:
    """A graph with initial and final vertices.

    ``edges`` may be empty: the subset construction of an automaton whose
    initial vertices have no outgoing edge is a single edgeless state.
    """

    edges: frozenset
    initial: frozenset
    final: frozenset

    def __init__(self, edges, initial: Iterable[str], final: Iterable[str]):
        if isinstance(edges, LabeledDigraph):
            es = edges.edges
        else:
            es = frozenset(tuple(e) for e in edges)
            if es:
                es = LabeledDigraph(es).edges
        initial, final = frozenset(initial), frozenset(final)
        if es:
            vs = {s for s, _, _ in es} | {t for _, _, t in es}
            stray = sort_vertices((initial | final) - vs)
            if stray:
                raise SchemaError(f"initial/final vertices not in the graph: {stray}")
        elif len(initial | final) > 1:
            raise SchemaError("an edgeless automaton has at most one state")
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "initial", initial)
        object.__setattr__(self, "final", final)

    @cached_property
    def graph(self) -> LabeledDigraph:
        if not self.edges:
            raise EmptyGraph("automaton has no edges")
        return LabeledDigraph(self.edges)

    @cached_property
    def states(self) -> tuple[str, ...]:
        vs = {s for s, _, _ in self.edges} | {t for _, _, t in self.edges}
        return tuple(sort_vertices(vs | self.initial | self.final))

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({a for _, a, _ in self.edges}))

    @cached_property
    def out(self) -> dict[str, dict[str, tuple[str, ...]]]:
        if not self.edges:
            return {v: {} for v in self.states}
        return self.graph.out

    @cached_property
    def inn(self) -> dict[str, dict[str, tuple[str, ...]]]:
        if not self.edges:
            return {v: {} for v in self.states}
        return self.graph.inn

    def step(self, sources: Iterable[str], label: str) -> frozenset:
        return frozenset(t for s in sources for t in self.out[s].get(label, ()))

    def inverse(self) -> Automaton:
        return Automaton(((t, a, s) for s, a, t in self.edges), self.final, self.initial)

    def rename(self, mapping: Mapping[str, str]) -> Automaton:
        return Automaton(
            ((mapping[s], a, mapping[t]) for s, a, t in self.edges),
            (mapping[v] for v in self.initial),
            (mapping[v] for v in self.final),
        )

    def __repr__(self):
        es = sorted(self.edges, key=lambda e: (vkey(e[0]), e[1], vkey(e[2])))
        return (
            f"Automaton({es!r}, initial={sort_vertices(self.initial)!r}, "
            f"final={sort_vertices(self.final)!r})"
        )


def block_name(members: Iterable[str]) -> str:
    return "{" + ",".join(sort_vertices(members)) + "}"


def recognizes(a: Automaton, word: Sequence[str]) -> bool:
    current = a.initial
    for x in as_word(word):
        current = a.step(current, x)
        if not current:
            return False
    return bool(current & a.final)


def accessible(a: Automaton) -> frozenset:
    seen = set(a.initial)
    todo = deque(seen)
    while todo:
        s = todo.popleft()
        for ts in a.out[s].values():
            for t in ts:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return frozenset(seen)


def is_accessible(a: Automaton) -> bool:
    return accessible(a) == frozenset(a.states)


def is_co_accessible(a: Automaton) -> bool:
    return accessible(a.inverse()) == frozenset(a.states)


def is_reduced(a: Automaton) -> bool:
    return is_accessible(a) and is_co_accessible(a)


def is_deterministic_automaton(a: Automaton) -> bool:
    return len(a.initial) == 1 and all(len(ts) <= 1 for m in a.out.values() for ts in m.values())


def is_co_deterministic_automaton(a: Automaton) -> bool:
    return is_deterministic_automaton(a.inverse())


# -- simulations ---------------------------------------------------------------


def is_simulation(rel: Iterable[tuple[str, str]], a: Automaton, b: Automaton) -> Check:
    """Check the four simulation clauses of ``rel ⊆ V_a × V_b`` literally."""
    rel = set(rel)
    image: dict[str, set[str]] = {}
    for s, t in rel:
        image.setdefault(s, set()).add(t)
    for s in a.states:
        if s not in image:
            return Check(False, ("domain", s))
    for s, s2 in sorted(rel):
        for x, ts in a.out.get(s, {}).items():
            for t in ts:
                if not any(t2 in image.get(t, ()) for t2 in b.out.get(s2, {}).get(x, ())):
                    return Check(False, ("transition", (s, s2), (s, x, t)))
        if s in a.final and s2 not in b.final:
            return Check(False, ("final", (s, s2)))
    for s in sort_vertices(a.initial):
        if not image[s] & b.initial:
            return Check(False, ("initial", s))
    return Check(True)


def is_bisimulation(rel: Iterable[tuple[str, str]], a: Automaton, b: Automaton) -> Check:
    rel = set(rel)
    fwd = is_simulation(rel, a, b)
    if not fwd:
        return fwd
    back = is_simulation({(t, s) for s, t in rel}, b, a)
    if not back:
        return Check(False, ("inverse",) + tuple(back.witness))
    return Check(True)


# -- bisimulation quotient ---------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """Map vertex -> block id; block ids are dense and ordered by smallest member."""

    block: dict

    @cached_property
    def blocks(self) -> list[frozenset]:
        out: dict[int, set[str]] = {}
        for v, b in self.block.items():
            out.setdefault(b, set()).add(v)
        return [frozenset(out[b]) for b in sorted(out)]

    def __len__(self):
        return len(self.blocks)

    def relation(self) -> set[tuple[str, str]]:
        return {(s, t) for b in self.blocks for s in b for t in b}

    def is_identity(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)


def _dense_partition(block: Mapping[str, object]) -> Partition:
    firsts: dict[object, str] = {}
    for v in sort_vertices(block):
        firsts.setdefault(block[v], v)
    order = {key: i for i, key in enumerate(sorted(firsts, key=lambda k: vkey(firsts[k])))}
    return Partition({v: order[block[v]] for v in block})


def greatest_bisimulation(a: Automaton) -> Partition:
    """Coarsest congruence of ``a`` by signature refinement.

    Start from the final / non-final split and refine by the set of
    ``(label, successor block)`` pairs until stable; this handles
    nondeterministic graphs directly.
    """
    block = {v: int(v in a.final) for v in a.states}
    count = len(set(block.values()))
    while True:
        sig = {
            v: (block[v], frozenset((x, block[t]) for x, ts in a.out[v].items() for t in ts))
            for v in a.states
        }
        ids: dict[tuple, int] = {}
        new = {v: ids.setdefault(sig[v], len(ids)) for v in a.states}
        if len(ids) == count:
            return _dense_partition(new)
        block, count = new, len(ids)


def quotient(a: Automaton, p: Partition) -> Automaton:
    name = {v: block_name(p.blocks[p.block[v]]) for v in a.states}
    return Automaton(
        {(name[s], x, name[t]) for s, x, t in a.edges},
        {name[v] for v in a.initial},
        {name[v] for v in a.final},
    )


def quotient_map(a: Automaton, p: Partition) -> dict[str, str]:
    return {v: block_name(p.blocks[p.block[v]]) for v in a.states}


def minimize(a: Automaton) -> Automaton:
    return quotient(a, greatest_bisimulation(a))


def is_minimal(a: Automaton) -> bool:
    return greatest_bisimulation(a).is_identity()


# -- subset constructions ------------------------------------------------------------


def determinize(a: Automaton) -> Automaton:
    """Accessible subset construction; the empty subset is never a state."""
    start = frozenset(a.initial)
    names = {start: block_name(start)}
    todo = deque([start])
    edges = set()
    while todo:
        cur = todo.popleft()
        labels = sorted({x for s in cur for x in a.out[s]})
        for x in labels:
            nxt = a.step(cur, x)
            if nxt not in names:
                names[nxt] = block_name(nxt)
                todo.append(nxt)
            edges.add((names[cur], x, names[nxt]))
    final = {names[S] for S in names if S & a.final}
    return Automaton(edges, {names[start]}, final)


def co_determinize(a: Automaton) -> Automaton:
    return determinize(a.inverse()).inverse()


def brzozowski(a: Automaton) -> Automaton:
    return determinize(co_determinize(a))


# -- automata and DFAs ------------------------------------------------------------------


def to_dfa(a: Automaton, alphabet: Iterable[str] | None = None) -> Dfa:
    """Complete DFA for ``L(a)`` over ``alphabet`` (default: the labels of ``a``)."""
    alphabet = tuple(sorted(set(alphabet) if alphabet is not None else set(a.labels)))
    start = frozenset(a.initial)
    ids = {start: 0}
    order = [start]
    delta = []
    for cur in order:
        row = []
        for x in alphabet:
            nxt = a.step(cur, x)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
            row.append(ids[nxt])
        delta.append(tuple(row))
    acc = frozenset(i for i, S in enumerate(order) if S & a.final)
    return Dfa(alphabet, delta, 0, acc).normalized()


def from_dfa(d: Dfa, prefix: str = "q") -> Automaton:
    """Trim a DFA into an automaton: only reachable, live states are kept."""
    live = d.live_states
    reach = [q for q in d.reachable_states() if q in live]
    if not reach:
        reach = [d.start]
    name = {q: f"{prefix}{i}" for i, q in enumerate(reach)}
    edges = {
        (name[q], x, name[t])
        for q in reach
        for x, t in zip(d.alphabet, d.delta[q])
        if t in name
    }
    return Automaton(edges, {name[d.start]}, {name[q] for q in reach if q in d.accepting})


def canonical(lang: Dfa) -> Automaton:
    """``Can(L)``: the residual automaton, one state per non-empty residual."""
    require_nonempty(lang)
    return from_dfa(lang.minimize(), prefix="r")


def residual(lang: Dfa, u: Sequence[str]) -> Dfa:
    return lang.residual(as_word(u))
