"""Finite directed labelled graphs.

A graph is a non-empty set of edges ``(source, label, target)`` over string
tokens. Vertices and labels are derived from the edges, so isolated vertices
cannot be represented.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, NamedTuple

import networkx as nx

from .errors import EmptyGraph, SchemaError

Edge = tuple[str, str, str]


class Check(NamedTuple):
    """Outcome of a predicate: truth value plus a witness when it is false."""

    ok: bool
    witness: Any = None

    def __bool__(self):
        return self.ok


def vkey(token: str):
    """Sort key putting numeric ids in numeric order before other ids."""
    if token.isdigit():
        return (0, int(token), token)
    return (1, 0, token)


def sort_vertices(vs: Iterable[str]) -> list[str]:
    return sorted(vs, key=vkey)


def _check_token(tok, what):
    if not isinstance(tok, str) or not tok:
        raise SchemaError(f"{what} must be a non-empty string, got {tok!r}")


@dataclass(frozen=True)
class LabeledDigraph:
    edges: frozenset

    def __init__(self, edges: Iterable[Edge]):
        es = frozenset(tuple(e) for e in edges)
        if not es:
            raise EmptyGraph("a graph must have at least one edge")
        for e in es:
            if len(e) != 3:
                raise SchemaError(f"edge must be a (source, label, target) triple: {e!r}")
            _check_token(e[0], "vertex")
            _check_token(e[1], "label")
            _check_token(e[2], "vertex")
        object.__setattr__(self, "edges", es)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges)

    def __contains__(self, edge):
        return tuple(edge) in self.edges

    def __repr__(self):
        return f"LabeledDigraph({self.sorted_edges!r})"

    @cached_property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (vkey(e[0]), e[1], vkey(e[2])))

    @cached_property
    def vertices(self) -> tuple[str, ...]:
        vs = {s for s, _, _ in self.edges} | {t for _, _, t in self.edges}
        return tuple(sort_vertices(vs))

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted({a for _, a, _ in self.edges}))

    @cached_property
    def out(self) -> dict[str, dict[str, tuple[str, ...]]]:
        """``out[s][a]`` is the sorted tuple of a-successors of s."""
        return _adjacency(self.edges, self.vertices, reverse=False)

    @cached_property
    def inn(self) -> dict[str, dict[str, tuple[str, ...]]]:
        return _adjacency(self.edges, self.vertices, reverse=True)

    @cached_property
    def succ(self) -> dict[str, tuple[str, ...]]:
        return {
            v: tuple(sort_vertices({t for ts in self.out[v].values() for t in ts}))
            for v in self.vertices
        }

    def step(self, sources: Iterable[str], label: str) -> frozenset:
        return frozenset(t for s in sources for t in self.out.get(s, {}).get(label, ()))

    def rename(self, mapping) -> LabeledDigraph:
        return LabeledDigraph((mapping[s], a, mapping[t]) for s, a, t in self.edges)

    def nx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((s, t) for s, _, t in self.edges)
        return g


def _adjacency(edges, vertices, reverse):
    adj: dict[str, dict[str, list[str]]] = {v: {} for v in vertices}
    for s, a, t in edges:
        if reverse:
            s, t = t, s
        adj[s].setdefault(a, []).append(t)
    return {
        v: {a: tuple(sort_vertices(ts)) for a, ts in sorted(m.items())}
        for v, m in adj.items()
    }


def inverse(g: LabeledDigraph) -> LabeledDigraph:
    return LabeledDigraph((t, a, s) for s, a, t in g.edges)


def is_simple(g: LabeledDigraph) -> Check:
    seen: dict[tuple[str, str], Edge] = {}
    for e in g.sorted_edges:
        key = (e[0], e[2])
        if key in seen:
            return Check(False, (seen[key], e))
        seen[key] = e
    return Check(True)


def is_deterministic(g: LabeledDigraph) -> Check:
    for s in g.vertices:
        for a, ts in g.out[s].items():
            if len(ts) > 1:
                return Check(False, ((s, a, ts[0]), (s, a, ts[1])))
    return Check(True)


def is_co_deterministic(g: LabeledDigraph) -> Check:
    for t in g.vertices:
        for a, ss in g.inn[t].items():
            if len(ss) > 1:
                return Check(False, ((ss[0], a, t), (ss[1], a, t)))
    return Check(True)


def reachable(g: LabeledDigraph, sources: Iterable[str], backwards=False) -> set[str]:
    adj = g.inn if backwards else g.out
    seen = set(sources)
    todo = deque(seen)
    while todo:
        s = todo.popleft()
        for ts in adj[s].values():
            for t in ts:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
    return seen


def roots(g: LabeledDigraph) -> frozenset:
    """Vertices from which every vertex is reachable.

    They form the unique source component of the condensation, when there is
    exactly one source component; otherwise there are no roots.
    """
    cond = nx.condensation(g.nx())
    sources = [c for c in cond.nodes if cond.in_degree(c) == 0]
    if len(sources) != 1:
        return frozenset()
    return frozenset(cond.nodes[sources[0]]["members"])


def is_rooted(g: LabeledDigraph) -> Check:
    if roots(g):
        return Check(True)
    return Check(False, _unrooted_witness(g))


def _unrooted_witness(g):
    # two vertices in distinct source components: neither reaches the other
    cond = nx.condensation(g.nx())
    sources = sorted(
        (min(cond.nodes[c]["members"], key=vkey) for c in cond.nodes if cond.in_degree(c) == 0),
        key=vkey,
    )
    return tuple(sources[:2])


def is_strongly_connected(g: LabeledDigraph) -> Check:
    base = g.vertices[0]
    fwd = reachable(g, [base])
    for v in g.vertices:
        if v not in fwd:
            return Check(False, (base, v))
    bwd = reachable(g, [base], backwards=True)
    for v in g.vertices:
        if v not in bwd:
            return Check(False, (v, base))
    return Check(True)


def components(g: LabeledDigraph) -> list[LabeledDigraph]:
    """Edge sets of the connected components of ``g ∪ g⁻¹``, ordered by smallest vertex."""
    comps = [sort_vertices(c) for c in nx.weakly_connected_components(g.nx())]
    comps.sort(key=lambda c: vkey(c[0]))
    where = {v: i for i, c in enumerate(comps) for v in c}
    parts: list[list[Edge]] = [[] for _ in comps]
    for e in g.edges:
        parts[where[e[0]]].append(e)
    return [LabeledDigraph(p) for p in parts]


def is_connected(g: LabeledDigraph) -> Check:
    comps = components(g)
    if len(comps) == 1:
        return Check(True)
    return Check(False, (comps[0].vertices[0], comps[1].vertices[0]))


def is_source_complete(g: LabeledDigraph) -> Check:
    for s in g.vertices:
        for a in g.labels:
            if a not in g.out[s]:
                return Check(False, (s, a))
    return Check(True)


def is_co_complete(g: LabeledDigraph) -> Check:
    for t in g.vertices:
        for a in g.labels:
            if a not in g.inn[t]:
                return Check(False, (t, a))
    return Check(True)


def skeleton(g: LabeledDigraph) -> frozenset:
    """Unordered vertex pairs joined by some edge; self-loops give singletons."""
    return frozenset(frozenset((s, t)) for s, _, t in g.edges)


def skeleton_graph(g: LabeledDigraph, mark: str = "#") -> LabeledDigraph:
    """The skeleton as a bi-directed graph over a single label."""
    return LabeledDigraph(
        e for s, _, t in g.edges for e in ((s, mark, t), (t, mark, s))
    )


def property_report(g: LabeledDigraph) -> dict[str, Check]:
    return {
        "simple": is_simple(g),
        "deterministic": is_deterministic(g),
        "co_deterministic": is_co_deterministic(g),
        "rooted": is_rooted(g),
        "strongly_connected": is_strongly_connected(g),
        "connected": is_connected(g),
        "source_complete": is_source_complete(g),
        "co_complete": is_co_complete(g),
    }
