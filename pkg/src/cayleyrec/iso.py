"""Isomorphisms of graphs and automata.

The search propagates forced pairs (a vertex with a single successor or
predecessor under some label) and branches only when nothing is forced.
On deterministic and co-deterministic connected graphs an anchored search
never branches; branching is refused above ``cap`` vertices.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Mapping

from .automata import Automaton
from .errors import SearchCapExceeded
from .graph import LabeledDigraph, is_deterministic, is_strongly_connected

DEFAULT_CAP = 12


class _Struct:
    __slots__ = ("vertices", "out", "inn", "color", "edges", "sig")

    def __init__(self, vertices, out, inn, color, edges):
        self.vertices = vertices
        self.out = out
        self.inn = inn
        self.color = color
        self.edges = edges
        self.sig = {v: self._signature(v) for v in vertices}

    def _signature(self, v):
        outs = tuple(sorted((a, len(ts)) for a, ts in self.out[v].items()))
        ins = tuple(sorted((a, len(ss)) for a, ss in self.inn[v].items()))
        loops = tuple(sorted(a for a, ts in self.out[v].items() if v in ts))
        return (self.color[v], outs, ins, loops)


def _struct(x) -> _Struct:
    if isinstance(x, Automaton):
        color = {v: (v in x.initial, v in x.final) for v in x.states}
        return _Struct(list(x.states), x.out, x.inn, color, x.edges)
    color = {v: None for v in x.vertices}
    return _Struct(list(x.vertices), x.out, x.inn, color, x.edges)


def _compatible(A: _Struct, B: _Struct) -> bool:
    if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
        return False
    if Counter(a for _, a, _ in A.edges) != Counter(a for _, a, _ in B.edges):
        return False
    return Counter(A.sig.values()) == Counter(B.sig.values())


def _propagate(A, B, m, used, pending) -> bool:
    """Add the pairs in ``pending`` and everything they force; False on conflict."""
    todo = deque(pending)
    while todo:
        u, v = todo.popleft()
        if u in m:
            if m[u] != v:
                return False
            continue
        if v in used or A.sig[u] != B.sig[v]:
            return False
        m[u] = v
        used.add(v)
        for adjA, adjB in ((A.out, B.out), (A.inn, B.inn)):
            for a, us in adjA[u].items():
                vs = adjB[v][a]
                if len(us) == 1:
                    todo.append((us[0], vs[0]))
                    continue
                # mapped neighbours must land on neighbours
                vset = set(vs)
                for u2 in us:
                    if u2 in m and m[u2] not in vset:
                        return False
    return True


def _consistent(A, B, m, u, v) -> bool:
    for adjA, adjB in ((A.out, B.out), (A.inn, B.inn)):
        for a, us in adjA[u].items():
            vset = set(adjB[v][a])
            for u2 in us:
                if u2 in m and m[u2] not in vset:
                    return False
    return True


def _search(A: _Struct, B: _Struct, seed, cap):
    if not _compatible(A, B):
        return None
    m: dict[str, str] = {}
    used: set[str] = set()
    if not _propagate(A, B, m, used, list(seed)):
        return None
    return _extend(A, B, m, used, cap)


def _extend(A, B, m, used, cap):
    if len(m) == len(A.vertices):
        image = {(m[s], a, m[t]) for s, a, t in A.edges}
        return dict(m) if image == set(B.edges) else None
    free_b = [v for v in B.vertices if v not in used]
    best = None
    for u in A.vertices:
        if u in m:
            continue
        cands = [v for v in free_b if A.sig[u] == B.sig[v] and _consistent(A, B, m, u, v)]
        if best is None or len(cands) < len(best[1]):
            best = (u, cands)
            if len(cands) <= 1:
                break
    u, cands = best
    if len(cands) > 1 and len(A.vertices) > cap:
        raise SearchCapExceeded(
            f"isomorphism search would branch on a {len(A.vertices)}-vertex graph (cap {cap})"
        )
    for v in cands:
        m2, used2 = dict(m), set(used)
        if _propagate(A, B, m2, used2, [(u, v)]):
            found = _extend(A, B, m2, used2, cap)
            if found is not None:
                return found
    return None


def _det_strongly_connected(x) -> bool:
    if isinstance(x, Automaton):
        if not x.edges:
            return False
        x = x.graph
    return bool(is_deterministic(x)) and bool(is_strongly_connected(x))


def iso(a, b, cap: int = DEFAULT_CAP) -> dict[str, str] | None:
    """An isomorphism between two graphs or two automata, or None.

    Deterministic strongly connected inputs are matched by anchoring the
    smallest vertex of ``a`` on each vertex of ``b`` in turn; every anchor
    then forces the whole map, so no cap applies.
    """
    A, B = _struct(a), _struct(b)
    if _det_strongly_connected(a) and _det_strongly_connected(b):
        if not _compatible(A, B):
            return None
        s = A.vertices[0]
        for t in B.vertices:
            found = _search(A, B, [(s, t)], cap)
            if found is not None:
                return found
        return None
    return _search(A, B, [], cap)


def anchored_iso(
    g: LabeledDigraph, s: str, h: LabeledDigraph, t: str, cap: int = DEFAULT_CAP
) -> dict[str, str] | None:
    """An isomorphism from ``g`` to ``h`` sending ``s`` to ``t``, or None."""
    return _search(_struct(g), _struct(h), [(s, t)], cap)


def automorphism(g: LabeledDigraph, pairs, cap: int = DEFAULT_CAP) -> dict[str, str] | None:
    """An automorphism of ``g`` extending the given vertex pairs, or None."""
    S = _struct(g)
    return _search(S, S, list(pairs), cap)


def is_isomorphism(m: Mapping[str, str], a, b) -> bool:
    A, B = _struct(a), _struct(b)
    if sorted(m) != sorted(A.vertices) or sorted(set(m.values())) != sorted(B.vertices):
        return False
    if len(set(m.values())) != len(m):
        return False
    if any(A.color[v] != B.color[m[v]] for v in A.vertices):
        return False
    return {(m[s], x, m[t]) for s, x, t in A.edges} == set(B.edges)
