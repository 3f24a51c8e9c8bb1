"""Cayley graphs: construction from groups, recognition and group reconstruction.

Recognition follows the structural characterisation: a graph is a Cayley
graph iff it is deterministic, rooted, simple and vertex-transitive. On
acceptance the group is rebuilt on the vertex set itself, with the root as
identity, and the certificate regenerates the input edge for edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Mapping

from .cycles import common_cycle_language, is_circular, is_vertex_transitive
from .errors import (
    EmptySubset,
    InternalError,
    NonInjectiveLabeling,
    PreconditionViolated,
    SchemaError,
)
from .graph import (
    Check,
    LabeledDigraph,
    components,
    is_co_deterministic,
    is_connected,
    is_deterministic,
    is_rooted,
    is_simple,
    is_strongly_connected,
    reachable,
    roots,
    sort_vertices,
)
from .groups import GroupTable, cyclic, direct_product, verify_group
from .iso import DEFAULT_CAP, anchored_iso

INV_SUFFIX = "~inv"


@dataclass(frozen=True)
class CayleyCertificate:
    group: GroupTable
    subset: frozenset
    labeling: dict
    root: str
    embedding: dict | None = None  # group element -> graph vertex; None means identical names

    def graph(self) -> LabeledDigraph:
        g = cayley_from_group(self.group, self.subset, self.labeling)
        if self.embedding is not None:
            g = g.rename(self.embedding)
        return g


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    certificate: CayleyCertificate | None = None
    failure: tuple | None = None  # (property name, witness)
    notes: dict = field(default_factory=dict)

    def __bool__(self):
        return self.accepted


def _reject(prop: str, witness: Any = None, **notes) -> Verdict:
    return Verdict(False, None, (prop, witness), notes)


def cayley_from_group(group: GroupTable, subset, labeling: Mapping[str, str]) -> LabeledDigraph:
    """The edges ``g --[h]--> g·h`` for every element ``g`` and ``h`` in the subset."""
    subset = frozenset(subset)
    if not subset:
        raise EmptySubset("the generating subset must be non-empty")
    unknown = sort_vertices(subset - set(group.elements))
    if unknown:
        raise SchemaError(f"subset elements not in the group: {unknown}")
    missing = sort_vertices(subset - set(labeling))
    if missing:
        raise NonInjectiveLabeling(f"no label for subset elements {missing}")
    labels = [labeling[h] for h in subset]
    if len(set(labels)) != len(labels):
        raise NonInjectiveLabeling("two subset elements share a label")
    return LabeledDigraph(
        (x, labeling[h], group.mul(x, h)) for x in group.elements for h in subset
    )


# -- reconstruction -----------------------------------------------------------------


def _bfs_words(g: LabeledDigraph, root: str) -> dict[str, tuple]:
    words = {root: ()}
    todo = deque([root])
    while todo:
        s = todo.popleft()
        for a, ts in g.out[s].items():
            t = ts[0]
            if t not in words:
                words[t] = words[s] + (a,)
                todo.append(t)
    return words


def _follow(g: LabeledDigraph, s: str, word) -> str | None:
    for a in word:
        ts = g.out[s].get(a)
        if not ts:
            return None
        s = ts[0]
    return s


def _root_cycles(g: LabeledDigraph, root: str, words: dict, limit: int) -> list[tuple]:
    """A few non-empty cycle words at ``root``: one edge out, then a shortest way back."""
    back = {root: ()}
    todo = deque([root])
    while todo:
        t = todo.popleft()
        for a, ss in g.inn[t].items():
            for s in ss:
                if s not in back:
                    back[s] = (a,) + back[t]
                    todo.append(s)
    cycles = []
    for a, ts in g.out[root].items():
        c = (a,) + back[ts[0]]
        if c not in cycles:
            cycles.append(c)
        if len(cycles) == limit:
            break
    return cycles


def reconstruct_group(
    g: LabeledDigraph, root: str, check: bool = True, alternatives: int = 3
) -> CayleyCertificate:
    """Rebuild the group acting freely and transitively on a Cayley graph.

    The elements are the vertices and the root is the identity. The product
    ``s·t`` is the vertex reached from ``s`` by the label word of a path from
    the root to ``t``; on graphs of at most 64 vertices that choice is
    cross-checked against ``alternatives`` other words per vertex.
    """
    if root not in g.vertices:
        raise PreconditionViolated("root", root)
    if check:
        for name, pred in (
            ("simple", is_simple),
            ("deterministic", is_deterministic),
            ("co_deterministic", is_co_deterministic),
            ("strongly_connected", is_strongly_connected),
        ):
            res = pred(g)
            if not res:
                raise PreconditionViolated(name, res.witness)
        circ = is_circular(g)
        if not circ:
            raise PreconditionViolated("circular", circ.witness)

    words = _bfs_words(g, root)
    if len(words) != len(g.vertices):
        raise PreconditionViolated("strongly_connected", root)
    vs = list(g.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    rows = []
    for s in vs:
        row = []
        for t in vs:
            x = _follow(g, s, words[t])
            if x is None:
                raise PreconditionViolated("circular", (s, words[t]))
            row.append(idx[x])
        rows.append(row)
    if alternatives and len(vs) <= 64:
        for c in _root_cycles(g, root, words, alternatives):
            for t in vs:
                alt = c + words[t]
                for s in vs:
                    if _follow(g, s, alt) != vs[rows[idx[s]][idx[t]]]:
                        raise PreconditionViolated("circular", (s, alt, words[t]))
    group = GroupTable(tuple(vs), rows, root)
    ok = verify_group(group)
    if not ok:
        raise PreconditionViolated("group", ok.witness)
    labeling = {}
    for a, ts in g.out[root].items():
        labeling[ts[0]] = a
    cert = CayleyCertificate(group, frozenset(labeling), labeling, root)
    if cert.graph() != g:
        raise PreconditionViolated("round_trip", sorted(cert.graph().edges ^ g.edges)[:2])
    return cert


# -- recognisers -------------------------------------------------------------------------


def _first_failure(g, preds) -> Verdict | None:
    for name, pred in preds:
        res = pred(g)
        if not res:
            return _reject(name, res.witness)
    return None


def _not_strongly_connected(g: LabeledDigraph) -> Verdict:
    # a vertex that cannot get back to a source-side vertex cannot be its automorphic image
    rs = sort_vertices(roots(g)) or [g.vertices[0]]
    r = rs[0]
    back = reachable(g, [r], backwards=True)
    stuck = next(v for v in g.vertices if v not in back)
    return _reject("vertex_transitive", (r, stuck), reason="not strongly connected")


def recognize_cayley(g: LabeledDigraph) -> Verdict:
    """Deterministic, rooted, simple and vertex-transitive, with a certificate."""
    bad = _first_failure(g, (("simple", is_simple), ("deterministic", is_deterministic), ("rooted", is_rooted)))
    if bad is not None:
        return bad
    if not is_strongly_connected(g):
        return _not_strongly_connected(g)
    circ = is_circular(g)
    if not circ:
        return _reject("circular", circ.witness)
    root = g.vertices[0]
    try:
        cert = reconstruct_group(g, root, check=False)
    except PreconditionViolated as exc:
        raise InternalError(f"reconstruction failed on a recognised graph: {exc}") from exc
    return Verdict(True, cert)


def recognize_cayley_finite(g: LabeledDigraph) -> Verdict:
    """Same verdicts as :func:`recognize_cayley`, with connectedness in place of a root."""
    bad = _first_failure(g, (("simple", is_simple), ("deterministic", is_deterministic), ("connected", is_connected)))
    if bad is not None:
        return bad
    if not is_strongly_connected(g):
        return _not_strongly_connected(g)
    circ = is_circular(g)
    if not circ:
        return _reject("circular", circ.witness)
    try:
        cert = reconstruct_group(g, g.vertices[0], check=False)
    except PreconditionViolated as exc:
        raise InternalError(f"reconstruction failed on a recognised graph: {exc}") from exc
    return Verdict(True, cert)


def inv_labels(g: LabeledDigraph) -> frozenset:
    """Labels ``a`` with some ``ab`` in the common cycle language."""
    lang = common_cycle_language(g)
    return frozenset(
        a for a in g.labels if any(lang.accepts((a, b)) for b in g.labels)
    )


def complete_weak(g: LabeledDigraph) -> LabeledDigraph:
    """Add a reversed ``a~inv`` edge for every edge whose label has no inverse word ``ab``."""
    inv = inv_labels(g)
    extra = set()
    for s, a, t in g.edges:
        if a in inv:
            continue
        bar = a + INV_SUFFIX
        if bar in g.labels:
            raise SchemaError(f"label {bar!r} collides with the reserved inverse suffix")
        extra.add((t, bar, s))
    return LabeledDigraph(g.edges | extra)


def recognize_weak_cayley(g: LabeledDigraph, cap: int = DEFAULT_CAP) -> Verdict:
    """Deterministic, co-deterministic, connected, simple and vertex-transitive graphs.

    The certificate comes from the completed graph, restricted to the
    elements whose labels occur in ``g``.
    """
    bad = _first_failure(
        g,
        (
            ("deterministic", is_deterministic),
            ("co_deterministic", is_co_deterministic),
            ("connected", is_connected),
            ("simple", is_simple),
            ("vertex_transitive", lambda x: is_vertex_transitive(x, cap)),
        ),
    )
    if bad is not None:
        return bad
    inv = inv_labels(g)
    h = complete_weak(g)
    full = recognize_cayley(h)
    if not full:
        raise InternalError(f"completion of a weak Cayley graph was rejected: {full.failure}")
    cert = full.certificate
    own = set(g.labels)
    k = frozenset(x for x in cert.subset if cert.labeling[x] in own)
    lab = {x: cert.labeling[x] for x in k}
    restricted = CayleyCertificate(cert.group, k, lab, cert.root)
    if restricted.graph() != g:
        raise InternalError("restricted certificate does not regenerate the graph")
    return Verdict(True, restricted, notes={"inv_labels": sorted(inv), "completed_edges": len(h) - len(g)})


def recognize_generalized_cayley(g: LabeledDigraph, cap: int = DEFAULT_CAP) -> Verdict:
    """Deterministic, co-deterministic, simple, vertex-transitive graphs, possibly disconnected.

    Components are indexed by ``Z_k`` in order of their smallest vertex and
    the group is ``V_I × Z_k`` for the first component ``I``.
    """
    bad = _first_failure(
        g,
        (
            ("deterministic", is_deterministic),
            ("co_deterministic", is_co_deterministic),
            ("simple", is_simple),
        ),
    )
    if bad is not None:
        return bad
    comps = components(g)
    rep = comps[0]
    vt = is_vertex_transitive(rep, cap)
    if not vt:
        return _reject("vertex_transitive", vt.witness)
    base = rep.vertices[0]
    isos = [{v: v for v in rep.vertices}]
    for c in comps[1:]:
        f = anchored_iso(rep, base, c, c.vertices[0], cap)
        if f is None:
            return _reject("vertex_transitive", (base, c.vertices[0]), reason="components not isomorphic")
        isos.append(f)
    weak = recognize_weak_cayley(rep, cap)
    if not weak:
        raise InternalError(f"component rejected after passing all checks: {weak.failure}")
    wc = weak.certificate
    k = len(comps)
    zk = cyclic(k)
    group = direct_product(wc.group, zk)
    subset = frozenset(f"({h},{zk.identity})" for h in wc.subset)
    labeling = {f"({h},{zk.identity})": wc.labeling[h] for h in wc.subset}
    embedding = {
        f"({v},{j})": isos[int(j)][v] for v in wc.group.elements for j in zk.elements
    }
    cert = CayleyCertificate(group, subset, labeling, embedding[f"({wc.root},0)"], embedding)
    if cert.graph() != g:
        raise InternalError("assembled isomorphism does not map the product Cayley graph onto the input")
    return Verdict(True, cert, notes={"components": k})


# -- actions ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Action:
    group: GroupTable
    carrier: frozenset
    mapping: dict  # (element, vertex) -> vertex

    def act(self, x: str, s: str) -> str | None:
        return self.mapping.get((x, s))


@dataclass(frozen=True)
class ActionReport:
    is_action: Check
    is_morphism: Check
    is_transitive: Check
    is_free: Check

    def as_dict(self) -> dict[str, Check]:
        return {
            "is_action": self.is_action,
            "is_morphism": self.is_morphism,
            "is_transitive": self.is_transitive,
            "is_free": self.is_free,
        }


def left_action(group: GroupTable) -> Action:
    """Left multiplication of a group on its own elements."""
    return Action(
        group,
        frozenset(group.elements),
        {(x, y): group.mul(x, y) for x in group.elements for y in group.elements},
    )


def check_action(act: Action, g: LabeledDigraph | None = None) -> ActionReport:
    grp = act.group
    carrier = sort_vertices(act.carrier)
    els = grp.elements

    def action_laws():
        for x in els:
            for s in carrier:
                if act.act(x, s) not in act.carrier:
                    return Check(False, ("total", x, s))
        for s in carrier:
            if act.act(grp.identity, s) != s:
                return Check(False, ("identity", s))
        for h in els:
            for x in els:
                for s in carrier:
                    if act.act(h, act.act(x, s)) != act.act(grp.mul(h, x), s):
                        return Check(False, ("composition", h, x, s))
        return Check(True)

    laws = action_laws()
    if not laws:
        bad = Check(False, ("not an action", laws.witness))
        return ActionReport(laws, bad, bad, bad)

    def morphism():
        if g is None:
            return Check(True)
        for x in els:
            for s, a, t in g.sorted_edges:
                if (act.act(x, s), a, act.act(x, t)) not in g.edges:
                    return Check(False, (x, (s, a, t)))
        return Check(True)

    def transitive():
        s0 = carrier[0]
        orbit = {act.act(x, s0) for x in els}
        for t in carrier:
            if t not in orbit:
                return Check(False, (s0, t))
        return Check(True)

    def free():
        for s in carrier:
            seen: dict[str, str] = {}
            for x in els:
                t = act.act(x, s)
                if t in seen:
                    return Check(False, (seen[t], x, s))
                seen[t] = x
        return Check(True)

    return ActionReport(laws, morphism(), transitive(), free())
