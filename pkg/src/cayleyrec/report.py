"""Property reports and the step-by-step Cayley recognition narrative."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .cayley import CayleyCertificate, reconstruct_group
from .cycles import (
    common_cycle_language,
    cycle_language,
    is_circular,
    is_edge_transitive,
    is_elementary_circular,
    is_vertex_transitive,
)
from .dfa import equivalent
from .errors import CapExceeded
from .graph import (
    Check,
    LabeledDigraph,
    is_co_complete,
    is_co_deterministic,
    is_deterministic,
    is_rooted,
    is_simple,
    is_source_complete,
    is_strongly_connected,
    property_report,
)
from .iso import DEFAULT_CAP, iso
from .langprops import is_conjugacy_closed, is_stable, letter_set, presentation_conditions


def word_json(w) -> Any:
    if w is None:
        return None
    w = tuple(w)
    if all(len(x) == 1 for x in w):
        return "".join(w)
    return list(w)


def to_jsonable(x: Any) -> Any:
    """Witnesses are nested tuples of vertices, labels and words; words become lists of letters."""
    if isinstance(x, Check):
        return {"ok": x.ok, "witness": to_jsonable(x.witness)}
    if isinstance(x, (frozenset, set)):
        items = [to_jsonable(v) for v in x]
        return sorted(items, key=lambda v: (len(v) if isinstance(v, (str, list)) else 0, str(v)))
    if isinstance(x, (tuple, list)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    return x


def cmd_check(g: LabeledDigraph, iso_cap: int = DEFAULT_CAP) -> dict[str, Check]:
    """Every structural predicate plus circularity and transitivity, each with its witness."""
    report = dict(property_report(g))
    circ = is_circular(g)
    report["circular"] = Check(circ.circular, circ.witness)
    for name, fn in (
        ("elementary_circular", lambda: is_elementary_circular(g)),
        ("vertex_transitive", lambda: is_vertex_transitive(g, iso_cap)),
        ("edge_transitive", lambda: is_edge_transitive(g, iso_cap)),
    ):
        try:
            res = fn()
        except CapExceeded as exc:
            res = Check(None, f"cap exceeded: {exc}")
        if name == "elementary_circular" and res.ok:
            res = Check(True)
        report[name] = res
    return report


@dataclass
class PipelineStep:
    name: str
    ok: bool | None  # None: not reached
    detail: Any = None


@dataclass
class PipelineReport:
    steps: list = field(default_factory=list)
    certificate: CayleyCertificate | None = None

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.steps)

    @property
    def failed_at(self) -> str | None:
        for s in self.steps:
            if s.ok is False:
                return s.name
        return None


PIPELINE = (
    "simple",
    "deterministic",
    "rooted",
    "strongly_connected",
    "circular",
    "co_deterministic",
    "complete",
    "conjugacy_closed_with_full_letter_set",
    "stable_cycle_language",
    "presentation_language",
    "cayley_graph_of_cycle_language",
    "isomorphic_to_cayley_graph",
)


def cmd_pipeline(g: LabeledDigraph, iso_cap: int = DEFAULT_CAP) -> PipelineReport:
    """Instantiate each step of the recognition argument on ``g`` and stop at the first failure.

    A rooted vertex-transitive graph is strongly connected; a deterministic
    strongly connected graph is vertex-transitive iff circular; it is then
    co-deterministic and complete, its cycle language is stable, closed
    under conjugacy and a group presentation language, and the Cayley graph
    of that language is isomorphic to ``g``.
    """
    rep = PipelineReport()
    state: dict[str, Any] = {}

    def lang():
        if "lang" not in state:
            state["lang"] = common_cycle_language(g)
        return state["lang"]

    def step_complete():
        a, b = is_source_complete(g), is_co_complete(g)
        return Check(a.ok and b.ok, a.witness if not a else b.witness)

    def step_conj():
        c = is_conjugacy_closed(lang())
        if not c:
            return c
        letters = letter_set(lang())
        return Check(letters == frozenset(g.labels), sorted(set(g.labels) - letters) or None)

    def step_stable():
        v = is_stable(lang())
        return Check(v.stable, v.witness)

    def step_presentation():
        v = presentation_conditions(lang(), strict=False)
        return Check(v.holds, {"i": v.cond_i, "ii": v.ii_witnesses, "iii": v.iii_witness})

    def step_cayley():
        cert = reconstruct_group(g, g.vertices[0], check=False)
        rep.certificate = cert
        h = cert.graph()
        state["h"] = h
        same, w = equivalent(cycle_language(h, cert.root), lang())
        return Check(same, w)

    def step_iso():
        m = iso(g, state["h"], iso_cap)
        return Check(m is not None, m)

    def circular():
        v = is_circular(g)
        return Check(v.circular, v.witness)

    checks = {
        "simple": lambda: is_simple(g),
        "deterministic": lambda: is_deterministic(g),
        "rooted": lambda: is_rooted(g),
        "strongly_connected": lambda: is_strongly_connected(g),
        "circular": circular,
        "co_deterministic": lambda: is_co_deterministic(g),
        "complete": step_complete,
        "conjugacy_closed_with_full_letter_set": step_conj,
        "stable_cycle_language": step_stable,
        "presentation_language": step_presentation,
        "cayley_graph_of_cycle_language": step_cayley,
        "isomorphic_to_cayley_graph": step_iso,
    }
    failed = False
    for name in PIPELINE:
        if failed:
            rep.steps.append(PipelineStep(name, None))
            continue
        res = checks[name]()
        rep.steps.append(PipelineStep(name, bool(res.ok), res.witness))
        failed = not res.ok
    return rep
