"""Named example graphs, automata, groups and presentations with their expected verdicts.

Figures that only exist as drawings were rebuilt from the properties stated
about them; each docstring says which properties pin the drawing down.
``Pair`` in the elementary-cycle example is taken to be the ``Even`` graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .automata import Automaton
from .cayley import (
    cayley_from_group,
    recognize_cayley,
    recognize_cayley_finite,
    recognize_generalized_cayley,
    recognize_weak_cayley,
)
from .cycles import is_circular, is_edge_transitive, is_elementary_circular, is_vertex_transitive
from .graph import LabeledDigraph, property_report
from .groups import GroupTable, corpus, cyclic, klein4, verify_group
from .presentations import Overflow, Presentation, todd_coxeter


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # graph | automaton | group | presentation
    payload: Any
    expected: dict
    doc: str = ""
    extra: dict = field(default_factory=dict)


# -- graphs ----------------------------------------------------------------------------------

EVEN = LabeledDigraph([("p", "a", "q"), ("p", "b", "p"), ("q", "a", "p"), ("q", "b", "q")])

# Two a-labelled 2-cycles between 1, 2 and 3, ..., chosen by exhaustive search over
# deterministic 2-label orientations of the Petersen skeleton: strongly connected,
# ababa ∈ L(1,1)∖L(2,2), baaba ∈ L(2,2)∖L(1,1), and no shorter or lexicographically
# smaller word separates 1 from 2.
PETERSEN = LabeledDigraph(
    [
        ("1", "a", "5"), ("1", "b", "6"), ("2", "a", "8"), ("2", "b", "3"),
        ("3", "a", "1"), ("3", "b", "7"), ("4", "a", "2"), ("4", "b", "9"),
        ("5", "a", "10"), ("5", "b", "4"), ("6", "a", "8"), ("6", "b", "9"),
        ("7", "a", "9"), ("7", "b", "10"), ("8", "a", "6"), ("8", "b", "10"),
        ("9", "a", "6"), ("9", "b", "7"), ("10", "a", "8"), ("10", "b", "5"),
    ]
)

# Simple, strongly connected, not deterministic; rotation by one is a free transitive Z3 action.
TRIANGLE_Z3 = LabeledDigraph(
    [(str(i), "a", str((i + 1) % 3)) for i in range(3)] + [(str(i), "a", str((i + 2) % 3)) for i in range(3)]
)

# Strongly connected and circular (every cycle language is ε + aa a*) but vertex 3 has out-degree 1.
TRIANGLE_NOT_VT = LabeledDigraph([("1", "a", "2"), ("1", "a", "3"), ("2", "a", "1"), ("2", "a", "3"), ("3", "a", "1")])

# Deterministic, strongly connected, L(0,0) = ((a+b)c)*; its canonical graph has two vertices.
ABC = LabeledDigraph([("0", "a", "1"), ("0", "b", "2"), ("1", "c", "0"), ("2", "c", "0")])

# L_G = a*, E(1) = E(2) = {a, aa, aaa}, E(3) = {a, aaa}.
A_STAR = LabeledDigraph(
    [("1", "a", "1"), ("2", "a", "2"), ("3", "a", "3"), ("1", "a", "2"), ("2", "a", "1"), ("2", "a", "3"), ("3", "a", "1")]
)

# Skeleton {1—2, 3—4} as a bidirected graph; K4 = {(), (12)(34), (13)(24), (14)(23)} acts freely and transitively.
KLEIN_SKELETON = LabeledDigraph([("1", "e", "2"), ("2", "e", "1"), ("3", "e", "4"), ("4", "e", "3")])


def cycle(n: int, label: str = "a", prefix: str = "") -> LabeledDigraph:
    return LabeledDigraph((f"{prefix}{i}", label, f"{prefix}{(i + 1) % n}") for i in range(n))


def disjoint(*graphs: LabeledDigraph) -> LabeledDigraph:
    edges = set()
    for g in graphs:
        if edges & g.edges or {v for e in edges for v in (e[0], e[2])} & set(g.vertices):
            raise ValueError("graphs share vertices")
        edges |= g.edges
    return LabeledDigraph(edges)


CYCLE6 = cycle(6)
CYCLE4 = cycle(4)
TWO_CYCLE = cycle(2)
TRIPLE_Z4 = disjoint(cycle(4, prefix="x"), cycle(4, prefix="y"), cycle(4, prefix="z"))
C4_C6 = disjoint(cycle(4, prefix="u"), cycle(6, prefix="w"))
SEMI_LINE = LabeledDigraph((str(i), "a", str(i + 1)) for i in range(10))
TWO_LOOPS = LabeledDigraph([("s", "a", "s"), ("t", "a", "t")])
Z2XZ2 = cayley_from_group(klein4(), ["(1,0)", "(0,1)"], {"(1,0)": "a", "(0,1)": "b"})

# -- presentations ---------------------------------------------------------------------------

Z6_PRESENTATION = Presentation("ab", ["aaaaaa", "bbb", "aba"])
TILING_PRESENTATION = Presentation("ab", ["aaaaaa", "bb", "ababab"])
TRIVIAL_PRESENTATION = Presentation("a", ["a"])
Z2_PRESENTATION = Presentation("a", ["aa"])
COLLAPSE_PRESENTATION = Presentation("ab", ["a", "b"])


# -- verdicts ----------------------------------------------------------------------------------

GRAPH_PROPERTIES: dict[str, Callable[[LabeledDigraph], bool]] = {
    "circular": lambda g: is_circular(g).circular,
    "elementary_circular": lambda g: is_elementary_circular(g).ok,
    "vertex_transitive": lambda g: is_vertex_transitive(g).ok,
    "edge_transitive": lambda g: is_edge_transitive(g).ok,
    "cayley": lambda g: recognize_cayley(g).accepted,
    "cayley_finite": lambda g: recognize_cayley_finite(g).accepted,
    "weak_cayley": lambda g: recognize_weak_cayley(g).accepted,
    "generalized_cayley": lambda g: recognize_generalized_cayley(g).accepted,
}


def graph_property(g: LabeledDigraph, prop: str) -> bool:
    if prop in GRAPH_PROPERTIES:
        return GRAPH_PROPERTIES[prop](g)
    return property_report(g)[prop].ok


def _presentation_property(p: Presentation, prop: str):
    t = todd_coxeter(p, 10000)
    if prop == "closed":
        return not isinstance(t, Overflow)
    if prop == "cosets":
        return None if isinstance(t, Overflow) else t.size
    raise KeyError(prop)


def actual(fx: Fixture, prop: str):
    if fx.kind == "graph":
        return graph_property(fx.payload, prop)
    if fx.kind == "automaton":
        from .automata import greatest_bisimulation

        if prop == "bisimulation_blocks":
            return len(greatest_bisimulation(fx.payload))
        raise KeyError(prop)
    if fx.kind == "group":
        if prop == "group":
            return verify_group(fx.payload).ok
        if prop == "order":
            return fx.payload.order
        if prop == "abelian":
            return fx.payload.is_abelian()
        raise KeyError(prop)
    if fx.kind == "presentation":
        return _presentation_property(fx.payload, prop)
    raise KeyError(fx.kind)


def mismatches(fx: Fixture) -> dict:
    """``{property: (expected, actual)}`` for every expectation that does not re-verify."""
    out = {}
    for prop, want in fx.expected.items():
        got = actual(fx, prop)
        if got != want:
            out[prop] = (want, got)
    return out


_CAYLEY = dict(
    simple=True, deterministic=True, co_deterministic=True, rooted=True, strongly_connected=True,
    connected=True, source_complete=True, co_complete=True, circular=True, elementary_circular=True,
    vertex_transitive=True, edge_transitive=True, cayley=True, cayley_finite=True, weak_cayley=True,
    generalized_cayley=True,
)


def _fixtures() -> list[Fixture]:
    f = [
        Fixture("even", "graph", EVEN, dict(_CAYLEY), "parity of the a-count; circular, E = {aa, b}"),
        Fixture(
            "petersen", "graph", PETERSEN,
            dict(simple=True, deterministic=True, strongly_connected=True, circular=False,
                 vertex_transitive=False, cayley=False, cayley_finite=False, weak_cayley=False),
            "deterministic labelling of the Petersen skeleton; not circular",
        ),
        Fixture(
            "triangle_z3", "graph", TRIANGLE_Z3,
            dict(simple=True, deterministic=False, strongly_connected=True, cayley=False,
                 vertex_transitive=True),
            "doubled-edge triangle with a free transitive Z3 action, rejected for non-determinism",
        ),
        Fixture(
            "triangle_not_vt", "graph", TRIANGLE_NOT_VT,
            dict(strongly_connected=True, circular=True, vertex_transitive=False, deterministic=False),
            "strongly connected and circular but not vertex-transitive",
        ),
        Fixture(
            "abc", "graph", ABC,
            dict(deterministic=True, strongly_connected=True, co_deterministic=False, circular=False, cayley=False),
            "L(0,0) = ((a+b)c)*; not isomorphic to its canonical graph",
        ),
        Fixture(
            "a_star", "graph", A_STAR,
            dict(circular=True, elementary_circular=False, deterministic=False),
            "circular with L = a* but not elementary circular",
        ),
        Fixture(
            "klein_skeleton", "graph", KLEIN_SKELETON,
            dict(deterministic=True, co_deterministic=True, simple=True, connected=False, rooted=False,
                 vertex_transitive=True, cayley=False, generalized_cayley=True),
            "skeleton {1—2, 3—4}; disconnected, so only a generalized Cayley graph",
        ),
        Fixture("cycle6", "graph", CYCLE6, dict(_CAYLEY), "Z6 with one generator"),
        Fixture("cycle4", "graph", CYCLE4, dict(_CAYLEY), "Z4 with one generator"),
        Fixture("two_cycle", "graph", TWO_CYCLE, dict(_CAYLEY), "Z2 with one generator"),
        Fixture("z2xz2", "graph", Z2XZ2, dict(_CAYLEY), "Klein group on two generators"),
        Fixture(
            "triple_z4", "graph", TRIPLE_Z4,
            dict(connected=False, vertex_transitive=True, cayley=False, generalized_cayley=True),
            "three disjoint 4-cycles",
        ),
        Fixture(
            "c4_c6", "graph", C4_C6,
            dict(connected=False, vertex_transitive=False, generalized_cayley=False),
            "a 4-cycle beside a 6-cycle",
        ),
        Fixture(
            "semi_line", "graph", SEMI_LINE,
            dict(connected=True, strongly_connected=False, rooted=True, circular=True, vertex_transitive=False,
                 cayley=False, weak_cayley=False),
            "the half-line truncated to 0..10",
        ),
        Fixture(
            "two_loops", "graph", TWO_LOOPS,
            dict(rooted=False, connected=False, generalized_cayley=True, cayley=False),
            "two disjoint self-loops",
        ),
        Fixture(
            "even_pp", "automaton", Automaton(EVEN, {"p"}, {"p"}), dict(bisimulation_blocks=2),
            "Even with I = F = {p}",
        ),
        Fixture(
            "abc_00", "automaton", Automaton(ABC, {"0"}, {"0"}), dict(bisimulation_blocks=2),
            "((a+b)c)* graph with I = F = {0}; vertices 1 and 2 merge",
        ),
        Fixture(
            "z6_presentation", "presentation", Z6_PRESENTATION, dict(closed=True, cosets=6),
            "aba = 1 forces b = a⁻², so the quotient is Z6",
        ),
        Fixture(
            "tiling_presentation", "presentation", TILING_PRESENTATION, dict(closed=False),
            "the (2,3,6) triangle group; infinite, so enumeration overflows",
        ),
        Fixture("trivial_presentation", "presentation", TRIVIAL_PRESENTATION, dict(closed=True, cosets=1)),
        Fixture("z2_presentation", "presentation", Z2_PRESENTATION, dict(closed=True, cosets=2)),
    ]
    for name, g in corpus().items():
        f.append(Fixture(f"group_{name}", "group", g, dict(group=True, order=g.order, abelian=g.is_abelian())))
    return f


FIXTURES: dict[str, Fixture] = {fx.name: fx for fx in _fixtures()}


def graph_fixtures() -> dict[str, LabeledDigraph]:
    return {name: fx.payload for name, fx in FIXTURES.items() if fx.kind == "graph"}


def corrupted_z6() -> GroupTable:
    """Z6 with a single cell changed, for the negative group-law check."""
    z = cyclic(6)
    rows = [list(r) for r in z.table]
    rows[2][3] = 4
    return GroupTable(z.elements, rows, z.identity)
