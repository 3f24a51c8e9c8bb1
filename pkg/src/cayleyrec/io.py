"""JSON file formats and DOT emission.

Every persisted value is JSON with sorted keys and sorted collections, so
``emit(parse(text)) == text`` for canonical files.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .automata import Automaton
from .dfa import Dfa
from .errors import DuplicateEdge, EmptyGraph, NonTotalTable, SchemaError
from .graph import LabeledDigraph, sort_vertices, vkey
from .groups import GroupTable
from .presentations import Ball, Presentation


def read_json(path: str | Path) -> Any:
    if str(path) == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _require(obj: Any, keys: set[str], optional: set[str] = frozenset(), what: str = "value") -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{what}: expected a JSON object")
    missing = sorted(keys - obj.keys())
    if missing:
        raise SchemaError(f"{what}: missing key(s) {missing}")
    extra = sorted(obj.keys() - keys - optional)
    if extra:
        raise SchemaError(f"{what}: unexpected key(s) {extra}")
    return obj


def _token(x: Any, what: str) -> str:
    if not isinstance(x, str) or not x:
        raise SchemaError(f"{what} must be a non-empty string, got {x!r}")
    return x


def _edges(raw: Any, allow_empty: bool = False) -> list:
    if not isinstance(raw, list):
        raise SchemaError("edges: expected a list of [source, label, target] triples")
    if not raw and not allow_empty:
        raise EmptyGraph("edges: the edge list is empty")
    seen = set()
    out = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 3:
            raise SchemaError(f"edge {item!r}: expected [source, label, target]")
        e = (_token(item[0], "vertex"), _token(item[1], "label"), _token(item[2], "vertex"))
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {list(e)}")
        seen.add(e)
        out.append(e)
    return out


def edge_list(edges) -> list:
    return [list(e) for e in sorted(edges, key=lambda e: (vkey(e[0]), e[1], vkey(e[2])))]


# -- graphs ---------------------------------------------------------------------------------


def graph_from_json(obj: Any) -> LabeledDigraph:
    obj = _require(obj, {"edges"}, {"vertices"}, "graph")
    g = LabeledDigraph(_edges(obj["edges"]))
    if "vertices" in obj:
        listed = {_token(v, "vertex") for v in obj["vertices"]}
        extra = sort_vertices(listed - set(g.vertices))
        if extra:
            raise SchemaError(f"isolated vertices are not representable: {extra}")
        if listed != set(g.vertices):
            missing = sort_vertices(set(g.vertices) - listed)
            raise SchemaError(f"vertices list misses edge endpoints {missing}")
    return g


def graph_to_json(g: LabeledDigraph) -> dict:
    return {"edges": edge_list(g.edges)}


def parse_graph(path) -> LabeledDigraph:
    return graph_from_json(read_json(path))


# -- automata -------------------------------------------------------------------------------


def automaton_from_json(obj: Any) -> Automaton:
    obj = _require(obj, {"edges", "initial", "final"}, what="automaton")
    edges = _edges(obj["edges"], allow_empty=True)
    initial = [_token(v, "initial vertex") for v in obj["initial"]]
    final = [_token(v, "final vertex") for v in obj["final"]]
    return Automaton(edges, initial, final)


def automaton_to_json(a: Automaton) -> dict:
    return {
        "edges": edge_list(a.edges),
        "initial": sort_vertices(a.initial),
        "final": sort_vertices(a.final),
    }


def parse_automaton(path) -> Automaton:
    return automaton_from_json(read_json(path))


# -- DFAs --------------------------------------------------------------------------------------


def dfa_from_json(obj: Any) -> Dfa:
    obj = _require(obj, {"alphabet", "delta", "start", "accepting"}, {"sink"}, "dfa")
    alphabet = [_token(x, "letter") for x in obj["alphabet"]]
    if len(set(alphabet)) != len(alphabet):
        raise SchemaError("dfa: repeated letter in alphabet")
    delta = obj["delta"]
    if not isinstance(delta, list) or not delta:
        raise SchemaError("dfa: delta must be a non-empty list of rows")
    n = len(delta)
    for q, row in enumerate(delta):
        if not isinstance(row, list) or len(row) != len(alphabet):
            raise NonTotalTable(f"dfa: row {q} must have one target per letter")
        for x, t in zip(alphabet, row):
            if not isinstance(t, int) or not 0 <= t < n:
                raise NonTotalTable(f"dfa: transition ({q}, {x}) has no valid target")
    return Dfa(tuple(alphabet), [tuple(r) for r in delta], obj["start"], frozenset(obj["accepting"]), obj.get("sink"))


def dfa_to_json(d: Dfa) -> dict:
    return {
        "alphabet": list(d.alphabet),
        "delta": [list(r) for r in d.delta],
        "start": d.start,
        "accepting": sorted(d.accepting),
        "sink": d.sink,
    }


def parse_dfa(path) -> Dfa:
    return dfa_from_json(read_json(path))


def parse_language(path) -> Dfa:
    """A DFA file, or an automaton file read as the language it recognises."""
    from .automata import to_dfa

    obj = read_json(path)
    if isinstance(obj, dict) and "delta" in obj:
        return dfa_from_json(obj)
    if isinstance(obj, dict) and "initial" in obj:
        return to_dfa(automaton_from_json(obj))
    raise SchemaError(f"{path}: expected a DFA or an automaton")


# -- groups --------------------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupFile:
    group: GroupTable
    subset: tuple | None = None
    labels: dict | None = None


def group_from_json(obj: Any) -> GroupFile:
    obj = _require(obj, {"elements", "product", "identity"}, {"subset", "labels", "inverse"}, "group")
    elements = [_token(x, "element") for x in obj["elements"]]
    rows = obj["product"]
    if not isinstance(rows, list) or len(rows) != len(elements):
        raise NonTotalTable(f"group: product needs {len(elements)} rows")
    for x, row in zip(elements, rows):
        if not isinstance(row, list) or len(row) != len(elements):
            raise NonTotalTable(f"group: product row {x!r} needs {len(elements)} cells")
    group = GroupTable.from_names(elements, rows, _token(obj["identity"], "identity"))
    if "inverse" in obj:
        inv = obj["inverse"]
        if inv != group.inverse:
            raise SchemaError("group: stated inverse map disagrees with the product table")
    subset = tuple(obj["subset"]) if "subset" in obj else None
    labels = dict(obj["labels"]) if "labels" in obj else None
    if labels is not None and subset is None:
        subset = tuple(labels)
    return GroupFile(group, subset, labels)


def group_to_json(gf: GroupFile | GroupTable) -> dict:
    if isinstance(gf, GroupTable):
        gf = GroupFile(gf)
    g = gf.group
    out = {"elements": list(g.elements), "product": g.product_rows(), "identity": g.identity}
    if gf.subset is not None:
        out["subset"] = sort_vertices(gf.subset)
    if gf.labels is not None:
        out["labels"] = dict(gf.labels)
    return out


def parse_group(path) -> GroupFile:
    return group_from_json(read_json(path))


# -- presentations ---------------------------------------------------------------------------------


def presentation_from_json(obj: Any) -> Presentation:
    obj = _require(obj, {"alphabet", "relators"}, what="presentation")
    alphabet = [_token(x, "letter") for x in obj["alphabet"]]
    rels = obj["relators"]
    if not isinstance(rels, list):
        raise SchemaError("presentation: relators must be a list")
    return Presentation(alphabet, rels)


def presentation_to_json(p: Presentation) -> dict:
    single = all(len(x) == 1 for x in p.alphabet)
    rels = ["".join(r) if single else list(r) for r in p.relators]
    return {"alphabet": list(p.alphabet), "relators": rels}


def parse_presentation(path) -> Presentation:
    return presentation_from_json(read_json(path))


# -- DOT -----------------------------------------------------------------------------------------------


def _q(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def emit_dot(value, path: str | Path | None = None, name: str = "G") -> str:
    """DOT text for a graph, a skeleton (set of vertex pairs) or a ball; written to ``path`` if given."""
    lines = []
    if isinstance(value, Ball):
        lines.append(f"digraph {_q(name)} {{")
        lines.append(f"  // partial={str(value.partial).lower()} radius={value.radius}")
        for v in sort_vertices(value.vertices):
            lines.append(f"  {_q(v)};")
        for s, a, t in edge_list(value.edges):
            lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(a)}];")
    elif isinstance(value, LabeledDigraph):
        lines.append(f"digraph {_q(name)} {{")
        for s, a, t in edge_list(value.edges):
            lines.append(f"  {_q(s)} -> {_q(t)} [label={_q(a)}];")
    else:
        pairs = sorted(
            (sort_vertices(p) * 2)[:2] if len(p) == 1 else sort_vertices(p) for p in value
        )
        pairs.sort(key=lambda p: (vkey(p[0]), vkey(p[1])))
        lines.append(f"graph {_q(name)} {{")
        for s, t in pairs:
            lines.append(f"  {_q(s)} -- {_q(t)};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
