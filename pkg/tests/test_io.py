from __future__ import annotations

import json

import pytest

from cayleyrec import io
from cayleyrec.automata import Automaton, to_dfa
from cayleyrec.dfa import equivalent
from cayleyrec.errors import DuplicateEdge, EmptyGraph, NonTotalTable, SchemaError
from cayleyrec.fixtures import EVEN, FIXTURES, Z6_PRESENTATION
from cayleyrec.groups import cyclic
from cayleyrec.presentations import cayley_ball

DUMP = {
    "graph": (io.graph_to_json, io.graph_from_json),
    "automaton": (io.automaton_to_json, io.automaton_from_json),
    "group": (io.group_to_json, lambda o: io.group_from_json(o).group),
    "presentation": (io.presentation_to_json, io.presentation_from_json),
}


def test_round_trip_all_fixtures(tmp_path):
    for name, fx in FIXTURES.items():
        emit, parse = DUMP[fx.kind]
        path = tmp_path / f"{name}.json"
        path.write_text(io.dumps(emit(fx.payload)))
        back = parse(json.loads(path.read_text()))
        if fx.kind == "automaton":
            assert (back.edges, back.initial, back.final) == (fx.payload.edges, fx.payload.initial, fx.payload.final)
        elif fx.kind == "group":
            assert back.elements == fx.payload.elements and back.table == fx.payload.table
        else:
            assert back == fx.payload, name
        assert io.dumps(emit(back)) == path.read_text()


def test_graph_errors():
    with pytest.raises(EmptyGraph):
        io.graph_from_json({"edges": []})
    with pytest.raises(DuplicateEdge):
        io.graph_from_json({"edges": [["p", "a", "q"], ["p", "a", "q"]]})
    with pytest.raises(SchemaError):
        io.graph_from_json({"edges": [["p", "a", "q"]], "colour": 1})
    with pytest.raises(SchemaError):
        io.graph_from_json({"edges": [["p", "a", "q"]], "vertices": ["p", "q", "r"]})
    with pytest.raises(SchemaError):
        io.graph_from_json({"edges": [["p", "a"]]})


def test_group_errors():
    with pytest.raises(NonTotalTable):
        io.group_from_json({"elements": ["0", "1"], "product": [["0", "1"]], "identity": "0"})
    obj = io.group_to_json(cyclic(3))
    obj["inverse"] = {"0": "0", "1": "1", "2": "2"}
    with pytest.raises(SchemaError):
        io.group_from_json(obj)


def test_dfa_round_trip():
    d = to_dfa(Automaton(EVEN, {"p"}, {"p"}))
    back = io.dfa_from_json(io.dfa_to_json(d))
    assert equivalent(d, back)[0]


def test_parse_language_accepts_both_kinds(tmp_path):
    a = tmp_path / "a.json"
    a.write_text(io.dumps(io.automaton_to_json(Automaton(EVEN, {"p"}, {"p"}))))
    d = tmp_path / "d.json"
    d.write_text(io.dumps(io.dfa_to_json(to_dfa(Automaton(EVEN, {"p"}, {"p"})))))
    assert equivalent(io.parse_language(a), io.parse_language(d))[0]


def test_emit_dot(tmp_path):
    text = io.emit_dot(EVEN)
    assert text.startswith("digraph") and '"p" -> "q" [label="a"]' in text
    out = tmp_path / "ball.dot"
    io.emit_dot(cayley_ball(Z6_PRESENTATION, 2), out)
    assert out.read_text().startswith("digraph")
