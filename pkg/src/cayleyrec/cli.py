"""Command-line interface.

Exit codes: 0 accepted/true, 1 rejected/false (witness on stdout),
2 usage or parse error, 3 a search or enumeration cap was hit.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import automata, io
from .cayley import (
    CayleyCertificate,
    Verdict,
    cayley_from_group,
    reconstruct_group,
    recognize_cayley,
    recognize_cayley_finite,
    recognize_generalized_cayley,
    recognize_weak_cayley,
)
from .cycles import cycle_language, elementary_cycles, is_elementary_circular
from .dfa import show
from .errors import CapExceeded, CayleyError, ConditionViolation, NotApplicable, PreconditionViolated, SchemaError
from .graph import LabeledDigraph, skeleton, sort_vertices
from .groups import corpus
from .iso import DEFAULT_CAP, iso
from .langprops import is_conjugacy_closed, is_stable, presentation_conditions
from .presentations import (
    DEFAULT_MAX_COSETS,
    DEFAULT_MAX_LEN,
    DEFAULT_MAX_STEPS,
    Overflow,
    cayley_ball,
    cayley_of_presentation,
    thue_reachable,
    todd_coxeter,
)
from .report import cmd_check, cmd_pipeline, to_jsonable, word_json

OK, REJECTED, USAGE, CAP = 0, 1, 2, 3


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, obj, text: str | None = None):
        if self.fmt == "text" and text is not None:
            sys.stdout.write(text.rstrip("\n") + "\n")
        else:
            sys.stdout.write(io.dumps(to_jsonable(obj)))

    def graph(self, g: LabeledDigraph):
        if self.fmt == "dot":
            sys.stdout.write(io.emit_dot(g))
        else:
            self.emit(io.graph_to_json(g), "\n".join(f"{s} -{a}-> {t}" for s, a, t in io.edge_list(g.edges)))

    def automaton(self, a: automata.Automaton):
        if self.fmt == "dot" and a.edges:
            sys.stdout.write(io.emit_dot(a.graph))
        else:
            lines = [f"{s} -{x}-> {t}" for s, x, t in io.edge_list(a.edges)]
            lines.append(f"initial: {' '.join(sort_vertices(a.initial))}")
            lines.append(f"final: {' '.join(sort_vertices(a.final))}")
            self.emit(io.automaton_to_json(a), "\n".join(lines))


def certificate_json(cert: CayleyCertificate) -> dict:
    out = {
        "group": io.group_to_json(cert.group),
        "subset": sort_vertices(cert.subset),
        "labels": dict(sorted(cert.labeling.items())),
        "root": cert.root,
        "order": cert.group.order,
        "abelian": cert.group.is_abelian(),
    }
    if cert.embedding is not None:
        out["embedding"] = dict(sorted(cert.embedding.items()))
    return out


def verdict_json(v: Verdict) -> dict:
    out = {"accepted": v.accepted}
    if v.certificate is not None:
        out["certificate"] = certificate_json(v.certificate)
    if v.failure is not None:
        out["failed"] = v.failure[0]
        out["witness"] = to_jsonable(v.failure[1])
    if v.notes:
        out["notes"] = to_jsonable(v.notes)
    return out


def _verdict_text(v: Verdict) -> str:
    if v.accepted:
        c = v.certificate
        return f"accepted: group of order {c.group.order}, generators {sort_vertices(c.subset)}, root {c.root}"
    return f"rejected: {v.failure[0]} fails (witness {to_jsonable(v.failure[1])})"


# -- subcommands ----------------------------------------------------------------------------------


def run_check(args, out):
    g = io.parse_graph(args.graph)
    rep = cmd_check(g, args.iso_cap)
    lines = [f"{k:22} {'yes' if c.ok else ('no ' if c.ok is False else '?  ')} {'' if c.ok else to_jsonable(c.witness)}" for k, c in rep.items()]
    out.emit(rep, "\n".join(lines))
    return OK if all(c.ok for c in rep.values()) else REJECTED


def run_pipeline(args, out):
    g = io.parse_graph(args.graph)
    rep = cmd_pipeline(g, args.iso_cap)
    obj = {
        "ok": rep.ok,
        "failed_at": rep.failed_at,
        "steps": [{"step": s.name, "ok": s.ok, "detail": s.detail} for s in rep.steps],
    }
    if rep.certificate is not None:
        obj["certificate"] = certificate_json(rep.certificate)
    text = "\n".join(
        f"{'pass' if s.ok else ('FAIL' if s.ok is False else 'skip')}  {s.name}" for s in rep.steps
    )
    out.emit(obj, text)
    return OK if rep.ok else REJECTED


def _load_graph_or_automaton(path):
    obj = io.read_json(path)
    if isinstance(obj, dict) and "initial" in obj:
        return io.automaton_from_json(obj)
    return io.graph_from_json(obj)


def run_iso(args, out):
    a, b = _load_graph_or_automaton(args.a), _load_graph_or_automaton(args.b)
    m = iso(a, b, args.iso_cap)
    out.emit({"isomorphic": m is not None, "map": m}, "isomorphic" if m else "not isomorphic")
    return OK if m is not None else REJECTED


def _automaton_op(fn):
    def run(args, out):
        a = io.parse_automaton(args.automaton)
        out.automaton(fn(a))
        return OK

    return run


def run_canon(args, out):
    out.automaton(automata.canonical(io.parse_language(args.language)))
    return OK


def run_cycle_lang(args, out):
    g = io.parse_graph(args.graph)
    if args.vertex not in g.vertices:
        raise SchemaError(f"no vertex {args.vertex!r}")
    d = cycle_language(g, args.vertex)
    if out.fmt == "text":
        words = [show(w) for w in d.words(args.max_len)]
        out.emit(None, "\n".join(words))
    else:
        out.emit(io.dfa_to_json(d))
    return OK


def run_elem_cycles(args, out):
    g = io.parse_graph(args.graph)
    vs = [args.vertex] if args.vertex else list(g.vertices)
    res = {v: sorted((word_json(w) for w in elementary_cycles(g, v)), key=lambda w: (len(w), w)) for v in vs}
    text = "\n".join(f"{v}: {{{', '.join(map(str, ws))}}}" for v, ws in res.items())
    if args.vertex:
        out.emit(res, text)
        return OK
    ec = is_elementary_circular(g)
    out.emit({"cycles": res, "elementary_circular": ec.ok}, text + f"\nelementary circular: {ec.ok}")
    return OK if ec.ok else REJECTED


def run_stable(args, out):
    v = is_stable(io.parse_language(args.language))
    wit = None if v.witness is None else [word_json(w) for w in v.witness]
    out.emit({"stable": v.stable, "witness": wit}, f"stable: {v.stable}" + (f" witness (u,v,w) = {wit}" if wit else ""))
    return OK if v.stable else REJECTED


def run_conjugacy(args, out):
    c = is_conjugacy_closed(io.parse_language(args.language))
    out.emit({"conjugacy_closed": c.ok, "witness": word_json(c.witness)}, f"closed under conjugacy: {c.ok}")
    return OK if c.ok else REJECTED


def run_presentation_conditions(args, out):
    try:
        v = presentation_conditions(io.parse_language(args.language), strict=True)
    except NotApplicable as exc:
        out.emit({"applicable": False, "reason": str(exc)}, f"not applicable: {exc}")
        return REJECTED
    obj = {
        "applicable": v.applicable,
        "i": v.cond_i,
        "ii": v.cond_ii,
        "ii_witnesses": {a: word_json(u) for a, u in v.ii_witnesses.items()},
        "iii": v.cond_iii,
        "iii_witness": None if v.iii_witness is None else [v.iii_witness[0], v.iii_witness[1], word_json(v.iii_witness[2])],
    }
    out.emit(obj, f"(i) {v.cond_i}  (ii) {v.cond_ii}  (iii) {v.cond_iii}")
    return OK if v.holds else REJECTED


def _recognizer(fn, with_cap=False):
    def run(args, out):
        g = io.parse_graph(args.graph)
        v = fn(g, args.iso_cap) if with_cap else fn(g)
        out.emit(verdict_json(v), _verdict_text(v))
        return OK if v.accepted else REJECTED

    return run


def run_is_cayley(args, out):
    return _recognizer(recognize_cayley_finite if args.finite else recognize_cayley)(args, out)


def run_reconstruct(args, out):
    g = io.parse_graph(args.graph)
    root = args.root or g.vertices[0]
    try:
        cert = reconstruct_group(g, root)
    except PreconditionViolated as exc:
        out.emit({"accepted": False, "failed": exc.prop, "witness": to_jsonable(exc.witness)}, str(exc))
        return REJECTED
    out.emit(certificate_json(cert), f"group of order {cert.group.order} with identity {cert.root}")
    return OK


def run_from_group(args, out):
    gf = io.parse_group(args.group)
    subset = args.subset.split(",") if args.subset else gf.subset
    if not subset:
        raise SchemaError("no generating subset: give --subset or a 'subset' key")
    labels = gf.labels or {h: f"g{i}" for i, h in enumerate(sort_vertices(subset))}
    out.graph(cayley_from_group(gf.group, subset, labels))
    return OK


def run_from_presentation(args, out):
    p = io.parse_presentation(args.presentation)
    try:
        g = cayley_of_presentation(p, args.max_cosets)
    except ConditionViolation as exc:
        out.emit({"condition": exc.condition, "witness": to_jsonable(exc.witness)}, str(exc))
        return REJECTED
    if isinstance(g, Overflow):
        out.emit({"overflow": True, "cosets": g.cosets, "limit": g.limit}, f"overflow after {g.cosets} cosets")
        return CAP
    out.graph(g)
    return OK


def run_cosets(args, out):
    p = io.parse_presentation(args.presentation)
    t = todd_coxeter(p, args.max_cosets)
    if isinstance(t, Overflow):
        out.emit({"overflow": True, "cosets": t.cosets, "limit": t.limit}, f"overflow after {t.cosets} cosets")
        return CAP
    obj = {"cosets": t.size, "words": [word_json(w) for w in t.words], "action": [list(r) for r in t.action]}
    out.emit(obj, f"closed with {t.size} cosets")
    return OK


def run_ball(args, out):
    p = io.parse_presentation(args.presentation)
    b = cayley_ball(p, args.radius, args.max_cosets)
    if args.dot:
        io.emit_dot(b, args.dot)
    if out.fmt == "dot":
        sys.stdout.write(io.emit_dot(b))
    else:
        obj = {"radius": b.radius, "partial": b.partial, "closed": b.closed, "vertices": list(b.vertices),
               "edges": io.edge_list(b.edges)}
        out.emit(obj, f"{len(b.vertices)} vertices, {len(b.edges)} edges, partial={b.partial}")
    return OK


def run_thue(args, out):
    p = io.parse_presentation(args.presentation)
    tr = thue_reachable(p, getattr(args, "from"), args.to, args.max_len, args.max_steps)
    if tr is None:
        out.emit({"found": False, "note": "nothing within the bounds; this is not a disproof"}, "no derivation within bounds")
        return REJECTED
    steps = [{"op": s.op, "position": s.position, "relator": word_json(s.relator), "word": word_json(s.word)} for s in tr.steps]
    text = "\n".join([show(tr.start)] + [f"{s.op:6} {show(s.relator)} @{s.position} -> {show(s.word)}" for s in tr.steps])
    out.emit({"found": True, "steps": steps}, text)
    return OK


def run_emit_dot(args, out):
    g = io.parse_graph(args.graph)
    text = io.emit_dot(skeleton(g) if args.skeleton else g, args.output)
    if not args.output:
        sys.stdout.write(text)
    return OK


def run_fixtures(args, out):
    from .fixtures import FIXTURES, mismatches

    names = [args.name] if args.name else sorted(FIXTURES)
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        raise SchemaError(f"unknown fixture(s) {unknown}")
    if args.dump:
        d = Path(args.dump)
        d.mkdir(parents=True, exist_ok=True)
        dump = {"graph": io.graph_to_json, "automaton": io.automaton_to_json,
                "group": io.group_to_json, "presentation": io.presentation_to_json}
        for n in names:
            fx = FIXTURES[n]
            (d / f"{n}.json").write_text(io.dumps(dump[fx.kind](fx.payload)))
    report = {}
    status = OK
    for n in names:
        fx = FIXTURES[n]
        entry = {"kind": fx.kind, "doc": fx.doc, "expected": fx.expected}
        if args.verify:
            bad = mismatches(fx)
            entry["verified"] = not bad
            if bad:
                entry["mismatches"] = {k: list(v) for k, v in bad.items()}
                status = REJECTED
        report[n] = entry
    if args.random:
        rng = random.Random(args.seed)
        groups = corpus()
        failures = []
        for _ in range(args.random):
            name = rng.choice(sorted(groups))
            grp = groups[name]
            while True:
                subset = [x for x in grp.elements if rng.random() < 0.5]
                if subset and grp.generates(subset):
                    break
            g = cayley_from_group(grp, subset, {h: f"x{i}" for i, h in enumerate(subset)})
            v = recognize_cayley(g)
            if not v or v.certificate.graph() != g:
                failures.append([name, subset])
        report["_random"] = {"count": args.random, "seed": args.seed, "failures": failures}
        if failures:
            status = REJECTED
    text = "\n".join(
        f"{n:22} {e['kind']:12} {'' if 'verified' not in e else ('ok' if e['verified'] else 'MISMATCH')}"
        for n, e in report.items() if not n.startswith("_")
    )
    out.emit(report, text)
    return status


# -- parser ---------------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "dot"], default="json")
    common.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    common.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    common.add_argument("--iso-cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="cayleyrec", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, *positional):
        sp = sub.add_parser(name, help=help, parents=[common])
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(run=fn)
        return sp

    add("check", run_check, "structural, circularity and transitivity report", "graph")
    add("pipeline", run_pipeline, "step-by-step Cayley recognition argument", "graph")
    add("iso", run_iso, "isomorphism of two graphs or automata", "a", "b")
    add("min", _automaton_op(automata.minimize), "quotient by the greatest bisimulation", "automaton")
    add("det", _automaton_op(automata.determinize), "accessible subset construction", "automaton")
    add("codet", _automaton_op(automata.co_determinize), "co-determinisation", "automaton")
    add("brzozowski", _automaton_op(automata.brzozowski), "determinise the co-determinisation", "automaton")
    add("canon", run_canon, "canonical residual automaton of a language", "language")
    add("cycle-lang", run_cycle_lang, "cycle language at a vertex", "graph", "vertex")
    sp = add("elem-cycles", run_elem_cycles, "elementary cycle words", "graph")
    sp.add_argument("vertex", nargs="?")
    add("stable", run_stable, "stability of a language", "language")
    add("conjugacy", run_conjugacy, "closure under conjugacy", "language")
    add("presentation-conditions", run_presentation_conditions, "group presentation conditions", "language")
    sp = add("is-cayley", run_is_cayley, "recognise a Cayley graph", "graph")
    sp.add_argument("--finite", action="store_true", help="use connectedness in place of a root")
    add("is-weak-cayley", _recognizer(recognize_weak_cayley, True), "recognise a weak Cayley graph", "graph")
    add("is-generalized-cayley", _recognizer(recognize_generalized_cayley, True), "recognise a generalized Cayley graph", "graph")
    sp = add("reconstruct", run_reconstruct, "rebuild the group of a Cayley graph", "graph")
    sp.add_argument("--root")
    sp = add("from-group", run_from_group, "Cayley graph of a group table", "group")
    sp.add_argument("--subset", help="comma-separated generating elements")
    add("from-presentation", run_from_presentation, "Cayley graph of a finite presentation", "presentation")
    add("cosets", run_cosets, "coset table of a presentation", "presentation")
    sp = add("ball", run_ball, "ball of a Cayley graph of a presentation", "presentation")
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--dot", help="also write DOT to this file")
    sp = add("thue", run_thue, "bounded search for a Thue derivation", "presentation")
    sp.add_argument("--from", required=True, dest="from")
    sp.add_argument("--to", required=True)
    sp.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    sp = add("emit-dot", run_emit_dot, "DOT rendering of a graph or its skeleton", "graph")
    sp.add_argument("--skeleton", action="store_true")
    sp.add_argument("-o", "--output")
    sp = add("fixtures", run_fixtures, "list, dump or verify the example corpus")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--dump", metavar="DIR")
    sp.add_argument("--random", type=int, default=0, help="also check this many random Cayley graphs")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    for cap in ("max_cosets", "max_len", "iso_cap"):
        if getattr(args, cap) <= 0:
            print(f"error: --{cap.replace('_', '-')} must be positive", file=sys.stderr)
            return USAGE
    out = Output(args.format)
    try:
        return args.run(args, out)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return CAP
    except (CayleyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
