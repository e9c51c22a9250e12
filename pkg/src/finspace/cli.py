"""Command-line front end: poset files, DOT output and one verb per
library capability.

File format (``.poset``): line oriented, ``#`` comments, UTF-8::

    poset <name>
    el <label>
    cov <a> <b>      # a < b, b covers a
    base <label>     # optional basepoint

A JSON mirror {"name", "elements", "covers", "basepoint"} is accepted
and produced for ``.json`` paths.

Exit codes: 0 success, 1 negative decision, 2 input error, 3 guard
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import generators, homotopy, maps, reduction, simplicial, topology
from .errors import FinspaceError, GuardExceeded, ParseError, ValidationError
from .poset import Poset

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


@dataclass
class PosetDocument:
    name: str
    elements: list
    covers: list  # label pairs
    basepoint: str | None = None

    def to_poset(self):
        try:
            p = Poset.from_covers(self.elements, self.covers)
        except FinspaceError as e:
            raise ValidationError(str(e)) from e
        if self.basepoint is not None and self.basepoint not in self.elements:
            raise ValidationError(f"basepoint {self.basepoint!r} is not an element")
        return p

    def basepoint_id(self, p):
        return None if self.basepoint is None else p.index(self.basepoint)


def parse_poset(text):
    """Parse the line-oriented poset format."""
    doc = PosetDocument("", [], [], None)
    have_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "poset":
            if len(parts) != 2:
                raise ParseError("expected: poset <name>", line=lineno)
            doc.name = parts[1]
            have_header = True
        elif kw == "el":
            if len(parts) != 2:
                raise ParseError("expected: el <label>", line=lineno)
            doc.elements.append(parts[1])
        elif kw == "cov":
            if len(parts) != 3:
                raise ParseError("expected: cov <a> <b>", line=lineno)
            doc.covers.append((parts[1], parts[2]))
        elif kw == "base":
            if len(parts) != 2:
                raise ParseError("expected: base <label>", line=lineno)
            doc.basepoint = parts[1]
        else:
            raise ParseError(f"unknown directive {kw!r}", line=lineno)
    if not have_header:
        raise ParseError("missing 'poset <name>' header")
    return doc


def emit_poset(doc):
    lines = [f"poset {doc.name}"]
    lines += [f"el {lab}" for lab in doc.elements]
    lines += [f"cov {a} {b}" for a, b in doc.covers]
    if doc.basepoint is not None:
        lines.append(f"base {doc.basepoint}")
    return "\n".join(lines) + "\n"


def document_from_poset(p, name, basepoint=None):
    covers = sorted((p.labels[a], p.labels[b]) for a, b in p.covers)
    base = None if basepoint is None else p.labels[basepoint]
    return PosetDocument(name, list(p.labels), covers, base)


def load_document(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}") from e
    if str(path).endswith(".json"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON in {path}: {e}") from e
        return PosetDocument(
            data.get("name", "unnamed"),
            list(data["elements"]),
            [tuple(c) for c in data["covers"]],
            data.get("basepoint"),
        )
    return parse_poset(text)


def dump_document(doc, json_mode=False):
    if json_mode:
        return json.dumps(
            {
                "name": doc.name,
                "elements": doc.elements,
                "covers": [list(c) for c in doc.covers],
                "basepoint": doc.basepoint,
            },
            indent=2,
        ) + "\n"
    return emit_poset(doc)


def emit_dot(p, trace=None):
    """Hasse diagram as a DOT digraph; trace removals grayed out."""
    removed = {}
    if trace is not None:
        for step in trace.steps:
            for x in step.removed:
                removed[x] = step.mapping[x]
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, lab in enumerate(p.labels):
        attrs = [f'label="{lab}"']
        if i in removed:
            attrs.append('style=filled, fillcolor=gray80')
            attrs.append(f'xlabel="-> {p.labels[removed[i]]}"')
        lines.append(f'  n{i} [{", ".join(attrs)}];')
    for a, b in sorted(p.covers):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands --------------------------------------------------------


def _report(args, data, summary):
    if args.json:
        print(json.dumps(data, indent=2, default=str))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")
    print(summary, file=sys.stderr)


def _basepoint(args, doc, p):
    return doc.basepoint_id(p) if args.pointed else None


def cmd_gen(args):
    family = args.family
    params = args.params
    if family == "chain":
        p = generators.chain(int(params[0]))
    elif family == "antichain":
        p = generators.antichain(int(params[0]))
    elif family == "fence":
        p = generators.fence(int(params[0]))
    elif family == "crown":
        p = generators.crown(int(params[0]))
    elif family == "khalimsky":
        p = generators.khalimsky_interval(int(params[0]), int(params[1]))
    elif family == "spider":
        pp = generators.spider([int(x) for x in params])
        doc = document_from_poset(pp.poset, "spider", pp.basepoint)
        sys.stdout.write(dump_document(doc, args.json))
        return EXIT_OK
    elif family == "random":
        n, prob = int(params[0]), float(params[1])
        p = generators.random_poset(n, prob, args.seed)
    else:
        raise ValidationError(f"unknown family {family!r}")
    name = f"{family}{'_'.join(str(x) for x in params)}"
    sys.stdout.write(dump_document(document_from_poset(p, name), args.json))
    return EXIT_OK


def cmd_core(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    res = reduction.core(p, _basepoint(args, doc, p))
    steps = [
        {
            "kind": s.kind,
            "removed": [p.labels[x] for x in sorted(s.removed)],
            "target": {p.labels[x]: p.labels[t] for x, t in s.targets.items()},
        }
        for s in res.trace.steps
    ]
    data = {
        "input_size": p.n,
        "core_size": res.core.n,
        "core_elements": sorted(p.labels[x] for x in res.core_elements),
        "steps": steps if args.json else len(steps),
    }
    _report(args, data, f"core has {res.core.n} of {p.n} elements "
                        f"after {len(steps)} removals")
    return EXIT_OK


def cmd_dismantle(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    trace = reduction.standard_sequence(p, _basepoint(args, doc, p))
    data = {
        "input_size": p.n,
        "final_size": len(trace.final),
        "final_elements": sorted(p.labels[x] for x in trace.final),
        "effective_steps": len(trace.effective_steps()),
        "stabilized": trace.stabilized,
        "kinds": [s.kind for s in trace.steps],
    }
    _report(args, data, f"standard sequence left {len(trace.final)} elements "
                        f"in {len(trace.effective_steps())} effective steps")
    return EXIT_OK if trace.stabilized else EXIT_NEGATIVE


def cmd_homotopy_eq(args):
    doc1 = load_document(args.file)
    doc2 = load_document(args.file2)
    p, q = doc1.to_poset(), doc2.to_poset()
    ev = homotopy.are_homotopy_equivalent(
        p, q, _basepoint(args, doc1, p), _basepoint(args, doc2, q)
    )
    data = {
        "equivalent": ev.equivalent,
        "core_size_1": ev.core_p.core.n,
        "core_size_2": ev.core_q.core.n,
    }
    if ev.iso is not None:
        data["iso"] = {
            ev.core_p.core.labels[i]: ev.core_q.core.labels[v]
            for i, v in enumerate(ev.iso.mapping)
        }
    _report(args, data, "homotopy equivalent" if ev.equivalent
            else f"not equivalent (core sizes {ev.core_p.core.n}, {ev.core_q.core.n})")
    return EXIT_OK if ev.equivalent else EXIT_NEGATIVE


def cmd_contractible(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    verdict = homotopy.is_contractible(p)
    _report(args, {"contractible": verdict},
            "contractible" if verdict else "not contractible")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_homology(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    k = simplicial.order_complex(p, guard=args.max_enum)
    prof = simplicial.homology(k, reduced=True, guard=args.max_enum)
    data = {
        "simplex_counts": [k.count(d) for d in range(k.dimension() + 1)],
        "euler_characteristic": k.euler_characteristic(),
        "reduced_betti": list(prof.betti),
        "torsion": [list(t) for t in prof.torsion],
        "acyclic": prof.is_acyclic(),
    }
    _report(args, data, f"reduced betti {list(prof.betti)}")
    return EXIT_OK


def cmd_function_space(args):
    doc1 = load_document(args.file)
    doc2 = load_document(args.file2)
    x, y = doc1.to_poset(), doc2.to_poset()
    c = maps.enumerate_monotone(x, y, guard=args.max_enum)
    classes = maps.homotopy_classes(c)
    id_class = None
    if x.same_order(y) or (x.n == y.n and x.up == y.up):
        ident = tuple(range(x.n))
        if ident in c._index:
            idx = c.index_of(ident)
            id_class = next(len(part) for part in classes if idx in part)
    data = {
        "map_count": len(c),
        "class_count": len(classes),
        "identity_class_size": id_class,
    }
    _report(args, data, f"{len(c)} maps in {len(classes)} homotopy classes")
    return EXIT_OK


def cmd_gamma(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    verdicts = {p.labels[x]: simplicial.is_gamma_point(p, x) for x in range(p.n)}
    _report(args, {"verdicts": verdicts},
            f"{sum(v == simplicial.CERTIFIED_YES for v in verdicts.values())} "
            f"certified gamma-points of {p.n}")
    return EXIT_OK


def cmd_fpp(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    ok, witness = maps.has_fpp(p, guard=args.max_enum)
    data = {"fixed_point_property": ok}
    if witness is not None:
        data["witness"] = {p.labels[i]: p.labels[v]
                           for i, v in enumerate(witness.assignment)}
    _report(args, data, "has the fixed point property" if ok
            else "fixed-point-free self-map found")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_topology_check(args):
    doc1 = load_document(args.file)
    doc2 = load_document(args.file2)
    x, y = doc1.to_poset(), doc2.to_poset()
    c = maps.enumerate_monotone(x, y, guard=args.max_enum)
    sub = topology.compact_open_subbasis(x, y, c)
    generated = topology.generate_topology(sub, guard=args.max_enum)
    alex = topology.alexandroff_topology(c.order)
    equal = topology.families_equal(generated, alex)
    data = {
        "map_count": len(c),
        "compact_open_opens": len(generated),
        "alexandroff_opens": len(alex),
        "topologies_equal": equal,
    }
    _report(args, data, "compact-open = Alexandroff" if equal
            else "topologies differ")
    return EXIT_OK if equal else EXIT_NEGATIVE


def cmd_dot(args):
    doc = load_document(args.file)
    p = doc.to_poset()
    trace = None
    if args.core_trace:
        trace = reduction.core(p, _basepoint(args, doc, p)).trace
    sys.stdout.write(emit_dot(p, trace))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(
        prog="finspace",
        description="Computations with finite topological spaces (finite posets).",
    )
    ap.add_argument("--max-enum", type=int, default=maps.DEFAULT_MAP_GUARD,
                    help="enumeration guard for function spaces and complexes")
    ap.add_argument("--seed", type=int, default=0, help="PRNG seed for gen random")
    ap.add_argument("--pointed", action="store_true",
                    help="respect basepoints declared in input files")
    ap.add_argument("--json", action="store_true", help="JSON reports")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="emit a generated poset document")
    sp.add_argument("family")
    sp.add_argument("params", nargs="*")
    sp.set_defaults(fn=cmd_gen)

    for name, fn, two in [
        ("core", cmd_core, False),
        ("dismantle", cmd_dismantle, False),
        ("homotopy-eq", cmd_homotopy_eq, True),
        ("contractible", cmd_contractible, False),
        ("homology", cmd_homology, False),
        ("function-space", cmd_function_space, True),
        ("gamma", cmd_gamma, False),
        ("fpp", cmd_fpp, False),
        ("topology-check", cmd_topology_check, True),
    ]:
        sp = sub.add_parser(name)
        sp.add_argument("file")
        if two:
            sp.add_argument("file2")
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("dot", help="emit a DOT Hasse diagram")
    sp.add_argument("file")
    sp.add_argument("--core-trace", action="store_true",
                    help="gray out elements removed by core reduction")
    sp.set_defaults(fn=cmd_dot)
    return ap


def run(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, ValidationError, FinspaceError, ValueError, IndexError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
