"""Command-line interface.

Verbs: classify, quarks, factorize, elasticity, graph, hasse, verify,
construct, example.  Output is human-readable text by default and JSON
with --json; all output is byte-stable for a fixed input.  Exit codes:
0 success, 1 domain errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .constructions import (
    ElasticitySpec,
    LayeredSpec,
    EXAMPLE_NAMES,
    build_elasticity_lattice,
    build_layered_lattice,
    named_example,
    verify_elasticity_construction,
    verify_layered_lattice,
)
from .errors import BoolatticeError, PreconditionViolated
from .factorize import (
    ClassificationReport,
    classify_brute,
    elasticity_of_lattice,
    factorizations,
    length_set,
)
from .genfile import (
    parse_element,
    parse_generators,
    read_construction_meta,
    read_generators,
    write_construction,
)
from .lattice import DEFAULT_MAX_CLOSURE, Sublattice, close
from .structure import (
    classify_structural,
    component_shapes,
    pairing_dot,
    pairing_graph,
    quarkic_dot,
    quarkic_graph,
)


def _load_lattice(args) -> Sublattice:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    return close(parse_generators(text), args.max_closure)


def _flag(value: bool) -> str:
    return "yes" if value else "no"


def _witness_suffix(report: ClassificationReport, flag: str) -> str:
    w = report.witnesses.get(flag)
    if w is None:
        return ""
    if not w.factorizations:
        return f"  [witness {w.element}: not a union of quarks]"
    parts = " vs ".join(str(z) for z in w.factorizations)
    return f"  [witness {w.element}: {parts}]"


def _classify_text(S: Sublattice, report: ClassificationReport) -> list[str]:
    lines = [
        f"generators: {len(S.generators)}",
        f"elements: {len(S.elements)}",
        f"quarks: {len(S.quarks)}",
        f"factorizable: {_flag(report.factorizable)}{_witness_suffix(report, 'factorizable')}",
        f"FFS: {_flag(report.ffs)}",
        f"UFS: {_flag(report.ufs)}{_witness_suffix(report, 'ufs')}",
        f"HFS: {_flag(report.hfs)}{_witness_suffix(report, 'hfs')}",
        f"LFS: {_flag(report.lfs)}{_witness_suffix(report, 'lfs')}",
    ]
    if report.elasticity is None:
        lines.append("elasticity: unknown")
    elif report.elasticity > 1 and report.elasticity_witness is not None:
        lines.append(f"elasticity: {report.elasticity}"
                     f"  [attained at {report.elasticity_witness}]")
    else:
        lines.append(f"elasticity: {report.elasticity}")
    if report.method == "structural":
        lines.append("classifier: structural")
        shapes = component_shapes(S)
        if shapes:
            lines.append("components:")
            lines.extend(f"  {i}: {shape.describe()}"
                         for i, shape in enumerate(shapes, start=1))
        else:
            lines.append("components: none")
    else:
        lines.append("classifier: brute force")
        isolated = {q for q in S.quarks
                    if all(q.isdisjoint(p) for p in S.quarks if p != q)}
        if S.quarks and all(len(q) == 2 for q in S.quarks if q not in isolated):
            lines.append("note: the structural classifier applies "
                         "(all non-isolated quarks have size 2)")
    return lines


def cmd_classify(args) -> int:
    S = _load_lattice(args)
    report = classify_structural(S) if args.structural else classify_brute(S)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print("\n".join(_classify_text(S, report)))
    return 0


def cmd_quarks(args) -> int:
    S = _load_lattice(args)
    if args.json:
        print(json.dumps({"quarks": [str(q) for q in S.quarks]}, indent=2))
    else:
        for q in S.quarks:
            print(q)
    return 0


def cmd_factorize(args) -> int:
    S = _load_lattice(args)
    x = parse_element(args.element)
    zs = factorizations(S, x)
    lengths = sorted({len(z) for z in zs})
    if args.json:
        print(json.dumps({
            "element": str(x),
            "factorizations": [z.as_strings() for z in zs],
            "lengths": lengths,
        }, indent=2))
    else:
        print(f"element: {x}")
        print(f"factorizations: {len(zs)}")
        for z in zs:
            print(f"  {z}")
        if lengths:
            print(f"lengths: {' '.join(str(n) for n in lengths)}")
    return 0


def cmd_elasticity(args) -> int:
    S = _load_lattice(args)
    if args.element is not None:
        x = parse_element(args.element)
        lengths = length_set(S, x)
        value = Fraction(lengths[-1], lengths[0])
        if args.json:
            print(json.dumps({"element": str(x), "lengths": list(lengths),
                              "elasticity": str(value)}, indent=2))
        else:
            print(f"element: {x}")
            print(f"lengths: {' '.join(str(n) for n in lengths)}")
            print(f"elasticity: {value}")
    else:
        value, witness = elasticity_of_lattice(S)
        if args.json:
            print(json.dumps({"elasticity": str(value),
                              "witness": None if witness is None else str(witness)},
                             indent=2))
        else:
            print(f"elasticity: {value}")
            if witness is not None:
                print(f"witness: {witness}")
    return 0


def cmd_graph(args) -> int:
    S = _load_lattice(args)
    if args.kind == "quarkic":
        G = quarkic_graph(S)
        if args.format == "dot":
            print(quarkic_dot(G), end="")
        else:
            print(json.dumps({
                "vertices": [str(v) for v in G.vertices],
                "edges": [[str(a), str(b)] for a, b in G.edges],
                "components": [[str(v) for v in comp] for comp in G.components],
            }, indent=2))
    else:
        G = pairing_graph(S)
        if args.format == "dot":
            print(pairing_dot(G), end="")
        else:
            print(json.dumps({
                "vertices": list(G.vertices),
                "edges": [list(e) for e in G.edges],
                "components": [list(c) for c in G.components],
            }, indent=2))
    return 0


def cmd_hasse(args) -> int:
    S = _load_lattice(args)
    covers = S.covers()
    if args.format == "json":
        print(json.dumps({"covers": [[str(c.lower), str(c.upper)] for c in covers]},
                         indent=2))
    else:
        lines = ["digraph hasse {", "  rankdir=BT;"]
        for e in S.elements:
            lines.append(f'  "{e}";')
        lines.extend(f'  "{c.lower}" -> "{c.upper}";' for c in covers)
        lines.append("}")
        print("\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    meta = read_construction_meta(args.file)
    if meta["kind"] != args.what:
        raise PreconditionViolated(
            f"file was built as '{meta['kind']}', not '{args.what}'")
    gens = read_generators(args.file)
    if args.what == "elasticity":
        spec = ElasticitySpec(tuple(Fraction(r) for r in meta["params"]["ratios"]))
        out = build_elasticity_lattice(spec)
    else:
        spec = LayeredSpec(meta["params"]["layers"])
        out = build_layered_lattice(spec)
    if tuple(gens) != out.generators:
        raise PreconditionViolated("generator file does not match its sidecar metadata")
    if args.what == "elasticity":
        report = verify_elasticity_construction(out, spec, args.max_closure)
    else:
        report = verify_layered_lattice(out, args.max_closure)
    print("\n".join(report.lines()))
    print("ok")
    return 0


def _write_and_report(out, path: str) -> int:
    side = write_construction(out, path)
    print(f"wrote {len(out.generators)} generators to {path} "
          f"(ground size {out.ground_size})")
    print(f"metadata: {side}")
    return 0


def cmd_construct(args) -> int:
    if args.what == "elasticity":
        try:
            ratios = tuple(Fraction(part) for part in args.ratios.split(","))
        except (ValueError, ZeroDivisionError):
            raise PreconditionViolated(
                f"cannot parse ratio list {args.ratios!r}; expected p1/q1,p2/q2,...")
        out = build_elasticity_lattice(ElasticitySpec(ratios))
    else:
        out = build_layered_lattice(LayeredSpec(args.layers))
    return _write_and_report(out, args.out)


def cmd_example(args) -> int:
    return _write_and_report(named_example(args.name), args.out)


def _add_input_options(sub, element: bool = False, element_required: bool = False):
    sub.add_argument("--file", default="-", metavar="PATH",
                     help="generator file, or - for stdin (default)")
    sub.add_argument("--max-closure", type=int, default=DEFAULT_MAX_CLOSURE,
                     metavar="N", help="element cap for the union closure")
    if element:
        sub.add_argument("--element", required=element_required, metavar='"i j k"',
                         help="target element, written like a generator line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolattice",
        description="Classify union-closed families of finite integer sets, "
                    "enumerate their quark factorizations, and run the "
                    "bundled constructions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="full FFS/UFS/HFS/LFS report")
    _add_input_options(p)
    p.add_argument("--json", action="store_true")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--structural", action="store_true",
                      help="use the pairing-graph characterizations")
    mode.add_argument("--brute", action="store_true",
                      help="force exhaustive enumeration (default)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("quarks", help="list the quarks")
    _add_input_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_quarks)

    p = sub.add_parser("factorize", help="enumerate the factorizations of an element")
    _add_input_options(p, element=True, element_required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("elasticity", help="elasticity of the lattice or one element")
    _add_input_options(p, element=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_elasticity)

    p = sub.add_parser("graph", help="export the quarkic or pairing graph")
    _add_input_options(p)
    p.add_argument("--kind", choices=("quarkic", "pairing"), default="quarkic")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("hasse", help="export the cover relation")
    _add_input_options(p)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="re-check a written construction")
    p.add_argument("what", choices=("elasticity", "layered"))
    p.add_argument("--file", required=True, metavar="PATH")
    p.add_argument("--max-closure", type=int, default=DEFAULT_MAX_CLOSURE, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a lattice family")
    construct_sub = p.add_subparsers(dest="what", required=True)
    pe = construct_sub.add_parser("elasticity")
    pe.add_argument("--ratios", required=True, metavar="p1/q1,p2/q2,...")
    pe.add_argument("--out", required=True, metavar="PATH")
    pe.set_defaults(func=cmd_construct)
    pl = construct_sub.add_parser("layered")
    pl.add_argument("--layers", type=int, required=True, metavar="N")
    pl.add_argument("--out", required=True, metavar="PATH")
    pl.set_defaults(func=cmd_construct)

    p = sub.add_parser("example", help="write a catalog example to a file")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoolatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
