"""Command-line front end.

Exit codes: 0 success / property holds, 1 a checked property fails,
2 input or usage error, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .axioms import axiom_report, is_thin, satisfies_star
from .autgroup import aut_color_preserving, aut_full, canonical_gamma
from .constructions import (
    blow_up,
    default_n2_trivial_tables,
    default_two_layer_tables,
    format_layered_spec,
    layered,
    n2_trivial_layer,
    parse_layered_spec,
    random_layered_spec,
    two_layer,
)
from .digraph import format_graph, parse_graph, to_dot, token_key
from .errors import GraphFormatError, QbmgError, SizeCapError
from .perms import format_permutation
from .quotients import classical_quotient, gamma_quotient, parse_partition, partition_quotient
from .verify import CHECK_NAMES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3

SCHEMA = 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _verdict_doc(v) -> dict:
    doc = {"holds": v.holds}
    if v.witness is not None:
        doc["witness"] = list(v.witness)
    return doc


def cmd_check(args) -> int:
    g = _load_graph(args.path)
    report = axiom_report(g)
    thin = is_thin(g)
    star = satisfies_star(g)
    trivial = [name for name, flag in (
        ("N1", report.n1_trivial), ("N2", report.n2_trivial), ("N3", report.n3_trivial),
    ) if flag]
    if args.json:
        _emit({
            "schema": SCHEMA,
            "vertices": {"U": sorted(g.color_u, key=token_key),
                         "W": sorted(g.color_w, key=token_key)},
            "n_edges": g.n_edges,
            "is_2qbmg": report.is_2qbmg,
            "axioms": {
                "n1": _verdict_doc(report.n1),
                "n2": _verdict_doc(report.n2),
                "n3": _verdict_doc(report.n3),
                "n3star": _verdict_doc(report.n3star),
            },
            "triviality": {
                "n1_trivial": report.n1_trivial,
                "n2_trivial": report.n2_trivial,
                "n3_trivial": report.n3_trivial,
                "n_trivial": report.n_trivial,
            },
            "proper": report.proper,
            "thin": thin,
            "star": _verdict_doc(star),
        })
    else:
        print(f"graph: {len(g.color_u)} U + {len(g.color_w)} W vertices, {g.n_edges} edges")
        print(f"2-qBMG: {'yes' if report.is_2qbmg else 'no'}")
        for name, verdict in (("N1", report.n1), ("N2", report.n2),
                              ("N3", report.n3), ("N3*", report.n3star)):
            if verdict.holds:
                print(f"{name}: holds")
            else:
                print(f"{name}: violated by ({', '.join(verdict.witness)})")
        if report.n_trivial:
            print("trivial: N (all axioms hold vacuously)")
        else:
            print(f"trivial: {', '.join(trivial) if trivial else 'none'}")
        print(f"proper: {'yes' if report.proper else 'no'}")
        print(f"thin: {'yes' if thin else 'no'}")
        if star.holds:
            print("star: symmetric edges form a matching")
        else:
            print(f"star: fails at vertex {star.witness[0]}")
    return EXIT_OK if report.is_2qbmg else EXIT_FAIL


def _group_doc(grp) -> dict:
    return {
        "schema": SCHEMA,
        "order": grp.order,
        "generators": [format_permutation(p) for p in grp.generators],
        "orbits": [sorted(o, key=token_key) for o in grp.orbit_sets()],
    }


def cmd_aut(args) -> int:
    g = _load_graph(args.path)
    grp = aut_full(g) if args.full else aut_color_preserving(g)
    if args.json:
        _emit(_group_doc(grp))
    else:
        kind = "all automorphisms" if args.full else "color-preserving automorphisms"
        print(f"{kind}: order {grp.order}")
        print("generators:")
        for p in grp.generators:
            print(f"  {p.cycle_string()}")
        if not grp.generators:
            print("  (trivial group)")
        print("orbits: " + " ".join(
            "{" + ",".join(sorted(o, key=token_key)) + "}" for o in grp.orbit_sets()))
    return EXIT_OK


def cmd_quotient(args) -> int:
    g = _load_graph(args.path)
    if args.partition:
        partition = parse_partition(_read_text(args.partition))
        result = partition_quotient(g, partition)
        how = "partition"
    elif args.canonical_gamma:
        result = gamma_quotient(g, canonical_gamma(g))
        how = "canonical-gamma"
    else:
        result = classical_quotient(g)
        how = "classical"
    if args.json:
        _emit({
            "schema": SCHEMA,
            "mode": how,
            "quotient": {
                "U": sorted(result.quotient.color_u, key=token_key),
                "W": sorted(result.quotient.color_w, key=token_key),
                "edges": sorted(([t, h] for (t, h) in result.quotient.edges),
                                key=lambda e: (token_key(e[0]), token_key(e[1]))),
            },
            "projection": {v: result.projection[v]
                           for v in sorted(result.projection, key=token_key)},
        })
        return EXIT_OK
    if args.dot:
        sys.stdout.write(to_dot(result.quotient))
        return EXIT_OK
    comments = [
        f"{name} <- " + " ".join(
            sorted((v for v in result.projection if result.projection[v] == name),
                   key=token_key))
        for name in sorted({*result.projection.values()}, key=lambda n: token_key(n[2:]))
    ]
    sys.stdout.write(format_graph(result.quotient, comments=comments))
    return EXIT_OK


def _generated_graph(args):
    if args.family == "two-layer":
        if args.seed is not None:
            spec = random_layered_spec(2, args.m, args.seed)
            return layered(spec), [f"two-layer, m={args.m}, seed={args.seed}"]
        alpha, beta, gamma = default_two_layer_tables(args.m)
        return two_layer(args.m, alpha, beta, gamma), [f"two-layer, m={args.m}, order-paired tables"]
    if args.family == "n2-trivial":
        alpha, beta, gamma = default_n2_trivial_tables(args.m)
        if args.seed is not None:
            import random as _random
            rng = _random.Random(args.seed)
            from .constructions import BijectionTable, default_n2_trivial_classes
            u1, w1, w2, u2 = default_n2_trivial_classes(args.m)
            def shuffled(dom, img):
                img = list(img)
                rng.shuffle(img)
                return BijectionTable.pairing(dom, img)
            alpha, beta, gamma = (shuffled(u1, w1), shuffled(w1, u2), shuffled(w2, u2))
        return (n2_trivial_layer(args.m, alpha, beta, gamma),
                [f"n2-trivial, m={args.m}" + (f", seed={args.seed}" if args.seed is not None else "")])
    if args.family == "layered":
        spec = parse_layered_spec(_read_text(args.spec))
        return layered(spec), [f"layered, s={spec.s}, m={spec.m}"]
    if args.family == "blowup":
        g = _load_graph(args.input)
        return blow_up(g, args.at, args.new), [f"blow-up at {args.at}, adding {args.new}"]
    raise QbmgError(f"unknown family {args.family!r}")


def cmd_generate(args) -> int:
    if args.family == "random":
        spec = random_layered_spec(args.s, args.m, args.seed)
        sys.stdout.write(format_layered_spec(
            spec, comments=[f"random layered spec, s={args.s} m={args.m} seed={args.seed}"]))
        return EXIT_OK
    g, comments = _generated_graph(args)
    if getattr(args, "dot", False):
        sys.stdout.write(to_dot(g))
    else:
        sys.stdout.write(format_graph(g, comments=comments))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.corpus:
        paths = sorted(Path(args.corpus).glob("*.qbmg"))
        if not paths:
            print("warning: empty corpus, nothing checked", file=sys.stderr)
            return EXIT_OK
    else:
        paths = [Path(args.path)]
    checks = args.theorems.split(",") if args.theorems else None
    any_fail = False
    docs = []
    for path in paths:
        g = parse_graph(path.read_text())
        results = run_suite(g, checks=checks)
        for r in results:
            any_fail = any_fail or not r.passed
            if args.json:
                docs.append({"file": path.name, "check": r.name,
                             "passed": r.passed, "detail": r.detail})
            else:
                status = "PASS" if r.passed else "FAIL"
                extra = f" ({r.detail})" if r.detail and not r.passed else ""
                print(f"{status} {path.name}: {r.name}{extra}")
    if args.json:
        _emit({"schema": SCHEMA, "results": docs, "all_passed": not any_fail})
    else:
        print(f"checked {len(paths)} graph(s): " + ("all passed" if not any_fail else "FAILURES"))
    return EXIT_OK if not any_fail else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbmg",
        description="Recognize, quotient, orient, and compute automorphism groups "
                    "of 2-colored quasi best match graphs.",
    )
    parser.add_argument("--version", action="version", version=f"qbmg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the membership axioms on a graph file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("aut", help="compute an automorphism group")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--full", action="store_true", help="all automorphisms")
    group.add_argument("--color-preserving", action="store_true", default=False,
                       help="color-preserving automorphisms (default)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("quotient", help="emit a quotient graph and its projection")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--partition", metavar="FILE",
                       help="quotient by the blocks in FILE (one block per line)")
    group.add_argument("--classical", action="store_true",
                       help="quotient by the equivalence classes (default)")
    group.add_argument("--canonical-gamma", action="store_true",
                       help="quotient by the orbits of the class product group")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of qbmg text")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("generate", help="emit a constructed graph or spec")
    fam = p.add_subparsers(dest="family", required=True)

    f = fam.add_parser("two-layer")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--seed", type=int, default=None,
                   help="random tables; without it, order-paired tables")
    f.add_argument("--dot", action="store_true")
    f.set_defaults(func=cmd_generate)

    f = fam.add_parser("n2-trivial")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--seed", type=int, default=None)
    f.add_argument("--dot", action="store_true")
    f.set_defaults(func=cmd_generate)

    f = fam.add_parser("layered")
    f.add_argument("--spec", required=True, help="spec file ('-' for stdin)")
    f.add_argument("--dot", action="store_true")
    f.set_defaults(func=cmd_generate)

    f = fam.add_parser("blowup")
    f.add_argument("--in", dest="input", required=True, help="input graph file")
    f.add_argument("--at", required=True, help="vertex to duplicate")
    f.add_argument("--new", required=True, help="fresh vertex id")
    f.add_argument("--dot", action="store_true")
    f.set_defaults(func=cmd_generate)

    f = fam.add_parser("random", help="emit a seeded random layered spec")
    f.add_argument("--s", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--seed", type=int, required=True)
    f.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the theorem suite over graphs")
    p.add_argument("path", nargs="?", help="a single graph file")
    p.add_argument("--corpus", metavar="DIR", help="check every *.qbmg file in DIR")
    p.add_argument("--theorems", metavar="LIST",
                   help="comma-separated subset of: " + ",".join(CHECK_NAMES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.path and not args.corpus:
        parser.error("verify needs a graph file or --corpus DIR")
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QbmgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
