"""Command-line front end: ``coxan <command> ...``.

Exit codes: 0 success or verified, 1 refuted, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from importlib import resources
from pathlib import Path

from coxan import classify, oracles
from coxan.graph import GraphParseError, load_graph, maximal_cliques
from coxan.verdict import analyze
from coxan.words import CapExceeded, HypothesisViolated, coxeter_group, retraction_image

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

FIXTURE_PACKAGE = "coxan.fixtures"


class InputError(Exception):
    pass


def fixture_names() -> list[str]:
    root = resources.files(FIXTURE_PACKAGE)
    return sorted(p.name for p in root.iterdir() if p.name.endswith((".cox", ".json")))


def fixture_path(name: str) -> Path:
    return Path(str(resources.files(FIXTURE_PACKAGE).joinpath(name)))


def resolve_path(raw: str) -> Path:
    """A filesystem path, falling back to a packaged fixture of the same name."""
    p = Path(raw)
    if p.exists():
        return p
    if p.name in fixture_names() and p.parent.name in ("", "fixtures"):
        return fixture_path(p.name)
    raise InputError(f"{raw}: no such file")


def read_graph(raw: str):
    path = resolve_path(raw)
    try:
        return load_graph(path)
    except GraphParseError as exc:
        raise InputError(f"{raw}: {exc}") from None
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{raw}: {exc}") from None


def _cap(args) -> int:
    return args.cap if args.cap is not None else oracles.default_cap()


def cmd_analyze(args) -> int:
    report = analyze(read_graph(args.path))
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def cmd_cliques(args) -> int:
    g = read_graph(args.path)
    for c in maximal_cliques(g):
        print("{" + ", ".join(c.vertices) + "}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_graph(args.path)
    comps = classify.component_types(g)
    z = classify.center(g)
    order = classify.group_order(g)
    doc = {
        "components": [
            {"vertices": list(c), "type": t.name, "order": t.order} for c, t in comps
        ],
        "order": order,
        "virtually_abelian": classify.is_virtually_abelian(g),
        "large": classify.is_large(g),
        "FA": classify.has_property_FA(g),
        "center": {"order": z.order, "contributing_components": [list(c) for c in z.contributing_components]},
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        for c, t in comps:
            print(f"{{{', '.join(c)}}}: {t.name}" + (f" (order {t.order})" if t.order else ""))
        print(f"order: {order if order is not None else 'infinite'}")
        print(f"center order: {z.order}")
        print(f"virtually abelian: {doc['virtually_abelian']}; large: {doc['large']}; FA: {doc['FA']}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = read_graph(args.path)
    group = coxeter_group(g)
    try:
        elements = group.enumerate(_cap(args))
    except CapExceeded:
        print("group exceeds cap (infinite or raise --cap)", file=sys.stderr)
        return EXIT_CAP
    print(len(elements))
    if args.table:
        names = group.names
        print("# element: " + " ".join(names))
        for i, row in enumerate(group.cayley_table(elements)):
            word = " ".join(names[s] for s in elements[i].word) or "1"
            print(f"{i} [{word}]: " + " ".join(map(str, row)))
    return EXIT_OK


def cmd_retract(args) -> int:
    g = read_graph(args.path)
    try:
        image = retraction_image(g, args.v, args.w, args.word.split())
    except HypothesisViolated as exc:
        print(f"HypothesisViolated: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(" ".join(image) if image else "1")
    return EXIT_OK


VERIFY_PROPERTIES = ("special-subgroup", "normalizer", "conjugacy", "retraction", "center-table")


def cmd_verify(args) -> int:
    prop = args.property
    if prop == "center-table":
        outcomes = oracles.center_table_outcomes(args.rank)
    else:
        if args.path is None:
            raise InputError(f"verify {prop} needs a graph file")
        g = read_graph(args.path)
        cap = _cap(args)
        if prop == "special-subgroup":
            subsets = [args.subset.split(",")] if args.subset else None
            if subsets is None:
                subsets = [
                    list(s) for k in range(len(g) + 1) for s in itertools.combinations(g.vertices, k)
                ]
            try:
                outcomes = [oracles.verify_special_subgroup(g, s, cap) for s in subsets]
            except ValueError as exc:
                raise InputError(str(exc)) from None
        elif prop == "normalizer":
            outcomes = [oracles.verify_clique_normalizer(g, cap)]
        elif prop == "conjugacy":
            outcomes = [oracles.verify_clique_conjugacy_separation(g, cap, args.radius)]
        else:
            if not args.v or not args.w:
                raise InputError("verify retraction needs --v and --w")
            try:
                outcomes = [oracles.verify_retraction(g, args.v, args.w, ball_radius=args.ball)]
            except HypothesisViolated as exc:
                print(f"HypothesisViolated: {exc}", file=sys.stderr)
                return EXIT_INPUT
    for o in outcomes:
        print(o.line())
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_REFUTED


def cmd_fixtures(args) -> int:
    names = fixture_names()
    if args.export:
        dest = Path(args.export)
        dest.mkdir(parents=True, exist_ok=True)
        for n in names:
            (dest / n).write_text(fixture_path(n).read_text(encoding="utf-8"), encoding="utf-8")
        print(f"wrote {len(names)} fixtures to {dest}")
    elif args.show:
        if args.show not in names:
            raise InputError(f"unknown fixture {args.show}")
        sys.stdout.write(fixture_path(args.show).read_text(encoding="utf-8"))
    else:
        for n in names:
            print(n)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxan", description="Coxeter graph analyzer")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="decide the theorem hypotheses and report conclusions")
    a.add_argument("path")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("cliques", help="list maximal cliques")
    c.add_argument("path")
    c.set_defaults(func=cmd_cliques)

    k = sub.add_parser("classify", help="irreducible components, types, center")
    k.add_argument("path")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="count the elements of a finite group")
    e.add_argument("path")
    e.add_argument("--cap", type=int)
    e.add_argument("--table", action="store_true", help="dump right multiplication by generators")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("retract", help="image of a word under the retraction onto <v>*<w>")
    r.add_argument("path")
    r.add_argument("--v", required=True)
    r.add_argument("--w", required=True)
    r.add_argument("--word", required=True, help="space-separated generator names")
    r.set_defaults(func=cmd_retract)

    v = sub.add_parser("verify", help="brute-force structural checks")
    v.add_argument("property", choices=VERIFY_PROPERTIES)
    v.add_argument("path", nargs="?")
    v.add_argument("--cap", type=int)
    v.add_argument("--rank", type=int, default=8)
    v.add_argument("--subset", help="comma-separated vertices (default: every subset)")
    v.add_argument("--radius", type=int, default=oracles.DEFAULT_RADIUS)
    v.add_argument("--v")
    v.add_argument("--w")
    v.add_argument("--ball", type=int, default=3)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", help="list, show or export the bundled fixtures")
    f.add_argument("--export", metavar="DIR")
    f.add_argument("--show", metavar="NAME")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
