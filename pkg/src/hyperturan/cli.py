"""Command-line entry point: ``hyperturan <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions as C
from .coloring import hypergraph_chromatic_number, link_chromatic_profile, p_value, q_value
from .colored import DEFAULT_BUDGET as COLORED_BUDGET
from .colored import ColoredMultigraph, budget_from_env, max_colored_sum
from .containment import find_embedding
from .hypergraph import BudgetExceeded, InputError, link_graph, matching_number, max_codegree
from .io import format_h3, read_h3, write_cmg, write_construction, write_h3
from .report import verify_paper
from .search import SearchInstance, enumerate_extremal, solve

EXIT_INPUT = 3

PATTERNS = {
    "f32": lambda t: C.f32(),
    "k4_minus": lambda t: C.k4_minus(),
    "f_star_partition": C.f_star_partition,
    "f_matching_partition": C.f_matching_partition,
    "full_star": C.full_star,
    "j_plus": C.j_plus,
}


def _infinite(x):
    return "inf" if x == float("inf") else x


def _load_pattern(spec: str, t: int | None):
    """A pattern is either a ``.h3`` path or a catalog name."""
    if spec in PATTERNS:
        if t is None and spec not in ("f32", "k4_minus"):
            raise InputError(f"pattern {spec} needs --t")
        return PATTERNS[spec](t)
    return read_h3(spec)


def cmd_construct(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "s", "t") if getattr(args, k) is not None}
    if args.name == "h_conjecture":
        if args.pattern is None or args.i is None:
            raise InputError("h_conjecture needs -F and -i")
        params = {"F": _load_pattern(args.pattern, args.t), "i": args.i,
                  "n": args.n, "s": args.s}
    built = C.ConstructionSpec(args.name, params).build()
    if args.output:
        sidecar = write_construction(built, args.output)
        print(f"wrote {args.output} ({built.hypergraph.m} edges) and {sidecar}")
    else:
        sys.stdout.write(format_h3(built.hypergraph))
    return 0 if built.size_matches else 1


def cmd_invariant(args) -> int:
    H = read_h3(args.file)
    out = {}
    if args.nu:
        out["nu"] = matching_number(H)
    if args.chi:
        out["chi"] = hypergraph_chromatic_number(H)
    if args.p:
        out["p"] = _infinite(p_value(H))
    if args.q:
        out["q"] = _infinite(q_value(H))
    if args.codegree:
        out["max_codegree"] = max_codegree(H)
    if args.links:
        prof = link_chromatic_profile(H)
        out["links"] = {
            str(v): {"edges": [list(e) for e in link_graph(H, v).edges], "chi": c}
            for v, c in zip(prof.ordering, prof.values)
        }
    if not out:
        raise InputError("choose at least one of --nu --chi --p --q --codegree --links")
    print(json.dumps(out, indent=2))
    return 0


def cmd_contains(args) -> int:
    F = _load_pattern(args.F, args.t)
    H = read_h3(args.H)
    emb = find_embedding(F, H)
    print(json.dumps({
        "contains": emb is not None,
        "embedding": None if emb is None else {str(x): h for x, h in enumerate(emb.mapping)},
    }))
    return 0


def cmd_search(args) -> int:
    family = tuple(_load_pattern(f, args.t) for f in args.F or [])
    inst = SearchInstance(args.n, args.s, family, args.budget)
    res = solve(inst)
    out = {"n": args.n, "s": args.s, "value": res.value, "exact": res.exact, "nodes": res.nodes}
    if args.witness:
        write_h3(res.witness, args.witness)
        out["witness"] = args.witness
    if args.enumerate:
        out["classes"] = [[list(e) for e in H.edges] for H in enumerate_extremal(inst)]
    print(json.dumps(out, indent=2))
    return 0 if res.exact else 2


def cmd_colored(args) -> int:
    budget = args.budget if args.budget is not None else budget_from_env(COLORED_BUDGET)
    try:
        res = max_colored_sum(args.n, args.s, args.r, exact_k=args.exact_k, budget=budget)
    except BudgetExceeded as exc:
        print(json.dumps({"verdict": "inconclusive", "reason": str(exc)}))
        return 2
    out = {"value": res.value, "nodes": res.nodes}
    if args.witness:
        write_cmg(ColoredMultigraph(args.n, res.layers), args.witness)
        out["witness"] = args.witness
    print(json.dumps(out))
    return 0


def cmd_verify(args) -> int:
    report = verify_paper(args.scale, args.only)
    payload = json.dumps(report.to_dict(), indent=2)
    if args.json:
        Path(args.json).write_text(payload + "\n")
    for cert in report.certificates:
        print(f"{cert.id:28s} {cert.verdict:13s} {cert.timing_s:8.2f}s")
    s = report.summary
    print(f"pass={s['pass']} fail={s['fail']} inconclusive={s['inconclusive']}")
    return report.exit_code


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for inconclusive results
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperturan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a catalog construction")
    p.add_argument("name", choices=sorted(C.CATALOG))
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("-i", type=int)
    p.add_argument("-F", dest="pattern", help="pattern for h_conjecture")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invariant", help="invariants of a .h3 file")
    p.add_argument("file")
    for flag in ("nu", "chi", "p", "q", "codegree", "links"):
        p.add_argument(f"--{flag}", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("contains", help="subhypergraph containment")
    p.add_argument("-F", required=True, help=".h3 file or pattern name")
    p.add_argument("-H", required=True)
    p.add_argument("--t", type=int)
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("search-extremal", help="exact extremal number for tiny n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("-F", action="append", help="forbidden pattern (repeatable)")
    p.add_argument("--t", type=int)
    p.add_argument("--witness", metavar="OUT.h3")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("colored-max", help="maximum coloured sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--exact-k", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--witness", metavar="OUT.cmg")
    p.set_defaults(func=cmd_colored)

    p = sub.add_parser("verify-paper", help="run the certificate suite")
    p.add_argument("--scale", default="tiny")
    p.add_argument("--json")
    p.add_argument("--only", action="append", help="certificate id prefix (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
