"""Command line front end: ``toricsplit {generators,split,verify}``.

Exit codes: 0 ok, 2 bad input, 3 a work budget ran out (answer unknown),
4 a supplied pair is not a splitting, 1 a verification disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import errors, fibers, oracle, splitting
from .errors import BudgetExceeded, GraphError, ClosedFormViolation
from .graph import Graph, delete_edges, family

EXIT_OK, EXIT_DISAGREE, EXIT_PARSE, EXIT_BUDGET, EXIT_REFUTED = 0, 1, 2, 3, 4


def _load(args) -> Graph:
    if args.family:
        name, _, params = args.family.partition(":")
        return family(name, [p for p in params.split(",") if p])
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    return Graph.from_json(text) if text.lstrip().startswith("{") else Graph.parse(text)


def _edge_list(g: Graph, items: str | None) -> set[int]:
    """Edges named by label (``e3``, ``ε12``) or by 1-based endpoints (``1-2``)."""
    if not items:
        return set()
    out = set()
    for item in items.split(","):
        item = item.strip()
        if "-" in item and all(p.isdigit() for p in item.split("-")):
            u, v = (int(p) - 1 for p in item.split("-"))
            idx = g.edge_index(u, v)
            if idx is None:
                raise GraphError(f"no edge {item}")
            out.add(idx)
        else:
            out.add(g.find_label(item))
    return out


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(lines))


def cmd_generators(args) -> int:
    g = _load(args)
    system = fibers.minimal_generating_set(g)
    indisp = sorted(fibers.indispensable_binomials(g))
    count = fibers.count_minimal_systems(g)
    data = {
        "graph": g.to_json(),
        "mu": len(system),
        "minimal_system": [bn.to_json(g) for bn in system],
        "indispensable": [bn.format(g) for bn in indisp],
        "minimal_system_count": str(count),
    }
    lines = [f"mu = {len(system)}", "minimal system:"]
    lines += [f"  {bn.format(g)}" for bn in system]
    lines.append(f"indispensable: {len(indisp)}")
    lines += [f"  {bn.format(g)}" for bn in indisp]
    lines.append(f"minimal systems: {count}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_split(args) -> int:
    g = _load(args)
    data: dict = {"graph": g.to_json()}
    lines: list[str] = []
    code = EXIT_OK
    if args.g1_remove is not None or args.g2_remove is not None:
        g1 = delete_edges(g, _edge_list(g, args.g1_remove))
        g2 = delete_edges(g, _edge_list(g, args.g2_remove))
        rep = splitting.check_splitting(g, g1, g2)
        data["splitting"] = rep.to_json(g)
        lines.append(
            f"pair: splitting={rep.is_splitting} edge_splitting={rep.is_edge_splitting} "
            f"minimal={rep.is_minimal} reduced={rep.is_reduced} "
            f"mu={rep.mu_g1}+{rep.mu_g2} vs {rep.mu_g}")
        if not rep.is_splitting:
            code = EXIT_REFUTED
    else:
        witness = splitting.is_edge_splittable(g)
        if witness is None:
            data["splittable"] = False
            lines.append("not subgraph splittable")
        else:
            data["splittable"] = True
            data["witness"] = {
                **witness.to_json(g),
                "g1_edges": [g.label(i) for i in witness.g1.edge_ids],
            }
            lines.append(f"subgraph splittable: edge {g.label(witness.edge)}")
            lines.append("  G_S^e edges: " + ", ".join(g.label(i) for i in witness.g1.edge_ids))
            lines.append("  S:")
            lines += [f"    {bn.format(g)}" for bn in witness.system]
    if args.enumerate:
        reps = splitting.enumerate_splittings(g)
        kinds = Counter((r.is_minimal, r.is_reduced) for r in reps)
        data["splittings"] = [r.to_json(g) for r in reps]
        data["counts"] = {
            "total": len(reps),
            "minimal": sum(r.is_minimal for r in reps),
            "reduced": sum(r.is_reduced for r in reps),
        }
        lines.append(f"{len(reps)} splittings, {data['counts']['minimal']} minimal, "
                     f"{data['counts']['reduced']} reduced")
        for (mn, rd), k in sorted(kinds.items()):
            lines.append(f"  minimal={mn} reduced={rd}: {k}")
    _emit(args, data, lines)
    return code


def _verify_family(g: Graph, name: str, params: list[int]) -> list[str]:
    """Family-specific closed forms checked against the engine."""
    from math import comb

    problems = []
    if name == "complete":
        n = params[0]
        if fibers.mu(g) != 2 * comb(n, 4):
            problems.append(f"mu(K_{n}) = {fibers.mu(g)}, expected {2 * comb(n, 4)}")
        if n >= 4:
            splitting.kn_has_minimal_splitting(n)
    elif name == "wheel":
        splitting.wheel_splittable(params[0])
    elif name == "roundabout":
        n = params[0]
        e = g.find_label("e")
        h = splitting.g_s_e(g, fibers.minimal_generating_set(g), e)
        got = (fibers.mu(g), fibers.mu(delete_edges(g, {e})), fibers.mu(h))
        want = (2 * n + 1 + 2 * comb(n, 2), n + 1 + 3 * comb(n, 2), n)
        if got != want:
            problems.append(f"roundabout counts {got}, expected {want}")
    elif name == "complete_bipartite":
        m, n = params
        if fibers.mu(g) != comb(m, 2) * comb(n, 2):
            problems.append("mu of complete bipartite graph")
        if splitting.is_subgraph_splittable(g):
            problems.append("complete bipartite graph reported splittable")
    return problems


def _edge_invariant(g: Graph) -> list[str]:
    """Every edge: generators of G_S^e and of G\\e together generate I_G."""
    system = fibers.minimal_generating_set(g)
    bad = []
    for e in g.edge_ids:
        h = splitting.g_s_e(g, system, e, check=False)
        rest = delete_edges(g, {e})
        both = list(fibers.minimal_generating_set(h)) + list(fibers.minimal_generating_set(rest))
        if not fibers.generates(g, both):
            bad.append(f"edge {g.label(e)}: G_S^e and G\\e do not generate")
    return bad


def cmd_verify(args) -> int:
    problems: list[str] = []
    checked = 0
    if args.family:
        g = _load(args)
        name, _, params = args.family.partition(":")
        try:
            problems += _verify_family(g, name, [int(p) for p in params.split(",") if p])
        except ClosedFormViolation as exc:
            problems.append(str(exc))
        problems += _edge_invariant(g)
        if g.num_edges <= oracle.EDGE_CAP and fibers.mu(g) <= 12:
            problems += oracle.oracle_report(g, args.family).disagreements
        checked = 1
    else:
        for gname, g in oracle.corpus():
            rep = oracle.oracle_report(g, gname)
            problems += [f"{gname}: {d}" for d in rep.disagreements]
            problems += [f"{gname}: {d}" for d in _edge_invariant(g)]
            checked += 1
    if args.json:
        print(json.dumps({"checked": checked, "disagreements": problems}, indent=2,
                         ensure_ascii=False))
    elif problems:
        print(f"DISAGREEMENT: {problems[0]}")
    else:
        print(f"ok: {checked} graph(s), no disagreements")
    return EXIT_DISAGREE if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricsplit", description="Minimal generators and splittings of toric ideals of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, required=True):
        src = p.add_mutually_exclusive_group(required=required)
        src.add_argument("--family", metavar="NAME:P1[,P2]",
                         help="named family, e.g. complete:5, wheel:4, cycle_row:4")
        src.add_argument("--input", metavar="FILE", help="graph file (text edge list or JSON)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--budget", type=int, metavar="N", help="cap for every enumeration")

    p = sub.add_parser("generators", help="minimal generators, indispensables, system count")
    graph_args(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("split", help="splittability verdict, pair checks, enumeration")
    graph_args(p)
    p.add_argument("--enumerate", action="store_true", help="list every splitting")
    p.add_argument("--g1-remove", metavar="EDGES", help="edges removed for the first graph")
    p.add_argument("--g2-remove", metavar="EDGES", help="edges removed for the second graph")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("verify", help="check the engine against brute force")
    graph_args(p, required=False)
    p.add_argument("--corpus", choices=["small"], default="small",
                   help="graph corpus when no graph is given")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None:
        errors.set_budget(args.budget)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
