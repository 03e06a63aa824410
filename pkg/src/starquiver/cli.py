"""Command-line interface: report, diophantine, classify, graph, enumerate."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .canon import CapacityError, EnumerationOptions, enumerate_biregular, is_edge_transitive
from .catalog import GRAPH_NAMES, STAR_NAMES, named_graph, star_fixture
from .coxeter import (
    cartan_of_star,
    condition_battery,
    coxeter_polynomial,
    factorization,
    gamma_report,
    order_to_json,
    p_value,
)
from .diophantine import brute_force_solutions, closed_form_within, is_solution, solutions_for_star
from .exact import is_cyclotomic_product
from .graph import (
    BipartiteGraph,
    adjacency_char_poly,
    bidegree,
    has_duplicate_neighborhoods,
    is_reflexive,
    is_salem,
    load_graph,
    to_dot,
)
from .pipeline import MODES, PipelineConfig, classify, graph_parameters
from .quiver import (
    StarAlgebra,
    b_lambda,
    bounded_dimension,
    gamma_lambda,
    is_2rf_shape,
    is_balanced,
    load_star,
    star_bound_algebra,
    trivial_extension,
)


def _dump(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _load_star_arg(args) -> tuple[str, StarAlgebra]:
    if args.fixture:
        return args.fixture, star_fixture(args.fixture)
    if args.input:
        return args.input, load_star(args.input)
    raise SystemExit("one of --fixture or --input is required")


def graph_predicates(G: BipartiteGraph) -> dict:
    deg = bidegree(G)
    out = {
        "r": G.r,
        "s": G.s,
        "edges": G.num_edges,
        "bidegree": list(deg) if deg is not None else None,
        "connected": G.is_connected(),
        "reflexive": is_reflexive(G),
        "salem": is_salem(G),
        "adjacency_char_poly": adjacency_char_poly(G).to_list(),
    }
    if G.is_simple:
        out["duplicate_neighbourhoods"] = has_duplicate_neighborhoods(G)
        try:
            out["edge_transitive"] = is_edge_transitive(G)
        except CapacityError:
            out["edge_transitive"] = None
    return out


def star_report(name: str, L: StarAlgebra, order_bound: int = 1000) -> tuple[dict, list[str]]:
    """Report dictionary and the list of failed internal assertions."""
    failures: list[str] = []
    B = b_lambda(L)
    report: dict[str, Any] = {
        "name": name,
        "r": L.r,
        "s": L.s,
        "relations": len(L.relations),
        "balanced": is_balanced(L),
        "two_rf_shape": is_2rf_shape(L),
        "graph": graph_predicates(B),
    }
    star_cp = coxeter_polynomial(cartan_of_star(L))
    report["star_coxeter_poly"] = star_cp.to_list()
    report["star_coxeter_cyclotomic"] = is_cyclotomic_product(star_cp) if star_cp.is_monic() else False
    if not star_cp.is_self_reciprocal():
        failures.append("star Coxeter polynomial is not self-reciprocal")
    dims = {"lambda": bounded_dimension(star_bound_algebra(L))}
    if report["balanced"]:
        dims["trivial_extension"] = bounded_dimension(trivial_extension(L))
        dims["gamma"] = bounded_dimension(gamma_lambda(L))
        if dims["trivial_extension"] != 2 * dims["lambda"]:
            failures.append("dim T(Lambda) != 2 dim Lambda")
    report["dimensions"] = dims
    deg = bidegree(B)
    if deg is not None:
        fac = factorization(B, [1] * B.r, [1] * B.s)
        report["factorization"] = {
            "w": fac.w.to_list(), "p": fac.p.to_list(), "q": fac.q.to_list(),
            "cp_kq": fac.cp_kq.to_list(), "cp_gamma": fac.cp_gamma.to_list(),
            "identity_holds": fac.identity_holds, "w_divides_cp_kq": fac.w_divides_kq,
        }
        if not fac.ok:
            failures.append("w CP_Gamma != CP_KQ p")
        gamma = gamma_report(L, order_bound)
        report["gamma"] = gamma.to_json()
        if not gamma.coxeter_poly.is_self_reciprocal():
            failures.append("Gamma Coxeter polynomial is not self-reciprocal")
        params = graph_parameters(B)
        p = p_value(L.r, deg.sigma1, L.s, deg.sigma2)
        report["p"] = p
        report["neg_phi_order"] = order_to_json(gamma.neg_phi_order)
        member = params is not None and 0 <= p <= 4 and is_solution(p, *params)
        report["diophantine"] = {"tuple": [p, *params] if params else None, "member": member}
    report["battery"] = condition_battery(L, order_bound).to_json()
    report["verdict"] = report["battery"]["overall"]
    report["assertion_failures"] = failures
    return report, failures


# ---------------------------------------------------------------- subcommands


def cmd_report(args) -> int:
    name, L = _load_star_arg(args)
    report, failures = star_report(name, L, args.order_bound)
    if args.format == "dot":
        print(to_dot(b_lambda(L), name), end="")
    elif args.format == "text":
        print(f"{name}: r={L.r} s={L.s} p={report.get('p')} order={report.get('neg_phi_order')} "
              f"reflexive={report['graph']['reflexive']} salem={report['graph']['salem']} "
              f"verdict={report['verdict']}")
    else:
        print(_dump(report))
    return 1 if failures else 0


def cmd_diophantine(args) -> int:
    bound = args.bound
    ps = _int_list(args.p) if args.p else [0, 1, 2, 3, 4]
    if args.oracle:
        brute = brute_force_solutions(bound)
        closed = closed_form_within(bound)
        ok = brute == closed
        report = {"bound": bound, "oracle": "MATCH" if ok else "MISMATCH", "count": len(closed)}
        if not ok:
            report["only_brute_force"] = sorted(map(list, brute - closed))
            report["only_closed_form"] = sorted(map(list, closed - brute))
        print(_dump(report))
        return 0 if ok else 1
    if args.star:
        out = set()
        for p in ps:
            if p not in (1, 2, 3, 4):
                raise SystemExit("--star needs p values in 1..4")
            out |= solutions_for_star(p, bound)
        print(_dump(sorted(map(list, out))))
    else:
        print(_dump(sorted(list(s) for s in closed_form_within(bound) if s.p in ps)))
    return 0


def cmd_classify(args) -> int:
    extra = tuple((path, load_graph(path)) for path in (args.input or []))
    tuples = tuple(tuple(_int_list(t)) for t in (args.params or []))
    for t in tuples:
        if len(t) != 4:
            raise SystemExit("--params needs r,sigma1,s,sigma2")
    config = PipelineConfig(
        mode=args.mode,
        p_values=tuple(_int_list(args.p)) if args.p else (1, 2, 3, 4),
        tuples=tuples,
        extra_graphs=extra,
        max_vertices=args.max_vertices,
        order_bound=args.order_bound,
        distinct_neighbourhoods=not args.no_pruning,
    )
    result = classify(config)
    data = result.to_json()
    status = 0
    if args.expect is not None:
        expected = sorted(x for x in args.expect.split(",") if x)
        data["expected"] = expected
        data["expectation_met"] = sorted(result.survivors()) == expected
        status = 0 if data["expectation_met"] else 1
    if args.format == "text":
        for row in result.rows:
            print(f"{row.name:24s} {str(row.params):18s} {row.status:10s} {row.note}")
        if result.partial:
            print("partial: enumeration skipped for " + ", ".join(map(str, result.skipped)))
    else:
        print(_dump(data))
    return status


def cmd_graph(args) -> int:
    if args.fixture:
        name, G = args.fixture, named_graph(args.fixture)
    elif args.input:
        name, G = args.input, load_graph(args.input)
    else:
        raise SystemExit("one of --fixture or --input is required")
    if args.format == "dot":
        print(to_dot(G, name), end="")
    elif args.format == "text":
        pred = graph_predicates(G)
        print(" ".join(f"{k}={pred[k]}" for k in sorted(pred) if k != "adjacency_char_poly"))
    else:
        data = graph_predicates(G)
        data["graph"] = G.to_json()
        print(_dump(data))
    return 0


def cmd_enumerate(args) -> int:
    params = _int_list(args.params)
    if len(params) != 4:
        raise SystemExit("--params needs r,sigma1,s,sigma2")
    opts = EnumerationOptions(distinct_neighbourhoods=args.distinct, connected=not args.allow_disconnected,
                              max_vertices=args.max_vertices)
    try:
        graphs = list(enumerate_biregular(*params, opts))
    except CapacityError as exc:
        print(_dump({"error": str(exc)}))
        return 2
    if args.format == "dot":
        for k, G in enumerate(graphs):
            print(to_dot(G, f"G{k + 1}"), end="")
    else:
        print(_dump([G.to_json() for G in graphs]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starquiver", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="invariants and filter verdicts of a star algebra")
    rep.add_argument("--fixture", choices=STAR_NAMES)
    rep.add_argument("--input", help="star algebra JSON file")
    rep.add_argument("--order-bound", type=int, default=1000)
    rep.add_argument("--format", choices=("json", "text", "dot"), default="json")
    rep.set_defaults(func=cmd_report)

    dio = sub.add_parser("diophantine", help="solutions of kl + a + b - ak = p, ak = bl")
    dio.add_argument("--p", help="comma-separated p values")
    dio.add_argument("--bound", type=int, default=60)
    dio.add_argument("--star", action="store_true", help="translate to (r, s1, s, s2) and filter")
    dio.add_argument("--oracle", action="store_true", help="compare with brute force")
    dio.add_argument("--format", choices=("json",), default="json")
    dio.set_defaults(func=cmd_diophantine)

    cls = sub.add_parser("classify", help="run the classification pipeline")
    cls.add_argument("--mode", choices=MODES, default="regular")
    cls.add_argument("--p", help="comma-separated p values in 1..4")
    cls.add_argument("--params", action="append", help="explicit r,sigma1,s,sigma2 (repeatable)")
    cls.add_argument("--input", action="append", help="extra graph JSON file (repeatable)")
    cls.add_argument("--max-vertices", type=int, default=14)
    cls.add_argument("--order-bound", type=int, default=1000)
    cls.add_argument("--no-pruning", action="store_true", help="disable distinct-neighbourhood pruning")
    cls.add_argument("--expect", help="comma-separated expected survivor names")
    cls.add_argument("--format", choices=("json", "text"), default="json")
    cls.set_defaults(func=cmd_classify)

    gr = sub.add_parser("graph", help="graph predicates or DOT export")
    gr.add_argument("--fixture", choices=GRAPH_NAMES)
    gr.add_argument("--input", help="graph JSON file")
    gr.add_argument("--format", choices=("json", "text", "dot"), default="json")
    gr.set_defaults(func=cmd_graph)

    en = sub.add_parser("enumerate", help="connected biregular bipartite graphs up to isomorphism")
    en.add_argument("--params", required=True, help="r,sigma1,s,sigma2")
    en.add_argument("--distinct", action="store_true", help="require distinct neighbourhoods")
    en.add_argument("--allow-disconnected", action="store_true")
    en.add_argument("--max-vertices", type=int, default=20)
    en.add_argument("--format", choices=("json", "dot"), default="json")
    en.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(_dump({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
