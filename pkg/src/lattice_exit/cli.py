"""Command line front end: gen, label, search, subsetsum, dot, array.

Exit codes: 0 success, 1 validation or I/O error, 2 budget exhausted.
"""

import argparse
from dataclasses import replace
import json
import os
import sys

from . import fixtures
from .committee import RhoFunction, selection_from_dict, total_min_selection
from .dot import to_dot
from .errors import BudgetExceeded, LatticeExitError
from .labelers import LABELERS, significant, t_hat, t_hat_oracle
from .lattice import OrderTypeRule, RandomRule, complete_rule, edgeless_rule, random_downward
from .regularity import Family, label_graph, search_regular_E
from .serialize import array_to_dict, dumps, graph_from_dict, graph_to_dict, labels_to_dict
from .subsetsum import (
    biarray_from_labels,
    build_instance,
    capped_biarray,
    solve_subset_sum,
    verify_first_column,
)


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _selection(spec):
    if spec is None:
        return total_min_selection()
    if os.path.exists(spec):
        with open(spec) as fh:
            spec = fh.read()
    return selection_from_dict(json.loads(spec))


def _rule(args):
    if args.rule == "edgeless":
        return edgeless_rule()
    if args.rule == "complete":
        return complete_rule()
    if args.rule == "random":
        return RandomRule(args.density, args.seed)
    return OrderTypeRule(density=args.density, seed=args.seed)


def _family(args):
    return Family(
        _rule(args),
        args.labeler,
        _selection(args.selection),
        RhoFunction(args.rho),
        args.domain,
    )


def _budget(args):
    env = os.environ.get("LEL_BUDGET")
    return int(env) if env else args.budget


def _config(args):
    cfg = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    cfg["budget"] = _budget(args) if "budget" in cfg else None
    sys.stderr.write("config: " + json.dumps(cfg, sort_keys=True) + "\n")


def _load_graph(path):
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def cmd_gen(args):
    G = random_downward(args.k, args.bound, args.density, args.seed, args.n_vertices)
    _emit(dumps(graph_to_dict(G)), args.out)
    return 0


def cmd_label(args):
    G = _load_graph(args.graph)
    L = label_graph(G, args.labeler, _selection(args.selection), RhoFunction(args.rho))
    if args.oracle:
        if args.labeler != "t_hat":
            raise LatticeExitError("--oracle only applies to --labeler t_hat")
        if t_hat_oracle(G).values != t_hat(G).values:
            raise LatticeExitError("t_hat disagrees with the path-enumeration oracle")
    verts, labels = significant(L)
    _emit(dumps(labels_to_dict(L)), args.out)
    msg = f"{args.labeler}: {len(L)} vertices, {len(verts)} significant, labels {sorted(labels)}\n"
    sys.stderr.write(msg)
    return 0


def cmd_search(args):
    budget = _budget(args)
    if args.fixture == "worked":
        family, k = fixtures.worked_labels(), fixtures.WORKED_K
        args.p = len(fixtures.WORKED_E)
    else:
        family, k = _family(args), args.k
    found = search_regular_E(family, args.p, k, args.bound, budget, args.jobs)
    if found is None:
        _emit(dumps({"found": False, "reason": "range exhausted"}), args.out)
        return 0
    E, report = found
    _emit(dumps({"found": True, "report": report.to_dict()}), args.out)
    return 0


def _fixture_biarray():
    L = fixtures.worked_labels()
    return biarray_from_labels(
        L,
        fixtures.WORKED_E,
        fixtures.WORKED_K,
        fixtures.worked_domain(),
        fixtures.worked_rho(),
        fixtures.worked_graph(),
        fixtures.worked_selection(),
    )


def cmd_subsetsum(args):
    budget = _budget(args)
    if args.fixture == "worked" and not args.p_range:
        args.p = len(fixtures.WORKED_E)
    lo, _, hi = args.p_range.partition("..") if args.p_range else (str(args.p), "", "")
    ps = range(int(lo), int(hi or lo) + 1)
    outputs = []
    for p in ps:
        if args.fixture == "worked":
            if p != len(fixtures.WORKED_E):
                raise LatticeExitError("the worked fixture has p = 3")
            B = _fixture_biarray()
        else:
            family = replace(_family(args), labeler="h_rho")
            found = search_regular_E(family, p, args.k, args.bound, budget)
            if found is None:
                print(f"p={p} no regular E in range")
                continue
            B = capped_biarray(family.rule, family.selection, family.rho, found[0], args.k, args.domain)
        inst = build_instance(B)
        sol = solve_subset_sum(inst, "witness")
        try:
            count = solve_subset_sum(inst, "count").count
        except BudgetExceeded:
            count = None
        if verify_first_column(B) != sol.feasible:
            raise LatticeExitError(f"first-column check disagrees with the solver at p={p}")
        print(
            f"p={p} E={list(B.E)} solvable={sol.feasible} target={inst.target} "
            f"count={count} items={len(inst.items)}"
        )
        d = inst.to_dict()
        d["meta"]["solution_count"] = count
        outputs.append(d)
    if args.out:
        _emit(dumps(outputs[0] if len(outputs) == 1 else outputs), args.out)
    return 0


def cmd_dot(args):
    G = _load_graph(args.graph)
    L = None
    if args.labeler:
        L = label_graph(G, args.labeler, _selection(args.selection), RhoFunction(args.rho))
    _emit(to_dot(G, L), args.out)
    return 0


def cmd_array(args):
    B = _fixture_biarray() if args.fixture == "worked" else None
    if B is None:
        raise LatticeExitError("only --fixture worked is supported for array")
    _emit(dumps(array_to_dict(B.X, B.Y)), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="lattice-exit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p):
        p.add_argument("--k", type=int, default=2)
        p.add_argument("--p", type=int, default=2)
        p.add_argument("--bound", type=int, default=12)
        p.add_argument("--rule", choices=["edgeless", "complete", "random", "order-type"], default="order-type")
        p.add_argument("--density", type=float, default=0.5)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--labeler", choices=LABELERS, default="h_rho")
        p.add_argument("--selection", help="selection JSON or path to it")
        p.add_argument("--rho", choices=["min", "sum", "max"], default="min")
        p.add_argument("--domain", choices=["cube", "lower"], default="cube")
        p.add_argument("--budget", type=int, default=10_000)
        p.add_argument("--fixture", choices=["worked"])
        p.add_argument("--out")

    g = sub.add_parser("gen", help="seeded random downward graph")
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--bound", type=int, default=4)
    g.add_argument("--density", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n-vertices", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    lab = sub.add_parser("label", help="label a graph file")
    lab.add_argument("--graph", required=True)
    lab.add_argument("--labeler", choices=LABELERS, default="t_hat")
    lab.add_argument("--selection")
    lab.add_argument("--rho", choices=["min", "sum", "max"], default="min")
    lab.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    lab.add_argument("--out")
    lab.set_defaults(func=cmd_label)

    s = sub.add_parser("search", help="search for E with a regressively regular labeling")
    family_flags(s)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    ss = sub.add_parser("subsetsum", help="build and solve subset-sum instances")
    family_flags(ss)
    ss.add_argument("--p-range", help="inclusive range such as 2..5")
    ss.set_defaults(func=cmd_subsetsum)

    d = sub.add_parser("dot", help="export a graph as Graphviz DOT")
    d.add_argument("--graph", required=True)
    d.add_argument("--labeler", choices=LABELERS)
    d.add_argument("--selection")
    d.add_argument("--rho", choices=["min", "sum", "max"], default="min")
    d.add_argument("--out")
    d.set_defaults(func=cmd_dot)

    a = sub.add_parser("array", help="emit a bi-array as Array JSON")
    a.add_argument("--fixture", choices=["worked"], default="worked")
    a.add_argument("--out")
    a.set_defaults(func=cmd_array)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    _config(args)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return 2
    except (LatticeExitError, ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
