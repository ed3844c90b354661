"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 subset budget exceeded, 3 failed
internal check.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import borel, gauss, graphs, veronese
from .exactcore import BudgetExceeded, DimensionError, Monomial, MonomialAlgebra
from .formats import InputError, format_monomial, read_input

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3


class CheckFailed(Exception):
    pass


def _algebra(path) -> MonomialAlgebra:
    obj = read_input(path)
    if isinstance(obj, graphs.LoopedGraph):
        return graphs.edge_ring(obj)
    return obj


def _graph(path) -> graphs.LoopedGraph:
    obj = read_input(path)
    if not isinstance(obj, graphs.LoopedGraph):
        raise InputError(f"{path}: expected a graph file ('vertices <d>' header)")
    return obj


def _print_monomials(ms, fmt, out):
    for m in ms:
        print(format_monomial(m, fmt), file=out)


def _gauss(args, A):
    return gauss.gauss_generators(A, limit=args.limit_subsets, workers=args.threads)


def cmd_gauss(args, out):
    A = _algebra(args.input)
    res = _gauss(args, A)
    print(f"# {len(res.gens)} generators of degree {res.degree}", file=out)
    _print_monomials(res.gens, args.format, out)


def cmd_dim(args, out):
    print(gauss.algebra_dimension(_algebra(args.input)), file=out)


def cmd_borel_closure(args, out):
    A = _algebra(args.input)
    _print_monomials(borel.borel_closure(A.gens).members, args.format, out)


def cmd_borel_gens(args, out):
    A = _algebra(args.input)
    if not borel.is_strongly_stable(A.gens):
        raise InputError(f"{args.input}: monomial set is not strongly stable")
    _print_monomials(borel.borel_generators(A.gens), args.format, out)


def cmd_principal(args, out):
    m = Monomial.parse(args.monomial, args.dim)
    g = borel.principal_gauss_generator(m, args.dim)
    if args.verify:
        res = _gauss(args, MonomialAlgebra(args.dim, borel.borel_closure([m]).members))
        found = borel.borel_generators(res.gens)
        if found != (g,):
            raise CheckFailed(f"closed form {g} but brute force gives {', '.join(map(str, found))}")
    print(format_monomial(g, args.format), file=out)


def cmd_veronese_check(args, out):
    d = args.d
    A = MonomialAlgebra(d, veronese.squarefree_veronese(2, d))
    got = _gauss(args, A).gens
    want = veronese.expected_gauss_squarefree2(d)
    if set(got) != set(want):
        extra = sorted(set(got) - set(want), reverse=True)
        missing = sorted(set(want) - set(got), reverse=True)
        raise CheckFailed(f"d={d}: extra {list(map(str, extra))}, missing {list(map(str, missing))}")
    print(f"d={d}: {len(got)} generators match", file=out)


def cmd_exchange_check(args, out):
    w = veronese.polymatroid_exchange_check(_algebra(args.input).gens)
    if w is None:
        print("ok", file=out)
    else:
        u, v, i = w
        print(f"witness u={format_monomial(u, args.format)} v={format_monomial(v, args.format)} i={i}", file=out)


def cmd_edge_ring(args, out):
    _print_monomials(graphs.edge_ring(_graph(args.input)).gens, args.format, out)


def cmd_forests(args, out):
    G = _graph(args.input)
    if args.roots:
        roots = [int(v) for v in args.roots.split(",")]
        for cert in graphs.rooted_spanning_forests(G, roots):
            print(" ".join(f"{a}-{b}" for a, b in cert.T) or "(empty)", file=out)
        return
    _print_monomials(graphs.gauss_from_forests(G), args.format, out)


def cmd_tree_count(args, out):
    print(graphs.spanning_tree_count(_graph(args.input)), file=out)


def cmd_birational(args, out):
    A = _algebra(args.input)
    print(str(gauss.is_birational(A, _gauss(args, A).gens)).lower(), file=out)


def cmd_normality(args, out):
    probe = gauss.normality_probe(_algebra(args.input), args.level_bound)
    if probe.clean:
        print(f"clean up to level {probe.level_bound}", file=out)
    else:
        print(f"gap at level {probe.gap_level}: {' '.join(map(str, probe.gap))}", file=out)


def cmd_hypersurface(args, out):
    A = _algebra(args.input)
    gens = A.gens if args.raw else _gauss(args, A).gens
    rel = gauss.relation_report(gens)
    print(f"dim {rel.dim}", file=out)
    print(f"edim {rel.edim}", file=out)
    print(f"kernel_rank {rel.kernel_rank}", file=out)
    if rel.hypersurface_witness is not None:
        print(f"witness {rel.binomial()}", file=out)
        for k, g in enumerate(gens, 1):
            print(f"y{k} = {format_monomial(g, args.format)}", file=out)


def cmd_lambda(args, out):
    print(graphs.path_lambda(args.d), file=out)


def cmd_conjecture_scan(args, out):
    try:
        report = graphs.conjecture_scan(args.max_d, bipartite_only=not args.all_graphs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(report.format(), file=out)
    print(f"# {len(report.rows)} rows, {len(report.counterexamples)} counterexample candidates", file=out)


def cmd_reproduce_paper(args, out):
    from .reproduce import run_all

    failures = 0
    for name, err in run_all():
        if err is None:
            print(f"PASS  {name}", file=out)
        else:
            failures += 1
            print(f"FAIL  {name}: {err}", file=out)
    if failures:
        raise CheckFailed(f"{failures} check(s) failed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit-subsets", type=int, default=gauss.DEFAULT_LIMIT, metavar="N",
                        help="search node budget (default 10^7)")
    common.add_argument("--level-bound", type=int, default=3, metavar="K", help="normality probe depth")
    common.add_argument("--format", choices=["expvec", "string"], default="string")
    common.add_argument("--threads", type=int, default=1, metavar="N", help="worker processes")
    p = argparse.ArgumentParser(prog="gaussalg", description="Gauss algebras of monomial algebras")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help, inp=True):
        s = sub.add_parser(name, help=help, parents=[common])
        if inp:
            s.add_argument("-i", "--input", required=True)
        s.set_defaults(func=func)
        return s

    add("gauss", cmd_gauss, "Gauss algebra generators")
    add("dim", cmd_dim, "Krull dimension (rank of the log-matrix)")
    add("borel-closure", cmd_borel_closure, "smallest Borel set containing the input")
    add("borel-gens", cmd_borel_gens, "Borel generators of a strongly stable set")
    s = add("principal", cmd_principal, "closed-form Gauss generator of a principal Borel algebra", inp=False)
    s.add_argument("monomial")
    s.add_argument("-d", "--dim", type=int, required=True)
    s.add_argument("--verify", action="store_true", help="compare with brute force")
    s = add("veronese-check", cmd_veronese_check, "squarefree 2-Veronese structure check", inp=False)
    s.add_argument("d", type=int)
    add("exchange-check", cmd_exchange_check, "polymatroid exchange property")
    add("edge-ring", cmd_edge_ring, "edge ring generators of a graph with loops")
    s = add("forests", cmd_forests, "Gauss generators from rooted spanning forests")
    s.add_argument("--roots", help="comma-separated root set V; list its forests instead")
    add("tree-count", cmd_tree_count, "number of spanning trees")
    add("birational", cmd_birational, "is the Gauss map birational")
    add("normality", cmd_normality, "bounded search for a saturation gap")
    s = add("hypersurface", cmd_hypersurface, "relation report of the Gauss set")
    s.add_argument("--raw", action="store_true", help="use the input generators as they are")
    s = add("lambda", cmd_lambda, "generator count of the path with every vertex looped", inp=False)
    s.add_argument("d", type=int)
    s = add("conjecture-scan", cmd_conjecture_scan, "hypersurface table over small graphs", inp=False)
    s.add_argument("max_d", type=int)
    s.add_argument("--all-graphs", action="store_true", help="include non-bipartite graphs")
    add("reproduce-paper", cmd_reproduce_paper, "rerun the published examples", inp=False)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.level_bound < 1 or args.threads < 1 or args.limit_subsets < 1:
        print("error: --level-bound, --threads and --limit-subsets must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc} (raise --limit-subsets)", file=sys.stderr)
        return EXIT_BUDGET
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (InputError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
