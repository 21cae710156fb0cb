"""Command-line interface.

Exit codes: 0 for a well-formed YES or NO answer, 2 for usage errors,
3 for input errors (unreadable file, malformed text, precondition not
met), 4 for internal assertion failures.  Output is byte-stable for a
given input and flag set: every edge list is printed sorted.
"""

from __future__ import annotations

import argparse
import sys

from .auxiliary import build_auxiliary, serialize_auxiliary
from .cover import CoverResult, cover2
from .errors import InvariantError, ParseError, PreconditionError
from .graph import (
    Edge,
    Graph,
    parse_graph,
    parse_ordering,
    serialize_ordering,
)
from .lexbfs import lexbfs, verify_lexbfs
from .oracle import GenSpec, SweepFailure, brute_thd_le2, equivalence_sweep
from .recognition import is_chain, is_paraglider_free, is_threshold, split_partition
from .reductions import bipartition, chain_cover2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_text(path))


def _print_edge_block(title: str, edges: frozenset[Edge]) -> None:
    print(title)
    for u, v in sorted(edges):
        print(f"{u + 1} {v + 1}")


def _print_no(res) -> None:
    print("NO")
    print("ODD-CYCLE:")
    for u, v in res.certificate.edges:
        print(f"{u + 1}-{v + 1}")


def _cmd_cover(args) -> int:
    g = _load_graph(args.file)
    ordering = None
    if args.ordering:
        ordering = parse_ordering(_read_text(args.ordering), g.n)
    res = cover2(
        g,
        ordering=ordering,
        skip_phase1=args.skip_phase1,
        skip_phase3=args.skip_phase3,
        verify=args.verify,
    )
    if not res.found:
        _print_no(res)
        return 0
    print("YES")
    if res.log.aux_edges == 0:
        print("THRESHOLD-DIMENSION: 1")
    _print_edge_block("H1:", res.h1)
    _print_edge_block("H2:", res.h2)
    if args.verify:
        rep = res.log.verify
        print(f"VERIFY-H1: {'THRESHOLD' if rep.h1_threshold else 'NOT-THRESHOLD'}")
        print(f"VERIFY-H2: {'THRESHOLD' if rep.h2_threshold else 'NOT-THRESHOLD'}")
        print(f"VERIFY: {'PASS' if rep.ok else 'FAIL'}")
        if not rep.ok:
            truncated = args.skip_phase1 or args.skip_phase3 or ordering is not None
            if not truncated:
                raise InvariantError("full pipeline produced a cover that fails verification")
    return 0


def _cmd_aux(args) -> int:
    g = _load_graph(args.file)
    sys.stdout.write(serialize_auxiliary(build_auxiliary(g)))
    return 0


def _cmd_lexbfs(args) -> int:
    g = _load_graph(args.file)
    sys.stdout.write(serialize_ordering(lexbfs(g)))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.file)
    if args.kind == "threshold":
        ok, cert = is_threshold(g)
        if ok:
            print("YES")
            print("ELIMINATION:")
            print(" ".join(str(v + 1) for v in cert.elimination))
        else:
            print("NO")
            print("VIOLATION:")
            print(" ".join(str(v + 1) for v in cert.violation))
    elif args.kind == "split":
        part = split_partition(g)
        if part is None:
            print("NO")
        else:
            x, y = part
            print("YES")
            print("X: " + " ".join(str(v + 1) for v in x))
            print("Y: " + " ".join(str(v + 1) for v in y))
    elif args.kind == "paraglider-free":
        ok, wit = is_paraglider_free(g)
        if ok:
            print("YES")
        else:
            print("NO")
            print("WITNESS: " + " ".join(str(v + 1) for v in wit.vertices))
    elif args.kind == "chain":
        try:
            part = bipartition(g)
        except PreconditionError:
            print("NO")
            print("NOT-BIPARTITE")
            return 0
        ok, wit = is_chain(g, part)
        if ok:
            print("YES")
        else:
            print("NO")
            print("WITNESS: " + " ".join(str(v + 1) for v in wit.vertices))
    else:  # lexbfs
        if not args.ordering:
            raise PreconditionError("--kind lexbfs requires --ordering")
        order = parse_ordering(_read_text(args.ordering), g.n)
        ok, vio = verify_lexbfs(g, order)
        if ok:
            print("YES")
        else:
            print("NO")
            print(
                f"VIOLATION: step {vio.step} chose {vio.chosen + 1} "
                f"but {vio.better + 1} has a better label"
            )
    return 0


def _cmd_chain_cover(args) -> int:
    g = _load_graph(args.file)
    res = chain_cover2(g, side=args.side)
    if not res.found:
        _print_no(res)
        return 0
    print("YES")
    _print_edge_block("C1:", res.c1)
    _print_edge_block("C2:", res.c2)
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.file)
    ok, witness = brute_thd_le2(g)
    if not ok:
        print("NO")
        return 0
    print("YES")
    _print_edge_block("H1:", witness[0])
    _print_edge_block("H2:", witness[1])
    return 0


def _cmd_selftest(args) -> int:
    specs = [GenSpec(mode="exhaustive", n=n) for n in range(1, args.nmax + 1)]
    specs += [
        GenSpec(mode="random-gnp", n=8, p=0.4, seed=args.seed, samples=args.samples),
        GenSpec(mode="union-of-two-threshold", n=9, seed=args.seed + 1, samples=args.samples),
        GenSpec(mode="union-of-two-chain", n=9, seed=args.seed + 2, samples=args.samples),
        GenSpec(mode="random-split", n=9, seed=args.seed + 3, samples=args.samples),
    ]
    try:
        for spec in specs:
            rep = equivalence_sweep(spec)
            label = spec.mode if spec.mode == "exhaustive" else f"{spec.mode} seed={spec.seed}"
            print(
                f"{label} n={spec.n}: {rep.instances} graphs, "
                f"{rep.yes} yes, {rep.no} no, {rep.elapsed:.2f}s"
            )
    except SweepFailure as exc:
        print("SELFTEST FAIL")
        print(str(exc))
        return 4
    print("SELFTEST PASS")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thcover",
        description="Cover a graph by two threshold subgraphs, or certify that none exists.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cover", help="decide and construct a size-2 threshold cover")
    p.add_argument("file")
    p.add_argument("--ordering", help="ordering file overriding the Lex-BFS phase")
    p.add_argument("--skip-phase1", action="store_true", help="use the identity ordering")
    p.add_argument("--skip-phase3", action="store_true", help="skip pentagon recoloring")
    p.add_argument("--verify", action="store_true", help="check both parts and report")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("aux", help="print the conflict graph on edges")
    p.add_argument("file")
    p.set_defaults(func=_cmd_aux)

    p = sub.add_parser("lexbfs", help="print a Lex-BFS ordering")
    p.add_argument("file")
    p.set_defaults(func=_cmd_lexbfs)

    p = sub.add_parser("check", help="recognition tests with certificates")
    p.add_argument("file")
    p.add_argument(
        "--kind",
        required=True,
        choices=["threshold", "split", "chain", "paraglider-free", "lexbfs"],
    )
    p.add_argument("--ordering", help="ordering file (for --kind lexbfs)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("chain-cover", help="cover a bipartite graph by two chain subgraphs")
    p.add_argument("file")
    p.add_argument("--side", choices=["A", "B"], help="which side to complete into a clique")
    p.set_defaults(func=_cmd_chain_cover)

    p = sub.add_parser("oracle", help="brute-force cover search (small inputs)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("selftest", help="equivalence sweep against the oracles")
    p.add_argument("--nmax", type=int, default=5, help="exhaustive sweep bound")
    p.add_argument("--samples", type=int, default=50, help="instances per random family")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvariantError, SweepFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
