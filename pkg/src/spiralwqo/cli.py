"""Command-line front end: ``spiralwqo <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import classes, graphs, labelled, verify
from . import widdershins as spiral
from .perm import InvalidPermutation, contains, format_compact, format_perm, parse_perm

CACHE_ENV = "SPIRALWQO_CACHE"

log = logging.getLogger("spiralwqo")


def oracle_by_name(name: str) -> classes.MembershipOracle:
    named = {
        "W": spiral.W_ORACLE,
        "Winv": spiral.WINV_ORACLE,
        "WuWinv": spiral.WUWINV_ORACLE,
        "skew-merged": spiral.SKEW_MERGED_ORACLE,
        "separable": spiral.SEPARABLE_ORACLE,
    }
    if name in named:
        return named[name]
    if name.startswith("av:"):
        pats = [parse_perm(tok) for tok in name[3:].split(",") if tok.strip()]
        return classes.basis_oracle(pats, name=name)
    raise ValueError(f"unknown class {name!r}")


def _cache_dir(args) -> str | None:
    if getattr(args, "no_cache", False):
        return None
    return args.cache_dir or os.environ.get(CACHE_ENV) or ".cache"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


# -- commands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    report = verify.run_verify(args.claim, max_len=args.max_len, max_n=args.max_n,
                               max_k=args.max_k, graph_n=args.graph_n, perm_n=args.perm_n,
                               workers=args.workers, cache_dir=_cache_dir(args))
    log.info("%s finished in %.2fs", args.claim, report.wall_time or 0.0)
    # timing goes to stderr so reruns print identical reports
    report.wall_time = None
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


def cmd_enumerate(args) -> int:
    member = oracle_by_name(args.cls)
    levels = classes.enumerate_class(member, args.max_n, workers=args.workers,
                                     cache_dir=_cache_dir(args))
    if args.counts:
        out = " ".join(str(len(level)) for level in levels)
    else:
        out = "\n".join(format_perm(p) for level in levels for p in level)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0


def cmd_basis(args) -> int:
    member = oracle_by_name(args.cls)
    basis = classes.compute_basis(member, args.max_len, workers=args.workers,
                                  cache_dir=_cache_dir(args))
    if args.output:
        classes.write_basis(args.output, basis)
    else:
        for p in basis:
            print(format_perm(p))
    return 0


def _perm_or_graph(text: str) -> graphs.Graph:
    """A catalog name, a permutation, or a graph6 string."""
    cat = graphs.catalog()
    if text in cat:
        return cat[text]
    try:
        return graphs.perm_graph(parse_perm(text))
    except InvalidPermutation:
        return graphs.from_graph6(text)


def cmd_query(args) -> int:
    kind, rest = args.kind, args.args
    if kind == "contains":
        sigma, pi = parse_perm(rest[0]), parse_perm(rest[1])
        value = contains(sigma, pi)
        _emit(args, {"query": kind, "result": value}, str(value).lower())
    elif kind == "graph-of":
        g6 = graphs.to_graph6(graphs.perm_graph(parse_perm(rest[0])))
        _emit(args, {"query": kind, "result": g6}, g6)
    elif kind == "decompose":
        pi = parse_perm(rest[0])
        try:
            word = spiral.format_word(spiral.ring_decompose(pi))
        except spiral.NotInW:
            word = None
        _emit(args, {"query": kind, "result": word}, word if word is not None else "not in W")
        return 0 if word is not None else 1
    elif kind == "member":
        pi = parse_perm(rest[0])
        cls = rest[1] if len(rest) > 1 else "W"
        value = oracle_by_name(cls)(pi)
        _emit(args, {"query": kind, "class": cls, "result": value}, str(value).lower())
    elif kind == "realizers":
        g = _perm_or_graph(rest[0])
        found = [format_compact(p) for p in graphs.realizing_permutations(g, g.n)]
        _emit(args, {"query": kind, "result": found}, " ".join(found))
    else:
        raise ValueError(f"unknown query {kind!r}")
    return 0


def cmd_widdershins(args) -> int:
    if args.action == "spiral":
        p = spiral.spiral(spiral.SpiralSpec(args.orientation, args.length))
        _emit(args, {"spiral": list(p)}, format_perm(p))
    elif args.action == "member":
        pi = parse_perm(args.perm)
        value = spiral.in_W(pi)
        _emit(args, {"perm": list(pi), "member": value}, str(value).lower())
    elif args.action == "decompose":
        pi = parse_perm(args.perm)
        try:
            text = spiral.format_word(spiral.ring_decompose(pi))
        except spiral.NotInW:
            _emit(args, {"perm": list(pi), "word": None}, "not in W")
            return 1
        _emit(args, {"perm": list(pi), "word": text}, text)
    elif args.action == "counts":
        series = spiral.gf_coefficients(args.max_n)
        _emit(args, {"counts": series}, " ".join(map(str, series)))
    return 0


def cmd_lwqo(args) -> int:
    make = labelled.wk_graph if args.family == "wk" else labelled.labelled_path
    lo = args.start if args.start is not None else (4 if args.family == "wk" else 3)
    family = [make(k) for k in range(lo, args.stop + 1)]
    ok = labelled.antichain_check(family)
    _emit(args, {"family": args.family, "from": lo, "to": args.stop, "antichain": ok},
          f"antichain: {str(ok).lower()}")
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    cat = graphs.catalog()
    if args.dot:
        for name, g in cat.items():
            edges = " ".join(f"{a}--{b};" for a, b in g.edges())
            print(f'graph "{name}" {{ {" ".join(f"{v};" for v in range(g.n))} {edges} }}')
    elif args.json:
        print(json.dumps({name: graphs.to_graph6(g) for name, g in cat.items()}))
    else:
        for name, g in cat.items():
            print(f"{name} {graphs.to_graph6(g)}")
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--cache-dir", default=None,
                        help=f"level cache (default: ${CACHE_ENV} or ./.cache)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")

    parser = argparse.ArgumentParser(prog="spiralwqo", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="recompute one claim")
    p.add_argument("claim", choices=verify.CLAIMS)
    p.add_argument("--max-len", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--graph-n", type=int)
    p.add_argument("--perm-n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list or count a class")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--counts", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("basis", parents=[common], help="minimal forbidden patterns")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("query", parents=[common], help="one-shot queries")
    p.add_argument("kind", choices=["contains", "graph-of", "decompose", "member", "realizers"])
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("widdershins", help="spirals and ring words")
    wsub = p.add_subparsers(dest="action", required=True)
    w = wsub.add_parser("spiral", parents=[common])
    w.add_argument("--orientation", default="standard", choices=spiral.ORIENTATIONS)
    w.add_argument("--length", type=int, required=True)
    for action in ("member", "decompose"):
        w = wsub.add_parser(action, parents=[common])
        w.add_argument("perm")
    w = wsub.add_parser("counts", parents=[common])
    w.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_widdershins)

    p = sub.add_parser("lwqo", help="labelled antichains")
    lsub = p.add_subparsers(dest="action", required=True)
    a = lsub.add_parser("antichain", parents=[common])
    a.add_argument("--family", choices=["wk", "path"], default="wk")
    a.add_argument("--from", dest="start", type=int)
    a.add_argument("--to", dest="stop", type=int, default=9)
    p.set_defaults(func=cmd_lwqo)

    p = sub.add_parser("catalog", parents=[common], help="the fourteen named graphs")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, classes.DomainExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
