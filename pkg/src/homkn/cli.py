"""Command-line interface.

Subcommands: build, homology, verify-connectivity, reduce-cycle,
nullify-cycle, contract-loop, pi1-rank.  Machine-readable JSON goes to
stdout (or --out FILE); diagnostics go to stderr.  Exit code 0 means the
command succeeded and, for verdict-producing commands, that the verdict
is PASS / verified.

Graphs come either from --graph FILE (JSON {"p": ..., "edges": [...]})
or from --family K<m>|C<m>|P<m>|Star<k>.  All indices are 1-based, both
for vertices and for colors, matching the file formats documented in
homkn.jsonio.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import jsonio
from .deform import contract_loop, verify_moves
from .errors import HomknError
from .graphs import Graph, complete, cycle, maxval, path, star, vgap
from .homcx import DEFAULT_CELL_CAP, Chain, enumerate_skeleton, f_vector
from .homology import connectivity_report, homology_summary, pi1_free_rank
from .reduce import nullify_cycle, reduce_cycle, verify_certificate
from .snf import BACKEND

_FAMILY = re.compile(r"^(K|C|P|Star)(\d+)$")


def _load_graph(args) -> Graph:
    if args.graph and args.family:
        raise HomknError("give either --graph or --family, not both")
    if args.graph:
        with open(args.graph) as fh:
            return jsonio.graph_from_json(json.load(fh))
    if args.family:
        m = _FAMILY.match(args.family)
        if not m:
            raise HomknError(
                f"unknown family {args.family!r}; expected K<m>, C<m>, P<m> or Star<k>"
            )
        kind, size = m.group(1), int(m.group(2))
        builder = {"K": complete, "C": cycle, "P": path, "Star": star}[kind]
        return builder(size)
    raise HomknError("a graph is required: --graph FILE or --family NAME")


def _emit(args, payload, exit_code=0) -> int:
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return exit_code


def _config(args, **extra):
    cfg = {
        "command": args.command,
        "graph": args.graph or args.family,
        "n": args.n,
        "cell_cap": args.cell_cap,
        "threads": args.threads,
        "snf_backend": BACKEND,
    }
    if getattr(args, "seed", None) is not None:
        cfg["seed"] = args.seed
    cfg.update(extra)
    return cfg


def cmd_build(args) -> int:
    G = _load_graph(args)
    sk = enumerate_skeleton(G, args.n, args.max_dim, args.cell_cap)
    payload = {
        "config": _config(args, max_dim=args.max_dim),
        "f_vector": list(f_vector(sk)),
        "total_cells": sk.total_cells(),
    }
    if args.cells:
        payload["cells_by_dim"] = [
            [jsonio.cell_to_json(c) for c in cells] for cells in sk.cells_by_dim
        ]
    return _emit(args, payload)


def cmd_homology(args) -> int:
    G = _load_graph(args)
    sk = enumerate_skeleton(G, args.n, args.t_max + 1, args.cell_cap)
    summary = homology_summary(sk, args.t_max)
    payload = {"config": _config(args, t_max=args.t_max)}
    payload.update(summary.to_json())
    return _emit(args, payload)


def cmd_verify_connectivity(args) -> int:
    G = _load_graph(args)
    rep = connectivity_report(
        G, args.n, cell_cap=args.cell_cap, seed=args.seed, loop_samples=args.loops
    )
    payload = {"config": _config(args)}
    payload.update(rep.to_json())
    return _emit(args, payload, 0 if rep.verdict == "PASS" else 1)


def cmd_reduce_cycle(args) -> int:
    G = _load_graph(args)
    with open(args.chain) as fh:
        C = jsonio.chain_from_json(json.load(fh))
    out, cert = reduce_cycle(G, args.n, C, args.i)
    ok = verify_certificate(G, args.n, C, out, cert).ok
    payload = {
        "config": _config(args, i=args.i, chain=args.chain),
        "c_prime": jsonio.chain_to_json(out),
        "certificate": jsonio.certificate_to_json(cert),
        "verified": ok,
    }
    return _emit(args, payload, 0 if ok else 1)


def cmd_nullify_cycle(args) -> int:
    G = _load_graph(args)
    with open(args.chain) as fh:
        C = jsonio.chain_from_json(json.load(fh))
    cert = nullify_cycle(G, args.n, C)
    ok = verify_certificate(G, args.n, C, Chain(C.dim), cert).ok
    payload = {
        "config": _config(args, chain=args.chain),
        "certificate": jsonio.certificate_to_json(cert),
        "verified": ok,
    }
    return _emit(args, payload, 0 if ok else 1)


def cmd_contract_loop(args) -> int:
    G = _load_graph(args)
    with open(args.path) as fh:
        loop = jsonio.path_from_json(json.load(fh))
    moves = contract_loop(G, args.n, loop)
    res = verify_moves(G, args.n, loop, moves)
    ok = res.ok and len(res.final_path.vertices) == 1
    payload = {
        "config": _config(args, path=args.path),
        "moves": jsonio.moves_to_json(moves),
        "final_path": jsonio.path_to_json(res.final_path),
        "constant": len(res.final_path.vertices) == 1,
        "verified": ok,
    }
    return _emit(args, payload, 0 if ok else 1)


def cmd_pi1_rank(args) -> int:
    G = _load_graph(args)
    sk = enumerate_skeleton(G, args.n, 2, args.cell_cap)
    rank = pi1_free_rank(sk)
    payload = {
        "config": _config(args),
        "vertices": len(sk.cells_by_dim[0]),
        "edges": len(sk.cells_by_dim[1]),
        "rank": rank,
    }
    return _emit(args, payload)


def _add_common(sub, seed=False):
    sub.add_argument("--graph", help="graph JSON file")
    sub.add_argument("--family", help="built-in graph: K<m>, C<m>, P<m>, Star<k>")
    sub.add_argument("-n", type=int, required=True, help="number of colors")
    sub.add_argument("--cell-cap", type=int, default=DEFAULT_CELL_CAP, dest="cell_cap")
    sub.add_argument("--threads", type=int, default=1,
                     help="reserved; current enumeration is sequential")
    sub.add_argument("--out", help="write the JSON report here instead of stdout")
    if seed:
        sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homkn",
        description="Coloring complexes Hom(G, K_n): skeleta, exact homology, "
        "loop contraction and cycle reduction with verified certificates.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("build", help="enumerate a skeleton and report its f-vector")
    _add_common(s)
    s.add_argument("--max-dim", type=int, required=True, dest="max_dim")
    s.add_argument("--cells", action="store_true", help="include the full cell lists")
    s.set_defaults(func=cmd_build)

    s = subs.add_parser("homology", help="Betti numbers and torsion up to --t-max")
    _add_common(s)
    s.add_argument("--t-max", type=int, required=True, dest="t_max")
    s.set_defaults(func=cmd_homology)

    s = subs.add_parser(
        "verify-connectivity",
        help="check everything the bound conn >= n - maxval - 2 predicts",
    )
    _add_common(s, seed=True)
    s.add_argument("--loops", type=int, default=3, help="sampled loops to contract")
    s.set_defaults(func=cmd_verify_connectivity)

    s = subs.add_parser("reduce-cycle", help="push a cycle one color floor up")
    _add_common(s)
    s.add_argument("--chain", required=True, help="chain JSON file")
    s.add_argument("-i", type=int, required=True, help="target color floor (2..n)")
    s.set_defaults(func=cmd_reduce_cycle)

    s = subs.add_parser("nullify-cycle", help="produce D with boundary(D) = C")
    _add_common(s)
    s.add_argument("--chain", required=True, help="chain JSON file")
    s.set_defaults(func=cmd_nullify_cycle)

    s = subs.add_parser("contract-loop", help="contract a closed edge-path")
    _add_common(s)
    s.add_argument("--path", required=True, help="path JSON file")
    s.set_defaults(func=cmd_contract_loop)

    s = subs.add_parser("pi1-rank", help="free rank e - v + 1 of a 1-dimensional complex")
    _add_common(s)
    s.set_defaults(func=cmd_pi1_rank)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HomknError as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except OSError as exc:
        json.dump({"error": "OSError", "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
