"""Command-line interface.

Every command prints one JSON report on stdout (``--plain`` for a table) and
exits 0 on success, 1 on a failed verification and 2 on usage or format
errors.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import borsuk, cliques, graph as gc, params as sp, representation as rp
from .errors import Graph6Error, SrgBorsukError
from .params import QuadraticNumber, SrgParams
from .reproduce import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, QuadraticNumber):
        if obj.is_rational:
            return to_jsonable(obj.as_fraction())
        return str(obj)
    if isinstance(obj, SrgParams):
        return list(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    if isinstance(obj, Path):
        return str(obj)
    return obj


def _plain(report: dict) -> str:
    lines = [f"{report['command']}: {report['status']}"]

    def walk(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
            for i, v in enumerate(value):
                walk(f"{prefix}{i}.", v)
        else:
            lines.append(f"  {prefix[:-1]:<48} {value if not isinstance(value, list) else ' '.join(map(str, value))}")

    walk("", report["results"])
    for f in report["failures"]:
        lines.append(f"  FAILED {f}")
    return "\n".join(lines)


def emit(args, command: str, inputs: dict, results: dict, failures: list[str]) -> int:
    report = {
        "command": command,
        "inputs": to_jsonable(inputs),
        "results": to_jsonable(results),
        "status": "failed" if failures else "ok",
        "failures": failures,
    }
    if not getattr(args, "no_timestamp", False):
        report["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    if getattr(args, "plain", False):
        print(_plain(report))
    else:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    return EXIT_FAIL if failures else EXIT_OK


def _params_arg(text: str) -> SrgParams:
    try:
        return SrgParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _load_graph(path: str) -> gc.Graph:
    try:
        return gc.read_graph6_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check_params(args) -> int:
    prm = SrgParams(args.v, args.k, args.lam, args.mu)
    report = sp.check_feasible(prm)
    results = {"feasible": report.ok, "violations": list(report.violations)}
    if report.ok:
        results["spectrum"] = sp.spectrum(prm)
    failures = [] if report.ok else ["infeasible: " + "; ".join(report.violations)]
    return emit(args, "check-params", {"params": prm}, results, failures)


def cmd_verify_graph(args) -> int:
    g = _load_graph(args.path)
    if g.n < 4:
        raise UsageError(f"{args.path}: {g.n} vertices, need at least 4")
    check = gc.verify_srg(g)
    results = {"n": g.n, "edges": g.num_edges(), "regular": check.is_regular,
               "strongly_regular": check.is_srg, "params": check.params}
    failures = []
    if not check.is_srg:
        results["witness"] = check.witness
        failures.append(f"not strongly regular: {check.reason}")
    elif check.params:
        results["feasible"] = sp.check_feasible(check.params).ok
    if args.expect is not None and check.params != args.expect:
        failures.append(f"parameter mismatch: expected {args.expect}, found {check.params}")
    return emit(args, "verify-graph", {"path": args.path, "expect": args.expect}, results, failures)


GENERATORS = {
    "petersen": lambda size: gc.petersen(),
    "triangular": gc.triangular,
    "lattice": gc.lattice,
    "paley": gc.paley,
    "g2_4": lambda size: gc.load_g2_4(),
}


def cmd_gen(args) -> int:
    if args.family not in ("petersen", "g2_4") and args.size is None:
        raise UsageError(f"family {args.family} needs a size")
    g = GENERATORS[args.family](args.size)
    if args.complement:
        g = gc.complement(g)
    gc.write_graph6_file(args.output, g)
    results = {"n": g.n, "edges": g.num_edges(), "output": args.output}
    if g.n >= 4:
        results["params"] = gc.verify_srg(g).params
    return emit(args, "gen", {"family": args.family, "size": args.size, "complement": args.complement},
                results, [])


def cmd_clique(args) -> int:
    g = _load_graph(args.path)
    cert = cliques.max_clique(g)
    results = {"exact": cert}
    failures = []
    if args.chain:
        expected = args.expect or []
        chain = cliques.chain_clique_bound(
            g, args.chain, expected, strict=args.strict, sample_count=args.samples, seed=args.seed,
            leaf_triangle_free=args.leaf_triangle_free,
        )
        results["chain"] = chain
        if chain.size < cert.size:  # pragma: no cover - would mean a bug
            failures.append("chain bound below the exact clique number")
    return emit(args, "clique", {"path": args.path}, results, failures)


def cmd_represent(args) -> int:
    prm = SrgParams(args.v, args.k, args.lam, args.mu)
    rep = rp.rep_parameters(prm, args.side)
    ids = rp.spectral_identity_check(prm, rep)
    results = {"representation": rep, "diameter": rp.diameter_class(rep.p, rep.q),
               "identities": [{"identity": n, "lhs": a, "rhs": b} for n, a, b in ids.checks]}
    failures = []
    if args.graph:
        g = _load_graph(args.graph)
        if args.rank:
            rank = rp.gram_rank(rp.gram_matrix(g, rep), args.rank)
            results["gram_rank"] = rank
            if rank != rep.dim:
                failures.append(f"Gram rank {rank} != dim {rep.dim}")
        if args.coords:
            x = rp.realize_coordinates(g, rep)
            with open(args.coords, "w") as fh:
                rp.write_coordinates(fh, x)
            results["coords"] = {"path": args.coords, "shape": list(x.shape)}
    return emit(args, "represent", {"params": prm, "side": args.side, "graph": args.graph}, results, failures)


def cmd_bound(args) -> int:
    cert = borsuk.partition_lower_bound(args.points, args.part_bound, args.dimension)
    return emit(args, "bound", vars_subset(args, "points", "part_bound", "dimension"),
                {"certificate": cert, "claim": cert.claim()}, [])


def cmd_lift(args) -> int:
    cert = borsuk.family_bound(args.base, args.blocks, args.extend)
    results = {"certificate": cert, "claim": cert.claim()}
    failures = []
    if args.witness:
        if args.base != "g24":
            raise UsageError("coordinate witnesses are available for the g24 base only")
        g = gc.load_g2_4(args.graph)
        rep = rp.rep_parameters(gc.G2_4_PARAMS)
        x = rp.realize_coordinates(g, rep)
        seed = borsuk.seed_configuration("g24")
        per_block = borsuk.partition_lower_bound(416, seed.clique_bound, 65).lower_bound
        w = borsuk.lift_witness(x, rep.p, rep.q, args.blocks, args.extend, per_block, seed.clique_bound)
        with open(args.witness, "w") as fh:
            rp.write_coordinates(fh, w.points)
        results["witness"] = {"path": args.witness, "shape": list(w.points.shape),
                              "squared_distances": list(w.distances), "claim": w.certificate.claim()}
        if w.certificate.claim() != cert.claim():
            failures.append(f"witness certifies {w.certificate.claim()}, arithmetic gives {cert.claim()}")
    return emit(args, "lift", vars_subset(args, "base", "blocks", "extend"), results, failures)


def cmd_slice(args) -> int:
    if args.fi23:
        prm, local, clique, dim = SrgParams(31671, 3510, 693, 351), 180, 23, 782
    else:
        if None in (args.params, args.local_lambda, args.clique_bound):
            raise UsageError("give --fi23 or all of --params, --local-lambda, --clique-bound")
        prm, local, clique = args.params, args.local_lambda, args.clique_bound
        dim = args.base_dim if args.base_dim is not None else sp.spectrum(prm).f
    certs = borsuk.slice_bound(prm, local, clique, dim)
    return emit(args, "slice", {"params": prm, "local_lambda": local, "clique_bound": clique, "base_dim": dim},
                {"certificates": certs, "claims": [c.claim() for c in certs]}, [])


def cmd_reproduce(args) -> int:
    results = run_checks(args.graph, skip_graph=args.skip_graph, strict_chain=args.strict_chain)
    failures = [f"{r.name}: {r.error}" for r in results if not r.ok]
    out = {
        "assertions": [
            {"name": r.name, "criterion": r.criterion, "ok": r.ok, "detail": r.detail, "error": r.error}
            | ({} if args.no_timestamp else {"seconds": round(r.seconds, 3)})
            for r in results
        ],
        "passed": sum(r.ok for r in results),
        "total": len(results),
    }
    if failures:
        out["first_failure"] = failures[0]
    return emit(args, "reproduce", {"graph": args.graph, "skip_graph": args.skip_graph,
                                    "strict_chain": args.strict_chain}, out, failures)


def vars_subset(args, *names):
    return {n: getattr(args, n) for n in names}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--plain", action="store_true", help="human-readable table instead of JSON")
    common.add_argument("--no-timestamp", action="store_true", help="omit timestamps for byte-identical reports")

    parser = argparse.ArgumentParser(prog="srgborsuk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-params", parents=[common], help="feasibility and spectrum of (v,k,lambda,mu)")
    for name in ("v", "k", "lam", "mu"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_check_params)

    p = sub.add_parser("verify-graph", parents=[common], help="detect SRG parameters of a graph6 file")
    p.add_argument("path")
    p.add_argument("--expect", type=_params_arg, metavar="V,K,L,M")
    p.set_defaults(func=cmd_verify_graph)

    p = sub.add_parser("gen", parents=[common], help="write a corpus graph as graph6")
    p.add_argument("family", choices=sorted(GENERATORS))
    p.add_argument("size", type=int, nargs="?")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("clique", parents=[common], help="exact clique number, optionally the chain bound")
    p.add_argument("path")
    p.add_argument("--chain", type=int, choices=(1, 2, 3), metavar="DEPTH")
    p.add_argument("--expect", type=_params_arg, action="append", metavar="V,K,L,M",
                   help="expected parameters per chain level (repeat)")
    p.add_argument("--strict", action="store_true", help="check every clique at every level")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--leaf-triangle-free", action="store_true")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("represent", parents=[common], help="two-distance representation parameters")
    for name in ("v", "k", "lam", "mu"):
        p.add_argument(name, type=int)
    p.add_argument("--side", choices=("f", "g"), default="f")
    p.add_argument("--graph", help="graph6 file with these parameters")
    p.add_argument("--rank", choices=("exact", "modular", "both"), help="exact Gram rank (needs --graph)")
    p.add_argument("--coords", help="write coordinates here (needs --graph)")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("bound", parents=[common], help="pigeonhole partition lower bound")
    p.add_argument("points", type=int)
    p.add_argument("part_bound", type=int)
    p.add_argument("dimension", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("lift", parents=[common], help="block/apex family bound")
    p.add_argument("--base", choices=("g24", "fi23"), required=True)
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--extend", type=int, default=0)
    p.add_argument("--witness", help="build coordinates and write them here (g24 only)")
    p.add_argument("--graph", help="G2(4) graph6 file (default: bundled data)")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("slice", parents=[common], help="common non-neighbour slice bounds")
    p.add_argument("--fi23", action="store_true")
    p.add_argument("--params", type=_params_arg, metavar="V,K,L,M")
    p.add_argument("--local-lambda", type=int)
    p.add_argument("--clique-bound", type=int)
    p.add_argument("--base-dim", type=int)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("reproduce", parents=[common], help="run every numeric check")
    p.add_argument("--graph", help="G2(4) graph6 file (default: bundled data)")
    p.add_argument("--skip-graph", action="store_true", help="parameter-level checks only")
    p.add_argument("--strict-chain", action="store_true", help="exhaustive subconstituent chain")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, UsageError) as exc:
        code = getattr(exc, "code", "usage")
        print(json.dumps({"command": args.command, "status": "failed", "failures": [f"{code}: {exc}"]}, indent=2))
        return EXIT_USAGE
    except SrgBorsukError as exc:
        print(json.dumps({"command": args.command, "status": "failed", "failures": [f"{exc.code}: {exc}"]}, indent=2))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
