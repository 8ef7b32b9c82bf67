"""Command-line front end: ``gndiag <command> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import signal
import sys
from typing import Optional

from .connectivity import UNDETERMINED, kappa_g, resolve_workers
from .diagnosability import DEFAULT_ORACLE_CAP, product_bounds, t_g_formula, t_g_oracle
from .families import DEFAULT_VERTEX_CAP, FamilySpec, make_family
from .gc import gc_number
from .graph import Graph, GraphError, format_edge_list, read_edge_list
from .verify import TIERS, FAST, render_table, tables, verify

COMMANDS = ("gen", "kappa", "gc", "tg", "tg-oracle", "product-bounds", "verify", "tables")


class CommandTimeout(Exception):
    pass


def load_graph(source: str, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """An edge-list file path, or an inline family spec such as ``"grid 5 5"``."""
    if os.path.isfile(source):
        g = read_edge_list(source)
        if g.n > vertex_cap:
            raise GraphError(f"graph has {g.n} vertices, above the cap of {vertex_cap}")
        return g
    return make_family(FamilySpec.parse(source), vertex_cap)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), help="default: text for tables, else json")
    common.add_argument("--workers", type=_non_negative, default=1, help="worker processes (GND_WORKERS overrides)")
    common.add_argument("--timeout-seconds", type=_non_negative, default=0, help="0 means no limit")
    common.add_argument("--vertex-cap", type=_non_negative, default=DEFAULT_VERTEX_CAP)

    graph_opts = argparse.ArgumentParser(add_help=False)
    graph_opts.add_argument("source", nargs="+", help="edge-list file or family spec, e.g. grid 5 5")
    graph_opts.add_argument("--g", type=_non_negative, default=0, dest="gg")

    p = argparse.ArgumentParser(prog="gndiag", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="write a family as an edge list")
    gen.add_argument("source", nargs="+")

    k = sub.add_parser("kappa", parents=[common, graph_opts], help="g-good-neighbor connectivity")
    k.add_argument("--cap", type=_non_negative)

    for name, helptext in (("gc", "gc number with certificate"), ("tg", "diagnosability via the formula")):
        sp = sub.add_parser(name, parents=[common, graph_opts], help=helptext)
        sp.add_argument("--budget", type=_non_negative)

    o = sub.add_parser("tg-oracle", parents=[common, graph_opts], help="diagnosability by brute force")
    o.add_argument("--cap", type=_non_negative, default=DEFAULT_ORACLE_CAP, help="largest n enumerated")

    pb = sub.add_parser("product-bounds", parents=[common], help="upper bounds for G □ H")
    pb.add_argument("left")
    pb.add_argument("right")
    pb.add_argument("--g", type=_non_negative, default=0, dest="gg")
    pb.add_argument("--budget", type=_non_negative)

    v = sub.add_parser("verify", parents=[common], help="run the verification suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tier", choices=TIERS, default=FAST)
    v.add_argument("--only", help="run only check ids with this prefix")

    t = sub.add_parser("tables", parents=[common], help="compare computed values with the published ones")
    t.add_argument("--tier", choices=TIERS, default=FAST)
    return p


def _flat(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(_flat(v) for v in value)
    return "" if value is None else str(value)


def emit(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(record.keys())
        w.writerow(_flat(v) for v in record.values())
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"{k}: {_flat(v)}" for k, v in record.items())


def _kappa_record(r, cap) -> dict:
    rec = {
        "g": r.gg,
        "value": r.value,
        "status": r.status,
        "witness": r.witness.to_list() if r.witness else None,
        "lower_bound": r.lower_bound,
    }
    if r.status == UNDETERMINED:
        rec["note"] = f"κ^{r.gg} > {cap}"
    return rec


def run(args: argparse.Namespace) -> tuple[int, str]:
    workers = resolve_workers(args.workers)
    cmd = args.command
    fmt = args.format or ("text" if cmd == "tables" else "json")
    if cmd == "gen":
        spec = FamilySpec.parse(" ".join(args.source))
        return 0, format_edge_list(make_family(spec, args.vertex_cap)).rstrip("\n")
    if cmd in ("kappa", "gc", "tg", "tg-oracle"):
        g = load_graph(" ".join(args.source), args.vertex_cap)
        if cmd == "kappa":
            r = kappa_g(g, args.gg, cap=args.cap, workers=workers)
            return 0, emit(_kappa_record(r, args.cap), fmt)
        if cmd == "gc":
            return 0, emit(gc_number(g, args.gg, budget=args.budget, workers=workers).to_dict(), fmt)
        if cmd == "tg":
            return 0, emit(t_g_formula(g, args.gg, budget=args.budget).to_dict(), fmt)
        return 0, emit(t_g_oracle(g, args.gg, cap=args.cap).to_dict(), fmt)
    if cmd == "product-bounds":
        left = load_graph(args.left, args.vertex_cap)
        right = load_graph(args.right, args.vertex_cap)
        rep = product_bounds(left, right, args.gg, budget=args.budget)
        if fmt == "json":
            return 0, json.dumps(rep.to_dict())
        rows = [emit(s.to_dict(), fmt) for s in rep.splits]
        return 0, "\n".join(rows)
    if cmd == "verify":
        rep = verify(seed=args.seed, tier=args.tier, workers=workers, only=args.only)
        out = {"json": rep.to_json, "csv": rep.to_csv, "text": rep.to_text}[fmt]()
        return (1 if rep.failed else 0), out.rstrip("\n")
    if cmd == "tables":
        rows = tables(args.tier)
        failed = any(r.status == "fail" for r in rows)
        return (1 if failed else 0), render_table(rows, fmt).rstrip("\n")
    raise GraphError(f"unknown command {cmd}")  # pragma: no cover - argparse guards this


def _on_alarm(signum, frame):
    raise CommandTimeout("timeout exceeded")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.timeout_seconds and hasattr(signal, "SIGALRM"):
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_seconds)
    try:
        status, out = run(args)
    except (GraphError, ValueError, CommandTimeout, OSError) as exc:
        kind = "timeout" if isinstance(exc, CommandTimeout) else type(exc).__name__
        record = {"error": {"command": args.command, "type": kind, "message": str(exc)}}
        print(json.dumps(record), file=sys.stderr)
        return 2
    finally:
        if args.timeout_seconds and hasattr(signal, "SIGALRM"):
            signal.alarm(0)
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
