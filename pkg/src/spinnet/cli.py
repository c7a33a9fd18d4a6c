"""Command-line front end.

Subcommands write CSV (or, for ``report``, plain text) to ``--output`` or
stdout. Exit status: 0 on success, 2 for usage/input errors, 3 for numeric
failures.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import graph as G
from .errors import InputError, NumericError
from .hamiltonian import CouplingModel
from .protocol import (DEFAULT_GRID, Protocol, PureSweep, WernerSweep, all_werner, efficiency_curve,
                       first_only, all_pure)
from .report import build_report, render_report
from .transfer import TransferScenario, excitation_amplitudes, joint_concurrence_oracle

log = logging.getLogger("spinnet")

EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass
class RunConfig:
    subcommand: str
    graph: G.Graph | None = None
    model: CouplingModel = field(default_factory=CouplingModel)
    grid: tuple[float, ...] = ()
    window: tuple[float, float] | None = None
    grid_points: int = DEFAULT_GRID
    output: str | None = None


def fmt(x) -> str:
    if x is None or x == "":
        return ""
    if isinstance(x, str):
        return x
    x = float(x)
    return format(0.0 if x == 0 else x, ".12g")


def write_csv(header: list[str], rows, output: str | None) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    _emit(buf.getvalue(), output)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def parse_graph_spec(spec: str) -> G.Graph:
    """``family:n`` (path, cycle, complete, edgeless) or a path to an edge-list file."""
    if ":" in spec:
        family, _, n = spec.partition(":")
        if family in G.FAMILIES:
            try:
                return G.named(family, int(n))
            except ValueError:
                raise InputError(f"bad vertex count in {spec!r}") from None
    p = Path(spec)
    if p.is_file():
        return G.read_edge_list(p)
    raise InputError(f"{spec!r} is neither 'family:n' nor an edge-list file")


def _topology(args) -> G.Graph:
    if args.edge_list and args.topology:
        raise InputError("give either --topology/--nodes or --edge-list, not both")
    if args.edge_list:
        return G.read_edge_list(args.edge_list)
    if not args.topology or args.nodes is None:
        raise InputError("need --topology and --nodes (or --edge-list)")
    return G.named(args.topology, args.nodes)


def _model(args) -> CouplingModel:
    return CouplingModel(args.model, args.scale)


def _grid(lo: float, hi: float, steps: int) -> tuple[float, ...]:
    if steps < 1:
        raise InputError("grid needs at least one step")
    if steps > 1 and not hi > lo:
        raise InputError(f"grid bounds must satisfy min < max, got [{lo}, {hi}]")
    return tuple(float(x) for x in np.linspace(lo, hi, steps)) if steps > 1 else (float(lo),)


def _window(args) -> tuple[float, float] | None:
    return None if args.t_max is None else (0.0, args.t_max)


def cmd_transfer(args) -> None:
    ga, gb = parse_graph_spec(args.graph_a), parse_graph_spec(args.graph_b)
    model = _model(args)
    s = TransferScenario(ga, gb, args.source_a, args.source_b, args.target_a, args.target_b, model)
    rows = []
    for t in _grid(0.0, args.t_max, args.t_steps):
        a = abs(excitation_amplitudes(ga, s.source_a, t, model)[s.target_a - 1])
        b = abs(excitation_amplitudes(gb, s.source_b, t, model)[s.target_b - 1])
        oracle = joint_concurrence_oracle(s, t) if args.oracle else None
        rows.append((t, a, b, a * b, oracle))
    write_csv(["t", "abs_alpha_target", "abs_beta_target", "pair_concurrence", "oracle_concurrence"],
              rows, args.output)


def _warn_isolated(g: G.Graph, pairs: str) -> None:
    if pairs == "all" and G.has_isolated_vertex(g):
        log.warning("topology has an isolated vertex; topology-independence of the maximum is not expected")


def cmd_concentrate(args) -> None:
    g = _topology(args)
    _warn_isolated(g, args.pairs)
    sweep = PureSweep(_grid(args.theta_min, args.theta_max, args.theta_steps), args.pairs)
    results = efficiency_curve(g, _model(args), sweep, _window(args), args.grid_points)
    write_csv(["theta", "t_opt", "e_max", "baseline_concurrence"],
              [(r.parameter, r.t_opt, r.e_max, r.baseline_concurrence) for r in results], args.output)


def cmd_purify(args) -> None:
    g = _topology(args)
    _warn_isolated(g, "all")
    fs = _grid(args.f_min, args.f_max, args.f_steps)
    if min(fs) < 0.25 or max(fs) > 1.0:
        raise InputError("Werner fidelity grid must lie within [0.25, 1]")
    results = efficiency_curve(g, _model(args), WernerSweep(fs), _window(args), args.grid_points)
    write_csv(["f", "t_opt", "e_max", "baseline_concurrence"],
              [(r.parameter, r.t_opt, r.e_max, r.baseline_concurrence) for r in results], args.output)


def cmd_outcomes(args) -> None:
    g = _topology(args)
    if args.f is not None:
        specs = all_werner(g.n, args.f)
    elif args.pairs == "all":
        specs = all_pure(g.n, args.theta)
    else:
        specs = first_only(g.n, args.theta)
    proto = Protocol(g, _model(args), specs)
    records = proto.outcomes(args.t)
    rows = [(r.bits_a, r.bits_b, r.probability, r.concurrence_out, r.gain) for r in records]
    total_p = sum(r.probability for r in records)
    e = sum(r.probability * r.gain for r in records)
    rows.append(("total", "", total_p, "", e))
    write_csv(["bits_a", "bits_b", "probability", "concurrence_out", "gain"], rows, args.output)


def cmd_report(args) -> None:
    _emit(render_report(build_report(quick=args.quick)), args.output)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spinnet", description="Entanglement transfer, concentration and "
                                "purification between two identical XY spin networks.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def coupling(sp):
        sp.add_argument("--model", choices=["xy", "heisenberg"], default="xy")
        sp.add_argument("--scale", type=float, default=1.0, help="coupling scale multiplying H")
        sp.add_argument("--output", "-o", help="output file (default: stdout)")

    def topology(sp):
        sp.add_argument("--topology", choices=sorted(G.FAMILIES))
        sp.add_argument("--nodes", type=int)
        sp.add_argument("--edge-list", help="edge-list file, instead of --topology/--nodes")

    def window(sp):
        sp.add_argument("--t-max", type=float, help="optimise t over [0, T] (default: revival period, capped at 8 pi)")
        sp.add_argument("--grid-points", type=int, default=DEFAULT_GRID)

    t = sub.add_parser("transfer", help="single-excitation entanglement transfer")
    t.add_argument("--graph-a", required=True, help="family:n or edge-list file")
    t.add_argument("--graph-b", required=True)
    for name in ("source-a", "source-b", "target-a", "target-b"):
        t.add_argument(f"--{name}", type=int, required=True)
    t.add_argument("--t-max", type=float, required=True)
    t.add_argument("--t-steps", type=int, default=101)
    t.add_argument("--oracle", action="store_true", help="also compute the full-space concurrence")
    coupling(t)
    t.set_defaults(func=cmd_transfer)

    c = sub.add_parser("concentrate", help="max efficiency over t for pure pairs, swept in theta")
    topology(c)
    c.add_argument("--theta-min", type=float, default=np.pi / 4)
    c.add_argument("--theta-max", type=float, default=np.pi / 2)
    c.add_argument("--theta-steps", type=int, default=26)
    c.add_argument("--pairs", choices=["all", "first-only"], default="all")
    window(c)
    coupling(c)
    c.set_defaults(func=cmd_concentrate)

    u = sub.add_parser("purify", help="max efficiency over t for Werner pairs, swept in f")
    topology(u)
    u.add_argument("--f-min", type=float, default=0.25)
    u.add_argument("--f-max", type=float, default=1.0)
    u.add_argument("--f-steps", type=int, default=16)
    window(u)
    coupling(u)
    u.set_defaults(func=cmd_purify)

    o = sub.add_parser("outcomes", help="every measurement branch at fixed parameters and time")
    topology(o)
    which = o.add_mutually_exclusive_group(required=True)
    which.add_argument("--theta", type=float)
    which.add_argument("--f", type=float)
    o.add_argument("--t", type=float, required=True)
    o.add_argument("--pairs", choices=["all", "first-only"], default="all")
    coupling(o)
    o.set_defaults(func=cmd_outcomes)

    r = sub.add_parser("report", help="closed-form discrepancy report")
    r.add_argument("--quick", action="store_true", help="coarser grids")
    r.add_argument("--output", "-o")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except InputError as exc:
        print(f"spinnet {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, np.linalg.LinAlgError) as exc:
        print(f"spinnet {args.subcommand}: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":
    sys.exit(main())
