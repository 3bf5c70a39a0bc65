"""Command-line driver: stimulus generation, netlist construction,
simulation, estimation, and the batch replication harness.

Exit codes: 0 success, 1 phase failure (partial outputs kept, manifest
marks the run incomplete), 2 invalid configuration or usage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .archlib import ALL_KINDS, build_architecture
from .config import (ConfigError, ExperimentConfig, default_bp1_targets,
                     load_config)
from .estimate import (FLAG_ZERO_SIMULATED, check_report, compare,
                       default_sweep_mean, estimate_rare_nets,
                       solve_sigma_for_bp1, write_report_csv)
from .netlist import load_netlist, save_netlist
from .simulate import export_activity, rare_nets, simulate
from .stats import WordStats, breakpoints
from .stimulus import generate, load_stream, save_stream


def _parse_arch(text: str) -> tuple[str, int]:
    kind, sep, w = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("expected KIND:WIDTH, e.g. RCA:16")
    try:
        width = int(w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad width {w!r}")
    return kind.upper(), width


def _stats_pair(args, width: int) -> tuple[WordStats, WordStats]:
    sa = WordStats(args.mean, args.std, args.rho, width)
    sb = WordStats(
        args.mean if args.mean_b is None else args.mean_b,
        args.std if args.std_b is None else args.std_b,
        args.rho if args.rho_b is None else args.rho_b,
        width,
    )
    return sa, sb


def _add_stats_args(p):
    p.add_argument("--mean", type=float, default=0.0)
    p.add_argument("--std", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--mean-b", type=float, default=None)
    p.add_argument("--std-b", type=float, default=None)
    p.add_argument("--rho-b", type=float, default=None)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rarenet",
        description="Rare-net estimation and localization for arithmetic datapaths",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-vectors", help="generate a correlated word stream")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--mean", type=float, default=0.0)
    p.add_argument("--std", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--vectors", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("build-netlist", help="emit a gate-level netlist")
    p.add_argument("--arch", type=_parse_arch, required=True,
                   metavar="KIND:WIDTH")
    p.add_argument("--out", required=True)

    p = sub.add_parser("simulate", help="toggle-count a netlist under streams")
    p.add_argument("--netlist", required=True)
    p.add_argument("--stream-a", required=True)
    p.add_argument("--stream-b", required=True)
    p.add_argument("--out", required=True, help="activity CSV path")

    p = sub.add_parser("estimate", help="analytical rare-net estimate")
    p.add_argument("--arch", type=_parse_arch, required=True,
                   metavar="KIND:WIDTH")
    _add_stats_args(p)
    p.add_argument("--threshold", type=float, default=1e-4)

    p = sub.add_parser("compare", help="estimate vs simulation error")
    p.add_argument("--arch", type=_parse_arch, required=True,
                   metavar="KIND:WIDTH")
    _add_stats_args(p)
    p.add_argument("--threshold", type=float, default=1e-4)
    p.add_argument("--vectors", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None, help="optional report CSV")

    p = sub.add_parser("sweep", help="error across boundary-column targets")
    p.add_argument("--arch", type=_parse_arch, required=True,
                   metavar="KIND:WIDTH")
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--threshold", type=float, default=1e-4)
    p.add_argument("--bp1", type=int, action="append", required=True,
                   help="target column (repeatable)")
    p.add_argument("--mean", type=float, default=None)
    p.add_argument("--vectors", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", default=None, help="optional report CSV")

    p = sub.add_parser("locate", help="list the vulnerable region of a module")
    p.add_argument("--arch", type=_parse_arch, required=True,
                   metavar="KIND:WIDTH")
    _add_stats_args(p)
    p.add_argument("--threshold", type=float, default=1e-5)
    p.add_argument("--vectors", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--no-sim", action="store_true",
                   help="estimation only, skip simulation")

    p = sub.add_parser("replicate", help="run the full batch from a config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="override output_dir")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--vectors", type=int, default=None)

    return top


# ------------------------------------------------------------- subcommands

def _cmd_gen_vectors(args) -> int:
    target = WordStats(args.mean, args.std, args.rho, args.width)
    stream = generate(target, args.vectors, args.seed)
    save_stream(stream, args.out)
    return 0


def _cmd_build_netlist(args) -> int:
    kind, width = args.arch
    save_netlist(build_architecture(kind, width), args.out)
    return 0


def _cmd_simulate(args) -> int:
    netlist = load_netlist(args.netlist)
    sa = load_stream(args.stream_a)
    sb = load_stream(args.stream_b)
    profile = simulate(netlist, sa, sb)
    export_activity(netlist, profile, args.out)
    return 0


def _cmd_estimate(args) -> int:
    kind, width = args.arch
    netlist = build_architecture(kind, width)
    sa, sb = _stats_pair(args, width)
    rep = estimate_rare_nets(netlist, breakpoints(sa), breakpoints(sb),
                             args.threshold)
    print(f"arch={rep.arch} width={rep.width} bp0={rep.bp.bp0} "
          f"bp1={rep.bp.bp1} p_est={rep.estimated_count}")
    for block, count in rep.contributing_blocks:
        print(f"  {block}: {count}")
    return 0


def _cmd_compare(args) -> int:
    kind, width = args.arch
    netlist = build_architecture(kind, width)
    sa, sb = _stats_pair(args, width)
    rep = compare(netlist, sa, sb, args.threshold, args.vectors, args.seed)
    print(f"arch={rep.arch} width={rep.width} bp1={rep.bp.bp1} "
          f"p_est={rep.estimated_count} p_sim={rep.simulated_count} "
          f"error={rep.abs_error:.6f}")
    if args.out:
        write_report_csv([rep], args.out)
    return 0


def _cmd_sweep(args) -> int:
    kind, width = args.arch
    netlist = build_architecture(kind, width)
    mean = default_sweep_mean(width) if args.mean is None else args.mean
    reports = []
    for bp1 in sorted(args.bp1):
        sigma = solve_sigma_for_bp1(bp1, args.rho)
        target = WordStats(mean, sigma, args.rho, width)
        rep = compare(netlist, target, target, args.threshold,
                      args.vectors, args.seed)
        reports.append(rep)
        print(f"bp1={bp1} sigma={sigma:.3f} p_est={rep.estimated_count} "
              f"p_sim={rep.simulated_count} error={rep.abs_error:.6f}")
    mean_err = sum(r.abs_error for r in reports) / len(reports)
    print(f"mean_error={mean_err:.6f}")
    if args.out:
        write_report_csv(reports, args.out)
    return 0


def _cmd_locate(args) -> int:
    kind, width = args.arch
    netlist = build_architecture(kind, width)
    sa, sb = _stats_pair(args, width)
    rep = estimate_rare_nets(netlist, breakpoints(sa), breakpoints(sb),
                             args.threshold)
    top = netlist.output_width - 1
    print(f"arch={rep.arch} width={rep.width} vulnerable columns "
          f"{rep.bp.bp1}..{top} ({rep.estimated_count} nets)")
    for block, count in rep.contributing_blocks:
        print(f"  {block}: {count}")
    if args.no_sim:
        return 0
    stream_a = generate(sa, args.vectors, args.seed)
    stream_b = generate(sb, args.vectors, args.seed + 1)
    profile = simulate(netlist, stream_a, stream_b)
    gate_nets = frozenset(g.output for g in netlist.gates)
    simulated = sorted(rare_nets(profile, args.threshold) & gate_nets)
    print(f"simulated rare nets at threshold {args.threshold}: "
          f"{len(simulated)}")
    for net_id in simulated:
        gate = netlist.driver_of(net_id)
        where = "inside" if net_id in rep.estimated_nets else "outside"
        print(f"  {netlist.nets[net_id].name} (block {gate.block}, "
              f"slice {gate.bit_slice}): {where} estimated region")
    return 0


# --------------------------------------------------------------- replicate

def run(cfg: ExperimentConfig) -> int:
    """Execute the full batch: netlists, streams, activity, reports.

    The output tree is a pure function of the config: filenames carry no
    timestamps and every writer is deterministic.
    """
    out = Path(cfg.output_dir)
    manifest: list[str] = []
    status = "complete"
    try:
        for sub in ("netlists", "streams", "activity", "reports"):
            (out / sub).mkdir(parents=True, exist_ok=True)

        netlists = {}
        for kind, width in cfg.architectures:
            nl = build_architecture(kind, width)
            netlists[(kind, width)] = nl
            rel = f"netlists/{kind.lower()}{width}.net"
            save_netlist(nl, out / rel)
            manifest.append(rel)

        # one stream pair per (width, target); shared across architectures
        threshold = cfg.thresholds[0]
        streams: dict[tuple[int, int], tuple] = {}
        targets_by_width: dict[int, list[int]] = {}
        for width in sorted({w for _, w in cfg.architectures}):
            targets = cfg.bp1_targets or default_bp1_targets(width)
            mean = default_sweep_mean(width)
            usable = []
            for t in sorted(targets):
                sigma = solve_sigma_for_bp1(t, cfg.rho_a)
                st_a = WordStats(mean, sigma, cfg.rho_a, width)
                st_b = WordStats(mean, sigma, cfg.rho_b, width)
                if not (st_a.fits_range() and st_b.fits_range()):
                    continue
                sa = generate(st_a, cfg.vectors, cfg.seed)
                sb = generate(st_b, cfg.vectors, cfg.seed + 1)
                for tag, stream in (("a", sa), ("b", sb)):
                    rel = f"streams/w{width}_bp{t}_{tag}.txt"
                    save_stream(stream, out / rel)
                    manifest.append(rel)
                streams[(width, t)] = (st_a, st_b, sa, sb)
                usable.append(t)
            targets_by_width[width] = usable

        summary = []
        for kind, width in cfg.architectures:
            nl = netlists[(kind, width)]
            gate_nets = frozenset(g.output for g in nl.gates)
            reports = []
            for t in targets_by_width[width]:
                st_a, st_b, sa, sb = streams[(width, t)]
                rep = estimate_rare_nets(nl, breakpoints(st_a),
                                         breakpoints(st_b), threshold)
                rep = replace(rep, stats_a=st_a, stats_b=st_b)
                profile = simulate(nl, sa, sb)
                rel = f"activity/{kind.lower()}{width}_bp{t}.csv"
                export_activity(nl, profile, out / rel)
                manifest.append(rel)
                simulated = rare_nets(profile, threshold) & gate_nets
                err = (abs(len(simulated) - rep.estimated_count)
                       / max(len(simulated), 1))
                flags = rep.flags
                if not simulated:
                    flags = flags + (FLAG_ZERO_SIMULATED,)
                reports.append(replace(rep, simulated_count=len(simulated),
                                       abs_error=err, flags=flags))
            rel = f"reports/sweep_{kind.lower()}{width}.csv"
            write_report_csv(reports, out / rel)
            manifest.append(rel)
            mean_err = (sum(r.abs_error for r in reports) / len(reports)
                        if reports else float("nan"))
            summary.append((kind.lower(), width, mean_err))

        rel = "reports/summary.csv"
        with open(out / rel, "w", newline="") as fh:
            fh.write("arch,width,mean_error\n")
            for kind, width, err in summary:
                fh.write(f"{kind},{width},{err:.12f}\n")
        manifest.append(rel)
        return 0
    except Exception as exc:  # noqa: BLE001 - report and keep partial outputs
        print(f"error: {exc}", file=sys.stderr)
        status = "incomplete"
        return 1
    finally:
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "manifest.txt", "w") as fh:
            fh.write(f"status={status}\n")
            for rel in sorted(manifest):
                fh.write(rel + "\n")


def _cmd_replicate(args) -> int:
    cfg = load_config(args.config)
    if args.out is not None:
        cfg = replace(cfg, output_dir=args.out)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.vectors is not None:
        cfg = replace(cfg, vectors=args.vectors)
    return run(cfg)


_COMMANDS = {
    "gen-vectors": _cmd_gen_vectors,
    "build-netlist": _cmd_build_netlist,
    "simulate": _cmd_simulate,
    "estimate": _cmd_estimate,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "locate": _cmd_locate,
    "replicate": _cmd_replicate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
