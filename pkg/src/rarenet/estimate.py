"""Analytical rare-net estimation and simulation cross-checks.

The estimator predicts which nets switch rarely from operand word
statistics alone: the bit-level activity model gives the column above
which operand bits are dominated by correlated sign behaviour, and every
gate at or above that column is predicted rare.  For a multiplier the
operand log-magnitudes add, so the product-side boundary is taken as the
sum of the two operand boundaries (clamped to the product width); reports
carry a flag marking this modeling assumption.

Cross-check utilities simulate the same netlist under matching stimulus
and score the prediction with the relative count error
|simulated - estimated| / max(simulated, 1); points where the simulation
found no rare nets are flagged rather than dropped.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field, replace

from .netlist import Netlist, slice_nets
from .simulate import rare_nets, simulate
from .stats import Breakpoints, WordStats, breakpoints, combined_breakpoints, rho_msb
from .stimulus import StimulusStream, generate

FLAG_PRODUCT_MAPPING = "product-region-mapping"
FLAG_ZERO_SIMULATED = "zero-simulated-count"

DEFAULT_THRESHOLDS = (1e-6, 1e-5, 1e-4, 1e-3, 1e-2)


@dataclass(frozen=True)
class RareNetReport:
    """Estimated vs (optionally) simulated rare-net population of one module."""

    arch: str
    width: int
    bp: Breakpoints
    threshold: float
    estimated_count: int
    contributing_blocks: tuple[tuple[str, int], ...]
    estimated_nets: frozenset[int] = field(repr=False, default=frozenset())
    simulated_count: int | None = None
    abs_error: float | None = None
    flags: tuple[str, ...] = ()
    stats_a: WordStats | None = None
    stats_b: WordStats | None = None


def effective_slice_start(netlist: Netlist, bp_a: Breakpoints,
                          bp_b: Breakpoints) -> Breakpoints:
    """Combine operand breakpoints into the output-column boundary pair."""
    if netlist.is_multiplier:
        top = netlist.output_width - 1
        return Breakpoints(
            bp0=min(max(bp_a.bp0 + bp_b.bp0, 0), top),
            bp1=min(max(bp_a.bp1 + bp_b.bp1, 0), top),
            degenerate=bp_a.degenerate or bp_b.degenerate,
        )
    return combined_breakpoints(bp_a, bp_b)


def estimate_rare_nets(netlist: Netlist, bp_a: Breakpoints,
                       bp_b: Breakpoints | None = None,
                       threshold: float = 1e-4) -> RareNetReport:
    """Predict the rare-net set of a module from operand breakpoints."""
    if bp_b is None:
        bp_b = bp_a
    bp = effective_slice_start(netlist, bp_a, bp_b)
    if not 0 <= bp.bp1 < netlist.output_width:
        raise ValueError(f"bp1 {bp.bp1} outside output width")
    nets = slice_nets(netlist, bp.bp1)
    per_block: dict[str, int] = {}
    for g in netlist.gates:
        if g.output in nets:
            per_block[g.block] = per_block.get(g.block, 0) + 1
    blocks = tuple(sorted(per_block.items()))
    flags = (FLAG_PRODUCT_MAPPING,) if netlist.is_multiplier else ()
    return RareNetReport(
        arch=netlist.name, width=netlist.width, bp=bp, threshold=threshold,
        estimated_count=len(nets), contributing_blocks=blocks,
        estimated_nets=nets, flags=flags,
    )


def check_report(netlist: Netlist, report: RareNetReport,
                 stream_a: StimulusStream,
                 stream_b: StimulusStream) -> RareNetReport:
    """Attach simulated rare-net counts and the relative error to a report."""
    profile = simulate(netlist, stream_a, stream_b)
    gate_nets = frozenset(g.output for g in netlist.gates)
    simulated = rare_nets(profile, report.threshold) & gate_nets
    err = abs(len(simulated) - report.estimated_count) / max(len(simulated), 1)
    flags = report.flags
    if not simulated:
        flags = flags + (FLAG_ZERO_SIMULATED,)
    return replace(report, simulated_count=len(simulated), abs_error=err,
                   flags=flags)


def compare(netlist: Netlist, stats_a: WordStats, stats_b: WordStats,
            threshold: float = 1e-4, stream_len: int = 10_000,
            seed: int = 1) -> RareNetReport:
    """Estimate, then simulate under matching stimulus, and score the error.

    Operand A uses `seed`, operand B uses `seed + 1`, so the two word
    streams are independent draws with the stated statistics.
    """
    rep = estimate_rare_nets(netlist, breakpoints(stats_a),
                             breakpoints(stats_b), threshold)
    rep = replace(rep, stats_a=stats_a, stats_b=stats_b)
    sa = generate(stats_a, stream_len, seed)
    sb = generate(stats_b, stream_len, seed + 1)
    return check_report(netlist, rep, sa, sb)


def least_rare_module(reports) -> str:
    """Architecture with the fewest estimated rare nets (ties: name order)."""
    reports = list(reports)
    if not reports:
        raise ValueError("no reports to rank")
    return min(reports, key=lambda r: (r.estimated_count, r.arch)).arch


# -------------------------------------------------------------------- sweep

def solve_sigma_for_bp1(bp1: int, rho: float) -> float:
    """Word-level standard deviation that places the upper boundary at bp1."""
    r = rho_msb(rho)
    if r >= 1.0:
        raise ValueError("perfectly correlated words have no finite boundary")
    return 2.0 ** bp1 / (6.0 * (1.0 - r) ** 0.5)


def default_sweep_mean(bit_width: int) -> float:
    """Sweep operating point: zero mean.

    The bit-level activity model is derived for zero-mean Gaussian words,
    so sweeps default to the same operating point; under it the estimate
    stays an upper bound on the simulated rare-net count for every
    supported architecture.  Callers can pass an explicit mean to study
    offset operating points.
    """
    return 0.0


@dataclass(frozen=True)
class SweepPoint:
    bp1_target: int
    sigma: float
    report: RareNetReport


@dataclass(frozen=True)
class SweepResult:
    points: tuple[SweepPoint, ...]

    @property
    def reports(self) -> tuple[RareNetReport, ...]:
        return tuple(p.report for p in self.points)

    @property
    def mean_error(self) -> float:
        return sum(p.report.abs_error for p in self.points) / len(self.points)


def sweep_bp1(netlist: Netlist, rho: float, threshold: float, bp1_targets,
              stream_len: int = 10_000, seed: int = 1,
              mean: float | None = None) -> SweepResult:
    """Score the estimator across operating points of increasing magnitude.

    Each target boundary column is converted to the word sigma that
    realizes it; estimate and simulation are then compared at that
    operating point.  Points are evaluated in sorted target order so the
    result is reproducible.
    """
    if mean is None:
        mean = default_sweep_mean(netlist.width)
    points = []
    for bp1 in sorted(bp1_targets):
        sigma = solve_sigma_for_bp1(bp1, rho)
        target = WordStats(mean=mean, std_dev=sigma, rho=rho,
                           bit_width=netlist.width)
        rep = compare(netlist, target, target, threshold, stream_len, seed)
        points.append(SweepPoint(bp1_target=bp1, sigma=sigma, report=rep))
    return SweepResult(points=tuple(points))


# ------------------------------------------------------------------ reports

_REPORT_FIELDS = ("arch", "width", "rho", "sigma", "bp0", "bp1",
                  "threshold", "p_est", "p_sim", "error")


def _report_row(report: RareNetReport) -> dict:
    return {
        "arch": report.arch, "width": report.width,
        "rho": report.stats_a.rho if report.stats_a else "",
        "sigma": report.stats_a.std_dev if report.stats_a else "",
        "bp0": report.bp.bp0, "bp1": report.bp.bp1,
        "threshold": report.threshold,
        "p_est": report.estimated_count,
        "p_sim": "" if report.simulated_count is None else report.simulated_count,
        "error": "" if report.abs_error is None else report.abs_error,
    }


def write_report_csv(reports, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_REPORT_FIELDS)
        writer.writeheader()
        for rep in reports:
            writer.writerow(_report_row(rep))


def write_report_json(reports, path) -> None:
    rows = []
    for rep in reports:
        row = _report_row(rep)
        row["contributing_blocks"] = [list(b) for b in rep.contributing_blocks]
        row["flags"] = list(rep.flags)
        rows.append(row)
    with open(path, "w") as fh:
        json.dump(rows, fh, indent=2, sort_keys=True)
        fh.write("\n")
