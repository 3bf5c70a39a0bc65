"""Vectorized gate-level simulation and switching-activity extraction.

Operand words are expanded into per-bit waveforms (two's complement), the
netlist is evaluated in topological order with numpy bitwise ops, and each
net's activity is the count of value transitions between consecutive
vectors.  Only functional transitions are counted; there is no timing or
glitch model.

Control pins without an operand mapping (the adder carry-in) are tied low,
and nets made constant by the tie are excluded from the toggle census; see
`constant_nets`.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .netlist import Netlist
from .stimulus import StimulusStream

_OPS = {
    "AND": lambda x, y: x & y,
    "OR": lambda x, y: x | y,
    "NAND": lambda x, y: 1 - (x & y),
    "NOR": lambda x, y: 1 - (x | y),
    "XOR": lambda x, y: x ^ y,
    "XNOR": lambda x, y: 1 - (x ^ y),
    "NOT": lambda x: 1 - x,
    "BUF": lambda x: x,
}


@dataclass(frozen=True)
class ToggleProfile:
    """Per-net transition counts over a simulated vector sequence."""

    vectors: int
    toggles: Mapping[int, int]

    def probability(self, net_id: int) -> float:
        """Transition probability: toggles / (vectors - 1)."""
        return self.toggles[net_id] / (self.vectors - 1)


def _input_waves(netlist: Netlist, a: StimulusStream, b: StimulusStream):
    if a.bit_width != netlist.width or b.bit_width != netlist.width:
        raise ValueError("stream width does not match netlist operand width")
    if len(a.words) != len(b.words):
        raise ValueError("operand streams must have equal length")
    waves = {}
    zeros = None
    for net in netlist.primary_inputs:
        name = netlist.nets[net].name
        if name.startswith("a") and name[1:].isdigit():
            bit = int(name[1:])
            waves[net] = ((a.words >> bit) & 1).astype(np.uint8)
        elif name.startswith("b") and name[1:].isdigit():
            bit = int(name[1:])
            waves[net] = ((b.words >> bit) & 1).astype(np.uint8)
        else:
            if zeros is None:
                zeros = np.zeros(len(a.words), dtype=np.uint8)
            waves[net] = zeros
    return waves


def constant_nets(netlist: Netlist) -> frozenset[int]:
    """Nets whose value is fixed by tied control pins (carry-in is held low).

    Synthesis sweeps such logic away; leaving it in the toggle census would
    report dead gates as rare regardless of stimulus, so the census skips
    them.  Operand bits are treated as free variables.
    """
    const: dict[int, int] = {}
    for net in netlist.primary_inputs:
        name = netlist.nets[net].name
        if not (name[0] in "ab" and name[1:].isdigit()):
            const[net] = 0
    for gate in netlist.gates:
        ins = [const.get(i) for i in gate.inputs]
        known = [v for v in ins if v is not None]
        out = None
        if gate.kind in ("AND", "NAND"):
            if 0 in known:
                out = 0
            elif len(known) == len(ins):
                out = min(known)
            if out is not None and gate.kind == "NAND":
                out = 1 - out
        elif gate.kind in ("OR", "NOR"):
            if 1 in known:
                out = 1
            elif len(known) == len(ins):
                out = max(known)
            if out is not None and gate.kind == "NOR":
                out = 1 - out
        elif len(known) == len(ins):
            out = _OPS[gate.kind](*known) & 1
        if out is not None:
            const[gate.output] = out
    return frozenset(const)


def evaluate(netlist: Netlist, a: StimulusStream, b: StimulusStream):
    """Return the full value waveform (uint8 array) for every net."""
    values = _input_waves(netlist, a, b)
    for gate in netlist.gates:
        op = _OPS[gate.kind]
        ins = [values[i] for i in gate.inputs]
        values[gate.output] = op(*ins)
    return values


def simulate(netlist: Netlist, a: StimulusStream, b: StimulusStream) -> ToggleProfile:
    """Simulate both operand streams and count per-net transitions."""
    values = evaluate(netlist, a, b)
    vectors = len(a.words)
    if vectors < 2:
        raise ValueError("need at least two vectors to count transitions")
    dead = constant_nets(netlist)
    toggles = {
        net: int(np.count_nonzero(wave[1:] != wave[:-1]))
        for net, wave in values.items()
        if net not in dead
    }
    return ToggleProfile(vectors=vectors, toggles=toggles)


def rare_nets(profile: ToggleProfile, threshold: float) -> frozenset[int]:
    """Nets whose transition probability is at or below the threshold."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    return frozenset(
        net for net in profile.toggles
        if profile.probability(net) <= threshold
    )


def export_activity(netlist: Netlist, profile: ToggleProfile, path) -> None:
    """Write per-net activity as CSV, one row per net, sorted by net id."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["net_id", "net_name", "block", "slice", "toggles",
             "vectors", "probability"]
        )
        driver = {g.output: g for g in netlist.gates}
        for net_id in sorted(profile.toggles):
            net = netlist.nets[net_id]
            gate = driver.get(net_id)
            block = gate.block if gate else ""
            bit_slice = gate.bit_slice if gate else net.bit_slice
            writer.writerow(
                [net_id, net.name, block, bit_slice,
                 profile.toggles[net_id], profile.vectors,
                 f"{profile.probability(net_id):.12f}"]
            )
