"""Unified catalog of the supported datapath architectures."""

from __future__ import annotations

from .adders import ADDER_KINDS, build_adder
from .multipliers import MULTIPLIER_KINDS, build_multiplier
from .netlist import Netlist

ALL_KINDS = ADDER_KINDS + MULTIPLIER_KINDS


def build_architecture(kind: str, width: int) -> Netlist:
    """Build any supported adder or multiplier by name."""
    kind = kind.upper()
    if kind in ADDER_KINDS:
        return build_adder(kind, width)
    if kind in MULTIPLIER_KINDS:
        return build_multiplier(kind, width)
    raise ValueError(f"unknown architecture {kind!r}")
