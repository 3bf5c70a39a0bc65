import numpy as np
import pytest

from rarenet.archlib import ALL_KINDS, build_architecture
from rarenet.stats import WordStats
from rarenet.stimulus import StimulusStream

ADDERS = ("RCA", "CLA", "CKA", "CSA", "KSA", "HYBRID")
MULTS = ("ARRAY", "VEDIC", "DADDA", "BOOTH")

_cache = {}


@pytest.fixture(scope="session")
def netlist_of():
    """Session-wide builder cache; large netlists are built once."""
    def build(kind, width):
        key = (kind, width)
        if key not in _cache:
            _cache[key] = build_architecture(kind, width)
        return _cache[key]
    return build


def make_stream(words, width):
    """Wrap a raw word sequence as a stream for the simulator."""
    arr = np.asarray(words, dtype=np.int64)
    return StimulusStream(arr, width, 0, WordStats(0.0, 1.0, 0.0, width))


def to_signed(value, width):
    """Reinterpret unsigned words (scalar or array) as two's complement."""
    if np.isscalar(value):
        return value - (1 << width) if value >= 1 << (width - 1) else value
    value = np.asarray(value, dtype=np.int64)
    return np.where(value >= 1 << (width - 1), value - (1 << width), value)
