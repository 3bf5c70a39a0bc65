import itertools

import numpy as np
import pytest

from rarenet.archlib import ALL_KINDS
from rarenet.simulate import ToggleProfile, evaluate, export_activity, rare_nets, simulate
from rarenet.stats import WordStats
from rarenet.stimulus import generate

from conftest import make_stream


def bigint_reference(netlist, a_words, b_words):
    """Independent evaluator: each net's waveform packed into one big int."""
    n_vec = len(a_words)
    mask = (1 << n_vec) - 1
    values = {}
    for pid in netlist.primary_inputs:
        name = netlist.nets[pid].name
        acc = 0
        for t in range(n_vec):
            if name[0] == "a" and name[1:].isdigit():
                bit = (int(a_words[t]) >> int(name[1:])) & 1
            elif name[0] == "b" and name[1:].isdigit():
                bit = (int(b_words[t]) >> int(name[1:])) & 1
            else:
                bit = 0
            acc |= bit << t
        values[pid] = acc
    ops = {
        "AND": lambda x, y: x & y,
        "OR": lambda x, y: x | y,
        "NAND": lambda x, y: ~(x & y) & mask,
        "NOR": lambda x, y: ~(x | y) & mask,
        "XOR": lambda x, y: x ^ y,
        "XNOR": lambda x, y: ~(x ^ y) & mask,
        "NOT": lambda x: ~x & mask,
        "BUF": lambda x: x,
    }
    out = {}
    for g in netlist.gates:
        out[g.output] = ops[g.kind](*[values[i] if i in values else out[i]
                                      for i in g.inputs])
        values[g.output] = out[g.output]
    return values


def as_int(wave):
    acc = 0
    for t, v in enumerate(wave):
        acc |= int(v) << t
    return acc


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_waveforms_match_reference_width_4(kind, netlist_of):
    nl = netlist_of(kind, 4)
    pairs = list(itertools.product(range(16), repeat=2))
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    got = evaluate(nl, make_stream(a, 4), make_stream(b, 4))
    ref = bigint_reference(nl, a, b)
    for net, wave in got.items():
        assert as_int(wave) == ref[net], nl.nets[net].name


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_waveforms_match_reference_width_8_random(kind, netlist_of):
    nl = netlist_of(kind, 8)
    rng = np.random.default_rng(17)
    a = rng.integers(-128, 128, 300)
    b = rng.integers(-128, 128, 300)
    got = evaluate(nl, make_stream(a, 8), make_stream(b, 8))
    ref = bigint_reference(nl, a, b)
    for net, wave in got.items():
        assert as_int(wave) == ref[net]


def test_toggle_counts_hand_cases(netlist_of):
    nl = netlist_of("RCA", 4)
    # constant inputs: nothing toggles
    prof = simulate(nl, make_stream([5] * 10, 4), make_stream([2] * 10, 4))
    assert all(t == 0 for t in prof.toggles.values())
    # LSB alternates every vector: the bit-0 sum net toggles every cycle
    prof = simulate(nl, make_stream([0, 1] * 5, 4), make_stream([0] * 10, 4))
    s0 = nl.primary_outputs[0]
    assert prof.toggles[s0] == 9
    assert prof.probability(s0) == 1.0


def test_toggle_count_matches_reference(netlist_of):
    nl = netlist_of("CSA", 8)
    rng = np.random.default_rng(23)
    a = rng.integers(-128, 128, 500)
    b = rng.integers(-128, 128, 500)
    prof = simulate(nl, make_stream(a, 8), make_stream(b, 8))
    ref = bigint_reference(nl, a, b)
    for net, acc in ref.items():
        if net not in prof.toggles:
            # census skips nets made constant by the tied carry-in
            assert acc in (0, (1 << 500) - 1)
            continue
        flips = bin((acc ^ (acc >> 1)) & ((1 << 499) - 1)).count("1")
        assert prof.toggles[net] == flips


def test_constant_nets_from_tied_carry_in(netlist_of):
    from rarenet.simulate import constant_nets

    nl = netlist_of("RCA", 16)
    dead = constant_nets(nl)
    gate_dead = dead & {g.output for g in nl.gates}
    assert len(gate_dead) == 1
    (net,) = gate_dead
    assert nl.driver_of(net).block == "FA0"
    assert constant_nets(netlist_of("DADDA", 8)) == frozenset()
    # census and rare-net scan never see the dead net
    prof = simulate(nl, make_stream([0, 1] * 5, 16), make_stream([0] * 10, 16))
    assert net not in prof.toggles
    assert net not in rare_nets(prof, 1.0)


def test_rare_net_threshold_boundary():
    prof = ToggleProfile(vectors=101, toggles={0: 0, 1: 10, 2: 11, 3: 100})
    assert rare_nets(prof, 0.1) == {0, 1}
    assert rare_nets(prof, 0.0) == {0}
    assert rare_nets(prof, 1.0) == {0, 1, 2, 3}
    with pytest.raises(ValueError):
        rare_nets(prof, -0.1)


def test_simulate_validates_inputs(netlist_of):
    nl = netlist_of("RCA", 4)
    with pytest.raises(ValueError):
        simulate(nl, make_stream([1], 4), make_stream([2], 4))
    with pytest.raises(ValueError):
        simulate(nl, make_stream([1, 2], 8), make_stream([1, 2], 8))
    with pytest.raises(ValueError):
        simulate(nl, make_stream([1, 2], 4), make_stream([1, 2, 3], 4))


def test_activity_export_is_deterministic(tmp_path, netlist_of):
    nl = netlist_of("RCA", 4)
    target = WordStats(0.0, 2.0, 0.5, 4)
    prof = simulate(nl, generate(target, 1000, 1), generate(target, 1000, 2))
    p1 = tmp_path / "a1.csv"
    p2 = tmp_path / "a2.csv"
    export_activity(nl, prof, p1)
    export_activity(nl, prof, p2)
    assert p1.read_bytes() == p2.read_bytes()
    header = p1.read_text().splitlines()[0]
    assert header == "net_id,net_name,block,slice,toggles,vectors,probability"


def test_activity_golden_fixture(tmp_path, netlist_of, request):
    golden = request.path.parent / "data" / "activity_rca4.csv"
    nl = netlist_of("RCA", 4)
    target = WordStats(0.0, 2.0, 0.5, 4)
    prof = simulate(nl, generate(target, 1000, 1), generate(target, 1000, 2))
    path = tmp_path / "activity.csv"
    export_activity(nl, prof, path)
    assert path.read_text() == golden.read_text()
