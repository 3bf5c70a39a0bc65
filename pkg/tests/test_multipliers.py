import itertools

import numpy as np
import pytest

from rarenet.multipliers import MULTIPLIER_KINDS, build_multiplier
from rarenet.simulate import evaluate

from conftest import MULTS, make_stream, to_signed
from test_adders import output_words


def product_outputs(netlist, a_words, b_words):
    w = netlist.width
    values = evaluate(netlist, make_stream(a_words, w), make_stream(b_words, w))
    return output_words(netlist, values)


def golden_products(a_words, b_words, width):
    sa = np.array([to_signed(int(x), width) for x in a_words], dtype=object)
    sb = np.array([to_signed(int(x), width) for x in b_words], dtype=object)
    mask = (1 << (2 * width)) - 1
    return np.array([int(x * y) & mask for x, y in zip(sa, sb)], dtype=np.int64)


@pytest.mark.parametrize("kind", MULTS)
def test_exhaustive_width_4(kind, netlist_of):
    nl = netlist_of(kind, 4)
    pairs = list(itertools.product(range(16), repeat=2))
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    assert np.array_equal(product_outputs(nl, a, b), golden_products(a, b, 4))


@pytest.mark.parametrize("kind", MULTS)
@pytest.mark.parametrize("width", [8, 16])
def test_random_sample_matches_signed_product(kind, width, netlist_of):
    rng = np.random.default_rng(width)
    a = rng.integers(0, 1 << width, 2000)
    b = rng.integers(0, 1 << width, 2000)
    got = product_outputs(netlist_of(kind, width), a, b)
    assert np.array_equal(got, golden_products(a, b, width))


def test_cross_kind_agreement(netlist_of):
    rng = np.random.default_rng(3)
    a = rng.integers(0, 1 << 16, 500)
    b = rng.integers(0, 1 << 16, 500)
    results = [product_outputs(netlist_of(k, 16), a, b) for k in MULTS]
    for got in results[1:]:
        assert np.array_equal(got, results[0])


def test_product_width_and_flags(netlist_of):
    nl = netlist_of("DADDA", 8)
    assert nl.output_width == 16
    assert nl.is_multiplier
    assert len(nl.primary_inputs) == 16


def test_every_output_column_covered(netlist_of):
    for kind in MULTS:
        for width in (4, 8, 16):
            nl = netlist_of(kind, width)
            cols = {g.bit_slice for g in nl.gates}
            assert cols >= set(range(2 * width)), (kind, width)


def test_unsupported_parameters_rejected():
    with pytest.raises(ValueError):
        build_multiplier("ARRAY", 32)
    with pytest.raises(ValueError):
        build_multiplier("WALLACE", 8)


def test_sign_extremes_width_16(netlist_of):
    # corner operands: 0, +max, -min, -1
    specials = [0, 1, 0x7FFF, 0x8000, 0xFFFF]
    pairs = list(itertools.product(specials, repeat=2))
    a = [p[0] for p in pairs]
    b = [p[1] for p in pairs]
    for kind in MULTS:
        got = product_outputs(netlist_of(kind, 16), a, b)
        assert np.array_equal(got, golden_products(a, b, 16)), kind


def test_kind_list_stable():
    assert MULTIPLIER_KINDS == ("ARRAY", "VEDIC", "DADDA", "BOOTH")
    assert set(MULTS) == set(MULTIPLIER_KINDS)
