from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sharedsng.bitstream import popcount
from sharedsng.lfsr import LfsrSpec, default_spec, flipflop_stream, primitive_taps
from sharedsng.perm import Permutation, from_revlex_index, identity, reversal
from sharedsng.sng import (
    PccKind,
    SngConfig,
    generate,
    generate_all,
    pcc_cmp,
    pcc_wbg,
    permuted_value,
    probability,
)

from conftest import TABLE_I, stream

T1 = default_spec(4)


def test_permuted_value_examples():
    for v in range(16):
        assert permuted_value(v, identity(4)) == v
        assert permuted_value(permuted_value(v, reversal(4)), reversal(4)) == v
    assert permuted_value(0b0010, reversal(4)) == 0b0100
    with pytest.raises(ValueError):
        SngConfig(T1, identity(5), PccKind.CMP)


def test_pcc_examples():
    assert pcc_cmp(1, 11, 4) == 1
    assert pcc_cmp(11, 11, 4) == 1
    assert pcc_cmp(12, 11, 4) == 0
    assert pcc_wbg(0b0001, 0b1011, 4) == 1
    assert pcc_wbg(0b0100, 0b1011, 4) == 0
    assert pcc_wbg(0b0011, 0b1011, 4) == 1
    assert pcc_wbg(0, 0b1111, 4) == 0


def test_table_i_streams():
    s_cmp = generate(SngConfig(T1, identity(4), PccKind.CMP), 11)
    s_wbg = generate(SngConfig(T1, identity(4), PccKind.WBG), 11)
    assert s_cmp.to_text() == "".join(str(r[1]) for r in TABLE_I)
    assert s_wbg.to_text() == "".join(str(r[2]) for r in TABLE_I)
    assert probability(s_cmp) == Fraction(11, 15) == probability(s_wbg)
    assert s_cmp != s_wbg


def test_zero_input_and_range():
    cfg = SngConfig.direct(T1)
    assert generate(cfg, 0).ones == 0
    with pytest.raises(ValueError):
        generate(cfg, 16)
    with pytest.raises(ValueError):
        generate(cfg, -1)


def test_flipflop_probability():
    assert probability(flipflop_stream(T1, 2)) == Fraction(8, 15)


def test_config_rejects_non_maximal():
    with pytest.raises(ValueError):
        SngConfig(LfsrSpec(4, {1}, 1), identity(4), PccKind.CMP)


def test_pcc_parse():
    assert PccKind.parse("CMP") is PccKind.CMP
    assert PccKind.parse(PccKind.WBG) is PccKind.WBG
    with pytest.raises(ValueError):
        PccKind.parse("xor")


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.permutations(range(1, n + 1)), st.integers(0, 99),
    st.integers(1, (1 << n) - 1), st.sampled_from(["cmp", "wbg"]))))
def test_stream_matches_gate_oracle(args):
    n, p, pick, seed, pcc = args
    taps = primitive_taps(n)
    spec = LfsrSpec(n, taps[pick % len(taps)], seed)
    cfg = SngConfig(spec, Permutation(tuple(p)), PccKind.parse(pcc))
    for x in range(1 << n):
        s = generate(cfg, x)
        assert s.ones == x  # ones conservation
        if x in (0, 1, (1 << n) // 3, (1 << n) - 1):
            assert s.to_bits().tolist() == stream(n, spec.taps, seed, p, pcc, x)


@pytest.mark.parametrize("pcc", [PccKind.CMP, PccKind.WBG])
def test_ones_conservation_exhaustive_n8_sample(pcc):
    spec = default_spec(8)
    for k in (1, 2, 777, 20000, 40320):
        packed = generate_all(SngConfig(spec, from_revlex_index(8, k), pcc))
        assert popcount(packed).tolist() == list(range(256))


def test_generate_all_matches_generate():
    cfg = SngConfig(T1, from_revlex_index(4, 7), PccKind.WBG)
    packed = generate_all(cfg)
    for x in range(16):
        assert (packed[x] == generate(cfg, x).words).all()
