from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sharedsng.bitstream import BitStream, pack_bits, popcount, probability

bits_st = st.lists(st.integers(0, 1), min_size=1, max_size=300)


@given(bits_st)
def test_roundtrip(bits):
    s = BitStream.from_bits(bits)
    assert s.to_bits().tolist() == bits
    assert s.ones == sum(bits)
    assert len(s) == len(bits)
    assert BitStream.from_text(s.to_text()) == s


@given(bits_st, st.data())
def test_logic_ops(a, data):
    b = data.draw(st.lists(st.integers(0, 1), min_size=len(a), max_size=len(a)))
    sa, sb = BitStream.from_bits(a), BitStream.from_bits(b)
    assert (sa & sb).to_bits().tolist() == [x & y for x, y in zip(a, b)]
    assert (sa | sb).to_bits().tolist() == [x | y for x, y in zip(a, b)]
    assert (sa ^ sb).to_bits().tolist() == [x ^ y for x, y in zip(a, b)]
    # the complement must not leak ones into the padding bits
    assert (~sa).ones == len(a) - sum(a)


def test_length_mismatch():
    with pytest.raises(ValueError):
        BitStream.from_bits([1, 0]) & BitStream.from_bits([1, 0, 1])


def test_text_first_tick_leftmost():
    s = BitStream.from_text("1000")
    assert s.to_bits().tolist() == [1, 0, 0, 0]
    with pytest.raises(ValueError):
        BitStream.from_text("10a")


def test_constants_and_probability():
    assert BitStream.zeros(15).ones == 0
    assert BitStream.ones_(15).ones == 15
    assert probability(BitStream.zeros(15)) == 0
    assert BitStream.from_text("110").probability == Fraction(2, 3)


def test_pack_popcount():
    bits = np.array([1] * 70 + [0] * 3, dtype=np.uint8)
    words = pack_bits(bits)
    assert words.dtype == np.uint64 and len(words) == 2
    assert int(popcount(words).sum()) == 70


def test_hash_and_eq():
    a = BitStream.from_text("1011")
    assert a == BitStream.from_text("1011")
    assert len({a, BitStream.from_text("1011")}) == 1
    assert a != BitStream.from_text("1010")
