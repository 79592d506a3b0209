"""Packed bit streams with a cached ones-count.

Bit ``t`` (clock tick ``t``) lives in word ``t // 64`` at bit ``t % 64``.
Padding bits past ``length`` are always zero, so popcounts over whole words
are exact.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack the last axis of a 0/1 array into little-endian ``uint64`` words."""
    bits = np.asarray(bits, dtype=np.uint8)
    length = bits.shape[-1]
    n_words = max(1, -(-length // 64))
    padded = np.zeros(bits.shape[:-1] + (n_words * 64,), dtype=np.uint8)
    padded[..., :length] = bits
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64)


def popcount(words: np.ndarray, axis=-1) -> np.ndarray:
    return np.bitwise_count(words).sum(axis=axis, dtype=np.int64)


class BitStream:
    __slots__ = ("words", "length", "ones")

    def __init__(self, words: np.ndarray, length: int):
        words = np.asarray(words, dtype=np.uint64)
        if words.ndim != 1 or len(words) != max(1, -(-length // 64)):
            raise ValueError(f"{len(words)} words cannot hold exactly {length} bits")
        self.words = words
        self.words.setflags(write=False)
        self.length = int(length)
        self.ones = int(popcount(words))

    @classmethod
    def from_bits(cls, bits) -> "BitStream":
        bits = np.asarray(bits).astype(bool)
        return cls(pack_bits(bits), len(bits))

    @classmethod
    def from_text(cls, text: str) -> "BitStream":
        """Parse a 0/1 string, first clock tick leftmost."""
        text = text.strip()
        if set(text) - {"0", "1"}:
            raise ValueError("bit stream text may only contain '0' and '1'")
        return cls.from_bits(np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"))

    @classmethod
    def zeros(cls, length: int) -> "BitStream":
        return cls.from_bits(np.zeros(length, dtype=bool))

    @classmethod
    def ones_(cls, length: int) -> "BitStream":
        return cls.from_bits(np.ones(length, dtype=bool))

    def to_bits(self) -> np.ndarray:
        raw = self.words.view(np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self.length].astype(bool)

    def to_text(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bits())

    @property
    def probability(self) -> Fraction:
        return Fraction(self.ones, self.length)

    def _check(self, other: "BitStream") -> None:
        if self.length != other.length:
            raise ValueError(f"stream length mismatch: {self.length} vs {other.length}")

    def __and__(self, other: "BitStream") -> "BitStream":
        self._check(other)
        return BitStream(self.words & other.words, self.length)

    def __or__(self, other: "BitStream") -> "BitStream":
        self._check(other)
        return BitStream(self.words | other.words, self.length)

    def __xor__(self, other: "BitStream") -> "BitStream":
        self._check(other)
        return BitStream(self.words ^ other.words, self.length)

    def __invert__(self) -> "BitStream":
        return BitStream(~self.words & _valid_mask(self.length), self.length)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitStream):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.length, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitStream({self.ones}/{self.length})"


def _valid_mask(length: int) -> np.ndarray:
    return pack_bits(np.ones(length, dtype=np.uint8))


def probability(stream: BitStream) -> Fraction:
    return stream.probability
