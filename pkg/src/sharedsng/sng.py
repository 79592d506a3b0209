"""Stochastic number generators: an LFSR, an output wiring, and a PCC.

The comparator emits 1 when the wired random value ``r <= x``.  A strict
``r < x`` would give ``x - 1`` ones per period for nonzero ``x``; the
non-strict form gives exactly ``x`` ones and reproduces the published
4-bit ``S_CMP`` column.

The weighted binary generator decodes the highest set bit of ``r`` into a
one-hot weight and selects the matching bit of ``x``.  Over a period the
value with top bit ``i`` occurs ``2^(i-1)`` times, so again ``x`` ones come
out.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitstream import BitStream, pack_bits
from .lfsr import LfsrError, LfsrSpec, check_maximal, sequence
from .perm import Permutation, identity


class PccKind(enum.Enum):
    CMP = "cmp"
    WBG = "wbg"

    @classmethod
    def parse(cls, text) -> "PccKind":
        if isinstance(text, cls):
            return text
        return cls(str(text).lower())


@dataclass(frozen=True)
class SngConfig:
    lfsr: LfsrSpec
    perm: Permutation
    pcc: PccKind = PccKind.CMP

    def __post_init__(self):
        if self.perm.n != self.lfsr.n:
            raise ValueError(f"wiring width {self.perm.n} does not match LFSR width {self.lfsr.n}")
        if not check_maximal(self.lfsr):
            raise LfsrError(f"LFSR ({self.lfsr}) is not maximal-length")

    @property
    def n(self) -> int:
        return self.lfsr.n

    @property
    def length(self) -> int:
        return self.lfsr.period

    @classmethod
    def direct(cls, lfsr: LfsrSpec, pcc=PccKind.CMP) -> "SngConfig":
        return cls(lfsr, identity(lfsr.n), PccKind.parse(pcc))


def permuted_values(states, perm: Permutation) -> np.ndarray:
    """Vectorised wiring: bit ``i - 1`` of the result is bit ``p(i) - 1`` of the state."""
    states = np.asarray(states, dtype=np.int64)
    out = np.zeros_like(states)
    for i, src in enumerate(perm.p):
        out |= ((states >> (src - 1)) & 1) << i
    return out


def permuted_value(state: int, perm: Permutation) -> int:
    if state >> perm.n:
        raise ValueError(f"state {state} wider than {perm.n} bits")
    return int(permuted_values(np.array([state]), perm)[0])


def pcc_cmp(r: int, x: int, n: int) -> int:
    return int(r <= x)


def highest_bit(r) -> np.ndarray:
    """1-based position of the highest set bit; 0 for ``r == 0``."""
    r = np.asarray(r, dtype=np.int64)
    out = np.zeros(r.shape, dtype=np.int64)
    rem = r.copy()
    while np.any(rem):
        out += rem > 0
        rem >>= 1
    return out


def pcc_wbg(r: int, x: int, n: int) -> int:
    if r == 0:
        return 0
    return (x >> (r.bit_length() - 1)) & 1


def pcc_bits(r: np.ndarray, x: int, pcc: PccKind) -> np.ndarray:
    """Apply a PCC to an array of random values."""
    r = np.asarray(r, dtype=np.int64)
    if pcc is PccKind.CMP:
        return r <= x
    h = highest_bit(r)
    return (h > 0) & (((x >> np.maximum(h - 1, 0)) & 1) == 1)


def _check_x(x: int, n: int) -> None:
    if not 0 <= x < (1 << n):
        raise ValueError(f"input {x} out of range [0, {(1 << n) - 1}]")


def random_values(cfg: SngConfig) -> np.ndarray:
    """The wired random values fed to the PCC, one per clock tick."""
    return permuted_values(sequence(cfg.lfsr), cfg.perm)


def generate(cfg: SngConfig, x: int) -> BitStream:
    _check_x(x, cfg.n)
    return BitStream.from_bits(pcc_bits(random_values(cfg), x, cfg.pcc))


def generate_all(cfg: SngConfig) -> np.ndarray:
    """Packed streams for every input ``x`` in ``[0, 2^n - 1]``, shape ``(2^n, words)``."""
    r = random_values(cfg)
    xs = np.arange(1 << cfg.n, dtype=np.int64)
    if cfg.pcc is PccKind.CMP:
        bits = r[None, :] <= xs[:, None]
    else:
        h = highest_bit(r)
        bits = (h[None, :] > 0) & (((xs[:, None] >> np.maximum(h - 1, 0)[None, :]) & 1) == 1)
    return pack_bits(bits)


def probability(stream: BitStream) -> Fraction:
    return stream.probability
