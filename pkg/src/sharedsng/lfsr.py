"""Fibonacci LFSRs and their full-period state sequences.

State values put flip-flop ``L_i`` at bit ``i - 1``, so ``L_n`` is the most
significant bit.  Each clock shifts right (``L_i <- L_{i+1}``) and loads the
XOR of the tapped flip-flops into ``L_n``.  With ``taps={1, 2}`` and seed
``0001`` this walks the 15 states 0001, 1000, 0100, ... of the classic 4-bit
example.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bitstream import BitStream

MIN_WIDTH = 2
MAX_WIDTH = 16

# Known maximal tap sets, used where exhaustive enumeration gets slow.
_KNOWN_TAPS = {
    11: [(1, 3)],
    12: [(1, 7, 9, 12)],
    13: [(1, 10, 11, 13)],
    14: [(1, 10, 12, 14)],
    15: [(1, 2)],
    16: [(1, 2, 4, 13)],
}
# exhaustive tap search is run up to this width
_ENUMERATE_UP_TO = 10


class LfsrError(ValueError):
    pass


@dataclass(frozen=True)
class LfsrSpec:
    n: int
    taps: frozenset = field(default_factory=frozenset)
    seed: int = 1

    def __post_init__(self):
        object.__setattr__(self, "taps", frozenset(int(t) for t in self.taps))
        if not MIN_WIDTH <= self.n <= MAX_WIDTH:
            raise LfsrError(f"unsupported LFSR width {self.n} (supported {MIN_WIDTH}..{MAX_WIDTH})")
        if not self.taps or any(not 1 <= t <= self.n for t in self.taps):
            raise LfsrError(f"taps must be a nonempty subset of 1..{self.n}, got {sorted(self.taps)}")
        if not 1 <= self.seed < (1 << self.n):
            raise LfsrError(f"seed must be in [1, {(1 << self.n) - 1}], got {self.seed}")

    @property
    def period(self) -> int:
        return (1 << self.n) - 1

    def with_seed(self, seed: int) -> "LfsrSpec":
        return LfsrSpec(self.n, self.taps, seed)

    def __str__(self) -> str:
        taps = "+".join(str(t) for t in sorted(self.taps))
        return f"n={self.n} taps={taps} seed={self.seed}"


def _tap_mask(spec: LfsrSpec) -> int:
    return sum(1 << (t - 1) for t in spec.taps)


def step(spec: LfsrSpec, state: int) -> int:
    if state == 0:
        raise LfsrError("degenerate LFSR state: all-zero state never leaves itself")
    feedback = (state & _tap_mask(spec)).bit_count() & 1
    return (state >> 1) | (feedback << (spec.n - 1))


def orbit_length(spec: LfsrSpec) -> int:
    mask = _tap_mask(spec)
    top = spec.n - 1
    state = spec.seed
    for count in range(1, (1 << spec.n) + 1):
        state = (state >> 1) | (((state & mask).bit_count() & 1) << top)
        if state == spec.seed:
            return count
    # the seed is not on a cycle (only possible for non-invertible tap sets)
    return 0


def check_maximal(spec: LfsrSpec) -> bool:
    return orbit_length(spec) == spec.period


@lru_cache(maxsize=256)
def _sequence(spec: LfsrSpec) -> np.ndarray:
    period = orbit_length(spec)
    if period != spec.period:
        raise LfsrError(
            f"LFSR ({spec}) is not maximal-length: observed period {period}, expected {spec.period}"
        )
    mask = _tap_mask(spec)
    top = spec.n - 1
    out = np.empty(spec.period, dtype=np.int64)
    state = spec.seed
    for t in range(spec.period):
        out[t] = state
        state = (state >> 1) | (((state & mask).bit_count() & 1) << top)
    out.setflags(write=False)
    return out


def sequence(spec: LfsrSpec) -> np.ndarray:
    """All ``2^n - 1`` states of one period, starting at the seed (read-only array)."""
    return _sequence(spec)


def flipflop_stream(spec: LfsrSpec, i: int) -> BitStream:
    """The period-long bit column produced by flip-flop ``L_i``."""
    if not 1 <= i <= spec.n:
        raise LfsrError(f"flip-flop position {i} out of range 1..{spec.n}")
    return BitStream.from_bits((sequence(spec) >> (i - 1)) & 1)


@lru_cache(maxsize=None)
def primitive_taps(n: int) -> tuple[frozenset, ...]:
    """Maximal-length tap sets for width ``n``, each verified by simulation.

    Widths up to 10 are enumerated exhaustively (every tap set containing
    position 1, which the shift-right topology needs to stay invertible).
    Wider registers use a short table of known sets and their mirror images.
    """
    if not MIN_WIDTH <= n <= MAX_WIDTH:
        raise LfsrError(f"unsupported LFSR width {n} (supported {MIN_WIDTH}..{MAX_WIDTH})")
    found = []
    if n <= _ENUMERATE_UP_TO:
        for r in range(0, n):
            for rest in itertools.combinations(range(2, n + 1), r):
                taps = frozenset((1,) + rest)
                if check_maximal(LfsrSpec(n, taps)):
                    found.append(taps)
    else:
        for taps in _KNOWN_TAPS[n]:
            # mirrored polynomial: tap t <-> n + 2 - t, keeping position 1
            mirror = frozenset([1] + [n + 2 - t for t in taps if t != 1])
            for cand in (frozenset(taps), mirror):
                if cand not in found and check_maximal(LfsrSpec(n, cand)):
                    found.append(cand)
    if not found:
        raise LfsrError(f"no maximal tap set available for width {n}")
    return tuple(found)


def default_spec(n: int, seed: int = 1) -> LfsrSpec:
    """A reproducible maximal LFSR for width ``n``; ``taps={1, 2}`` for ``n=4``."""
    return LfsrSpec(n, primitive_taps(n)[0], seed)
