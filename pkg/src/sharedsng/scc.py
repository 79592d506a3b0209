"""Stochastic computing correlation (SCC) and its average over SNG input grids.

Two routes produce the same integer AND-counts ``c_xy`` for every input pair:

* ``"counts"`` histograms the joint random values ``(r_a(t), r_b(t))`` over a
  period and reads ``c_xy`` off prefix sums (CMP) or a highest-bit table (WBG);
* ``"popcount"`` builds every packed stream and ANDs/popcounts them.

SCC itself is evaluated from integer counts, so both routes agree exactly.

Averaging convention
--------------------
The averaging formula and its prose description disagree on the input range,
so three conventions are offered.  Degenerate (constant) streams contribute
SCC 0 under all of them; only the normaliser differs:

``INCLUSIVE``      x, y in [0, 2^n - 1], divided by 4^n
``NONDEGENERATE``  only non-constant streams, divided by the number of such pairs
``NONZERO``        x, y in [1, 2^n - 1], divided by (2^n - 1)^2

:func:`calibrate_convention` picks the one that reproduces the 4-bit
identity/reversal comparator reference value 0.473; that is ``NONZERO``.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bitstream import BitStream, popcount
from .lfsr import LfsrSpec, default_spec, sequence
from .perm import Permutation, all_permutations, format_perm, from_revlex_index, identity, reversal
from .sng import PccKind, SngConfig, generate_all, highest_bit, permuted_values, random_values

# n = 4 identity vs reversal, comparator PCC
CALIBRATION_TARGET = 0.473
CALIBRATION_TOLERANCE = 0.001
MAX_PROFILE_N = 8


class AvgConvention(enum.Enum):
    INCLUSIVE = "inclusive"
    NONDEGENERATE = "nondegenerate"
    NONZERO = "nonzero"

    @classmethod
    def parse(cls, text) -> "AvgConvention | None":
        if text is None or isinstance(text, cls):
            return text
        if str(text).lower() == "auto":
            return None
        return cls(str(text).lower())


# -- single pairs of streams ---------------------------------------------------


def scc_exact(sx: BitStream, sy: BitStream) -> Fraction:
    if sx.length != sy.length:
        raise ValueError(f"stream length mismatch: {sx.length} vs {sy.length}")
    return scc_from_counts(sx.ones, sy.ones, (sx & sy).ones, sx.length)


def scc(sx: BitStream, sy: BitStream) -> float:
    return float(scc_exact(sx, sy))


def scc_from_counts(cx: int, cy: int, cxy: int, length: int) -> Fraction:
    """SCC from ones-counts; every term is scaled by ``length**2`` to stay integral."""
    num = length * cxy - cx * cy
    if num >= 0:
        den = length * min(cx, cy) - cx * cy
    else:
        den = cx * cy - length * max(cx + cy - length, 0)
    if den == 0:
        return Fraction(0)
    return Fraction(num, den)


def scc_grid(cxy: np.ndarray, cx: np.ndarray, cy: np.ndarray, length: int) -> np.ndarray:
    """Vectorised SCC for a grid of AND-counts ``cxy[x, y]``."""
    cx = np.asarray(cx, dtype=np.int64)[..., :, None]
    cy = np.asarray(cy, dtype=np.int64)[..., None, :]
    prod = cx * cy
    num = length * cxy.astype(np.int64) - prod
    den = np.where(
        num >= 0,
        length * np.minimum(cx, cy) - prod,
        prod - length * np.maximum(cx + cy - length, 0),
    )
    safe = np.where(den == 0, 1, den)
    return np.where(den == 0, 0.0, num / safe)


# -- count grids ---------------------------------------------------------------


def _check_pair(a: SngConfig, b: SngConfig) -> None:
    if a.n != b.n:
        raise ValueError(f"width mismatch: {a.n} vs {b.n}")


def _weight_matrix(n: int) -> np.ndarray:
    """``B[x, h]`` is bit ``h - 1`` of ``x`` (column 0 stands for ``r = 0``)."""
    xs = np.arange(1 << n, dtype=np.int64)[:, None]
    h = np.arange(n + 1, dtype=np.int64)[None, :]
    return np.where(h > 0, (xs >> np.maximum(h - 1, 0)) & 1, 0)


def _keys(r: np.ndarray, pcc: PccKind) -> np.ndarray:
    """The part of a random value a PCC looks at: all of it, or its top bit."""
    return np.asarray(r, dtype=np.int64) if pcc is PccKind.CMP else highest_bit(r)


def _key_count(n: int, pcc: PccKind) -> int:
    return (1 << n) if pcc is PccKind.CMP else n + 1


def _respond(hist: np.ndarray, n: int, pcc: PccKind, axis: int) -> np.ndarray:
    """Turn key counts along ``axis`` into ones-counts for every input value."""
    if pcc is PccKind.CMP:
        # output is 1 for every x >= key
        return hist.cumsum(axis=axis)
    weights = _weight_matrix(n)
    return weights @ hist if axis == 0 else hist @ weights.T


def count_grid(ra: np.ndarray, rb: np.ndarray, n: int, pcc_a: PccKind, pcc_b: PccKind) -> np.ndarray:
    """``C[x, y]`` = number of ticks where both streams emit 1, from random values."""
    hist = np.zeros((_key_count(n, pcc_a), _key_count(n, pcc_b)), dtype=np.int64)
    np.add.at(hist, (_keys(ra, pcc_a), _keys(rb, pcc_b)), 1)
    return _respond(_respond(hist, n, pcc_a, 0), n, pcc_b, 1)


def joint_counts(a: SngConfig, b: SngConfig, method: str = "counts"):
    """Return ``(C, cx, cy)`` over all inputs ``x, y in [0, 2^n - 1]``."""
    _check_pair(a, b)
    if method == "counts":
        c = count_grid(random_values(a), random_values(b), a.n, a.pcc, b.pcc)
    elif method == "popcount":
        wa, wb = generate_all(a), generate_all(b)
        c = np.empty((len(wa), len(wb)), dtype=np.int64)
        for x in range(len(wa)):
            c[x] = popcount(wa[x][None, :] & wb)
    else:
        raise ValueError(f"unknown method {method!r}")
    return c, c[:, -1].copy(), c[-1, :].copy()


def _normaliser(cx: np.ndarray, cy: np.ndarray, length: int, n: int, conv: AvgConvention) -> int:
    if conv is AvgConvention.INCLUSIVE:
        return 4**n
    if conv is AvgConvention.NONZERO:
        return length * length
    nx = int(np.count_nonzero((cx > 0) & (cx < length)))
    ny = int(np.count_nonzero((cy > 0) & (cy < length)))
    return nx * ny


def average_abs(grid: np.ndarray, cx, cy, length: int, n: int, conv: AvgConvention) -> float:
    """Mean ``|SCC|`` under a convention; constant streams are already 0 in ``grid``."""
    norm = _normaliser(np.asarray(cx), np.asarray(cy), length, n, conv)
    return float(np.abs(grid).sum() / norm) if norm else 0.0


def scc_avg(a: SngConfig, b: SngConfig, conv: AvgConvention | None = None, method: str = "counts") -> float:
    """Average ``|SCC|`` between two SNGs over every pair of inputs."""
    conv = conv or default_convention()
    c, cx, cy = joint_counts(a, b, method)
    return average_abs_blocked(c, cx, cy, a.length, a.n, conv)


def average_abs_blocked(c, cx, cy, length: int, n: int, conv: AvgConvention, block: int = 256) -> float:
    """:func:`average_abs` evaluated a block of rows at a time to bound memory."""
    norm = _normaliser(np.asarray(cx), np.asarray(cy), length, n, conv)
    if not norm:
        return 0.0
    total = 0.0
    for lo in range(0, len(c), block):
        total += float(np.abs(scc_grid(c[lo : lo + block], cx[lo : lo + block], cy, length)).sum())
    return total / norm


# -- calibration -----------------------------------------------------------------


@lru_cache(maxsize=None)
def calibration_table() -> dict:
    lfsr = default_spec(4)
    a = SngConfig(lfsr, identity(4), PccKind.CMP)
    b = SngConfig(lfsr, reversal(4), PccKind.CMP)
    return {conv: scc_avg(a, b, conv) for conv in AvgConvention}


@lru_cache(maxsize=None)
def calibrate_convention() -> AvgConvention:
    """Pick the convention whose 4-bit identity/reversal value matches 0.473."""
    table = calibration_table()
    matches = [c for c, v in table.items() if abs(v - CALIBRATION_TARGET) <= CALIBRATION_TOLERANCE]
    if len(matches) != 1:
        detail = ", ".join(f"{c.value}={v:.4f}" for c, v in table.items())
        raise RuntimeError(f"convention calibration is ambiguous or failed: {detail}")
    return matches[0]


def default_convention() -> AvgConvention:
    return calibrate_convention()


# -- profiles ------------------------------------------------------------------


class _ProfileKernel:
    """Cached per-width quantities shared by every entry of a profile."""

    def __init__(self, n: int, pcc: PccKind, conv: AvgConvention, lfsr: LfsrSpec):
        self.n, self.pcc, self.conv = n, pcc, conv
        self.base = sequence(lfsr)
        self.length = lfsr.period
        ref = SngConfig(lfsr, identity(n), pcc)
        self.ref_values = random_values(ref)
        size = 1 << n
        xs = np.arange(size, dtype=np.int64)
        # every maximal-LFSR SNG emits exactly x ones for input x
        self.cx = np.minimum(xs, self.length)
        self.ref_keys = _keys(self.ref_values, pcc)
        self.norm = _normaliser(self.cx, self.cx, self.length, n, conv)

    def value(self, perm_row: np.ndarray) -> float:
        r = np.zeros_like(self.base)
        for i, src in enumerate(perm_row):
            r |= ((self.base >> (int(src) - 1)) & 1) << i
        size = _key_count(self.n, self.pcc)
        hist = np.zeros((size, size), dtype=np.int64)
        if self.pcc is PccKind.CMP:
            # each nonzero value occurs once per period, so no collisions
            hist[self.ref_keys, r] = 1
        else:
            np.add.at(hist, (self.ref_keys, _keys(r, self.pcc)), 1)
        c = _respond(_respond(hist, self.n, self.pcc, 0), self.n, self.pcc, 1)
        grid = scc_grid(c, self.cx, self.cx, self.length)
        return float(np.abs(grid).sum() / self.norm)


class LazyProfile:
    """``D[k]`` computed on first request; for widths whose full profile is too costly."""

    def __init__(self, n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                 lfsr: LfsrSpec | None = None):
        self.n = n
        self.kernel = _ProfileKernel(n, PccKind.parse(pcc), conv or default_convention(),
                                     lfsr or default_spec(n))
        self._memo: dict[int, float] = {}

    def __getitem__(self, k: int) -> float:
        k = int(k)
        if k not in self._memo:
            self._memo[k] = self.kernel.value(np.array(from_revlex_index(self.n, k).p))
        return self._memo[k]

    def values(self, ks) -> np.ndarray:
        return np.array([self[k] for k in ks])


def scc_avg_profile(
    n: int,
    pcc=PccKind.CMP,
    conv: AvgConvention | None = None,
    lfsr: LfsrSpec | None = None,
    threads: int = 1,
    max_n: int = MAX_PROFILE_N,
) -> np.ndarray:
    """``D[k - 1] = scc_avg(identity, PL_k)`` for ``k = 1..n!``."""
    if n > max_n:
        raise ProfileTooLarge(f"full profile for n={n} exceeds the limit n <= {max_n}")
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    lfsr = lfsr or default_spec(n)
    if lfsr.n != n:
        raise ValueError(f"LFSR width {lfsr.n} does not match n={n}")
    kernel = _ProfileKernel(n, pcc, conv, lfsr)
    table = all_permutations(n)
    out = np.empty(len(table))

    def work(lo: int, hi: int) -> None:
        for k in range(lo, hi):
            out[k] = kernel.value(table[k])

    threads = max(1, int(threads))
    bounds = np.linspace(0, len(table), threads + 1).astype(int)
    if threads == 1:
        work(0, len(table))
    else:
        with ThreadPoolExecutor(threads) as pool:
            list(pool.map(lambda i: work(bounds[i], bounds[i + 1]), range(threads)))
    out.setflags(write=False)
    return out


class ProfileTooLarge(RuntimeError):
    pass


_profile_cache: dict = {}


def cached_profile(n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None, threads: int = 1) -> np.ndarray:
    """Memoised :func:`scc_avg_profile` on the default LFSR."""
    key = (n, PccKind.parse(pcc), conv or default_convention())
    if key not in _profile_cache:
        _profile_cache[key] = scc_avg_profile(n, key[1], key[2], threads=threads)
    return _profile_cache[key]


def write_profile_csv(fh, n: int, profile: np.ndarray) -> None:
    fh.write("k,permutation,scc_avg\n")
    for k, row in enumerate(all_permutations(n), start=1):
        fh.write(f'{k},"{format_perm(Permutation(tuple(row)))}",{float(profile[k - 1])!r}\n')


def read_profile_csv(fh) -> tuple[list[Permutation], np.ndarray]:
    import csv

    perms, values = [], []
    for rec in csv.DictReader(fh):
        perms.append(Permutation.parse(rec["permutation"]))
        values.append(float(rec["scc_avg"]))
    return perms, np.array(values)
