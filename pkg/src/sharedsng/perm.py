"""Bit-position permutations indexed in reverse lexicographic order.

A permutation ``p`` of width ``n`` wires PCC input ``r_i`` to LFSR output
``L_{p(i)}``.  Index 1 is the reversal ``[n, ..., 1]`` and index ``n!`` is the
identity, which is the order MATLAB's ``perms`` emits.
"""
from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# full permutation tables are only built up to this width
MAX_TABLE_N = 9


@dataclass(frozen=True)
class Permutation:
    p: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(v) for v in self.p)
        object.__setattr__(self, "p", p)
        if sorted(p) != list(range(1, len(p) + 1)):
            raise ValueError(f"not a permutation of 1..{len(p)}: {list(p)}")

    @property
    def n(self) -> int:
        return len(self.p)

    def __getitem__(self, i: int) -> int:
        """1-based lookup: the LFSR position wired to PCC input ``i``."""
        return self.p[i - 1]

    def __str__(self) -> str:
        return format_perm(self)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))


def format_perm(perm: Permutation) -> str:
    return ",".join(str(v) for v in perm.p)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def circular_shift(n: int, k: int) -> Permutation:
    """Rotate the wiring by ``k`` positions: ``p(i) = ((i - 1 + k) mod n) + 1``."""
    if not 0 <= k < n:
        raise ValueError(f"shift {k} out of range [0, {n})")
    return Permutation(tuple(((i - 1 + k) % n) + 1 for i in range(1, n + 1)))


def _check_index(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"width must be positive, got {n}")
    if not 1 <= k <= math.factorial(n):
        raise ValueError(f"index {k} out of range [1, {n}!]")


def from_revlex_index(n: int, k: int) -> Permutation:
    """Unrank ``PL_k`` via the factorial number system.

    The reverse lexicographic index ``k`` corresponds to lexicographic rank
    ``n! - k``, so nothing of size ``n!`` is ever materialised.
    """
    _check_index(n, k)
    rank = math.factorial(n) - k
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        digit, rank = divmod(rank, math.factorial(i))
        out.append(pool.pop(digit))
    return Permutation(tuple(out))


def to_revlex_index(perm: Permutation) -> int:
    n = perm.n
    rank = 0
    pool = list(range(1, n + 1))
    for i, v in enumerate(perm.p):
        digit = pool.index(v)
        pool.pop(digit)
        rank += digit * math.factorial(n - 1 - i)
    return math.factorial(n) - rank


def compose(f: Permutation, g: Permutation) -> Permutation:
    """``(f o g)(i) = f(g(i))``."""
    if f.n != g.n:
        raise ValueError(f"width mismatch: {f.n} vs {g.n}")
    return Permutation(tuple(f.p[v - 1] for v in g.p))


def invert(perm: Permutation) -> Permutation:
    inv = [0] * perm.n
    for i, v in enumerate(perm.p, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def relative(a: Permutation, b: Permutation) -> Permutation:
    """The wiring ``q = a^-1 o b`` that maps SNG ``a``'s random values onto ``b``'s.

    Over a full period of a maximal LFSR the pair ``(a, b)`` sees the same joint
    value histogram as ``(identity, q)``.
    """
    return compose(invert(a), b)


def similarity(perm: Permutation) -> int:
    """``S = sum_i i * p(i)``; small when many positions move far from identity."""
    return sum(i * v for i, v in enumerate(perm.p, start=1))


def pairwise_similarity(a: Permutation, b: Permutation) -> int:
    """Similarity of ``b`` measured against ``a`` as the reference wiring.

    Each element of ``b`` is located in ``a`` and weighted by its position, i.e.
    ``S(a^-1 o b) = sum_j a^-1(j) * b^-1(j)``.  Symmetric, and equal to
    ``similarity(b)`` when ``a`` is the identity.
    """
    if a.n != b.n:
        raise ValueError(f"width mismatch: {a.n} vs {b.n}")
    return similarity(relative(a, b))


def dot_similarity(a: Permutation, b: Permutation) -> int:
    """Alternative pairwise form ``sum_i a(i) * b(i)``; also reduces to ``similarity(b)``."""
    if a.n != b.n:
        raise ValueError(f"width mismatch: {a.n} vs {b.n}")
    return sum(x * y for x, y in zip(a.p, b.p))


def similarity_bounds(n: int) -> tuple[int, int]:
    """Rearrangement-inequality extremes: reversal gives the min, identity the max."""
    lo = sum(i * (n - i + 1) for i in range(1, n + 1))
    hi = sum(i * i for i in range(1, n + 1))
    return lo, hi


# -- vectorised tables --------------------------------------------------------


def _check_table_n(n: int) -> None:
    if not 1 <= n <= MAX_TABLE_N:
        raise ValueError(f"refusing to tabulate {n}! permutations (limit n <= {MAX_TABLE_N})")


@lru_cache(maxsize=None)
def all_permutations(n: int) -> np.ndarray:
    """Array of shape ``(n!, n)``; row ``k - 1`` is ``PL_k`` (1-based entries)."""
    _check_table_n(n)
    # itertools yields lexicographic order; reverse it
    rows = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8)
    table = rows[::-1].copy()
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _code_lookup(n: int) -> np.ndarray:
    """Map mixed-radix code ``sum (p_i - 1) n^i`` to the reverse lexicographic index."""
    table = all_permutations(n).astype(np.int64) - 1
    codes = table @ (n ** np.arange(n, dtype=np.int64))
    lookup = np.zeros(n**n, dtype=np.int32)
    lookup[codes] = np.arange(1, len(table) + 1, dtype=np.int32)
    lookup.setflags(write=False)
    return lookup


def revlex_indices(rows: np.ndarray) -> np.ndarray:
    """Vectorised :func:`to_revlex_index` over the last axis of ``rows``."""
    rows = np.asarray(rows)
    n = rows.shape[-1]
    weights = n ** np.arange(n, dtype=np.int64)
    codes = (rows.astype(np.int64) - 1) @ weights
    return _code_lookup(n)[codes]


@lru_cache(maxsize=None)
def inverse_table(n: int) -> np.ndarray:
    table = all_permutations(n)
    inv = np.empty_like(table)
    rows = np.arange(len(table))[:, None]
    inv[rows, table.astype(np.int64) - 1] = np.arange(1, n + 1, dtype=np.int8)
    inv.setflags(write=False)
    return inv


def relative_index_rows(n: int, a_indices: np.ndarray) -> np.ndarray:
    """``out[r, b - 1]`` is the index of ``relative(PL_a, PL_b)`` for ``a = a_indices[r]``."""
    table = all_permutations(n).astype(np.int64)
    a_inv = inverse_table(n).astype(np.int64)[np.asarray(a_indices, dtype=np.int64) - 1]
    # q(i) = a^-1(b(i)) for every b at once: shape (len(a), n!, n)
    return revlex_indices(a_inv[:, table - 1])


def similarity_profile(n: int) -> np.ndarray:
    """``S(k)`` for every ``k``; entry ``k - 1``."""
    table = all_permutations(n).astype(np.int64)
    return table @ np.arange(1, n + 1, dtype=np.int64)


def permutations_with_similarity_at_most(n: int, bound: int):
    """Yield every permutation (as a tuple) with ``S <= bound``, in lexicographic order.

    Works for widths far beyond the tabulation limit as long as ``bound`` stays
    close to the minimum, since whole subtrees are cut by the rearrangement
    lower bound on the unassigned positions.
    """
    prefix: list[int] = []
    free = list(range(1, n + 1))

    def floor_rest(start: int, values: list[int]) -> int:
        # ascending positions paired with descending values minimise the sum
        return sum(pos * v for pos, v in zip(range(start, n + 1), sorted(values, reverse=True)))

    def walk(pos: int, acc: int):
        if pos > n:
            yield tuple(prefix)
            return
        for v in list(free):
            total = acc + pos * v
            free.remove(v)
            if total + floor_rest(pos + 1, free) <= bound:
                prefix.append(v)
                yield from walk(pos + 1, total)
                prefix.pop()
            bisect.insort(free, v)

    yield from walk(1, 0)
