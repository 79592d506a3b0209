"""Searches for low-correlation wirings of one shared LFSR.

Every search here ranks candidate wirings by a pair value that depends only on
the relative wiring ``a^-1 o b``: the exact average SCC does (the joint
histogram of two wirings over a full period equals that of identity against
the relative wiring), and so does the positional similarity.  That allows

* one profile of ``n!`` entries instead of ``(n!)^2`` pair evaluations, and
* anchoring the optimum search at the identity, because left-multiplying a
  set by any wiring leaves all its pair values unchanged.

Optimal sets are rarely unique.  Two deterministic tie-breaks are offered:
``"lex"`` returns the lexicographically smallest sorted index tuple, and
``"loop"`` returns the first set met by the nested loops that scan the
largest index ascending, then the smallest, then the middle ones.
"""
from __future__ import annotations

import enum
import itertools
import math
import threading
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .lfsr import LfsrSpec, default_spec
from .perm import (
    MAX_TABLE_N,
    Permutation,
    all_permutations,
    circular_shift,
    format_perm,
    from_revlex_index,
    identity,
    relative,
    relative_index_rows,
    permutations_with_similarity_at_most,
    similarity_bounds,
    similarity_profile,
    to_revlex_index,
)
from .scc import AvgConvention, LazyProfile, default_convention, scc_avg, scc_avg_profile
from .sng import PccKind, SngConfig

# decimal places kept when comparing averaged SCC values
QUANTUM_DIGITS = 12


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_n_exact: int = 7
    max_n_profile: int = 8
    max_n_similarity: int = 12
    threads: int = 1
    seconds: float | None = None

    def __post_init__(self):
        for name in ("max_n_exact", "max_n_profile", "max_n_similarity", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("seconds must be positive")


class Method(enum.Enum):
    EXACT = "exact"
    SIMILARITY = "similarity"
    CIRCULAR = "circular"
    NAIVE = "naive"
    GREEDY = "greedy"


@dataclass
class MSetResult:
    n: int
    m: int
    pcc: PccKind
    method: Method
    indices: tuple[int, ...]
    pairwise: np.ndarray
    sm: float
    elapsed: float
    convention: AvgConvention
    score: float | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def perms(self) -> list[Permutation]:
        if self.method is Method.CIRCULAR:
            return [circular_shift(self.n, k) for k in self.indices]
        return [from_revlex_index(self.n, k) for k in self.indices]

    def pair_values(self) -> list[float]:
        """Upper-triangle entries in row order: (0,1), (0,2), ..., (m-2,m-1)."""
        return [float(self.pairwise[i, j]) for i, j in itertools.combinations(range(self.m), 2)]


class _Clock:
    def __init__(self, seconds: float | None):
        self.start = time.perf_counter()
        self.seconds = seconds

    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def check(self) -> None:
        if self.seconds is not None and self.elapsed() > self.seconds:
            raise BudgetExceeded(f"search exceeded its {self.seconds:g} s budget")


# -- pair spaces -----------------------------------------------------------------


class _RelativeSpace:
    """Pair values ``profile[rel(a, b) - 1]`` over all ``n!`` wirings."""

    def __init__(self, n: int, profile: np.ndarray, cache_rows: int = 2048):
        self.n = n
        self.N = len(profile)
        self.profile = np.asarray(profile)
        self._rows: dict[int, np.ndarray] = {}
        self._cap = cache_rows
        self._lock = threading.Lock()

    def anchor(self) -> np.ndarray:
        # relative(identity, b) = b
        return self.profile

    def row(self, a: int) -> np.ndarray:
        got = self._rows.get(a)
        if got is None:
            self.prefetch([a])
            got = self._rows[a]
        return got

    def prefetch(self, indices) -> None:
        missing = [a for a in indices if a not in self._rows]
        if not missing:
            return
        rows = self.profile[relative_index_rows(self.n, missing) - 1]
        with self._lock:
            for a, r in zip(missing, rows):
                if len(self._rows) >= self._cap:
                    self._rows.pop(next(iter(self._rows)))
                self._rows[a] = r


class _MatrixSpace:
    """Pair values from an explicit ``N x N`` matrix (no invariance assumed)."""

    def __init__(self, matrix: np.ndarray):
        self.matrix = np.asarray(matrix)
        self.N = len(self.matrix)

    def anchor(self) -> np.ndarray:
        return self.matrix[self.N - 1]

    def row(self, a: int) -> np.ndarray:
        return self.matrix[a - 1]


class _DotSpace:
    """``sum_i a(i) b(i)``; invariant under right multiplication only."""

    def __init__(self, n: int):
        self.table = all_permutations(n).astype(np.int64)
        self.N = len(self.table)

    def anchor(self) -> np.ndarray:
        return self.table @ np.arange(1, self.table.shape[1] + 1)

    def row(self, a: int) -> np.ndarray:
        return self.table @ self.table[a - 1]


# -- optimum and canonical set ---------------------------------------------------


def _optimum(space, m: int, clock: _Clock, anchored: bool = True, prune: bool = True) -> float:
    """Smallest achievable max pair value over m-sets (branch and bound)."""
    N = space.N
    best = math.inf

    def dfs(need: int, cur: float, pool: np.ndarray, vals: np.ndarray) -> None:
        nonlocal best
        clock.check()
        if need == 0:
            best = min(best, cur)
            return
        if len(pool) < need:
            return
        if need == 1:
            best = min(best, max(cur, float(vals.min())))
            return
        for p in range(len(pool) - need + 1):
            v = max(cur, float(vals[p]))
            if prune and v >= best:
                break
            c = int(pool[p])
            rest = pool[p + 1 :]
            rest_vals = np.maximum(vals[p + 1 :], space.row(c)[rest - 1])
            if prune:
                keep = rest_vals < best
                rest, rest_vals = rest[keep], rest_vals[keep]
            order = np.argsort(rest_vals, kind="stable")
            dfs(need - 1, v, rest[order], rest_vals[order])

    if anchored:
        pool = np.arange(1, N, dtype=np.int64)
        vals = space.anchor()[: N - 1]
        order = np.argsort(vals, kind="stable")
        dfs(m - 1, -math.inf, pool[order], vals[order])
    else:
        dfs(m, -math.inf, np.arange(1, N + 1, dtype=np.int64), np.full(N, -math.inf))
    return best


def _first_clique(space, cand: np.ndarray, k: int, target: float, clock: _Clock):
    """Lexicographically first k-subset of ascending ``cand`` with all pairs <= target."""
    if k == 0:
        return ()
    for idx in range(len(cand) - k + 1):
        clock.check()
        c = int(cand[idx])
        if k == 1:
            return (c,)
        rest = cand[idx + 1 :]
        rest = rest[space.row(c)[rest - 1] <= target]
        sub = _first_clique(space, rest, k - 1, target, clock)
        if sub is not None:
            return (c,) + sub
    return None


def _canonical_set(space, m: int, target: float, order: str, clock: _Clock, threads: int = 1):
    N = space.N
    if order == "lex":
        outer = range(1, N - m + 2)
    elif order == "loop":
        outer = range(m, N + 1)
    else:
        raise ValueError(f"unknown tie-break order {order!r}")

    def from_outer(a: int):
        row = space.row(a)
        cand = np.arange(a + 1, N + 1) if order == "lex" else np.arange(1, a)
        cand = cand[row[cand - 1] <= target]
        found = _first_clique(space, cand, m - 1, target, clock)
        return None if found is None else tuple(sorted((a,) + found))

    outer = list(outer)
    block = 64
    prefetch = getattr(space, "prefetch", None)
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for lo in range(0, len(outer), block):
            chunk = outer[lo : lo + block]
            if prefetch is not None:
                prefetch(chunk)
            found = pool.map(from_outer, chunk) if pool else map(from_outer, chunk)
            for got in found:
                if got is not None:
                    return got
    finally:
        if pool:
            pool.shutdown(cancel_futures=True)
    return None


def _enumerate_all(space, m: int, order: str, clock: _Clock):
    """Brute force over every m-set: (min max pair value, canonical set)."""
    best, best_key, best_set = math.inf, None, None
    for combo in itertools.combinations(range(1, space.N + 1), m):
        clock.check()
        sm = max(space.row(a)[b - 1] for a, b in itertools.combinations(combo, 2))
        key = combo if order == "lex" else (combo[-1], combo[0]) + combo[1:-1]
        if sm < best or (sm == best and key < best_key):
            best, best_key, best_set = sm, key, combo
    return best, best_set


def _solve(space, m: int, order: str, clock: _Clock, threads: int, prune: bool, anchored: bool):
    if m > space.N:
        raise ValueError(f"cannot pick {m} distinct wirings out of {space.N}")
    if not prune:
        return _enumerate_all(space, m, order, clock)
    target = _optimum(space, m, clock, anchored=anchored)
    found = _canonical_set(space, m, target, order, clock, threads)
    if found is None:  # cannot happen when the optimum is attained
        raise RuntimeError("canonical set search failed to re-find the optimum")
    return target, found


# -- helpers -------------------------------------------------------------------------


def _quantize(values: np.ndarray) -> np.ndarray:
    return np.round(np.asarray(values, dtype=float), QUANTUM_DIGITS)


def _check_m(n: int, m: int, notes: list[str]) -> None:
    if m < 2:
        raise ValueError(f"set size m must be at least 2, got {m}")
    if m >= n:
        msg = f"m={m} >= n={n} lies outside the n > m range the method was designed for"
        warnings.warn(msg, stacklevel=3)
        notes.append(msg)


def _pair_matrix(configs: list[SngConfig], conv: AvgConvention) -> np.ndarray:
    m = len(configs)
    out = np.zeros((m, m))
    for i, j in itertools.combinations(range(m), 2):
        out[i, j] = out[j, i] = scc_avg(configs[i], configs[j], conv)
    return out


def _configs(n: int, perms: list[Permutation], pcc: PccKind, lfsr: LfsrSpec | None):
    lfsr = lfsr or default_spec(n)
    return [SngConfig(lfsr, p, pcc) for p in perms]


def _off_diagonal_max(matrix: np.ndarray) -> float:
    m = len(matrix)
    return max(float(matrix[i, j]) for i, j in itertools.combinations(range(m), 2))


# -- public operations --------------------------------------------------------------


def profile_for(n: int, pcc, conv: AvgConvention | None, budget: SearchBudget, clock: _Clock | None = None):
    if n > budget.max_n_profile:
        raise BudgetExceeded(f"exhaustive profile for n={n} exceeds budget (n <= {budget.max_n_profile})")
    prof = scc_avg_profile(n, pcc, conv, threads=budget.threads, max_n=budget.max_n_profile)
    if clock is not None:
        clock.check()
    return prof


def find_min_pair(n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                  budget: SearchBudget | None = None, profile: np.ndarray | None = None):
    """Best partner for the identity wiring: ``(index, scc_avg)``, ties to smallest index."""
    budget = budget or SearchBudget()
    prof = profile if profile is not None else profile_for(n, pcc, conv, budget)
    q = _quantize(prof[:-1])
    k = int(np.argmin(q)) + 1
    return k, float(prof[k - 1])


@dataclass
class ReversalCheck:
    n: int
    pcc: PccKind
    ok: bool
    argmin: int
    argmax: int
    reversal_value: float
    minimum: float
    maximum: float


def verify_reversal_minimum(n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                            budget: SearchBudget | None = None,
                            profile: np.ndarray | None = None) -> ReversalCheck:
    budget = budget or SearchBudget()
    pcc = PccKind.parse(pcc)
    prof = profile if profile is not None else profile_for(n, pcc, conv, budget)
    q = _quantize(prof)
    return ReversalCheck(
        n=n,
        pcc=pcc,
        ok=bool(q[0] <= q.min()),
        argmin=int(np.argmin(q)) + 1,
        argmax=int(np.argmax(q)) + 1,
        reversal_value=float(prof[0]),
        minimum=float(prof.min()),
        maximum=float(prof.max()),
    )


def algorithm1_exact(
    n: int,
    m: int,
    pcc=PccKind.CMP,
    conv: AvgConvention | None = None,
    budget: SearchBudget | None = None,
    prune: bool = True,
    reduction: bool = True,
    order: str = "lex",
    profile: np.ndarray | None = None,
    lfsr: LfsrSpec | None = None,
) -> MSetResult:
    """Set of ``m`` wirings minimising the largest pairwise average SCC."""
    budget = budget or SearchBudget()
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    notes: list[str] = []
    _check_m(n, m, notes)
    if n > budget.max_n_exact:
        raise BudgetExceeded(f"exact search for n={n} exceeds budget (n <= {budget.max_n_exact})")
    clock = _Clock(budget.seconds)
    if reduction:
        prof = profile if profile is not None else profile_for(n, pcc, conv, budget, clock)
        space = _RelativeSpace(n, _quantize(prof))
    else:
        if n > min(5, MAX_TABLE_N):
            raise BudgetExceeded(f"literal pairwise evaluation is limited to n <= 5, got n={n}")
        configs = _configs(n, [Permutation(tuple(r)) for r in all_permutations(n)], pcc, lfsr)
        matrix = np.zeros((len(configs), len(configs)))
        for i in range(len(configs)):
            clock.check()
            for j in range(i + 1, len(configs)):
                matrix[i, j] = matrix[j, i] = scc_avg(configs[i], configs[j], conv)
        space = _MatrixSpace(_quantize(matrix))
    target, indices = _solve(space, m, order, clock, budget.threads, prune, anchored=reduction)
    perms = [from_revlex_index(n, k) for k in indices]
    pairwise = _pair_matrix(_configs(n, perms, pcc, lfsr), conv)
    return MSetResult(n, m, pcc, Method.EXACT, indices, pairwise, _off_diagonal_max(pairwise),
                      clock.elapsed(), conv, score=float(target), notes=notes)


def algorithm1_naive(n: int, m: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                     order: str = "lex", lfsr: LfsrSpec | None = None) -> MSetResult:
    """Oracle: literal pair evaluation and enumeration of all ``C(n!, m)`` sets."""
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    if n > 4:
        raise BudgetExceeded("the enumeration oracle is limited to n <= 4")
    clock = _Clock(None)
    configs = _configs(n, [Permutation(tuple(r)) for r in all_permutations(n)], pcc, lfsr)
    N = len(configs)
    matrix = np.zeros((N, N))
    for i, j in itertools.combinations(range(N), 2):
        matrix[i, j] = matrix[j, i] = scc_avg(configs[i], configs[j], conv)
    best, indices = _enumerate_all(_MatrixSpace(_quantize(matrix)), m, order, clock)
    pairwise = np.array([[matrix[a - 1, b - 1] for b in indices] for a in indices])
    return MSetResult(n, m, pcc, Method.NAIVE, tuple(indices), pairwise,
                      _off_diagonal_max(pairwise), clock.elapsed(), conv, score=float(best))


def algorithm1_similarity(
    n: int,
    m: int,
    pcc=PccKind.CMP,
    conv: AvgConvention | None = None,
    budget: SearchBudget | None = None,
    order: str = "loop",
    pairwise_kind: str = "positional",
    lfsr: LfsrSpec | None = None,
) -> MSetResult:
    """Pick the m-set by similarity alone, then score only that set exactly.

    ``pairwise_kind="positional"`` compares wirings via ``S(a^-1 o b)``;
    ``"dot"`` uses ``sum_i a(i) b(i)``.  Above the tabulation limit the search
    is anchored at the identity and walks only low-similarity wirings.
    """
    budget = budget or SearchBudget()
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    notes: list[str] = []
    _check_m(n, m, notes)
    if n > budget.max_n_similarity:
        raise BudgetExceeded(f"similarity search for n={n} exceeds budget (n <= {budget.max_n_similarity})")
    clock = _Clock(budget.seconds)
    if n <= MAX_TABLE_N:
        if pairwise_kind == "positional":
            space = _RelativeSpace(n, similarity_profile(n).astype(float))
            anchored = True
        elif pairwise_kind == "dot":
            space = _DotSpace(n)
            anchored = True
        else:
            raise ValueError(f"unknown pairwise similarity {pairwise_kind!r}")
        score, indices = _solve(space, m, order, clock, budget.threads, True, anchored)
        perms = [from_revlex_index(n, k) for k in indices]
    else:
        if pairwise_kind != "positional":
            raise ValueError("only positional similarity is supported above the tabulation limit")
        score, perms = _similarity_anchored_wide(n, m, clock)
        indices = tuple(sorted(to_revlex_index(p) for p in perms))
        perms = [from_revlex_index(n, k) for k in indices]
        notes.append("set anchored at the identity wiring (no full tie-break above n=9)")
    pairwise = _pair_matrix(_configs(n, perms, pcc, lfsr), conv)
    return MSetResult(n, m, pcc, Method.SIMILARITY, tuple(indices), pairwise,
                      _off_diagonal_max(pairwise), clock.elapsed(), conv, score=float(score), notes=notes)


def _similarity_anchored_wide(n: int, m: int, clock: _Clock):
    """Identity plus ``m - 1`` wirings minimising the largest pairwise similarity."""
    lo, hi = similarity_bounds(n)
    weights = np.arange(1, n + 1, dtype=np.int64)
    for bound in range(lo, hi + 1):
        clock.check()
        cand = np.array(list(permutations_with_similarity_at_most(n, bound)), dtype=np.int64)
        if len(cand) < m - 1:
            continue
        inv = np.empty_like(cand)
        inv[np.arange(len(cand))[:, None], cand - 1] = np.arange(1, n + 1)

        def pair_ok(i: int, rest: np.ndarray) -> np.ndarray:
            # S(a^-1 o b) = a^-1[b - 1] . weights
            return (inv[i][cand[rest] - 1] @ weights) <= bound

        def dfs(chosen: tuple[int, ...], pool: np.ndarray):
            if len(chosen) == m - 1:
                return chosen
            for idx in range(len(pool)):
                clock.check()
                c = int(pool[idx])
                rest = pool[idx + 1 :]
                rest = rest[pair_ok(c, rest)] if len(rest) else rest
                got = dfs(chosen + (c,), rest)
                if got is not None:
                    return got
            return None

        found = dfs((), np.arange(len(cand)))
        if found is not None:
            return bound, [identity(n)] + [Permutation(tuple(cand[i])) for i in found]
    raise RuntimeError("no similarity set found")  # unreachable: bound reaches the maximum


def greedy_wirings(n: int, m: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                   pool: int = 256, seed: int = 0, lfsr: LfsrSpec | None = None):
    """Grow a set from the identity over a seeded pool of candidate wirings,
    each time adding the candidate whose worst exact ``SCC_avg`` against the set
    so far is smallest (ties to the lowest index).

    Returns ``(wirings in insertion order, worst pair value, pool size)``.
    Not optimal, but the cost is ``m * pool`` profile entries, so it serves set
    sizes and widths the exact and similarity searches cannot (including ``m > n``).
    """
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    total = math.factorial(n)
    if not 2 <= m <= total:
        raise ValueError(f"need 2 <= m <= n! = {total}, got m={m}")
    rng = np.random.default_rng([n, m, seed])
    want = min(pool, total - 1)
    cand = {1}
    while len(cand) < want:
        cand.add(int(rng.integers(1, total)))
    cand = np.array(sorted(cand))
    if len(cand) < m - 1:
        raise ValueError(f"candidate pool of {len(cand)} is too small for m={m}")
    prof = LazyProfile(n, pcc, conv, lfsr)
    perms = [from_revlex_index(n, int(k)) for k in cand]
    chosen = [identity(n)]
    worst = prof.values(cand)  # against the identity: rel(id, c) = c
    taken = np.zeros(len(cand), dtype=bool)
    score = 0.0
    while len(chosen) < m:
        i = int(np.argmin(np.where(taken, np.inf, _quantize(worst))))
        taken[i] = True
        score = max(score, float(worst[i]))
        chosen.append(perms[i])
        for j in np.flatnonzero(~taken):
            worst[j] = max(worst[j], prof[to_revlex_index(relative(perms[i], perms[j]))])
    return chosen, score, len(cand)


def greedy_mset(n: int, m: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                pool: int = 256, seed: int = 0, lfsr: LfsrSpec | None = None) -> MSetResult:
    """:func:`greedy_wirings` packaged as a scored result."""
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    notes: list[str] = []
    _check_m(n, m, notes)
    clock = _Clock(None)
    chosen, score, size = greedy_wirings(n, m, pcc, conv, pool, seed, lfsr)
    indices = tuple(sorted(to_revlex_index(p) for p in chosen))
    perms = [from_revlex_index(n, k) for k in indices]
    pairwise = _pair_matrix(_configs(n, perms, pcc, lfsr), conv)
    notes.append(f"greedy from the identity over {size} seeded candidates")
    return MSetResult(n, m, pcc, Method.GREEDY, indices, pairwise,
                      _off_diagonal_max(pairwise), clock.elapsed(), conv, score=score, notes=notes)


def circular_profile(n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                     lfsr: LfsrSpec | None = None) -> np.ndarray:
    """``C[k] = scc_avg(identity, shift k)`` for ``k = 0..n-1``."""
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    lfsr = lfsr or default_spec(n)
    base = SngConfig(lfsr, identity(n), pcc)
    return np.array([scc_avg(base, SngConfig(lfsr, circular_shift(n, k), pcc), conv) for k in range(n)])


def best_circular_shift(n: int, pcc=PccKind.CMP, conv: AvgConvention | None = None):
    """Shift ``k`` in ``1..n-1`` with the lowest average SCC against the identity."""
    prof = _quantize(circular_profile(n, pcc, conv))
    k = int(np.argmin(prof[1:])) + 1
    return k, float(circular_profile(n, pcc, conv)[k])


def circular_mset(n: int, m: int, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                  lfsr: LfsrSpec | None = None) -> MSetResult:
    """Best set of ``m`` circular shifts (shift 0 allowed), ties to the smallest tuple."""
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n for circular shift sets, got m={m}, n={n}")
    clock = _Clock(None)
    prof = _quantize(circular_profile(n, pcc, conv, lfsr))
    best, best_set = math.inf, None
    for combo in itertools.combinations(range(n), m):
        sm = max(prof[(b - a) % n] for a, b in itertools.combinations(combo, 2))
        if sm < best:
            best, best_set = sm, combo
    perms = [circular_shift(n, k) for k in best_set]
    pairwise = _pair_matrix(_configs(n, perms, pcc, lfsr), conv)
    return MSetResult(n, m, pcc, Method.CIRCULAR, tuple(best_set), pairwise,
                      _off_diagonal_max(pairwise), clock.elapsed(), conv, score=float(best))


def set_pairwise(n: int, indices, pcc=PccKind.CMP, conv: AvgConvention | None = None,
                 circular: bool = False, lfsr: LfsrSpec | None = None) -> np.ndarray:
    """Exact pairwise matrix for a given set of wiring indices (or shift counts)."""
    pcc = PccKind.parse(pcc)
    conv = conv or default_convention()
    perms = [circular_shift(n, k) if circular else from_revlex_index(n, k) for k in indices]
    return _pair_matrix(_configs(n, perms, pcc, lfsr), conv)


# -- serialisation ------------------------------------------------------------------------


def result_header(m: int) -> list[str]:
    pairs = [f"pair_{i + 1}{j + 1}" for i, j in itertools.combinations(range(m), 2)]
    return ["n", "m", "method", "pcc", "indices", *pairs, "sm", "elapsed_s"]


def result_row(res: MSetResult) -> list:
    return [res.n, res.m, res.method.value, res.pcc.value, " ".join(map(str, res.indices)),
            *[repr(v) for v in res.pair_values()], repr(res.sm), f"{res.elapsed:.6f}"]


def result_dict(res: MSetResult) -> dict:
    return {
        "n": res.n,
        "m": res.m,
        "method": res.method.value,
        "pcc": res.pcc.value,
        "convention": res.convention.value,
        "indices": list(res.indices),
        "wirings": [format_perm(p) for p in res.perms],
        "pairwise": res.pair_values(),
        "sm": res.sm,
        "score": res.score,
        "elapsed_s": res.elapsed,
        "notes": res.notes,
    }
