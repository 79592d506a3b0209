"""Stochastic circuits driven by SNGs under different LFSR-sharing strategies.

Values are ``x / (2^n - 1)`` so that a perfect generator reproduces them
exactly over one period; the remaining error is due to correlation between the
streams feeding a gate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .bitstream import BitStream
from .lfsr import LfsrSpec, primitive_taps
from .perm import Permutation, circular_shift, identity, reversal
from .scc import count_grid
from .sng import PccKind, SngConfig, generate, random_values

DEFAULT_WIDTH = 8
GREEDY_POOL = 256


class SharingStrategy(enum.Enum):
    NO_SHARE = "no-share"
    SIMPLE_SHARE = "simple-share"
    CIRCULAR = "circular"
    PERMUTED = "permuted"

    @classmethod
    def parse(cls, text) -> "SharingStrategy":
        if isinstance(text, cls):
            return text
        return cls(str(text).lower().replace("_", "-"))


@dataclass
class MseReport:
    app: str
    strategy: SharingStrategy
    pcc: PccKind
    trials: int
    mse: float
    min: float
    max: float
    std: float
    seed: int
    wirings: list[str] = field(default_factory=list)

    @classmethod
    def from_trials(cls, app, strategy, pcc, per_trial, seed, wirings=()) -> "MseReport":
        per_trial = np.asarray(per_trial, dtype=float)
        return cls(app, strategy, pcc, len(per_trial), float(per_trial.mean()), float(per_trial.min()),
                   float(per_trial.max()), float(per_trial.std()), seed, list(wirings))


CSV_FIELDS = ["app", "strategy", "pcc", "trials", "mse", "min", "max", "std", "seed"]


def report_row(rep: MseReport) -> list:
    return [rep.app, rep.strategy.value, rep.pcc.value, rep.trials, repr(rep.mse), repr(rep.min),
            repr(rep.max), repr(rep.std), rep.seed]


def report_from_row(row: dict) -> MseReport:
    return MseReport(row["app"], SharingStrategy.parse(row["strategy"]), PccKind.parse(row["pcc"]),
                     int(row["trials"]), float(row["mse"]), float(row["min"]), float(row["max"]),
                     float(row["std"]), int(row["seed"]))


# -- gates ------------------------------------------------------------------------


def sc_multiply(a: BitStream, b: BitStream) -> BitStream:
    return a & b


def mux_add(a: BitStream, b: BitStream, s: BitStream) -> BitStream:
    """Scaled addition: pass ``a`` where ``s`` is 0 and ``b`` where it is 1."""
    if not a.length == b.length == s.length:
        raise ValueError("mux inputs must have equal lengths")
    return (a & ~s) | (b & s)


# -- MUX trees --------------------------------------------------------------------


@dataclass
class _Node:
    lo: int
    hi: int
    depth: int
    left: "_Node | None" = None
    right: "_Node | None" = None

    @property
    def leaf(self) -> bool:
        return self.left is None


def _build(lo: int, hi: int, depth: int = 0) -> _Node:
    node = _Node(lo, hi, depth)
    if hi - lo > 1:
        mid = lo + (hi - lo + 1) // 2
        node.left = _build(lo, mid, depth + 1)
        node.right = _build(mid, hi, depth + 1)
    return node


def _internal(node: _Node) -> list[_Node]:
    """Internal nodes in pre-order; this is the order selects are supplied in."""
    if node.leaf:
        return []
    return [node] + _internal(node.left) + _internal(node.right)


def _check_weights(weights, count: int | None = None) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or len(w) < 1:
        raise ValueError("weights must be a nonempty 1-d sequence")
    if count is not None and len(w) != count:
        raise ValueError(f"{len(w)} weights for {count} inputs")
    if np.any(w < 0):
        raise ValueError("MUX-tree weights must be nonnegative")
    if not np.any(w > 0):
        raise ValueError("MUX-tree weights must not all be zero")
    return w


def select_probabilities(weights) -> list[float]:
    """Per internal node (pre-order): weight mass of the second subtree over the node's mass."""
    w = _check_weights(weights)
    out = []
    for node in _internal(_build(0, len(w))):
        total = w[node.lo : node.hi].sum()
        out.append(float(w[node.right.lo : node.right.hi].sum() / total) if total > 0 else 0.0)
    return out


def select_depths(count: int) -> list[int]:
    return [node.depth for node in _internal(_build(0, count))]


def ideal_weighted_sum(weights, probabilities) -> float:
    w = _check_weights(weights, len(probabilities))
    return float(np.dot(w / w.sum(), probabilities))


def mux_tree_weighted_sum(inputs: list[BitStream], weights, selects: list[BitStream]) -> BitStream:
    """Evaluate a balanced MUX tree; ``selects`` follow the pre-order of internal nodes."""
    _check_weights(weights, len(inputs))
    if len(selects) != len(inputs) - 1:
        raise ValueError(f"{len(inputs)} inputs need {len(inputs) - 1} selects, got {len(selects)}")
    root = _build(0, len(inputs))
    order = {id(node): i for i, node in enumerate(_internal(root))}

    def evaluate(node: _Node) -> BitStream:
        if node.leaf:
            return inputs[node.lo]
        return mux_add(evaluate(node.left), evaluate(node.right), selects[order[id(node)]])

    return evaluate(root)


# -- trial sampling ---------------------------------------------------------------


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def _draw_lfsrs(rng: np.random.Generator, n: int, count: int) -> list[LfsrSpec]:
    """``count`` distinct (tap set, seed) configurations, uniformly without replacement."""
    taps = primitive_taps(n)
    seeds = (1 << n) - 1
    picks = rng.choice(len(taps) * seeds, size=count, replace=False)
    return [LfsrSpec(n, taps[p // seeds], p % seeds + 1) for p in picks]


def shared_wirings(strategy: SharingStrategy, n: int, count: int, pcc: PccKind = PccKind.CMP,
                   wirings: list[Permutation] | None = None) -> list[Permutation]:
    """``count`` wirings of one shared LFSR for the given strategy."""
    if wirings is not None:
        if len(wirings) < count:
            raise ValueError(f"need {count} wirings, got {len(wirings)}")
        return list(wirings[:count])
    if strategy is SharingStrategy.SIMPLE_SHARE:
        return [identity(n)] * count
    if strategy is SharingStrategy.CIRCULAR:
        from .search import best_circular_shift, circular_mset

        if count == 2:
            return [identity(n), circular_shift(n, best_circular_shift(n, pcc)[0])]
        if count <= n:
            return circular_mset(n, count, pcc).perms
        # more consumers than distinct shifts: spread what exists
        return [circular_shift(n, (i * (n // 2 + 1)) % n) for i in range(count)]
    if strategy is SharingStrategy.PERMUTED:
        if count == 2:
            return [identity(n), reversal(n)]
        from .search import greedy_wirings

        # exact and similarity searches are out of reach at n = 8 for these set sizes
        return greedy_wirings(n, count, pcc, pool=GREEDY_POOL)[0]
    raise ValueError(f"{strategy.value} does not share one LFSR")


# -- multiplier -------------------------------------------------------------------


def multiplier_trial_mse(a: SngConfig, b: SngConfig) -> float:
    """MSE of an AND-gate multiplier over every input pair ``(x, y)``."""
    n = a.n
    length = a.length
    c = count_grid(random_values(a), random_values(b), n, a.pcc, b.pcc)
    p = np.arange(1 << n) / length
    err = c / length - p[:, None] * p[None, :]
    return float(np.mean(err * err))


def run_multiplier_benchmark(strategy, pcc=PccKind.CMP, trials: int = 1000, sampler_seed: int = 0,
                             n: int = DEFAULT_WIDTH, wirings: list[Permutation] | None = None) -> MseReport:
    strategy = SharingStrategy.parse(strategy)
    pcc = PccKind.parse(pcc)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if n != DEFAULT_WIDTH:
        raise ValueError(f"the multiplier benchmark is defined for n={DEFAULT_WIDTH}, got n={n}")
    shared = None if strategy is SharingStrategy.NO_SHARE else shared_wirings(strategy, n, 2, pcc, wirings)
    per_trial = []
    for t in range(trials):
        rng = _trial_rng(sampler_seed, t)
        if shared is None:
            la, lb = _draw_lfsrs(rng, n, 2)
            a, b = SngConfig.direct(la, pcc), SngConfig.direct(lb, pcc)
        else:
            (lfsr,) = _draw_lfsrs(rng, n, 1)
            a, b = SngConfig(lfsr, shared[0], pcc), SngConfig(lfsr, shared[1], pcc)
        per_trial.append(multiplier_trial_mse(a, b))
    names = [str(p) for p in shared] if shared else []
    return MseReport.from_trials("multiplier", strategy, pcc, per_trial, sampler_seed, names)


# -- FIR ------------------------------------------------------------------------------


def synthetic_taps(count: int) -> np.ndarray:
    """Nonnegative low-pass-shaped weights: a Hann window over ``count`` taps."""
    if count < 2:
        raise ValueError("a FIR filter needs at least 2 taps")
    i = np.arange(1, count + 1)
    return np.sin(np.pi * i / (count + 1)) ** 2


def fir_wirings(strategy: SharingStrategy, tap_count: int, n: int, pcc: PccKind,
                wirings: list[Permutation] | None = None) -> tuple[Permutation, list[Permutation]]:
    """Data wiring plus one wiring per select depth of the MUX tree.

    Selects at one depth never meet in the same MUX, so they can share a
    wiring; the root gets the member least correlated with the data wiring.
    """
    levels = max(select_depths(tap_count)) + 1
    ws = shared_wirings(strategy, n, levels + 1, pcc, wirings)
    return ws[0], ws[1:]


def fir_trial(weights: np.ndarray, xs: np.ndarray, data_cfgs: list[SngConfig],
              select_cfgs: list[SngConfig]) -> tuple[float, float]:
    """Simulated and ideal output for one input vector."""
    n = data_cfgs[0].n
    full = (1 << n) - 1
    inputs = [generate(cfg, int(x)) for cfg, x in zip(data_cfgs, xs)]
    sel_values = [int(round(p * full)) for p in select_probabilities(weights)]
    selects = [generate(cfg, v) for cfg, v in zip(select_cfgs, sel_values)]
    out = mux_tree_weighted_sum(inputs, weights, selects)
    return out.ones / out.length, ideal_weighted_sum(weights, xs / full)


def run_fir_benchmark(tap_count: int, strategy, trials: int = 1000, sampler_seed: int = 0,
                      pcc=PccKind.CMP, n: int = DEFAULT_WIDTH, weights=None,
                      wirings: list[Permutation] | None = None) -> MseReport:
    strategy = SharingStrategy.parse(strategy)
    pcc = PccKind.parse(pcc)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    w = synthetic_taps(tap_count) if weights is None else _check_weights(weights)
    if len(w) != tap_count:
        raise ValueError(f"{len(w)} weights for {tap_count} taps")
    depths = select_depths(tap_count)
    shared = None
    if strategy is not SharingStrategy.NO_SHARE:
        shared = fir_wirings(strategy, tap_count, n, pcc, wirings)
    per_trial = []
    for t in range(trials):
        rng = _trial_rng(sampler_seed, t)
        xs = rng.integers(0, 1 << n, size=tap_count)
        if shared is None:
            specs = _draw_lfsrs(rng, n, 2 * tap_count - 1)
            data = [SngConfig.direct(s, pcc) for s in specs[:tap_count]]
            sel = [SngConfig.direct(s, pcc) for s in specs[tap_count:]]
        else:
            (lfsr,) = _draw_lfsrs(rng, n, 1)
            data_wiring, level_wirings = shared
            data = [SngConfig(lfsr, data_wiring, pcc)] * tap_count
            sel = [SngConfig(lfsr, level_wirings[d], pcc) for d in depths]
        got, want = fir_trial(w, xs, data, sel)
        per_trial.append((got - want) ** 2)
    names = [str(shared[0])] + [str(p) for p in shared[1]] if shared else []
    return MseReport.from_trials(f"fir{tap_count}", strategy, pcc, per_trial, sampler_seed, names)
