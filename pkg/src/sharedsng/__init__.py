"""Bit-exact simulation of stochastic number generators that share one LFSR
through permuted output wirings, with correlation search and benchmarks."""

from .bitstream import BitStream
from .lfsr import LfsrError, LfsrSpec, default_spec, primitive_taps, sequence
from .perm import Permutation, from_revlex_index, identity, reversal, to_revlex_index
from .scc import AvgConvention, default_convention, scc, scc_avg, scc_avg_profile
from .search import (
    BudgetExceeded,
    MSetResult,
    SearchBudget,
    algorithm1_exact,
    algorithm1_similarity,
    circular_mset,
    find_min_pair,
    greedy_mset,
)
from .sng import PccKind, SngConfig, generate

__version__ = "0.1.0"
