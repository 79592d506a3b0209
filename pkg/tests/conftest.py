"""Shared brute-force oracles; deliberately written without the package's fast paths."""
from fractions import Fraction

import pytest

# Table I as printed: L4 L3 L2 L1, S_CMP, S_WBG for x = 1011
TABLE_I = [
    ("0001", 1, 1), ("1000", 1, 1), ("0100", 1, 0), ("0010", 1, 1), ("1001", 1, 1),
    ("1100", 0, 1), ("0110", 1, 0), ("1011", 1, 1), ("0101", 1, 0), ("1010", 1, 1),
    ("1101", 0, 1), ("1110", 0, 1), ("1111", 0, 1), ("0111", 1, 0), ("0011", 1, 1),
]


def lfsr_states(n, taps, seed):
    """Right-shifting Fibonacci register written out bit by bit."""
    bits = [(seed >> i) & 1 for i in range(n)]  # bits[i] is L_{i+1}
    out = []
    for _ in range((1 << n) - 1):
        out.append(sum(b << i for i, b in enumerate(bits)))
        fb = 0
        for t in taps:
            fb ^= bits[t - 1]
        bits = bits[1:] + [fb]
    return out


def wire(state, p):
    return sum(((state >> (p[i] - 1)) & 1) << i for i in range(len(p)))


def cmp_bit(r, x):
    return int(r <= x)


def wbg_bit(r, x, n):
    # one-hot weight w_i = r_i and not r_{i+1} ... and not r_n; output OR(w_i and x_i)
    out = 0
    for i in range(n):
        w = (r >> i) & 1
        for j in range(i + 1, n):
            w &= 1 - ((r >> j) & 1)
        out |= w & ((x >> i) & 1)
    return out


def stream(n, taps, seed, p, pcc, x):
    f = cmp_bit if pcc == "cmp" else (lambda r, v: wbg_bit(r, v, n))
    return [f(wire(s, p), x) for s in lfsr_states(n, taps, seed)]


def scc_oracle(a, b):
    n = len(a)
    px = Fraction(sum(a), n)
    py = Fraction(sum(b), n)
    pxy = Fraction(sum(u & v for u, v in zip(a, b)), n)
    delta = pxy - px * py
    if delta >= 0:
        den = min(px, py) - px * py
    else:
        den = px * py - max(px + py - 1, 0)
    return Fraction(0) if den == 0 else delta / den


def scc_avg_oracle(n, taps, pa, pb, pcc):
    """Mean |SCC| over x, y in 1..2^n - 1."""
    full = (1 << n) - 1
    sa = {x: stream(n, taps, 1, pa, pcc, x) for x in range(1, full + 1)}
    sb = {y: stream(n, taps, 1, pb, pcc, y) for y in range(1, full + 1)}
    total = sum(abs(scc_oracle(sa[x], sb[y])) for x in sa for y in sb)
    return float(total / (full * full))


@pytest.fixture
def table_i():
    return TABLE_I


# -- acceptance reporting ------------------------------------------------------------

ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((bool(ok), detail))
    print(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[c]
        ok = all(p[0] for p in parts)
        detail = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"criterion {c:2d}: {'PASS' if ok else 'FAIL'} | {detail}")
