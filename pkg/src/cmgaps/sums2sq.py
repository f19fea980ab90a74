"""Segmented sieve for sums of two squares, short-interval witnesses, and
empirical estimation of the interval constant."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .util import BudgetError

DEFAULT_SEGMENT = 1 << 24
MAX_HI = 10**12
DEFAULT_COPRIME_N = 192  # 6 * level(32); only the classes mod 6 matter


@dataclass
class S2SBitmap:
    lo: int
    hi: int
    bits: np.ndarray  # bool, one entry per integer in [lo, hi)

    def bit(self, n: int) -> bool:
        if not self.lo <= n < self.hi:
            raise IndexError(f"{n} outside [{self.lo}, {self.hi})")
        return bool(self.bits[n - self.lo])


@dataclass(frozen=True)
class IntervalWitness:
    X: int
    m: int        # smallest admissible integer > X
    ratio: float  # (m - X) / X^{1/4}


def sieve_segment(lo: int, hi: int, segment_limit: int = DEFAULT_SEGMENT) -> S2SBitmap:
    """Mark every n in [lo, hi) expressible as a^2 + b^2 with a, b >= 0."""
    if not 0 <= lo < hi <= MAX_HI:
        raise BudgetError(f"segment [{lo}, {hi}) outside [0, {MAX_HI}]")
    if hi - lo > segment_limit:
        raise BudgetError(f"segment length {hi - lo} exceeds {segment_limit}")
    bits = np.zeros(hi - lo, dtype=bool)
    a = 0
    while a * a < hi:
        aa = a * a
        t = lo - aa
        b_min = a if aa >= lo else max(a, isqrt(t - 1) + 1 if t > 0 else 0)
        b_max = isqrt(hi - 1 - aa)
        if b_min <= b_max:
            b = np.arange(b_min, b_max + 1, dtype=np.int64)
            idx = aa + b * b - lo
            bits[idx] = True
            # mirror: b^2 + a^2 with roles swapped is already covered by b >= a
        a += 1
    return S2SBitmap(lo=lo, hi=hi, bits=bits)


def is_sum_two_squares(n: int) -> bool:
    """Direct enumeration check (independent of the prime-signature rule)."""
    for a in range(isqrt(n) + 1):
        b = isqrt(n - a * a)
        if a * a + b * b == n:
            return True
    return False


def next_admissible(
    X: int, N: int = 1, segment_size: int = 1 << 16
) -> IntervalWitness:
    """Smallest m > X that is a sum of two squares and coprime to N."""
    if X < 1 or N < 1:
        raise ValueError("require X >= 1 and N >= 1")
    lo = X + 1
    while True:
        hi = min(lo + segment_size, MAX_HI)
        seg = sieve_segment(lo, hi)
        n = np.arange(lo, hi, dtype=np.int64)
        ok = seg.bits & (np.gcd(n, N) == 1)
        idx = np.flatnonzero(ok)
        if idx.size:
            m = int(lo + idx[0])
            assert seg.bit(m) and gcd(m, N) == 1
            return IntervalWitness(X=X, m=m, ratio=(m - X) / X**0.25)
        lo = hi
        if lo >= MAX_HI:
            raise BudgetError(f"no admissible integer found above X={X} within budget")


def _admissible_array(lo: int, hi: int, N: int) -> np.ndarray:
    """Sorted admissible integers in [lo, hi)."""
    out = []
    for s in range(lo, hi, DEFAULT_SEGMENT):
        e = min(s + DEFAULT_SEGMENT, hi)
        seg = sieve_segment(s, e)
        n = np.arange(s, e, dtype=np.int64)
        out.append(n[seg.bits & (np.gcd(n, N) == 1)])
    return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def interval_constant_scan(
    x_lo: int,
    x_hi: int,
    N: int = DEFAULT_COPRIME_N,
    stride: int = 1,
    top_k: int = 10,
    hist_bins: int = 32,
) -> dict:
    """Empirical max of (next_admissible(X) - X) / X^{1/4} over X in [x_lo, x_hi).

    stride 1 is exhaustive: within a gap between consecutive admissible
    integers the ratio is maximal at the left edge, so evaluating at every
    admissible left edge (plus x_lo itself) covers all integer X.
    """
    if x_hi > 10**9:
        raise BudgetError(f"x_hi={x_hi} exceeds scan budget 10^9")
    if stride < 1:
        raise ValueError("stride must be >= 1")
    empty = {
        "N": N,
        "x_lo": x_lo,
        "x_hi": x_hi,
        "stride": stride,
        "scanned": 0,
        "c_emp": 0.0,
        "argmax_X": None,
        "histogram": {"bin_edges": [], "counts": []},
        "witnesses": [],
    }
    if x_lo >= x_hi:
        return empty
    # Sieve far enough to find a witness for every scanned X.
    margin = max(64, int(4 * x_hi**0.25) + 16)
    adm = _admissible_array(max(1, x_lo), x_hi + margin, N)
    while adm.size == 0 or adm[-1] <= x_hi:
        margin *= 4
        adm = _admissible_array(max(1, x_lo), x_hi + margin, N)
    if stride == 1:
        edges = adm[(adm >= x_lo) & (adm < x_hi)]
        edges = np.unique(np.concatenate([[x_lo], edges])).astype(np.int64)
    else:
        edges = np.arange(x_lo, x_hi, stride, dtype=np.int64)
    pos = np.searchsorted(adm, edges, side="right")
    nxt = adm[pos]
    ratios = (nxt - edges) / edges.astype(float) ** 0.25
    k = int(np.argmax(ratios))
    counts, bin_edges = np.histogram(ratios, bins=hist_bins)
    order = np.argsort(-ratios, kind="stable")[:top_k]
    witnesses = [
        {
            "X": int(edges[i]),
            "m": int(nxt[i]),
            "gap": int(nxt[i] - edges[i]),
            "ratio": float(ratios[i]),
        }
        for i in order
    ]
    return {
        "N": N,
        "x_lo": x_lo,
        "x_hi": x_hi,
        "stride": stride,
        "scanned": int(edges.size),
        "c_emp": float(ratios[k]),
        "argmax_X": int(edges[k]),
        "histogram": {
            "bin_edges": [float(v) for v in bin_edges],
            "counts": [int(v) for v in counts],
        },
        "witnesses": witnesses,
    }


def witnesses_csv(scan: dict) -> str:
    lines = ["X,m,gap,ratio"]
    for w in scan["witnesses"]:
        lines.append(f"{w['X']},{w['m']},{w['gap']},{w['ratio']:.12g}")
    return "\n".join(lines) + "\n"
