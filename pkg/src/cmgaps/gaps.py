"""Zero-run (gap) analysis of a coefficient series and the n^{1/4} bound check."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .coeffs import CoeffSeries
from .sums2sq import DEFAULT_COPRIME_N, S2SBitmap

DEFAULT_N0 = 100  # "n >> 0" cutoff; always surfaced in reports


@dataclass(frozen=True)
class GapRecord:
    """One maximal zero-run. length is the gap value i_f(start): coefficients
    a(start+j) vanish for 0 <= j <= length and a(start+length+1) != 0
    (unless the run is truncated by the series boundary)."""

    start: int
    length: int
    ratio: float
    truncated: bool = False


def gap_at(series: CoeffSeries, n: int) -> int:
    """i_f(n): largest i with a(n+j) = 0 for all 0 <= j <= i; -1 if a(n) != 0.

    A run reaching the series boundary is clamped; detect truncation via
    n + gap_at(n) == series.limit.
    """
    if not 1 <= n <= series.limit:
        raise IndexError(f"n={n} outside [1, {series.limit}]")
    vals = series.values
    if vals[n] != 0:
        return -1
    i = n
    while i < series.limit and vals[i + 1] == 0:
        i += 1
    return i - n


def max_gap_scan(series: CoeffSeries, n0: int = DEFAULT_N0) -> tuple[list[GapRecord], dict]:
    """All maximal zero-runs in a single pass, plus sup statistics over
    runs with start >= n0 (truncated tail excluded from the sup)."""
    vals = np.asarray(series.values[1:]) != 0
    z = ~vals
    padded = np.concatenate([[False], z, [False]]).astype(np.int8)
    d = np.diff(padded)
    starts = np.flatnonzero(d == 1) + 1   # n-index of first zero
    ends = np.flatnonzero(d == -1) + 1    # n-index one past last zero
    records: list[GapRecord] = []
    for s, e in zip(starts, ends):
        s, e = int(s), int(e)
        length = e - s - 1  # i_f(s): e-s zeros, max j is e-s-1
        truncated = e - 1 == series.limit
        records.append(
            GapRecord(
                start=s,
                length=length,
                ratio=length / s**0.25,
                truncated=truncated,
            )
        )
    eligible = [r for r in records if r.start >= n0 and not r.truncated]
    if eligible:
        best = max(eligible, key=lambda r: r.ratio)
        summary = {
            "n0": n0,
            "limit": series.limit,
            "m": series.form.power_m,
            "runs": len(records),
            "max_length": max(r.length for r in eligible),
            "max_ratio": best.ratio,
            "argmax_start": best.start,
            "truncated_tail": bool(records and records[-1].truncated),
        }
    else:
        summary = {
            "n0": n0,
            "limit": series.limit,
            "m": series.form.power_m,
            "runs": len(records),
            "max_length": 0,
            "max_ratio": 0.0,
            "argmax_start": None,
            "truncated_tail": bool(records and records[-1].truncated),
        }
    return records, summary


def bound_check(
    series: CoeffSeries,
    C: float,
    n0: int = DEFAULT_N0,
    records: list[GapRecord] | None = None,
) -> dict:
    """Check i_f(n) <= C n^{1/4} for every maximal run with start >= n0."""
    if C <= 0 or n0 < 1:
        raise ValueError("require C > 0 and n0 >= 1")
    if records is None:
        records, _ = max_gap_scan(series, n0=n0)
    checked = 0
    violations = []
    for r in records:
        if r.start < n0 or r.truncated:
            continue
        checked += 1
        if r.length > C * r.start**0.25:
            violations.append(
                {"start": r.start, "length": r.length, "ratio": r.ratio}
            )
    return {"C": C, "n0": n0, "checked": checked, "violations": violations}


def gap_s2s_consistency(
    series: CoeffSeries, bitmap: S2SBitmap, N: int = DEFAULT_COPRIME_N
) -> dict:
    """No zero coefficient may sit on an odd sum of two squares coprime to N:
    such n must carry a nonzero coefficient (support characterization)."""
    lo = max(1, bitmap.lo)
    hi = min(series.limit + 1, bitmap.hi)
    if lo >= hi:
        raise ValueError("series and bitmap ranges do not overlap")
    n = np.arange(lo, hi, dtype=np.int64)
    admissible = bitmap.bits[lo - bitmap.lo : hi - bitmap.lo] & (np.gcd(n, N) == 1)
    zero = np.asarray(series.values[lo:hi]) == 0
    bad = np.flatnonzero(admissible & zero)
    violations = [
        {"n": int(lo + i), "a_n": int(series.values[lo + i])} for i in bad[:100]
    ]
    return {
        "range": [int(lo), int(hi)],
        "admissible_checked": int(admissible.sum()),
        "violations": violations,
    }


def records_csv(records: list[GapRecord]) -> str:
    lines = ["start,length,ratio"]
    for r in sorted(records, key=lambda r: r.start):
        lines.append(f"{r.start},{r.length},{r.ratio:.12g}")
    return "\n".join(lines) + "\n"
