"""Coefficient series a(1..X) by two independent routes: prime-power
recurrence assembly over a smallest-prime-factor sieve, and a direct
Gaussian-lattice sweep. Their agreement is the central correctness oracle."""
from __future__ import annotations

import struct
from dataclasses import dataclass
from math import comb, isqrt

import numpy as np

from .character import FormSpec, a_p_character
from .gaussian import GaussInt, gauss_factor, is_primary
from .util import BudgetError, atomic_write_bytes, primes_upto

MAX_X_WEIGHT2 = 10**8
MAX_X_HIGHER = 10**7
MAX_N_IDEALS = 10**7
MAX_N_COEFF = 10**9

# int64 lattice/recurrence arithmetic is provably wrap-free for m <= 5
# within the X budgets; larger m falls back to exact Python integers.
_INT64_SAFE_M = 5

STRATEGY_RECURRENCE = "recurrence"
STRATEGY_LATTICE = "lattice"

BINARY_MAGIC = b"CMGS"
BINARY_VERSION = 1


@dataclass
class CoeffSeries:
    form: FormSpec
    limit: int
    values: np.ndarray  # length limit+1; index 0 unused and held at 0

    def __post_init__(self) -> None:
        if len(self.values) != self.limit + 1:
            raise ValueError("values must have length limit+1")


def _check_batch_budget(X: int, spec: FormSpec) -> None:
    cap = MAX_X_WEIGHT2 if spec.power_m == 1 else MAX_X_HIGHER
    if not 1 <= X <= cap:
        raise BudgetError(f"X={X} outside [1, {cap}] for m={spec.power_m}")


def coeff_prime_power(p: int, r: int, spec: FormSpec) -> int:
    """a(p^r) via the weight-(m+1) Hecke recurrence
    a(p^r) = a(p) a(p^{r-1}) - p^m a(p^{r-2}); bad primes give 0 for r >= 1."""
    if r < 0:
        raise ValueError("exponent must be >= 0")
    if r == 0:
        return 1
    if p in spec.bad_primes or p == 2:
        return 0
    ap = a_p_character(p, spec)
    pm = p**spec.power_m
    prev2, prev1 = 1, ap
    for _ in range(2, r + 1):
        prev2, prev1 = prev1, ap * prev1 - pm * prev2
    return prev1


def coeff(n: int, spec: FormSpec, max_n: int = MAX_N_COEFF) -> int:
    """a(n) by multiplicative assembly over the factorization of n."""
    out = 1
    for p, e, _cls in gauss_factor(n, max_n=max_n):
        out *= coeff_prime_power(p, e, spec)
        if out == 0:
            return 0
    return out


def coeff_via_ideals(n: int, spec: FormSpec) -> int:
    """a(n) straight from the ideal sum: sum of alpha^m over primary alpha
    of norm n (odd norm = coprime to (1+i)). Independent of the recurrence."""
    if not 1 <= n <= MAX_N_IDEALS:
        raise BudgetError(f"n={n} outside [1, {MAX_N_IDEALS}]")
    if n % 2 == 0:
        return 0
    m = spec.power_m
    total = GaussInt(0, 0)
    seen: set[tuple[int, int]] = set()
    for a in range(isqrt(n) + 1):
        r = n - a * a
        b = isqrt(r)
        if b * b != r:
            continue
        for sa in ((a, -a) if a else (a,)):
            for sb in ((b, -b) if b else (b,)):
                if (sa, sb) in seen:
                    continue
                seen.add((sa, sb))
                z = GaussInt(sa, sb)
                if is_primary(z):
                    total = total + z**m
    assert total.im == 0, f"ideal sum not rational at n={n}: {total}"
    return total.re


def _spf_table(X: int) -> np.ndarray:
    """Smallest prime factor for 0..X (spf[p] = p at primes; 0,1 map to 0,1)."""
    spf = np.zeros(X + 1, dtype=np.int32)
    for i in range(2, isqrt(X) + 1):
        if spf[i] == 0:
            sl = spf[i * i :: i]
            sl[sl == 0] = i
    unset = spf == 0
    spf[unset] = np.arange(X + 1, dtype=np.int32)[unset]
    return spf


def _prime_power_values(X: int, spec: FormSpec, primes: np.ndarray) -> dict[int, int]:
    """a(q) for every prime power q <= X, exact Python integers."""
    out: dict[int, int] = {1: 1}
    m = spec.power_m
    for p in primes:
        p = int(p)
        if p in spec.bad_primes or p == 2:
            q = p
            while q <= X:
                out[q] = 0
                q *= p
            continue
        ap = coeff_prime_power(p, 1, spec)
        pm = p**m
        q = p
        prev2, prev1 = 1, ap
        while q <= X:
            out[q] = prev1
            q *= p
            prev2, prev1 = prev1, ap * prev1 - pm * prev2
    return out


def _p_part_table(X: int, spf: np.ndarray) -> np.ndarray:
    """pk[n] = p^e where p = spf(n) and p^e || n; pk[0] = pk[1] = 1."""
    dtype = np.int32 if X < 2**31 else np.int64
    n = np.arange(X + 1, dtype=dtype)
    p = spf.astype(dtype, copy=True)
    p[:2] = 1
    pk = p.copy()
    cur = n // p
    cur[:2] = 1
    while True:
        mask = (cur > 1) & (cur % p == 0)
        if not mask.any():
            break
        pk[mask] *= p[mask]
        cur[mask] //= p[mask]
    return pk


def _series_recurrence_fast(X: int, spec: FormSpec) -> np.ndarray:
    dtype = np.int32 if spec.power_m == 1 else np.int64
    spf = _spf_table(X)
    primes = np.flatnonzero(spf == np.arange(X + 1, dtype=np.int32))
    primes = primes[primes >= 2]
    app_map = _prime_power_values(X, spec, primes)
    app = np.ones(X + 1, dtype=dtype)
    for q, v in app_map.items():
        if q <= X:
            app[q] = v
    pk = _p_part_table(X, spf)
    del spf
    res = np.ones(X + 1, dtype=dtype)
    res[0] = 0
    cur = np.arange(X + 1, dtype=pk.dtype)
    cur[0] = 1
    while True:
        active = cur > 1
        if not active.any():
            break
        q = pk[cur]
        res *= app[q]
        cur = cur // q
    return res


def _series_recurrence_exact(X: int, spec: FormSpec) -> np.ndarray:
    spf = _spf_table(X)
    primes = np.flatnonzero(spf == np.arange(X + 1, dtype=np.int32))
    primes = primes[primes >= 2]
    app = _prime_power_values(X, spec, primes)
    vals: list[int] = [0] * (X + 1)
    if X >= 1:
        vals[1] = 1
    spf_l = spf.tolist()
    for n in range(3, X + 1, 2):
        p = spf_l[n]
        q = p
        r = n // p
        while r % p == 0:
            q *= p
            r //= p
        vals[n] = vals[r] * app[q]
    out = np.empty(X + 1, dtype=object)
    out[:] = vals
    return out


def _re_power(a: np.ndarray, b: int, m: int) -> np.ndarray:
    """Re((a + bi)^m) for an int array a and scalar b, exact in int64."""
    acc = np.zeros_like(a)
    for k in range(0, m + 1, 2):
        term = comb(m, k) * a ** (m - k) * b**k
        if k % 4 == 2:
            acc -= term
        else:
            acc += term
    return acc


def _series_lattice_fast(X: int, spec: FormSpec) -> np.ndarray:
    m = spec.power_m
    dtype = np.int32 if m == 1 else np.int64
    vals = np.zeros(X + 1, dtype=dtype)
    bmax = isqrt(X)
    for b in range(0, bmax + 1, 2):
        amax = isqrt(X - b * b)
        if amax == 0:
            continue
        res = (1 - b) % 4
        start = -amax + ((res - (-amax)) % 4)
        a = np.arange(start, amax + 1, 4, dtype=np.int64)
        if a.size == 0:
            continue
        n = a * a + b * b
        w = _re_power(a, b, m)
        if b == 0:
            vals[n] += w.astype(dtype)
        else:
            vals[n] += (2 * w).astype(dtype)
    return vals


def _series_lattice_exact(X: int, spec: FormSpec) -> np.ndarray:
    m = spec.power_m
    vals: list[int] = [0] * (X + 1)
    bmax = isqrt(X)
    for b in range(0, bmax + 1, 2):
        amax = isqrt(X - b * b)
        res = (1 - b) % 4
        start = -amax + ((res - (-amax)) % 4)
        for a in range(start, amax + 1, 4):
            n = a * a + b * b
            if n == 0 or n > X:
                continue
            re = (GaussInt(a, b) ** m).re
            vals[n] += re if b == 0 else 2 * re
    out = np.empty(X + 1, dtype=object)
    out[:] = vals
    return out


def batch_series(
    X: int, spec: FormSpec, strategy: str = STRATEGY_RECURRENCE
) -> CoeffSeries:
    """Full series a(1..X). Strategies 'recurrence' and 'lattice' are fully
    independent and must agree; see series_cross_check."""
    _check_batch_budget(X, spec)
    fast = spec.power_m <= _INT64_SAFE_M
    if strategy == STRATEGY_RECURRENCE:
        values = _series_recurrence_fast(X, spec) if fast else _series_recurrence_exact(X, spec)
    elif strategy == STRATEGY_LATTICE:
        values = _series_lattice_fast(X, spec) if fast else _series_lattice_exact(X, spec)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return CoeffSeries(form=spec, limit=X, values=values)


def series_cross_check(X: int, spec: FormSpec) -> tuple[CoeffSeries, bool]:
    """Build by both strategies; return the recurrence series and agreement flag."""
    a = batch_series(X, spec, STRATEGY_RECURRENCE)
    b = batch_series(X, spec, STRATEGY_LATTICE)
    ok = bool(np.array_equal(a.values, b.values))
    return a, ok


def krw_property_check(series: CoeffSeries, p_max: int) -> dict:
    """For good primes p <= p_max with a(p) != 0: a(p^r) != 0 for all
    p^r <= limit. Vacuous at primes with a(p) = 0."""
    spec = series.form
    limit = series.limit
    violations = []
    checked = 0
    vals = series.values
    for p in primes_upto(min(p_max, limit)):
        p = int(p)
        if p in spec.bad_primes or p == 2:
            continue
        if vals[p] != 0:
            checked += 1
            q = p * p
            while q <= limit:
                if vals[q] == 0:
                    violations.append({"p": p, "power": q})
                q *= p
    return {"primes_checked": checked, "violations": violations}


def divisor_count(n: int) -> int:
    out = 1
    for _p, e, _cls in gauss_factor(n):
        out *= e + 1
    return out


def envelope_spot_check(series: CoeffSeries, samples: int = 1000, seed: int = 0) -> None:
    """Assert |a(n)| <= d(n) n^{m/2} on a random sample of indices."""
    rng = np.random.default_rng(seed)
    m = series.form.power_m
    idx = rng.integers(1, series.limit + 1, size=min(samples, series.limit))
    for n in idx:
        n = int(n)
        bound = divisor_count(n) * float(n) ** (m / 2)
        assert abs(int(series.values[n])) <= bound * (1 + 1e-9), (
            f"envelope violated at n={n}"
        )


def write_binary(series: CoeffSeries, path) -> None:
    """Header {magic 'CMGS', version u32, m u32, X u64 LE} + X int64 LE values."""
    header = struct.pack(
        "<4sIIQ", BINARY_MAGIC, BINARY_VERSION, series.form.power_m, series.limit
    )
    body = np.asarray(series.values[1:], dtype="<i8").tobytes()
    atomic_write_bytes(path, header + body)


def read_binary(path) -> CoeffSeries:
    with open(path, "rb") as fh:
        raw = fh.read()
    magic, version, m, X = struct.unpack_from("<4sIIQ", raw, 0)
    if magic != BINARY_MAGIC or version != BINARY_VERSION:
        raise ValueError(f"bad series file {path}")
    vals = np.frombuffer(raw, dtype="<i8", offset=struct.calcsize("<4sIIQ"), count=X)
    values = np.zeros(X + 1, dtype=np.int64)
    values[1:] = vals
    return CoeffSeries(form=FormSpec(power_m=m), limit=int(X), values=values)


def csv_nonzero(series: CoeffSeries) -> str:
    """CSV 'n,a_n' rows for the nonzero coefficients."""
    lines = ["n,a_n"]
    nz = np.flatnonzero(np.asarray(series.values) != 0)
    for n in nz:
        if n == 0:
            continue
        lines.append(f"{int(n)},{int(series.values[n])}")
    return "\n".join(lines) + "\n"
