"""Hecke character of Q(i) at prime ideals, plus an independent
elliptic-curve point-counting oracle for cross-validation."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gaussian import (
    GaussInt,
    PrimeClass,
    classify_prime,
    primary_associate,
    split_two_squares,
)
from .util import BudgetError, primes_upto, thread_count

MAX_POINT_COUNT_P = 10**6
MAX_POWER_M = 19

CANONICAL_LEVEL = 32


@dataclass(frozen=True)
class FormSpec:
    """A CM eigenform built from the m-th power of the canonical character.

    Weight is power_m + 1; nebentypus is trivial for every odd m in scope.
    """

    power_m: int = 1
    level: int = CANONICAL_LEVEL
    bad_primes: frozenset[int] = frozenset({2})

    def __post_init__(self) -> None:
        if self.power_m < 1 or self.power_m % 2 == 0:
            raise ValueError(f"power_m must be odd and positive, got {self.power_m}")
        if self.power_m > MAX_POWER_M:
            raise BudgetError(f"power_m={self.power_m} exceeds cap {MAX_POWER_M}")
        if self.level < 1:
            raise ValueError("level must be positive")
        for p in self.bad_primes:
            if self.level % p != 0:
                raise ValueError(f"bad prime {p} does not divide level {self.level}")

    @property
    def weight(self) -> int:
        return self.power_m + 1


@dataclass(frozen=True)
class CurveSpec:
    """y^2 = x^3 + a_param * x; CM by Z[i] for every nonzero a_param."""

    a_param: int = -1

    def __post_init__(self) -> None:
        if self.a_param == 0:
            raise ValueError("a_param must be nonzero (singular curve)")


def psi_prime(p: int) -> GaussInt:
    """Primary generator of a prime ideal above the split prime p.

    Of the two conjugate primary generators, returns the one with positive
    imaginary part; the other ideal's value is its conjugate.
    """
    pi = primary_associate(split_two_squares(p))
    if pi.im < 0:
        pi = pi.conj()
    return pi


def a_p_character(p: int, spec: FormSpec) -> int:
    """Prime coefficient of the character form: sum of psi^m over ideals of norm p."""
    if p in spec.bad_primes or classify_prime(p) is PrimeClass.RAMIFIED:
        return 0
    if classify_prime(p) is PrimeClass.INERT:
        return 0
    pi = psi_prime(p) ** spec.power_m
    # pi^m + conj(pi)^m = 2*Re(pi^m)
    return 2 * pi.re


def point_count_ap(curve: CurveSpec, p: int) -> int:
    """p + 1 - #E(F_p) by direct quadratic-residue counting over x in F_p."""
    if p > MAX_POINT_COUNT_P:
        raise BudgetError(f"p={p} exceeds point-count budget {MAX_POINT_COUNT_P}")
    if (2 * curve.a_param) % p == 0:
        raise ValueError(f"p={p} is a bad-reduction prime for a={curve.a_param}")
    a = curve.a_param % p
    x = np.arange(p, dtype=np.int64)
    sq = (x * x) % p
    is_qr = np.zeros(p, dtype=bool)
    is_qr[sq] = True
    f = (sq * x + a * x) % p
    chi = np.where(f == 0, 0, np.where(is_qr[f], 1, -1))
    ap = -int(chi.sum())
    assert ap * ap <= 4 * p, f"Hasse bound violated at p={p}: {ap}"
    return ap


def _good_primes(curve: CurveSpec, p_min: int, p_max: int) -> np.ndarray:
    ps = primes_upto(p_max)
    ps = ps[ps >= p_min]
    return np.array([p for p in ps if (2 * curve.a_param) % p != 0], dtype=np.int64)


def _map_primes(fn, primes) -> list:
    workers = thread_count()
    if workers == 1 or len(primes) < 64:
        return [fn(int(p)) for p in primes]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, [int(p) for p in primes]))


def deuring_check(curve: CurveSpec, p_max: int) -> dict:
    """Verify: a_E(p) = 0 exactly at inert primes, over good primes 5 <= p <= p_max."""
    primes = _good_primes(curve, 5, p_max)
    aps = _map_primes(lambda p: point_count_ap(curve, p), primes)
    split = inert = 0
    violations = []
    for p, ap in zip(primes, aps):
        p = int(p)
        cls = classify_prime(p)
        if cls is PrimeClass.SPLIT:
            split += 1
            if ap == 0:
                violations.append({"p": p, "class": cls.value, "ap": ap})
        else:
            inert += 1
            if ap != 0:
                violations.append({"p": p, "class": cls.value, "ap": ap})
    return {
        "split_checked": split,
        "inert_checked": inert,
        "violations": violations,
    }


def ap_agreement_check(curve: CurveSpec, spec: FormSpec, p_max: int) -> dict:
    """Character formula vs point count at every good prime <= p_max (m = 1, a = -1)."""
    if curve.a_param != -1:
        raise ValueError("character agreement is claimed only for a = -1")
    if spec.power_m != 1:
        raise ValueError("character agreement oracle applies to weight 2 (m = 1)")
    primes = _good_primes(curve, 3, p_max)
    counted = _map_primes(lambda p: point_count_ap(curve, p), primes)
    violations = []
    for p, ap_pc in zip(primes, counted):
        p = int(p)
        ap_ch = a_p_character(p, spec)
        if ap_ch != ap_pc:
            violations.append({"p": p, "character": ap_ch, "point_count": ap_pc})
    return {"checked": len(primes), "violations": violations}


def nonvanishing_correspondence(m: int, p_max: int) -> dict:
    """a_{psi^m}(p) = 0 iff a_psi(p) = 0, over primes 5 <= p <= p_max."""
    if m % 2 == 0 or not 1 <= m <= MAX_POWER_M:
        raise ValueError(f"m must be odd in [1, {MAX_POWER_M}], got {m}")
    spec_m = FormSpec(power_m=m)
    spec_1 = FormSpec(power_m=1)
    primes = primes_upto(p_max)
    primes = primes[primes >= 5]
    violations = []
    for p in primes:
        p = int(p)
        zm = a_p_character(p, spec_m) == 0
        z1 = a_p_character(p, spec_1) == 0
        if zm != z1:
            violations.append({"p": p, "zero_at_m": zm, "zero_at_1": z1})
    return {"checked": len(primes), "violations": violations}
