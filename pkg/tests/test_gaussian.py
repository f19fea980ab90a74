import random
from math import isqrt

import pytest

from cmgaps import (
    GaussInt,
    PrimeClass,
    classify_prime,
    gauss_factor,
    is_primary,
    primary_associate,
    split_two_squares,
)
from cmgaps.util import primes_upto


def test_norm_examples():
    assert GaussInt(0, 0).norm() == 0
    assert GaussInt(1, 1).norm() == 2
    assert GaussInt(-1, 2).norm() == 5


def test_classify_prime():
    assert classify_prime(2) is PrimeClass.RAMIFIED
    assert classify_prime(5) is PrimeClass.SPLIT
    assert classify_prime(7) is PrimeClass.INERT
    assert classify_prime(13) is PrimeClass.SPLIT
    assert classify_prime(11) is PrimeClass.INERT


def exhaustive_two_squares(p):
    """Independent oracle: exhaustive a <= sqrt(p) search, canonical a < b."""
    for a in range(1, isqrt(p) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2:
            return tuple(sorted((a, b)))
    raise AssertionError(f"no representation for {p}")


def test_split_two_squares_examples():
    assert split_two_squares(5) == GaussInt(1, 2)
    assert split_two_squares(13) == GaussInt(2, 3)
    assert split_two_squares(29) == GaussInt(2, 5)


def test_split_two_squares_exhaustive_below_1e4():
    for p in primes_upto(10**4):
        p = int(p)
        if p % 4 != 1:
            continue
        z = split_two_squares(p)
        assert (z.re, z.im) == exhaustive_two_squares(p)
        assert 0 < z.re < z.im
        assert z.norm() == p


def test_split_two_squares_rejects_nonsplit():
    with pytest.raises(ValueError):
        split_two_squares(7)
    with pytest.raises(ValueError):
        split_two_squares(2)


def test_primary_examples():
    assert primary_associate(GaussInt(1, 0)) == GaussInt(1, 0)
    # (-1+2i) - 1 = -2+2i = (1+i)^3 exactly
    assert GaussInt(1, 1) ** 3 == GaussInt(-2, 2)
    assert primary_associate(GaussInt(2, 1)) == GaussInt(-1, 2)
    # (3+2i) - 1 = 2+2i = -i*(1+i)^3
    assert primary_associate(GaussInt(3, 2)) == GaussInt(3, 2)


def test_primary_rejects_even_norm():
    with pytest.raises(ValueError):
        primary_associate(GaussInt(1, 1))
    with pytest.raises(ValueError):
        primary_associate(GaussInt(0, 0))


def test_primary_unique_and_idempotent():
    rng = random.Random(7)
    for _ in range(500):
        z = GaussInt(rng.randint(-50, 50), rng.randint(-50, 50))
        if z.norm() % 2 == 0 or z.norm() == 0:
            continue
        flags = [is_primary(w) for w in z.associates()]
        assert sum(flags) == 1
        u = primary_associate(z)
        assert primary_associate(u) == u


def test_primary_commutes_with_conjugation():
    rng = random.Random(11)
    for _ in range(500):
        z = GaussInt(rng.randint(-50, 50), rng.randint(-50, 50))
        if z.norm() % 2 == 0 or z.norm() == 0:
            continue
        assert primary_associate(z.conj()) == primary_associate(z).conj()


def test_norm_multiplicative():
    rng = random.Random(3)
    for _ in range(500):
        z = GaussInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        w = GaussInt(rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        assert (z * w).norm() == z.norm() * w.norm()


def test_pow_matches_repeated_multiplication():
    z = GaussInt(-1, 2)
    acc = GaussInt(1, 0)
    for e in range(8):
        assert z**e == acc
        acc = acc * z
    assert z**3 == GaussInt(11, -2)  # (-1+2i)^3 = 11 - 2i


def test_gauss_factor_examples():
    assert gauss_factor(1) == []
    assert gauss_factor(45) == [
        (3, 2, PrimeClass.INERT),
        (5, 1, PrimeClass.SPLIT),
    ]
    assert gauss_factor(32) == [(2, 5, PrimeClass.RAMIFIED)]


def test_gauss_factor_reconstructs():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 10**6)
        prod = 1
        for p, e, _cls in gauss_factor(n):
            prod *= p**e
        assert prod == n


def test_gauss_factor_range():
    with pytest.raises(ValueError):
        gauss_factor(0)
    with pytest.raises(ValueError):
        gauss_factor(10**9 + 1)
