"""Exact arithmetic in Z[i]: norms, associates, prime classification and splitting."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

# Field constants for Q(i).
DISCRIMINANT = -4

# Default ceiling for factorization requests.
MAX_FACTOR_N = 10**9


class PrimeClass(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class GaussInt:
    re: int
    im: int

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def __add__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussInt) -> GaussInt:
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt) -> GaussInt:
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __pow__(self, e: int) -> GaussInt:
        if e < 0:
            raise ValueError("negative exponent")
        result = GaussInt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def mul_i(self) -> GaussInt:
        """Multiply by the unit i."""
        return GaussInt(-self.im, self.re)

    def associates(self) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
        return (self, -self, self.mul_i(), -self.mul_i())


ONE = GaussInt(1, 0)

# (1+i)^3 = -2 + 2i, the modulus of the primary normalization.
_LAMBDA3 = GaussInt(-2, 2)


def is_primary(z: GaussInt) -> bool:
    """True iff z = 1 mod (1+i)^3.

    w = 1 mod (1+i)^3 iff (w-1)*conj((1+i)^3) has both parts divisible by
    8 = norm((1+i)^3).  Requires odd norm to be meaningful.
    """
    w = z - ONE
    t = w * _LAMBDA3.conj()
    return t.re % 8 == 0 and t.im % 8 == 0


def classify_prime(p: int) -> PrimeClass:
    """Factorization type of the rational prime p in Z[i].

    Primality of p is the caller's responsibility.
    """
    if p == 2:
        return PrimeClass.RAMIFIED
    if p % 4 == 1:
        return PrimeClass.SPLIT
    return PrimeClass.INERT


def split_two_squares(p: int) -> GaussInt:
    """Canonical z = a + bi with a^2 + b^2 = p and 0 < a < b, for split p.

    Cornacchia descent from a square root of -1 mod p; equivalent to the
    exhaustive a <= sqrt(p) search but O(log p).
    """
    if classify_prime(p) is not PrimeClass.SPLIT:
        raise ValueError(f"{p} is not split in Q(i)")
    x = _sqrt_minus_one(p)
    a, b = p, x
    while b * b > p:
        a, b = b, a % b
    r = b
    s = isqrt(p - r * r)
    if r * r + s * s != p:
        raise ArithmeticError(f"Cornacchia descent failed for {p}")
    a, b = sorted((r, s))
    return GaussInt(a, b)


def _sqrt_minus_one(p: int) -> int:
    """Square root of -1 mod p for p = 1 mod 4, via a quadratic non-residue."""
    e = (p - 1) // 2
    c = 2
    while pow(c, e, p) != p - 1:
        c += 1
    x = pow(c, (p - 1) // 4, p)
    if x * x % p != p - 1:
        raise ArithmeticError(f"{p} admits no square root of -1; not prime?")
    return x


def primary_associate(z: GaussInt) -> GaussInt:
    """The unique unit multiple of z congruent to 1 mod (1+i)^3.

    Exists exactly for z of odd norm.
    """
    n = z.norm()
    if n == 0 or n % 2 == 0:
        raise ValueError(f"{z} has even norm; no primary associate exists")
    for w in z.associates():
        if is_primary(w):
            return w
    raise ArithmeticError(f"no primary associate found for {z}")  # unreachable


def gauss_factor(
    n: int, max_n: int = MAX_FACTOR_N
) -> list[tuple[int, int, PrimeClass]]:
    """Factor n over Z, tagging each rational prime with its class in Z[i]."""
    if not 1 <= n <= max_n:
        raise ValueError(f"n={n} outside [1, {max_n}]")
    out: list[tuple[int, int, PrimeClass]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e, classify_prime(p)))
    d = 5
    step = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e, classify_prime(d)))
        d += step
        step = 6 - step
    if n > 1:
        out.append((n, 1, classify_prime(n)))
    return out
