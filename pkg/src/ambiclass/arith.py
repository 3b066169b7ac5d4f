"""Exact integer arithmetic helpers: primality, factorization, Kronecker symbol.

Everything here is deterministic.  Python integers are arbitrary precision,
so no intermediate can overflow; the Miller-Rabin witness set below is a
proven deterministic test for every modulus that actually occurs at desk
scale (valid up to 3.3 * 10**24).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "ext_gcd",
    "factorize",
    "is_prime",
    "kronecker",
]

# Witnesses proving primality for all n < 3,317,044,064,679,887,385,961,981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Gaps of the mod-30 wheel starting from 7: 7, 11, 13, 17, 19, 23, 29, 31, ...
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n >= 0 (negatives are not prime)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho_split(n: int) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle walk)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Sign and sorted prime powers of a nonzero integer."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def reassemble(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out


def factorize(n: int) -> Factorization:
    """Factor a nonzero integer by trial division, rho for large cofactors."""
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    value = n
    powers: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            powers[p] = powers.get(p, 0) + 1
            m //= p
    p, i = 7, 0
    while p * p <= m and p < 100_000:
        while m % p == 0:
            powers[p] = powers.get(p, 0) + 1
            m //= p
        p += _WHEEL[i]
        i = (i + 1) & 7
    # Anything left is prime or a product of primes above the trial bound.
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            powers[m] = powers.get(m, 0) + 1
            continue
        d = _rho_split(m)
        stack.append(d)
        stack.append(m // d)
    factors = tuple(sorted(powers.items()))
    return Factorization(value=value, sign=sign, factors=factors)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# (a|2) indexed by a mod 8; zero entries are never read (a odd when used).
_KR_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for arbitrary integers, fully multiplicative."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a & 1 == 0 and n & 1 == 0:
        return 0
    v = 0
    while n & 1 == 0:
        n >>= 1
        v += 1
    k = _KR_TAB2[a & 7] if v & 1 else 1
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    # Jacobi phase: n odd and positive from here on.
    a %= n
    while a:
        while a & 1 == 0:
            a >>= 1
            if n & 7 in (3, 5):
                k = -k
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0
