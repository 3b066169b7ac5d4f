"""Primality, factorization, and Kronecker symbol against brute references."""

import random

from oracles import oracle_is_prime, oracle_jacobi, oracle_legendre

from ambiclass.arith import ext_gcd, factorize, is_prime, kronecker


def test_is_prime_exhaustive_small():
    for n in range(-5, 20_000):
        assert is_prime(n) == oracle_is_prime(n), n


def test_is_prime_large_deterministic():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # 193707721 * 761838257287
    assert is_prime(10**18 + 9)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


def test_factorize_roundtrip_exhaustive():
    for n in range(1, 100_000):
        f = factorize(n)
        assert f.reassemble() == n
        assert all(is_prime(p) for p, _ in f.factors)
        assert all(e >= 1 for _, e in f.factors)
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes)


def test_factorize_negative_and_random():
    rng = random.Random(20240817)
    for _ in range(300):
        n = rng.randrange(-(10**12), 10**12)
        if n == 0:
            continue
        f = factorize(n)
        assert f.reassemble() == n
        assert f.sign == (1 if n > 0 else -1)
        assert all(is_prime(p) for p, _ in f.factors)


def test_factorize_semiprimes():
    # rho must split balanced semiprimes, not just smooth numbers
    p, q = 1_000_003, 1_000_033
    f = factorize(p * q)
    assert f.factors == ((p, 1), (q, 1))


def test_ext_gcd():
    rng = random.Random(5)
    for _ in range(2000):
        a = rng.randrange(-(10**9), 10**9)
        b = rng.randrange(-(10**9), 10**9)
        g, x, y = ext_gcd(a, b)
        assert g >= 0
        assert a * x + b * y == g
        if a or b:
            assert a % g == 0 and b % g == 0


def test_kronecker_vs_legendre():
    primes = [p for p in range(3, 200) if oracle_is_prime(p)]
    for p in primes:
        for a in range(-2 * p, 2 * p + 1):
            assert kronecker(a, p) == oracle_legendre(a, p), (a, p)


def test_kronecker_vs_jacobi_odd():
    for n in range(1, 400, 2):
        for a in range(-50, 51):
            assert kronecker(a, n) == oracle_jacobi(a, n), (a, n)


def test_kronecker_conventions():
    # (a|2) by the residue of a mod 8; 0 on even a
    table = {1: 1, 3: -1, 5: -1, 7: 1}
    for a in range(-40, 41):
        want = 0 if a % 2 == 0 else table[a % 8]
        assert kronecker(a, 2) == want, a
    # (a|1) = 1 always, (a|-1) = sign
    for a in range(-10, 11):
        assert kronecker(a, 1) == 1
        assert kronecker(a, -1) == (-1 if a < 0 else 1)
    assert kronecker(0, 1) == 1
    assert kronecker(0, -1) == 1
    assert kronecker(0, 5) == 0
    assert kronecker(0, -5) == 0


def test_kronecker_multiplicative_in_top():
    rng = random.Random(99)
    for _ in range(1500):
        a = rng.randrange(-60, 61)
        b = rng.randrange(-60, 61)
        n = rng.randrange(1, 120)
        assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


def test_kronecker_multiplicative_in_bottom():
    rng = random.Random(100)
    for _ in range(1500):
        a = rng.randrange(-60, 61)
        m = rng.randrange(1, 80)
        n = rng.randrange(1, 80)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)
