from fractions import Fraction as F
from math import gcd, isqrt

from discweil.arith import (
    crt_idempotents,
    divisors,
    factorize,
    is_prime,
    is_rational_square,
    prime_one_mod,
    primitive_root,
    sigma0,
    squarefree_part,
    xgcd,
)


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_factorize_against_trial_division():
    for n in range(1, 400):
        prod = 1
        for p, e in factorize(n):
            assert is_prime(p)
            assert n % p**e == 0 and n % p ** (e + 1) != 0
            prod *= p**e
        assert prod == n


def test_divisors_and_sigma0():
    for n in range(1, 300):
        want = naive_divisors(n)
        assert list(divisors(n)) == want
        assert sigma0(n) == len(want)


def test_is_prime_small():
    sieve = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in sieve)
    assert is_prime(7919)
    assert not is_prime(7917)


def test_squarefree_part():
    for n in range(1, 200):
        s = squarefree_part(n)
        assert n % s == 0
        q = n // s
        # quotient is a perfect square, and s has no square factor
        r = isqrt(q)
        assert r * r == q
        assert all(e == 1 for _, e in factorize(s)) or s == 1


def test_is_rational_square():
    assert is_rational_square(F(4, 9))
    assert is_rational_square(F(0))
    assert is_rational_square(36)
    assert not is_rational_square(F(2))
    assert not is_rational_square(F(-4, 9))
    assert not is_rational_square(F(4, 8))


def test_primitive_root_has_full_order():
    for p in (3, 5, 7, 11, 13, 101):
        g = primitive_root(p)
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        assert len(seen) == p - 1


def test_prime_one_mod():
    for m in (1, 2, 24, 360):
        q = prime_one_mod(m)
        assert is_prime(q) and q % m == 1 % m and q > 2**20


def test_crt_idempotents():
    parts = [4, 9, 25]
    es = crt_idempotents(parts)
    m = 4 * 9 * 25
    for i, mi in enumerate(parts):
        for j, mj in enumerate(parts):
            assert es[i] % mj == (1 if i == j else 0) % mj
    assert sum(es) % m == 1


def test_xgcd_bezout():
    for a in range(-12, 13):
        for b in range(-12, 13):
            g, s, t = xgcd(a, b)
            assert s * a + t * b == g
            if a or b:
                assert g == gcd(a, b) or g == -gcd(a, b)
