"""Small number-theoretic helpers used throughout the package."""

from functools import lru_cache
from math import gcd, isqrt

cache = lru_cache(maxsize=None)


@cache
def factorize(n):
    """Prime factorization of n >= 1 as a tuple of (p, e) pairs."""
    assert n >= 1
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@cache
def divisors(n):
    """Sorted tuple of positive divisors."""
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def sigma0(n):
    """Number of divisors."""
    out = 1
    for _, e in factorize(n):
        out *= e + 1
    return out


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def squarefree_part(n):
    """The squarefree kernel: n divided by the largest square divisor."""
    assert n >= 1
    out = 1
    for p, e in factorize(n):
        if e % 2:
            out *= p
    return out


def is_rational_square(fr):
    """True if the Fraction (or int) fr is a square in Q."""
    from fractions import Fraction

    fr = Fraction(fr)
    if fr < 0:
        return False
    a, b = fr.numerator, fr.denominator
    return isqrt(a) ** 2 == a and isqrt(b) ** 2 == b


def primitive_root(p):
    """Smallest primitive root mod prime p."""
    assert is_prime(p)
    if p == 2:
        return 1
    qs = [q for q, _ in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
        g += 1


def prime_one_mod(m, min_bits=20):
    """A prime q = 1 (mod m) with q > 2**min_bits, found by scanning."""
    q = ((2**min_bits) // m + 1) * m + 1
    while not is_prime(q):
        q += m
    return q


def crt_idempotents(parts):
    """Given pairwise coprime moduli, scalars e_i with e_i = 1 mod m_i, 0 mod m_j.

    Returns a list of ints, one per modulus, taken mod the product.
    """
    from math import prod

    m = prod(parts)
    out = []
    for mi in parts:
        rest = m // mi
        if mi == 1:
            out.append(0)
            continue
        inv = pow(rest, -1, mi)
        out.append(rest * inv % m)
    return out


def lcm(*xs):
    from math import lcm as _lcm

    return _lcm(*xs)


def xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0
