"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Numbers are sparse rational combinations of roots of unity zeta_M^e.  The
stored exponents are only wrapped modulo M; reduction to the canonical power
basis (degree < phi(M), modulo the M-th cyclotomic polynomial) happens lazily
when equality or zero tests need it.  That keeps monomial-heavy workloads
(Weil matrices, eta coefficients) cheap.
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from .arith import divisors

cache = lru_cache(maxsize=None)


# ---------------------------------------------------------------- polynomials
# integer polynomials as tuples of coefficients, low degree first


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _poly_divmod_exact(a, b):
    " divide integer polys, b monic; remainder must come out zero "
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert all(c == 0 for c in a), "non-exact polynomial division"
    return tuple(q)


@cache
def cyclotomic_poly(M):
    """Coefficients of the M-th cyclotomic polynomial, low degree first."""
    num = tuple([-1] + [0] * (M - 1) + [1])  # x^M - 1
    den = (1,)
    for d in divisors(M):
        if d < M:
            den = _poly_mul(den, cyclotomic_poly(d))
    return _poly_divmod_exact(num, den)


@cache
def _reduction_rows(M):
    """Row e = integer coordinates of zeta_M^e in the power basis, 0 <= e < M."""
    phi = cyclotomic_poly(M)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for e in range(M):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


class NotASquareError(ValueError):
    pass


def rational_sqrt(n):
    """Exact square root of a positive integer, or NotASquareError."""
    if n < 1:
        raise ValueError("expected a positive integer")
    r = isqrt(n)
    if r * r != n:
        raise NotASquareError("%d is not a perfect square" % n)
    return r


class CycNumber:
    """An element of Q(zeta_M), stored as a sparse exponent -> rational map."""

    __slots__ = ("conductor", "_c", "_canon")

    def __init__(self, conductor, coeffs):
        self.conductor = conductor
        c = {}
        for e, v in coeffs.items():
            v = Fraction(v)
            if v:
                e %= conductor
                w = c.get(e)
                c[e] = v if w is None else w + v
                if not c[e]:
                    del c[e]
        self._c = c
        self._canon = None

    # -- construction helpers

    @staticmethod
    def rational(v, conductor=1):
        return CycNumber(conductor, {0: Fraction(v)})

    def promote(self, M):
        if M == self.conductor:
            return self
        if M % self.conductor:
            raise ValueError("new conductor must be a multiple")
        k = M // self.conductor
        return CycNumber(M, {e * k: v for e, v in self._c.items()})

    def _pair(self, other):
        if not isinstance(other, CycNumber):
            other = CycNumber.rational(other)
        M = lcm(self.conductor, other.conductor)
        return self.promote(M), other.promote(M)

    # -- canonical form

    def canon(self):
        """Coordinates in the power basis 1, zeta, ..., zeta^(phi(M)-1)."""
        if self._canon is None:
            rows = _reduction_rows(self.conductor)
            deg = len(rows[0])
            out = [Fraction(0)] * deg
            for e, v in self._c.items():
                row = rows[e]
                for j in range(deg):
                    if row[j]:
                        out[j] += v * row[j]
            self._canon = tuple(out)
        return self._canon

    def is_zero(self):
        if not self._c:
            return True
        return all(v == 0 for v in self.canon())

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        c = self.canon()
        return all(v == 0 for v in c[1:])

    def rational_value(self):
        c = self.canon()
        if any(v for v in c[1:]):
            raise ValueError("not a rational number")
        return c[0]

    # -- arithmetic

    def __add__(self, other):
        a, b = self._pair(other)
        c = dict(a._c)
        for e, v in b._c.items():
            w = c.get(e)
            c[e] = v if w is None else w + v
        return CycNumber(a.conductor, c)

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.conductor, {e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(
                self.conductor, {e: v * other for e, v in self._c.items()}
            )
        a, b = self._pair(other)
        c = {}
        M = a.conductor
        for e1, v1 in a._c.items():
            for e2, v2 in b._c.items():
                e = (e1 + e2) % M
                w = c.get(e)
                p = v1 * v2
                c[e] = p if w is None else w + p
        return CycNumber(M, c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = CycNumber.rational(1, self.conductor)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        if len(self._c) == 1:
            # monomial fast path
            (e, v), = self._c.items()
            return CycNumber(self.conductor, {(-e) % self.conductor: 1 / v})
        p = list(self.canon())
        if all(v == 0 for v in p):
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_poly(self.conductor)]
        g, u, _ = _fpoly_xgcd(p, phi)
        # g is a nonzero constant; inverse = u / g
        c0 = g[0]
        M = self.conductor
        return CycNumber(M, {i: v / c0 for i, v in enumerate(u) if v})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def conjugate(self):
        M = self.conductor
        return CycNumber(M, {(-e) % M: v for e, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return (self - Fraction(other)).is_zero()
        if not isinstance(other, CycNumber):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # -- evaluation and output

    def to_complex(self):
        M = self.conductor
        return sum(
            float(v) * cmath.exp(2j * cmath.pi * e / M) for e, v in self._c.items()
        )

    def mod_prime(self, q, t):
        """Value in F_q after zeta_M -> t (t of multiplicative order M mod q)."""
        out = 0
        for e, v in self._c.items():
            out += v.numerator * pow(t, e, q) * pow(v.denominator, -1, q)
        return out % q

    def to_json(self):
        terms = [
            [i, "%d/%d" % (v.numerator, v.denominator)]
            for i, v in enumerate(self.canon())
            if v
        ]
        return {"conductor": self.conductor, "terms": terms}

    def __repr__(self):
        if not self._c:
            return "0"
        bits = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                bits.append(str(v))
            else:
                bits.append("%s*z%d^%d" % (v, self.conductor, e))
        return " + ".join(bits)


def _fpoly_xgcd(a, b):
    """Extended gcd for polynomials over Q (lists of Fractions, low first)."""

    def norm(p):
        while p and p[-1] == 0:
            p = p[:-1]
        return p

    def divmod_(p, d):
        p = list(p)
        q = [Fraction(0)] * max(len(p) - len(d) + 1, 0)
        for i in range(len(q) - 1, -1, -1):
            c = p[i + len(d) - 1] / d[-1]
            q[i] = c
            if c:
                for j, dj in enumerate(d):
                    p[i + j] -= c * dj
        return q, norm(p)

    r0, r1 = norm(list(a)), norm(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1) if s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        nxt = [Fraction(0)] * max(len(s0), len(prod))
        for i, v in enumerate(s0):
            nxt[i] += v
        for i, v in enumerate(prod):
            nxt[i] -= v
        s0, s1 = s1, norm(nxt)
    return r0, s0, s1


def root_of_unity(a, M):
    """zeta_M^a as a CycNumber."""
    if M < 1:
        raise ValueError("conductor must be positive")
    return CycNumber(M, {a % M: Fraction(1)})


def exp_frac(fr):
    """e(fr) = exp(2 pi i fr) for a rational fr, exact."""
    fr = Fraction(fr)
    return root_of_unity(fr.numerator % fr.denominator, fr.denominator)


def one(conductor=1):
    return CycNumber.rational(1, conductor)


def zero(conductor=1):
    return CycNumber(conductor, {})
