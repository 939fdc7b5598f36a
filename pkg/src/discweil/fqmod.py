"""Finite quadratic modules: finite abelian groups with a Q/Z-valued quadratic form.

A module is presented by generator orders (d_1, ..., d_k) together with the
values Q(g_i) and B(g_i, g_j) of the quadratic form and its polarization
B(x, y) = Q(x+y) - Q(x) - Q(y).  Values live in Q/Z and are stored as
Fractions reduced into [0, 1).  Everything here is exact; no floats except
the final sign disambiguation in signature_mod8, which only separates two
candidates at distance 2*sqrt(|D|).
"""

import itertools
import json
from fractions import Fraction
from functools import cached_property
from math import lcm, prod

from .arith import factorize, is_rational_square


def mod1(fr):
    """Reduce a rational into [0, 1), i.e. take its class in Q/Z."""
    fr = Fraction(fr)
    return fr - (fr.numerator // fr.denominator)


def _frac_str(fr):
    return "%d/%d" % (fr.numerator, fr.denominator)


class DegenerateFormError(ValueError):
    pass


class FqModule:
    """A finite quadratic module (D, Q) in generator/Gram presentation.

    orders  d_i with D = prod Z/d_i
    qs      Q(g_i) in Q/Z
    bs      B(g_i, g_j) in Q/Z, symmetric, with B(g,g) = 2 Q(g)

    Equality is equality of presentations.  Instances are immutable.
    """

    def __init__(self, orders, qs, bs, check=True):
        self.orders = tuple(int(d) for d in orders)
        self.qs = tuple(mod1(q) for q in qs)
        self.bs = tuple(tuple(mod1(b) for b in row) for row in bs)
        k = len(self.orders)
        if any(d < 1 for d in self.orders):
            raise ValueError("generator orders must be positive")
        if len(self.qs) != k or len(self.bs) != k or any(len(r) != k for r in self.bs):
            raise ValueError("presentation size mismatch")
        if check:
            self._validate()

    def _validate(self):
        k = len(self.orders)
        for i in range(k):
            for j in range(k):
                if self.bs[i][j] != self.bs[j][i]:
                    raise ValueError("bilinear values not symmetric")
                # d_i g_i = 0 forces d_i B(g_i, g_j) = 0 in Q/Z
                if mod1(self.orders[i] * self.bs[i][j]) != 0:
                    raise ValueError("bilinear value incompatible with order")
            if self.bs[i][i] != mod1(2 * self.qs[i]):
                raise ValueError("B(g,g) must equal 2 Q(g)")
            if mod1(self.orders[i] ** 2 * self.qs[i]) != 0:
                raise ValueError("Q value incompatible with order")
        if self.radical_size() != 1:
            raise DegenerateFormError("bilinear form is degenerate")

    # -- structure ---------------------------------------------------------

    @cached_property
    def size(self):
        return prod(self.orders)

    @cached_property
    def level(self):
        """Smallest L with L*Q(x) integral for all x."""
        dens = [q.denominator for q in self.qs]
        dens += [b.denominator for row in self.bs for b in row]
        return lcm(1, *dens)

    @cached_property
    def _int_tables(self):
        """Q and B on generators scaled by the level, as plain ints."""
        L = self.level
        qg = [int(q * L) for q in self.qs]
        bg = [[int(b * L) for b in row] for row in self.bs]
        return L, qg, bg

    def elements(self):
        """All elements as coordinate tuples, lexicographic."""
        return itertools.product(*[range(d) for d in self.orders])

    @cached_property
    def element_list(self):
        return tuple(self.elements())

    def index(self, x):
        i = 0
        for c, d in zip(x, self.orders):
            i = i * d + (c % d)
        return i

    def element_at(self, i):
        coords = []
        for d in reversed(self.orders):
            coords.append(i % d)
            i //= d
        return tuple(reversed(coords))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def smul(self, k, x):
        return tuple((k * a) % d for a, d in zip(x, self.orders))

    # -- the form ----------------------------------------------------------

    def q_int(self, x):
        """Q(x) * level, as an integer in [0, level)."""
        L, qg, bg = self._int_tables
        t = 0
        k = len(self.orders)
        for i in range(k):
            xi = x[i]
            if xi:
                t += xi * xi * qg[i]
                for j in range(i + 1, k):
                    if x[j]:
                        t += xi * x[j] * bg[i][j]
        return t % L

    def b_int(self, x, y):
        """B(x, y) * level, as an integer in [0, level)."""
        L, _, bg = self._int_tables
        t = 0
        k = len(self.orders)
        for i in range(k):
            if x[i]:
                for j in range(k):
                    if y[j]:
                        t += x[i] * y[j] * bg[i][j]
        return t % L

    def q_value(self, x):
        self._check_coords(x)
        return Fraction(self.q_int(x), self.level)

    def b_value(self, x, y):
        self._check_coords(x)
        self._check_coords(y)
        return Fraction(self.b_int(x, y), self.level)

    def _check_coords(self, x):
        if len(x) != len(self.orders) or any(
            not 0 <= c < d for c, d in zip(x, self.orders)
        ):
            raise ValueError("element coordinates out of range: %r" % (x,))

    @cached_property
    def isotropic_indices(self):
        """Indices of all x with Q(x) = 0, ascending."""
        return tuple(
            i for i, x in enumerate(self.element_list) if self.q_int(x) == 0
        )

    def radical_size(self):
        """Number of x with B(x, .) identically zero.  1 means non-degenerate."""
        L, _, bg = self._int_tables
        k = len(self.orders)
        n = 0
        for x in self.elements():
            if all(
                sum(x[i] * bg[i][j] for i in range(k)) % L == 0 for j in range(k)
            ):
                n += 1
        return n

    # -- Gauss sum and signature --------------------------------------------

    def gauss_sum(self):
        """Sum of e(Q(x)) over D, exact, at conductor lcm(8, level)."""
        from .cyclo import CycNumber

        L = self.level
        M = lcm(8, L)
        hist = {}
        for x in self.elements():
            e = self.q_int(x) * (M // L) % M
            hist[e] = hist.get(e, 0) + 1
        return CycNumber(M, {e: Fraction(c) for e, c in hist.items()})

    def signature_mod8(self):
        """The s in Z/8 with gauss sum = sqrt(|D|) e(s/8) (exact identification)."""
        from .cyclo import CycNumber, root_of_unity

        g = self.gauss_sum()
        n = self.size
        r = _isqrt_exact(n)
        if r is not None:
            for s in range(8):
                if g == root_of_unity(s, 8) * r:
                    return s
            raise DegenerateFormError("gauss sum off the expected circle")
        # |D| is not a square: pin s mod 4 exactly from the squared sum,
        # then separate s from s+4 numerically (candidates differ by sign,
        # distance 2 sqrt(|D|), far beyond float error).
        g2 = g * g
        smod4 = None
        for s in range(4):
            if g2 == root_of_unity(s, 4) * n:
                smod4 = s
                break
        if smod4 is None:
            raise DegenerateFormError("gauss sum off the expected circle")
        import cmath

        want = n**0.5 * cmath.exp(2j * cmath.pi * smod4 / 8)
        return smod4 if abs(g.to_complex() - want) < abs(g.to_complex() + want) else smod4 + 4


    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {
            "orders": list(self.orders),
            "q_gen": [_frac_str(q) for q in self.qs],
            "b_gram": [[_frac_str(b) for b in row] for row in self.bs],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        qs = [Fraction(s) for s in obj["q_gen"]]
        bs = [[Fraction(s) for s in row] for row in obj["b_gram"]]
        return cls(obj["orders"], qs, bs)

    def __eq__(self, other):
        return (
            isinstance(other, FqModule)
            and self.orders == other.orders
            and self.qs == other.qs
            and self.bs == other.bs
        )

    def __hash__(self):
        return hash((self.orders, self.qs, self.bs))

    def __repr__(self):
        return "FqModule(orders=%r)" % (self.orders,)


def _isqrt_exact(n):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def hyperbolic(N):
    """(Z/N)^2 with Q(x, y) = xy/N.  N = 1 gives the trivial module."""
    if N < 1:
        raise ValueError("scale must be a positive integer")
    z = Fraction(0)
    b = Fraction(1, N)
    return FqModule((N, N), (z, z), ((z, b), (b, z)))


def direct_sum(a, b):
    """Orthogonal sum: concatenated generators, block diagonal B."""
    k, l = len(a.orders), len(b.orders)
    z = Fraction(0)
    bs = []
    for i in range(k + l):
        row = []
        for j in range(k + l):
            if i < k and j < k:
                row.append(a.bs[i][j])
            elif i >= k and j >= k:
                row.append(b.bs[i - k][j - k])
            else:
                row.append(z)
        bs.append(row)
    return FqModule(a.orders + b.orders, a.qs + b.qs, bs)


def hyperbolic_pair(N, Nprime):
    """The rank 4 module (Z/N)^2 + (Z/N')^2 with Q = x1 x2/N + x3 x4/N'."""
    return direct_sum(hyperbolic(N), hyperbolic(Nprime))


def p_primary_decomposition(m):
    """Split m into its p-primary orthogonal components.

    Returns a list of (p, component FqModule, embedding) sorted by p, where
    embedding[j] is the element of m realizing the component's j-th generator.
    The components are mutually orthogonal and their sizes multiply to |D|.
    """
    primes = sorted({p for d in m.orders for p, _ in factorize(d)})
    out = []
    for p in primes:
        gens = []
        for i, d in enumerate(m.orders):
            e = 0
            dd = d
            while dd % p == 0:
                dd //= p
                e += 1
            if e == 0:
                continue
            # the p-part of Z/d is generated by (d / p^e) * g_i
            x = [0] * len(m.orders)
            x[i] = d // p**e
            gens.append((p**e, tuple(x)))
        if not gens:
            continue
        orders = [o for o, _ in gens]
        qs = [m.q_value(x) for _, x in gens]
        bs = [[m.b_value(x, y) for _, y in gens] for _, x in gens]
        comp = FqModule(orders, qs, bs)
        out.append((p, comp, [x for _, x in gens]))
    if not out:
        # trivial module
        out.append((1, m, []))
    return out
