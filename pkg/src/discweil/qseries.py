"""Truncated q-series with fractional exponents and cyclotomic coefficients.

A series keeps a single exponent denominator m: the term map sends an integer
key k to the coefficient of q^(k/m).  Truncation metadata propagates through
arithmetic pessimistically, so an identity check can never silently compare
coefficients beyond what both sides actually know.

The Dedekind eta expansion eta(d tau + r) = e(r/24) q^(d/24) prod(1 - e(nr)
q^(nd)) is produced sparsely from the pentagonal number theorem; the naive
truncated product is kept alongside as the oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .arith import lcm
from .cyclo import CycNumber, exp_frac


def _nonzero(v):
    if isinstance(v, CycNumber):
        return not v.is_zero()
    return bool(v)


def _coeff_str(v):
    if isinstance(v, CycNumber) and v.is_rational():
        v = v.rational_value()
    return str(v)


def _coeff_json(v):
    if isinstance(v, CycNumber):
        if v.is_rational():
            v = v.rational_value()
        else:
            return v.to_json()
    v = Fraction(v)
    return [v.numerator, v.denominator]


class FracQSeries:
    """Sparse truncated series sum_k c_k q^(k/exp_den) with k/exp_den < trunc."""

    __slots__ = ("exp_den", "terms", "trunc")

    def __init__(self, exp_den, terms, trunc):
        if exp_den < 1:
            raise ValueError("exponent denominator must be positive")
        self.exp_den = exp_den
        self.trunc = Fraction(trunc)
        bound = self.trunc * exp_den
        self.terms = {
            k: v for k, v in terms.items() if _nonzero(v) and k < bound
        }

    @classmethod
    def one(cls, trunc, exp_den=1):
        return cls(exp_den, {0: Fraction(1)}, trunc)

    @classmethod
    def monomial(cls, expo, coeff, trunc):
        expo = Fraction(expo)
        m = expo.denominator
        return cls(m, {expo.numerator: coeff}, trunc)

    def lead(self):
        """Leading exponent, or None for a series with no known terms."""
        if not self.terms:
            return None
        return Fraction(min(self.terms), self.exp_den)

    def _lead_or_trunc(self):
        return self.trunc if not self.terms else Fraction(min(self.terms), self.exp_den)

    def leading_coefficient(self):
        if not self.terms:
            raise ValueError("series has no terms below its truncation")
        return self.terms[min(self.terms)]

    def coefficient(self, expo):
        expo = Fraction(expo)
        if expo >= self.trunc:
            raise ValueError("coefficient beyond the truncation order")
        k = expo * self.exp_den
        if k.denominator != 1:
            return Fraction(0)
        return self.terms.get(k.numerator, Fraction(0))

    def _rescaled(self, m):
        if m == self.exp_den:
            return self
        assert m % self.exp_den == 0
        f = m // self.exp_den
        return FracQSeries(m, {k * f: v for k, v in self.terms.items()}, self.trunc)

    def scale(self, c):
        return FracQSeries(
            self.exp_den, {k: v * c for k, v in self.terms.items()}, self.trunc
        )

    def shift(self, expo):
        """Multiply by the exact monomial q^expo."""
        expo = Fraction(expo)
        m = lcm(self.exp_den, expo.denominator)
        s = self._rescaled(m)
        d = expo.numerator * (m // expo.denominator)
        return FracQSeries(
            m, {k + d: v for k, v in s.terms.items()}, s.trunc + expo
        )

    def __mul__(self, other):
        if not isinstance(other, FracQSeries):
            return NotImplemented
        m = lcm(self.exp_den, other.exp_den)
        a, b = self._rescaled(m), other._rescaled(m)
        trunc = min(
            a.trunc + b._lead_or_trunc(), b.trunc + a._lead_or_trunc()
        )
        bound = trunc * m
        out = {}
        bkeys = sorted(b.terms)
        for ka, va in a.terms.items():
            for kb in bkeys:
                k = ka + kb
                if k >= bound:
                    break
                p = va * b.terms[kb]
                w = out.get(k)
                out[k] = p if w is None else w + p
        return FracQSeries(m, out, trunc)

    def inverse(self):
        """Multiplicative inverse; the leading coefficient must be a unit."""
        if not self.terms:
            raise ValueError("cannot invert a series with zero leading term")
        m = self.exp_den
        l = min(self.terms)
        c0 = self.terms[l]
        c0inv = c0.inv() if isinstance(c0, CycNumber) else Fraction(1) / c0
        # relative coordinates: write self = c0 q^(l/m) (1 + u), solve x(1+u) = 1
        rel_bound = ceil(self.trunc * m - l)
        u = {k - l: v * c0inv for k, v in self.terms.items() if k != l}
        x = {0: Fraction(1)}
        ukeys = sorted(u)
        for k in range(1, rel_bound):
            acc = None
            for j in ukeys:
                if j > k:
                    break
                xv = x.get(k - j)
                if xv is None:
                    continue
                p = xv * u[j]
                acc = p if acc is None else acc + p
            if acc is not None and _nonzero(acc):
                x[k] = -acc
        trunc = self.trunc - 2 * Fraction(l, m)
        return FracQSeries(m, {k - l: v * c0inv for k, v in x.items()}, trunc)

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e < 0:
            return self.inverse() ** (-e)
        rel = self.trunc - self._lead_or_trunc()
        if e == 0:
            return FracQSeries.one(rel, 1)
        out = None
        base = self
        k = e
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def text(self, max_terms=None):
        lines = []
        for k in sorted(self.terms):
            lines.append("q^(%d/%d): %s" % (k, self.exp_den, _coeff_str(self.terms[k])))
            if max_terms is not None and len(lines) >= max_terms:
                break
        return "\n".join(lines)

    def to_json(self):
        return {
            "exp_den": self.exp_den,
            "trunc": [self.trunc.numerator, self.trunc.denominator],
            "terms": {str(k): _coeff_json(self.terms[k]) for k in sorted(self.terms)},
        }

    def __repr__(self):
        nt = len(self.terms)
        return "FracQSeries(%d terms, exp_den=%d, trunc=%s)" % (nt, self.exp_den, self.trunc)


def equals_to_precision(a, b):
    """Exact coefficient agreement below the smaller truncation."""
    m = lcm(a.exp_den, b.exp_den)
    a, b = a._rescaled(m), b._rescaled(m)
    bound = min(a.trunc, b.trunc) * m
    for k in set(a.terms) | set(b.terms):
        if k >= bound:
            continue
        d = a.terms.get(k, 0) - b.terms.get(k, 0)
        if _nonzero(d):
            return False
    return True


def first_mismatch(a, b):
    """Smallest exponent below both truncations where coefficients differ."""
    m = lcm(a.exp_den, b.exp_den)
    a, b = a._rescaled(m), b._rescaled(m)
    bound = min(a.trunc, b.trunc) * m
    for k in sorted(set(a.terms) | set(b.terms)):
        if k >= bound:
            break
        d = a.terms.get(k, 0) - b.terms.get(k, 0)
        if _nonzero(d):
            return Fraction(k, m)
    return None


# ------------------------------------------------------------------ eta


def eta_series(d, r, trunc):
    """eta(d tau + r) as a truncated series, via the pentagonal expansion.

    The exponents are d(24 g + 1)/24 over generalized pentagonal numbers g,
    with coefficients (-1)^k e((24 g + 1) r / 24).
    """
    d = Fraction(d)
    r = Fraction(r)
    trunc = Fraction(trunc)
    if d <= 0:
        raise ValueError("eta scale must be positive")
    if trunc <= d / 24:
        raise ValueError("truncation under the leading exponent gives an empty series")
    m = 24 * d.denominator
    dn = d.numerator
    terms = {}
    k = 0
    while True:
        hit = False
        for kk in ((k,) if k == 0 else (k, -k)):
            g = kk * (3 * kk - 1) // 2
            expo_key = dn * (24 * g + 1)
            if Fraction(expo_key, m) >= trunc:
                continue
            hit = True
            sgn = -1 if kk % 2 else 1
            if r == 0:
                terms[expo_key] = Fraction(sgn)
            else:
                terms[expo_key] = sgn * exp_frac(r * (24 * g + 1) / 24)
        if not hit and k > 0:
            break
        k += 1
    return FracQSeries(m, terms, trunc)


def eta_series_naive(d, r, trunc):
    """The same expansion by direct truncated multiplication (test oracle)."""
    d = Fraction(d)
    r = Fraction(r)
    trunc = Fraction(trunc)
    if d <= 0:
        raise ValueError("eta scale must be positive")
    if trunc <= d / 24:
        raise ValueError("truncation under the leading exponent gives an empty series")
    lead_coeff = exp_frac(r / 24) if r else Fraction(1)
    acc = FracQSeries.monomial(d / 24, lead_coeff, trunc)
    n = 1
    while d / 24 + n * d < trunc:
        c = -exp_frac(n * r) if r else Fraction(-1)
        factor = FracQSeries(
            (n * d).denominator,
            {0: Fraction(1), (n * d).numerator: c},
            trunc,
        )
        acc = acc * factor
        n += 1
    return acc


@dataclass(frozen=True)
class EtaFactor:
    """One factor eta(scale * tau + shift)^exponent."""

    scale: Fraction
    shift: Fraction
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "scale", Fraction(self.scale))
        object.__setattr__(self, "shift", Fraction(self.shift))
        if self.scale <= 0:
            raise ValueError("eta scale must be positive")

    def text(self, var="tau"):
        if self.scale == 1:
            arg = var
        else:
            arg = "%s*%s" % (self.scale, var)
        if self.shift:
            arg += " + %s" % self.shift if self.shift > 0 else " - %s" % (-self.shift)
        body = "eta(%s)" % arg
        if self.exponent != 1:
            body += "^%d" % self.exponent
        return body

    def to_json(self):
        return {
            "scale": [self.scale.numerator, self.scale.denominator],
            "shift": [self.shift.numerator, self.shift.denominator],
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class EtaQuotient:
    """prefactor * product of eta factors."""

    factors: tuple
    prefactor: object = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def expand(self, trunc):
        """Truncated series of the quotient, one division at the end."""
        trunc = Fraction(trunc)
        num = None
        den = None
        for f in self.factors:
            if f.exponent == 0:
                continue
            s = eta_series(f.scale, f.shift, trunc) ** abs(f.exponent)
            if f.exponent > 0:
                num = s if num is None else num * s
            else:
                den = s if den is None else den * s
        if num is None:
            num = FracQSeries.one(trunc)
        out = num if den is None else num / den
        if self.prefactor != 1:
            out = out.scale(self.prefactor)
        return out

    def lead(self):
        return sum((f.scale * f.exponent for f in self.factors), Fraction(0)) / 24

    def text(self, var="tau"):
        if not self.factors:
            body = "1"
        else:
            body = " * ".join(f.text(var) for f in self.factors)
        pf = self.prefactor
        if isinstance(pf, CycNumber) and pf.is_rational():
            pf = pf.rational_value()
        if isinstance(pf, (int, Fraction)) and pf == 1:
            return body
        return "%s * %s" % (_coeff_str(pf), body)

    def to_json(self):
        return {
            "prefactor": _coeff_json(self.prefactor),
            "factors": [f.to_json() for f in self.factors],
        }


def assert_identity(lhs, rhs, trunc):
    """Compare two eta quotients as series up to the requested order.

    Expansion depth is topped up until both sides are known to the requested
    truncation; the report carries the first mismatching exponent if any.
    """
    trunc = Fraction(trunc)
    depth = trunc
    for _ in range(8):
        a = lhs.expand(depth)
        b = rhs.expand(depth)
        eff = min(a.trunc, b.trunc)
        if eff >= trunc:
            break
        depth += trunc - eff
    else:
        raise ValueError("could not reach the requested truncation")
    bad = first_mismatch(a, b)
    report = {
        "equal": bad is None,
        "checked_to": str(min(min(a.trunc, b.trunc), trunc)),
        "first_mismatch": None if bad is None else str(bad),
    }
    if bad is not None:
        report["lhs_coeff"] = _coeff_str(a.coefficient(bad))
        report["rhs_coeff"] = _coeff_str(b.coefficient(bad))
    return report
