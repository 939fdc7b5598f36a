"""Vectors in the group ring C[D], indexed by element index into the parent."""

from fractions import Fraction


class GroupRingVector:
    """Sparse vector over a finite quadratic module.

    Coefficients may be ints, Fractions or CycNumbers; index keys are element
    indices of the parent module.  Zero coefficients are dropped eagerly only
    for exact zeros of int/Fraction type; cyclotomic zeros survive until a
    canonical test asks.
    """

    def __init__(self, parent, coeffs=None):
        self.parent = parent
        self.coeffs = {}
        for i, v in (coeffs or {}).items():
            if isinstance(v, (int, Fraction)):
                if v:
                    self.coeffs[i] = Fraction(v)
            else:
                self.coeffs[i] = v

    @classmethod
    def characteristic(cls, parent, indices):
        return cls(parent, {i: 1 for i in indices})

    def support(self):
        return sorted(self.coeffs)

    def get(self, i):
        return self.coeffs.get(i, Fraction(0))

    def __add__(self, other):
        assert self.parent == other.parent
        c = dict(self.coeffs)
        for i, v in other.coeffs.items():
            c[i] = c[i] + v if i in c else v
        return GroupRingVector(self.parent, c)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return GroupRingVector(self.parent, {i: v * s for i, v in self.coeffs.items()})

    def dense(self):
        """Dense coefficient list over all of D."""
        return [self.get(i) for i in range(self.parent.size)]

    def dense_rational(self):
        out = []
        for i in range(self.parent.size):
            v = self.get(i)
            if isinstance(v, Fraction):
                out.append(v)
            else:
                out.append(v.rational_value())
        return out

    def __eq__(self, other):
        if not isinstance(other, GroupRingVector) or self.parent != other.parent:
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(_vals_equal(self.get(i), other.get(i)) for i in keys)

    __hash__ = None

    def __repr__(self):
        return "GroupRingVector(%r)" % (self.coeffs,)


def _vals_equal(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return a == b or b == a
