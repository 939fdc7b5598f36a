"""Tour of the finite quadratic modules the package computes with.

The basic object is (Z/N)^2 with Q(a, b) = ab/N, and the rank-4 module
obtained by pairing two of them. All values live in Q/Z as exact Fractions.
"""

from fractions import Fraction as F

from discweil import FqModule, hyperbolic, hyperbolic_pair

m = hyperbolic(6)
print("module:", m)
print("|D| =", m.size, " level =", m.level, " signature mod 8 =", m.signature_mod8())
print("Q(1,1) =", m.q_value((1, 1)), "  B((1,0),(0,1)) =", m.b_value((1, 0), (0, 1)))

# the Gauss sum sum_x e(Q(x)) equals sqrt|D| here (signature 0)
print("Gauss sum:", m.gauss_sum())

d = hyperbolic_pair(6, 2)
print("\npaired module orders:", d.orders, " size:", d.size)
iso = list(d.isotropic_indices)
print("isotropic elements:", len(iso), "of", d.size)

# a module with nonzero signature for contrast: Z/2 with Q(x) = x^2/4
a1 = FqModule((2,), [F(1, 4)], [[F(1, 2)]])
print("\nodd fixture: signature mod 8 =", a1.signature_mod8(), " Gauss sum =", a1.gauss_sum())

# serialization round trip
blob = d.to_json()
print("\nJSON orders:", blob["orders"], " q_gen:", blob["q_gen"])
assert FqModule.from_json(blob) == d
