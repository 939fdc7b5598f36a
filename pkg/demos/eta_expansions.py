"""Exact q-expansions of eta(d tau + r) and eta quotients.

The production expansion uses the pentagonal-number series; a naive product
expansion serves as an independent oracle. Exponents are Fractions, stored
over a fixed denominator per series; coefficients are rationals or exact
roots of unity.
"""

from fractions import Fraction as F

from discweil import EtaFactor, EtaQuotient, eta_series
from discweil.qseries import equals_to_precision, eta_series_naive

e = eta_series(1, 0, 40)
print("eta(tau) to order 40:")
print(e.text(max_terms=8))

# the two expansion routes agree coefficientwise
assert equals_to_precision(eta_series(2, F(1, 2), 60), eta_series_naive(2, F(1, 2), 60))
print("\npentagonal == naive product for eta(2 tau + 1/2) to order 60")

# series arithmetic keeps exact track of truncation
x = eta_series(1, 0, 30)
y = eta_series(4, 0, 30)
q = x**3 / y
print("\neta(tau)^3/eta(4 tau): lead", q.lead(), "truncated at", q.trunc)
print(q.text(max_terms=6))

# symbolic quotients expand on demand
quot = EtaQuotient([EtaFactor(2, 0, 3), EtaFactor(1, 0, -1), EtaFactor(4, 0, -1)])
print("\n%s has weight 1/2 and lead %s" % (quot.text(), quot.lead()))
print(quot.expand(20).text(max_terms=6))
