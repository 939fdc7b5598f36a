"""Eta identities from relations between lifted subgroup vectors.

Whenever an integer combination of catalog vectors is zero, the lifted
products must multiply to a constant, which yields an identity between eta
quotients. For prime p this derives

  prod_{a=1}^{p-1} eta(tau + a/p) = e((p-1)/48) eta(p tau)^{p+1} / (eta(tau) eta(p^2 tau))

with the constant forced by the relation's shift prefactors, then verified
two ways: by direct 200-term expansion and through the relation route.
"""

import time

from discweil import relation_to_eta_identity, relations_Np, verify_eta_prime

for p in (2, 3, 5, 7):
    t0 = time.time()
    rep = verify_eta_prime(p, 200)
    print("p = %d  [%.2fs]" % (p, time.time() - t0))
    print("  identity:", rep["identity"])
    print("  constant:", rep["constant"], " verified:", rep["verified"])

# the underlying relation for p = 2, rendered as an identity
print("\nrelation vectors for (N, p) = (4, 2):")
for rel in relations_Np(4, 2):
    rep = relation_to_eta_identity(4, 2, rel, 80)
    print(" ", rel, "->", rep["tau1"]["quotient"], "= const", rep["tau1"]["constant"])
