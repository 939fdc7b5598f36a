"""The SL2(Z)-invariant subspace of the Weil representation.

For the paired modules the invariant space is spanned by characteristic
functions of self-dual isotropic subgroups, and its dimension for (N, 1) is
the number of divisors of N. Dimensions are certified: candidate vectors are
verified invariant, and a mod-q rank bound proves there is nothing else.
"""

from discweil import (
    enumerate_self_dual_isotropic,
    hyperbolic_pair,
    invariant_space,
    sigma0,
    verify_selfdual_span,
    weil_relations_report,
)

print("N : dim invariant space | sigma0(N)")
for N in range(1, 13):
    dim = len(invariant_space(hyperbolic_pair(N, 1)))
    print("%2d : %3d | %d" % (N, dim, sigma0(N)))

m = hyperbolic_pair(6, 1)
print("\ndefining relations on D_{6,1}:", weil_relations_report(m))

print("\nself-dual isotropic subgroups of D_{6,1}:")
for h in enumerate_self_dual_isotropic(m):
    print("  order", h.order, "elements", h.element_tuples()[:3], "...")

rep = verify_selfdual_span(m)
print("\nspan{v^H} vs invariant space:", rep)

# a rank-4 pair with N' > 1
rep62 = verify_selfdual_span(hyperbolic_pair(6, 2))
print("same comparison on D_{6,2}:", rep62)
