"""Catalogs of self-dual isotropic subgroups for the paired modules.

For N' = p prime the full list has 2 sigma0(N) + 2(p-1) sigma0(N/p) members
built from two diagonal families and two twisted ones, subject to exactly
sigma0(N/p) integer relations among their characteristic functions.
"""

from discweil import (
    assemble,
    dimension_formula,
    enumerate_self_dual_isotropic,
    hyperbolic_pair,
    relations_Np,
    selfdual_list_Np,
    sigma0,
)

N, p = 6, 2
cat = selfdual_list_Np(N, p)
print("catalog for (N, p) = (%d, %d): %d members" % (N, p, len(cat)))
for s in cat:
    print("  first block %-10s second %-10s glue ab=%s cd=%s" % (s.first, s.second, s.ab, s.cd))

truth = {h.indices for h in enumerate_self_dual_isotropic(hyperbolic_pair(N, p))}
assert {assemble(s).indices for s in cat} == truth
print("matches exhaustive enumeration:", len(truth), "subgroups")

rels = relations_Np(N, p)
print("\nrelations (%d, expected sigma0(%d) = %d):" % (len(rels), N // p, sigma0(N // p)))
for r in rels:
    print(" ", r)

print("\nspan dimension:", dimension_formula(N, p), "= catalog", len(cat), "- relations", len(rels))

print("\ndimension formula on square-free N':")
for NN, Np in [(2, 2), (4, 2), (6, 2), (6, 3), (12, 2), (30, 6)]:
    print("  (%2d, %d) -> %d" % (NN, Np, dimension_formula(NN, Np)))
