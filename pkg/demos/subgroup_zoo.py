"""Subgroups of (Z/N)^2 in echelon coordinates.

Every subgroup is <(x, y), (0, z)> for a unique normalized triple: x | N,
z | N, 0 <= y < z, z | (N/x) y. Complements and the isotropy flags then have
closed forms, checked here against brute force for one N.
"""

from discweil import classify, complement, enumerate_subgroups, hyperbolic
from discweil.lnn_catalog import (
    canonical_params,
    classify_params,
    hxyz_complement,
    hxyz_subgroup,
)

N = 6
m = hyperbolic(N)
subs = enumerate_subgroups(m)
print("subgroups of (Z/%d)^2: %d" % (N, len(subs)))

header = "%-12s %5s %-28s %s"
print(header % ("(x, y, z)", "|H|", "classification", "complement"))
for h in subs:
    p = canonical_params(h)
    cl = classify_params(p)
    flags = [
        name
        for name, on in [
            ("isotropic", cl.is_isotropic),
            ("self-orth", cl.is_self_orthogonal),
            ("self-dual", cl.is_self_dual),
            ("co-iso", cl.is_coisotropic),
        ]
        if on
    ]
    print(header % (p.as_tuple(), h.order, " ".join(flags) or "-", hxyz_complement(p).as_tuple()))

# the closed forms really are the brute-force answers
for h in subs:
    p = canonical_params(h)
    assert hxyz_subgroup(p) == h
    assert hxyz_subgroup(hxyz_complement(p)) == complement(h)
    assert classify_params(p) == classify(h)
print("\nclosed forms == brute force for all", len(subs), "subgroups")
