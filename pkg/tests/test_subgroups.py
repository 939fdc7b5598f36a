from itertools import product

import pytest

from discweil.fqmod import hyperbolic, hyperbolic_pair
from discweil.subgroups import (
    EnumerationBoundError,
    Subgroup,
    characteristic_vector,
    classify,
    complement,
    enumerate_isotropic_subgroups,
    enumerate_self_dual_isotropic,
    enumerate_subgroups,
)


def brute_subgroup_sets(m):
    """All subgroups as index sets, by closing every generating pair."""
    out = set()
    els = m.element_list
    for a, b in product(els, repeat=2):
        h = Subgroup.from_gens(m, [a, b])
        out.add(h.indices)
    return out


def test_enumeration_matches_pair_closure():
    # every subgroup of (Z/N)^2 is generated by at most two elements
    for N in (2, 3, 4, 6):
        m = hyperbolic(N)
        got = {h.indices for h in enumerate_subgroups(m)}
        assert got == brute_subgroup_sets(m)


def test_subgroup_counts_prime_square():
    # (Z/p)^2 has p + 3 subgroups: 0, p+1 lines, everything
    for p in (2, 3, 5, 7):
        assert len(enumerate_subgroups(hyperbolic(p))) == p + 3


def test_complement_is_orthogonal_complement():
    m = hyperbolic_pair(4, 2)
    for h in enumerate_subgroups(m):
        c = complement(h)
        want = {
            i
            for i, x in enumerate(m.element_list)
            if all(m.b_value(x, g) == 0 for g in h.element_tuples())
        }
        assert c.indices == want
        assert h.order * c.order == m.size


def test_classify_brute_force():
    m = hyperbolic_pair(2, 2)
    for h in enumerate_subgroups(m):
        cl = classify(h)
        iso = all(m.q_value(x) == 0 for x in h.element_tuples())
        self_orth = h.indices <= complement(h).indices
        assert cl.is_isotropic == iso
        assert cl.is_self_orthogonal == self_orth
        # self-dual is a bilinear-form notion: H equals its complement
        assert cl.is_self_dual == (h.indices == complement(h).indices)
        assert cl.is_coisotropic == classify(complement(h)).is_isotropic


def test_isotropic_enumerations_are_filters():
    m = hyperbolic_pair(6, 1)
    all_subs = enumerate_subgroups(m)
    iso = {h.indices for h in enumerate_isotropic_subgroups(m)}
    assert iso == {h.indices for h in all_subs if classify(h).is_isotropic}
    sd = {h.indices for h in enumerate_self_dual_isotropic(m)}
    want = {
        h.indices
        for h in all_subs
        if classify(h).is_self_dual and classify(h).is_isotropic
    }
    assert sd == want
    assert len(sd) == 4  # sigma0(6)


def test_characteristic_vector():
    m = hyperbolic(2)
    h = enumerate_subgroups(m)[-1]
    v = characteristic_vector(h)
    assert v.support() == sorted(h.indices)


def test_enumeration_bound():
    m = hyperbolic_pair(30, 30)
    with pytest.raises(EnumerationBoundError):
        enumerate_subgroups(m)
    with pytest.raises(EnumerationBoundError):
        enumerate_subgroups(hyperbolic(6), bound=8)


def test_env_var_overrides_bound(monkeypatch):
    monkeypatch.setenv("WEILREP_MAX_D", "8")
    with pytest.raises(EnumerationBoundError):
        enumerate_subgroups(hyperbolic(6))
    monkeypatch.setenv("WEILREP_MAX_D", "40")
    assert enumerate_subgroups(hyperbolic(6))


def test_subgroup_json():
    m = hyperbolic(2)
    h = Subgroup.from_gens(m, [(1, 1)])
    obj = h.to_json()
    assert obj["order"] == 2
    assert obj["elements"] == [[0, 0], [1, 1]]
