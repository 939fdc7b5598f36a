from fractions import Fraction as F

import pytest

from discweil.arith import divisors
from discweil.borcherds import (
    InputForm,
    catalog_for,
    character_trivial_check,
    decompose,
    eta_identify,
    lift,
    relation_to_eta_identity,
    verify_eta_prime,
    weyl_vector,
)
from discweil.fqmod import hyperbolic_pair
from discweil.lnn_catalog import (
    SelfDualSpec,
    family_exy_y,
    relations_Np,
    selfdual_list_Np,
)
from discweil.qseries import equals_to_precision, eta_series, first_mismatch

M6 = hyperbolic_pair(6, 1)


def diag_spec(N, d):
    return SelfDualSpec(N, 1, (d, 0, N // d), (1, 0, 1), (0, 0), (0, 0))


def test_weyl_vector_counting():
    f = InputForm.from_combination(M6, [(1, diag_spec(6, 2))])
    w = weyl_vector(f)
    assert w.rho_kappa_prime == F(1, 12)
    assert w.rho_kappa == F(1, 12)
    f16 = InputForm.from_combination(M6, [(1, diag_spec(6, 1))])
    assert weyl_vector(f16).rho_kappa_prime == F(1, 24)
    fsum = InputForm.from_combination(M6, [(1, s) for s in catalog_for(6, 1)])
    assert weyl_vector(fsum).rho_kappa_prime == F(1, 2)


def test_input_invariance_guards():
    with pytest.raises(ValueError):
        InputForm(M6, {(1, 0, 0, 0): 1})  # non-isotropic support
    with pytest.raises(ValueError):
        InputForm(M6, {(0, 0, 0, 0): 1})  # not S-invariant
    # check=False skips verification
    InputForm(M6, {(0, 0, 0, 0): 1}, check=False)


def test_lift_of_diagonal_subgroups_is_eta():
    for N in (1, 2, 4, 6):
        m = hyperbolic_pair(N, 1)
        for d in divisors(N):
            f = InputForm.from_combination(m, [(1, diag_spec(N, d))])
            res = lift(f, 60)
            assert res.weight == F(1, 2)
            ref = eta_series(d, 0, 60)
            assert equals_to_precision(res.psi1, ref), (N, d)
            assert equals_to_precision(res.psi2, ref), (N, d)
            (f1,), (f2,) = res.eta1.factors, res.eta2.factors
            assert f1.scale == d and f1.shift == 0 and f1.exponent == 1
            assert f2.scale == d and f2.shift == 0 and f2.exponent == 1


def test_lift_is_multiplicative():
    m = hyperbolic_pair(4, 1)
    c = catalog_for(4, 1)
    fa = InputForm.from_combination(m, [(1, c[0]), (1, c[1])])
    fb = InputForm.from_combination(m, [(2, c[2])])
    fab = InputForm.from_combination(m, [(1, c[0]), (1, c[1]), (2, c[2])])
    ra, rb, rab = lift(fa, 40), lift(fb, 40), lift(fab, 40)
    assert rab.weight == ra.weight + rb.weight == F(2)
    assert equals_to_precision(rab.psi1, ra.psi1 * rb.psi1)
    assert equals_to_precision(rab.psi2, ra.psi2 * rb.psi2)


def test_zero_input_lifts_to_one():
    res = lift(InputForm(hyperbolic_pair(4, 1), {}), 30)
    assert res.weight == 0
    assert res.psi1.lead() == 0 and len(res.psi1.terms) == 1


@pytest.mark.parametrize("N,p", [(2, 2), (6, 2), (6, 3)])
def test_catalog_members_identify_exactly(N, p):
    m = hyperbolic_pair(N, p)
    for spec in selfdual_list_Np(N, p):
        f = InputForm.from_combination(m, [(1, spec)])
        res = lift(f, 25)
        assert res.eta1 is not None, spec
        assert first_mismatch(res.psi1, res.eta1.expand(25)) is None, spec
        assert first_mismatch(res.psi2, res.eta2.expand(25)) is None, spec


def test_twisted_member_on_the_square_pair():
    m = hyperbolic_pair(4, 4)
    sy = family_exy_y(4, (1, 1, 2), 1)
    f = InputForm.from_combination(m, [(1, sy)])
    e1, e2, _ = eta_identify(f, [(1, sy)])
    (f1,), (f2,) = e1.factors, e2.factors
    assert f1.scale == 2 and f1.shift == F(1, 2)
    assert f2.scale == F(1, 2) and f2.shift == F(1, 2)
    res = lift(f, 12)
    assert first_mismatch(res.psi1, e1.expand(12)) is None
    assert first_mismatch(res.psi2, e2.expand(12)) is None


@pytest.mark.parametrize("N,p", [(2, 2), (3, 3), (6, 2)])
def test_relations_become_eta_identities(N, p):
    for rel in relations_Np(N, p):
        rep = relation_to_eta_identity(N, p, rel, 60)
        assert rep["verified"], rep


def test_relation_identity_full_depth_spot_check():
    rep = relation_to_eta_identity(4, 2, relations_Np(4, 2)[0], 200)
    assert rep["verified"]


def test_non_relation_vector_is_rejected():
    rels = relations_Np(2, 2)
    bad = list(rels[0])
    bad[0] += 1
    with pytest.raises(ValueError):
        relation_to_eta_identity(2, 2, bad, 30)
    with pytest.raises(ValueError):
        relation_to_eta_identity(2, 2, [1, 2], 30)  # wrong length


@pytest.mark.parametrize("p", [2, 3])
def test_prime_eta_identity(p):
    rep = verify_eta_prime(p, 80)
    assert rep["verified"]
    assert rep["direct"]["equal"] and rep["relation"]["verified"]


def test_character_criteria():
    f_pass = InputForm.from_combination(M6, [(2, s) for s in catalog_for(6, 1)])
    rep = character_trivial_check(f_pass)
    assert rep["trivial"]
    assert rep["weight"] == "4"
    alphas = {1: 1, 2: -1, 3: -1, 6: 1}
    f_fail = InputForm.from_combination(
        M6, [(alphas[s.first[0]], s) for s in catalog_for(6, 1)]
    )
    rep2 = character_trivial_check(f_fail)
    assert not rep2["weyl_integral_1"]
    assert not rep2["trivial"]
    with pytest.raises(ValueError):
        character_trivial_check(
            InputForm(hyperbolic_pair(2, 2), {}, check=False)
        )


def test_decompose_errors():
    with pytest.raises(ValueError):
        decompose(InputForm(hyperbolic_pair(8, 4), {}))  # N' neither 1 nor prime
    m = hyperbolic_pair(2, 1)
    # half a catalog vector is not an integer combination
    f = InputForm.from_combination(m, [(1, diag_spec(2, 1))])
    halved = {x: 1 for x in f.support() if sum(x) == 0}
    with pytest.raises(ValueError):
        decompose(InputForm(m, halved, check=False))


def test_decompose_recovers_coefficients():
    m = hyperbolic_pair(6, 1)
    combo = [(2, diag_spec(6, 1)), (-1, diag_spec(6, 3)), (3, diag_spec(6, 6))]
    f = InputForm.from_combination(m, combo)
    got = decompose(f)
    by_first = {s.first[0]: c for c, s in got}
    assert by_first == {1: 2, 3: -1, 6: 3}
