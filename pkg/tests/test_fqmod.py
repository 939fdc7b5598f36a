from fractions import Fraction as F

from discweil.cyclo import exp_frac, zero
from discweil.fqmod import (
    FqModule,
    direct_sum,
    hyperbolic,
    hyperbolic_pair,
    p_primary_decomposition,
)


def test_hyperbolic_values():
    m = hyperbolic(6)
    assert m.orders == (6, 6)
    assert m.size == 36
    assert m.level == 6
    assert m.q_value((1, 1)) == F(1, 6)
    assert m.q_value((2, 3)) == 0  # 6/6 = 1 = 0 mod 1
    assert m.b_value((1, 0), (0, 1)) == F(1, 6)
    assert m.b_value((1, 0), (1, 0)) == 0


def test_bilinearity_and_polarization():
    m = hyperbolic_pair(4, 2)
    els = m.element_list
    for x in els[:12]:
        for y in els[:12]:
            bx = (m.q_value(m.add(x, y)) - m.q_value(x) - m.q_value(y)) % 1
            assert bx == m.b_value(x, y)


def test_index_round_trip():
    m = hyperbolic_pair(3, 3)
    for i in range(m.size):
        assert m.index(m.element_at(i)) == i
    # index reduces coordinates
    assert m.index((4, -2, 3, 5)) == m.index((1, 1, 0, 2))


def test_isotropic_count_brute_force():
    for N, Np in [(2, 1), (3, 1), (4, 2), (6, 1)]:
        m = hyperbolic_pair(N, Np)
        want = {i for i in range(m.size) if m.q_value(m.element_at(i)) == 0}
        assert set(m.isotropic_indices) == want


def test_gauss_sum_against_direct_exponential_sum():
    for mod in [hyperbolic(5), hyperbolic_pair(2, 2), FqModule((3,), [F(1, 3)], [[F(2, 3)]])]:
        s = zero(1)
        for x in mod.element_list:
            s = s + exp_frac(mod.q_value(x))
        assert s == mod.gauss_sum()


def test_signatures():
    assert hyperbolic_pair(6, 1).signature_mod8() == 0
    assert hyperbolic_pair(6, 3).signature_mod8() == 0
    # Z/2 with Q(x) = x^2/4 has signature 1; Z/3 with Q(x) = x^2/3 has 2
    a1 = FqModule((2,), [F(1, 4)], [[F(1, 2)]])
    a2 = FqModule((3,), [F(1, 3)], [[F(2, 3)]])
    assert a1.signature_mod8() == 1
    assert a2.signature_mod8() == 2


def test_direct_sum_block_structure():
    a = hyperbolic(2)
    b = hyperbolic(3)
    m = direct_sum(a, b)
    assert m.orders == (2, 2, 3, 3)
    assert m.q_value((1, 1, 1, 1)) == (F(1, 2) + F(1, 3)) % 1
    assert m.b_value((1, 0, 0, 0), (0, 0, 1, 0)) == 0  # blocks orthogonal


def test_json_round_trip():
    m = hyperbolic_pair(4, 2)
    m2 = FqModule.from_json(m.to_json())
    assert m2 == m
    assert m2.q_value((1, 1, 1, 1)) == m.q_value((1, 1, 1, 1))


def test_p_primary_decomposition():
    m = hyperbolic_pair(30, 6)
    parts = p_primary_decomposition(m)
    assert [p for p, _, _ in parts] == [2, 3, 5]
    sizes = 1
    for p, comp, emb in parts:
        sizes *= comp.size
        # embeddings carry the component form back into m
        for j, g in enumerate(emb):
            assert m.q_value(g) == comp.q_value(
                tuple(1 if k == j else 0 for k in range(len(comp.orders)))
            )
    assert sizes == m.size


def test_trivial_module():
    m = hyperbolic(1)
    assert m.size == 1
    assert m.gauss_sum() == 1
