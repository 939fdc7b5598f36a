from fractions import Fraction as F

from discweil.fqmod import hyperbolic
from discweil.groupring import GroupRingVector


def test_vector_arithmetic():
    m = hyperbolic(3)
    a = GroupRingVector(m, {0: F(1), 4: F(2)})
    b = GroupRingVector(m, {4: F(-2), 7: F(1, 3)})
    s = a + b
    assert s.get(0) == 1 and s.get(4) == 0 and s.get(7) == F(1, 3)
    assert 4 not in s.coeffs  # zeros are dropped
    d = s - s
    assert not d.coeffs
    t = a.scale(F(1, 2))
    assert t.get(4) == 1


def test_characteristic_and_dense():
    m = hyperbolic(2)
    h = [m.index((0, 0)), m.index((1, 0))]
    v = GroupRingVector.characteristic(m, h)
    dense = v.dense()
    assert len(dense) == 4
    assert sum(dense) == 2
    assert v.support() == sorted(h)


def test_equality():
    m = hyperbolic(2)
    a = GroupRingVector(m, {1: F(2, 2)})
    b = GroupRingVector(m, {1: 1})
    assert a == b
