from fractions import Fraction as F

from discweil.cyclo import (
    CycNumber,
    cyclotomic_poly,
    exp_frac,
    one,
    rational_sqrt,
    root_of_unity,
    zero,
)
import pytest


def test_cyclotomic_poly_known_values():
    # classical tables
    assert tuple(cyclotomic_poly(1)) == (-1, 1)
    assert tuple(cyclotomic_poly(2)) == (1, 1)
    assert tuple(cyclotomic_poly(3)) == (1, 1, 1)
    assert tuple(cyclotomic_poly(4)) == (1, 0, 1)
    assert tuple(cyclotomic_poly(6)) == (1, -1, 1)
    assert tuple(cyclotomic_poly(12)) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(105)[7] == -2  # first coefficient outside {0,+-1}


def test_roots_of_unity_multiply():
    z8 = root_of_unity(1, 8)
    assert z8**8 == 1
    assert z8**2 == root_of_unity(1, 4)
    assert z8 * root_of_unity(7, 8) == 1
    assert root_of_unity(3, 8) == z8**3


def test_geometric_sums_vanish():
    for M in (2, 3, 4, 6, 9, 12):
        s = zero()
        for a in range(M):
            s = s + root_of_unity(a, M)
        assert s.is_zero()


def test_exp_frac():
    assert exp_frac(F(1, 2)) == -1
    assert exp_frac(F(-1, 4)) == root_of_unity(3, 4)
    assert exp_frac(F(5, 1)) == 1
    x = exp_frac(F(1, 48))
    assert (x**48).is_rational() and x**48 == 1


def test_rational_detection():
    z6 = root_of_unity(1, 6)
    v = z6 + z6**5
    assert v.is_rational() and v.rational_value() == 1
    w = z6 - z6
    assert w.is_zero()
    assert (z6 * 0 + F(3, 7)).rational_value() == F(3, 7)


def test_inverse_and_conjugate():
    z = exp_frac(F(2, 9))
    assert z.inv() * z == 1
    assert z.conjugate() == z.inv()  # roots of unity are unitary
    y = one() + z
    assert y.inv() * y == 1
    with pytest.raises(ZeroDivisionError):
        zero().inv()


def test_division_and_powers():
    z5 = root_of_unity(1, 5)
    assert (z5 / z5) == 1
    assert z5**-2 == root_of_unity(3, 5)
    q = (one() + z5) / (one() + z5)
    assert q.is_rational() and q.rational_value() == 1


def test_mod_prime_is_multiplicative():
    # map zeta_M -> t (an element of order M mod q), check on products
    from discweil.arith import prime_one_mod, primitive_root

    M = 12
    q = prime_one_mod(M)
    t = pow(primitive_root(q), (q - 1) // M, q)
    a = exp_frac(F(1, 12)) + 3
    b = exp_frac(F(5, 12)) * F(2, 5)
    ab = a * b
    am = a.mod_prime(q, t)
    bm = b.mod_prime(q, t)
    assert ab.mod_prime(q, t) == am * bm % q


def test_equality_against_rationals():
    assert one() == 1
    assert zero() == 0
    assert exp_frac(F(1, 3)) != 1
    assert CycNumber(3, {0: F(1, 2)}) == F(1, 2)


def test_rational_sqrt():
    assert rational_sqrt(49) == 7
    with pytest.raises(Exception):
        rational_sqrt(8)


def test_to_json_shape():
    z = exp_frac(F(1, 8)) * F(3, 2)
    obj = z.to_json()
    assert set(obj) == {"conductor", "terms"}
    assert obj["terms"] == [[1, "3/2"]]
