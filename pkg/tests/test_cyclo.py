"""Exact arithmetic in Q(eta_N)."""

from fractions import Fraction

import pytest
from mpmath import mp

from mes import CycloNum, cyclotomic_polynomial, phi_degree, root_power


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_phi_degree():
    assert [phi_degree(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


def test_root_power_orders():
    for N in (1, 2, 3, 4, 6):
        eta = root_power(N, 1)
        acc = CycloNum.one(N)
        for _ in range(N):
            acc = acc * eta
        assert acc == CycloNum.one(N)
        assert root_power(N, N) == CycloNum.one(N)
        assert root_power(N, -1) == root_power(N, N - 1)


def test_field_arithmetic():
    # (1 + eta)(1 - eta) = 1 - eta^2 in Q(eta_5)
    one = CycloNum.one(5)
    eta = root_power(5, 1)
    assert (one + eta) * (one - eta) == one - root_power(5, 2)
    # division: x / x = 1 for a nonzero element with all coordinates set
    x = CycloNum(5, [Fraction(1, 2), Fraction(-3), Fraction(7, 5), Fraction(1)])
    assert x / x == one
    assert x * x.inverse() == one


def test_geometric_sum_vanishes():
    # 1 + eta + ... + eta^(N-1) = 0 for N > 1
    for N in (2, 3, 4, 6):
        total = CycloNum.zero(N)
        for a in range(N):
            total = total + root_power(N, a)
        assert total.is_zero()


def test_to_complex_matches_exponential():
    with mp.workprec(128):
        for N in (1, 2, 3, 4, 6):
            for a in range(N):
                got = root_power(N, a).to_complex(128)
                want = mp.e ** (2j * mp.pi * a / N)
                assert abs(got - want) < mp.mpf(2) ** -100


def test_as_fraction():
    x = CycloNum.from_rational(3, Fraction(22, 7))
    assert x.is_rational() and x.as_fraction() == Fraction(22, 7)
    with pytest.raises(ValueError):
        root_power(3, 1).as_fraction()


def test_json_round_trip():
    x = CycloNum(4, [Fraction(1, 3), Fraction(-5, 2)])
    assert CycloNum.from_json(x.to_json()) == x


def test_wrong_coordinate_count():
    with pytest.raises(ValueError):
        CycloNum(3, [Fraction(1)])
