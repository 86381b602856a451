import math

import pytest
from hypothesis import given, settings, strategies as st

from beauvillekit.exactmath import (
    X,
    IntPoly,
    cyclotomic,
    cyclotomic_factorization,
    cyclotomic_product,
    cyclotomic_resultant,
    divisors,
    euler_phi,
    eval_poly,
    factorize,
    int_det,
    interpolate,
    is_prime,
    resultant,
)


def test_cyclotomic_small():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)
    assert cyclotomic(30).coeffs == (1, 1, 0, -1, -1, -1, 0, 1, 1)


def test_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_resultant_examples():
    assert resultant(X - 1, X + 1) == 2
    assert resultant(cyclotomic(8), cyclotomic(12)) == 1
    assert resultant(cyclotomic(24), cyclotomic(30)) == 1


def test_resultant_zero_rejected():
    with pytest.raises(ValueError):
        resultant(IntPoly(), X)


# values from an independent computer-algebra run
@pytest.mark.parametrize("a,b,expected", [
    (1, 2, 2), (2, 6, 3), (8, 12, 1), (3, 6, 4), (4, 8, 4), (1, 9, 3),
    (2, 18, 3), (5, 10, 16), (1, 16, 2), (3, 12, 4), (24, 30, 1),
])
def test_cyclotomic_resultant_values(a, b, expected):
    assert cyclotomic_resultant(a, b) == expected
    assert cyclotomic_resultant(b, a) == expected
    assert resultant(cyclotomic(a), cyclotomic(b)) == expected


def test_cyclotomic_resultant_equal_rejected():
    with pytest.raises(ValueError):
        cyclotomic_resultant(5, 5)


def test_eval_poly():
    assert eval_poly(cyclotomic(1), 2) == 1
    assert eval_poly(cyclotomic(12), 2) == 13
    assert eval_poly(cyclotomic(2) ** 2, 3) == 16


def test_factorize_examples():
    assert factorize(1).prime_powers == []
    assert factorize(793).prime_powers == [(13, 1), (61, 1)]
    assert factorize(37).prime_powers == [(37, 1)]
    assert factorize(600851475143).prime_powers == [(71, 1), (839, 1), (1471, 1), (6857, 1)]
    assert factorize(2 ** 61 - 1).prime_powers == [(2 ** 61 - 1, 1)]
    assert factorize(18577).prime_powers == [(13, 1), (1429, 1)]


def test_factorize_beyond_trial_division():
    p, q = 1000003, 1000033
    assert factorize(p * q).prime_powers == [(p, 1), (q, 1)]
    assert factorize(p * p * 7).prime_powers == [(7, 1), (p, 2)]


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(1321) == 1320
    assert euler_phi(793) == 720


def test_degree_is_phi():
    for k in range(1, 201):
        assert cyclotomic(k).degree == euler_phi(k)


def test_product_over_divisors():
    for k in range(1, 101):
        prod = IntPoly([1])
        for d in divisors(k):
            prod = prod * cyclotomic(d)
        assert prod == IntPoly.x_power(k) - 1


def test_phi_at_least_sqrt():
    # multiplicative sieve, independent of factorize
    n = 10 ** 5
    phi = list(range(n + 1))
    for p in range(2, n + 1):
        if phi[p] == p:
            for m in range(p, n + 1, p):
                phi[m] -= phi[m] // p
    assert all(phi[k] >= math.sqrt(k) for k in range(7, n + 1))
    assert all(euler_phi(k) == phi[k] for k in range(1, 3000))


def test_closed_form_against_sylvester_grid():
    for b in range(2, 41):
        for a in range(1, b):
            assert cyclotomic_resultant(a, b) == resultant(cyclotomic(a), cyclotomic(b)), (a, b)


def test_cyclotomic_factorization():
    P = cyclotomic_product([1, 1, 2, 2])
    assert cyclotomic_factorization(P) == [(1, 2), (2, 2)]
    assert cyclotomic_factorization(IntPoly.x_power(6) - 1) == [(1, 1), (2, 1), (3, 1), (6, 1)]


def test_int_det_and_interpolation():
    assert int_det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
    assert int_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0
    assert int_det([[0, 1], [1, 0]]) == -1
    assert interpolate([0, 1, 2, 3], [1, 0, 5, 22]) == IntPoly([1, -2, 0, 1])
    with pytest.raises(ValueError):
        interpolate([0, 2], [0, 1])


polys = st.lists(st.integers(-5, 5), min_size=2, max_size=7).map(IntPoly).filter(lambda p: p.degree >= 1)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_resultant_multiplicative(P, Q, R):
    assert resultant(P * Q, R) == resultant(P, R) * resultant(Q, R)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10 ** 12))
def test_factorization_reconstructs(n):
    f = factorize(n)
    assert f.value() == n
    primes = f.primes()
    assert primes == sorted(set(primes))
    assert all(is_prime(p) for p in primes)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_intpoly_divmod(P, Q):
    # monic divisor so integer division is exact
    Q = Q + IntPoly.x_power(Q.degree + 1)
    quo, rem = divmod(P, Q)
    assert quo * Q + rem == P
    assert rem.is_zero() or rem.degree < Q.degree
