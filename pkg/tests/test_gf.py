import itertools

import pytest
from hypothesis import given, settings, strategies as st

from beauvillekit.gf import (
    FieldElement,
    degree_over,
    embed,
    embedding,
    field_of_order,
    is_irreducible_mod_p,
    make_field,
    minimal_polynomial,
    norm_one_generator,
    relative_norm,
    restrict,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4), (7, 1), (3, 3)]


def brute_irreducible(f, p):
    # no factor of degree <= deg/2 (monic trial division over all candidates)
    from beauvillekit.gf import _pmod

    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = tuple(tail) + (1,)
            if not any(_pmod(f, g, p)):
                return False
    return True


def test_moduli():
    assert make_field(3, 1).modulus == (0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)


def test_modulus_is_smallest_encoding():
    for p, e in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        F = make_field(p, e)
        assert brute_irreducible(F.modulus, p)
        code = sum(c * p ** i for i, c in enumerate(F.modulus[:-1]))
        for n in range(code):
            cand = tuple((n // p ** i) % p for i in range(e))
            assert not brute_irreducible(cand + (1,), p)


def test_irreducibility_test_matches_brute_force():
    for p, n in [(2, 4), (3, 3), (5, 2)]:
        for tail in itertools.product(range(p), repeat=n):
            f = tuple(tail) + (1,)
            assert is_irreducible_mod_p(f, p) == brute_irreducible(f, p)


def test_make_field_errors():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(ValueError):
        field_of_order(12)


def test_cross_field_rejected():
    a = make_field(3, 2).generator()
    b = make_field(5, 1).generator()
    with pytest.raises(ValueError):
        a + b


@pytest.mark.parametrize("p,e", FIELDS)
def test_multiplicative_group_cyclic(p, e):
    F = make_field(p, e)
    g = F.primitive_element()
    assert F.order(g) == F.q - 1


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_axioms(p, e):
    F = make_field(p, e)
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (5, 2), (2, 4)])
@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_frobenius_additive(p, e, data):
    F = make_field(p, e)
    a = data.draw(st.integers(0, F.q - 1))
    b = data.draw(st.integers(0, F.q - 1))
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


def test_norm_examples():
    F9, F3 = make_field(3, 2), make_field(3, 1)
    assert relative_norm(F9.one(), F3).rep == 1
    g = FieldElement(F9, F9.primitive_element())
    n = relative_norm(g, F3)
    assert n == restrict(g ** 4, F3)
    assert n.order() == 2


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (5, 2)])
def test_norm_multiplicative_and_surjective(q, n):
    base = field_of_order(q)
    ext = make_field(base.p, base.e * n)
    images = {}
    elems = [FieldElement(ext, r) for r in range(1, ext.q)]
    for a in elems:
        images[a.rep] = relative_norm(a, base).rep
    assert set(images.values()) == set(range(1, q))
    for a, b in zip(elems[::3], elems[1::5]):
        assert images[(a * b).rep] == base.mul(images[a.rep], images[b.rep])


def test_norm_one_generator_examples():
    a = norm_one_generator(2, 3)
    assert a.order() == 7
    assert [c.rep for c in minimal_polynomial(a, make_field(2, 1))] in ([1, 1, 0, 1], [1, 0, 1, 1])
    b = norm_one_generator(3, 2)
    assert b.order() == 4 and degree_over(b, make_field(3, 1)) == 2
    c = norm_one_generator(2, 2)
    assert c.order() == 3


def test_norm_one_generator_power_of_generator():
    for q, n in [(2, 3), (3, 2), (3, 3), (4, 2), (7, 2), (5, 3)]:
        a = norm_one_generator(q, n)
        base = field_of_order(q)
        assert relative_norm(a, base).rep == 1
        assert degree_over(a, base) == n


def test_minimal_polynomial_examples():
    F3, F9 = make_field(3, 1), make_field(3, 2)
    two = FieldElement(F9, embedding(F3, F9)[2])
    assert [c.rep for c in minimal_polynomial(two, F3)] == [1, 1]  # x - 2 = x + 1
    i = next(FieldElement(F9, r) for r in range(F9.q) if F9.mul(r, r) == F9.neg(1))
    assert [c.rep for c in minimal_polynomial(i, F3)] == [1, 0, 1]


@pytest.mark.parametrize("p,e", [(2, 4), (3, 2), (2, 6), (5, 2), (3, 3)])
def test_minimal_polynomial_degree(p, e):
    F = make_field(p, e)
    base = make_field(p, 1)
    for r in range(F.q):
        a = FieldElement(F, r)
        d = 1
        while a ** (p ** d) != a:
            d += 1
        mp = minimal_polynomial(a, base)
        assert len(mp) - 1 == d
        # alpha is a root
        acc = F.zero()
        for c in reversed(mp):
            acc = acc * a + embed(c, F)
        assert acc.is_zero()


def test_embedding_is_homomorphism():
    F4, F16 = make_field(2, 2), make_field(2, 4)
    img = embedding(F4, F16)
    for a in range(4):
        for b in range(4):
            assert img[F4.mul(a, b)] == F16.mul(img[a], img[b])
            assert img[F4.add(a, b)] == F16.add(img[a], img[b])
    with pytest.raises(ValueError):
        embedding(make_field(2, 3), F16)
