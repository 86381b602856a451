import itertools
import math

import numpy as np
import pytest

from beauvillekit.catalog import build_group, cyclic_group, element_of_matrix
from beauvillekit.chars import (
    NumericalQualityError,
    character_table,
    character_zeta,
    class_mult_coeffs,
    export_table,
    frobenius_triple_count,
    import_table,
    min_nontrivial_degree,
    save_table,
    verify_soft_bound,
)
from beauvillekit.gf import field_of_order
from beauvillekit.grp import (
    abstractly_regular_mask,
    class_of,
    conjugacy_classes,
    generate,
    parse_cycles,
)
from beauvillekit.tori import regular_semisimple_classes, singer_pair

TABLE_GROUPS = ["C2", "S3", "A4", "S4", "A5", "SL(2,3)", "SL(2,5)", "PSL(2,7)", "SL(2,7)"]


def brute_triples(G, i, j, k):
    classes = conjugacy_classes(G)
    co = class_of(G)
    xs = classes[i].members
    ys = classes[j].members
    prods = G.mul_many(np.repeat(xs, len(ys)), np.tile(ys, len(xs)))
    return int(np.count_nonzero(co[prods] == k))


def class_with(G, text):
    return int(class_of(G)[G.index(parse_cycles(text, G.degree))])


def test_mult_coeffs_examples():
    S3 = build_group("S3")
    a = class_mult_coeffs(S3)
    t, c = class_with(S3, "(1 2)"), class_with(S3, "(1 2 3)")
    assert a[t, t, c] == 3
    assert a[0, 0, 0] == 1
    assert a[0, t, t] == 1 and a[0, t, c] == 0
    A4 = build_group("A4")
    v = class_with(A4, "(1 2)(3 4)")
    assert class_mult_coeffs(A4)[v, v, 0] == 3


@pytest.mark.parametrize("spec", TABLE_GROUPS)
def test_table_invariants(spec):
    G = build_group(spec)
    T = character_table(G)
    assert len(T) == len(conjugacy_classes(G))
    assert sum(d * d for d in T.degrees) == G.order
    assert T.row_residual() < 1e-8
    assert T.column_residual() < 1e-6
    assert T.degrees[0] == 1 and np.allclose(T.values[0], 1)
    assert np.allclose(T.values[:, 0].real, T.degrees)


def test_degrees():
    assert character_table(cyclic_group(2)).degrees == [1, 1]
    assert np.allclose(sorted(character_table(cyclic_group(2)).values[:, 1].real), [-1, 1])
    assert sorted(character_table(build_group("S3")).degrees) == [1, 1, 2]
    assert sorted(character_table(build_group("A5")).degrees) == [1, 3, 3, 4, 5]
    assert sorted(character_table(build_group("SL(2,5)")).degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_trivial_group():
    T = character_table(generate([(0, 1, 2)]))
    assert T.degrees == [1]
    assert character_zeta(T, 1) == 0
    with pytest.raises(ValueError):
        min_nontrivial_degree(T)


def test_seed_is_deterministic():
    G = build_group("A5")
    T1 = character_table(G, seed=5)
    G2 = build_group("A5")
    T2 = character_table(G2, seed=5)
    assert np.allclose(T1.values, T2.values)


def test_triple_count_examples():
    S3 = build_group("S3")
    T = character_table(S3)
    t, c = class_with(S3, "(1 2)"), class_with(S3, "(1 2 3)")
    assert frobenius_triple_count(T, 0, 0, 0) == 1
    assert frobenius_triple_count(T, t, t, c) == 6


@pytest.mark.parametrize("spec", ["S3", "A4", "S4", "A5", "SL(2,3)", "SL(2,5)"])
def test_triple_count_matches_enumeration(spec):
    G = build_group(spec)
    T = character_table(G)
    a = class_mult_coeffs(G)
    h = len(T)
    sizes = T.sizes
    for i, j, k in itertools.product(range(h), repeat=3):
        n = frobenius_triple_count(T, i, j, k)
        assert n == a[i, j, k] * sizes[k]
        if spec in ("S3", "A4", "A5"):
            assert n == brute_triples(G, i, j, k)


def test_triple_count_integrality_guard():
    G = build_group("S3")
    T = character_table(G)
    bad = type(T)(T.classes, T.values * 1.01, T.degrees, T.order)
    with pytest.raises(NumericalQualityError):
        frobenius_triple_count(bad, 1, 1, 2)


def test_zeta_and_min_degree():
    T = character_table(build_group("A5"))
    assert character_zeta(T, 1) == pytest.approx(1 / 3 + 1 / 3 + 1 / 4 + 1 / 5)
    assert character_zeta(T, 0.75) == pytest.approx(2 * 3 ** -0.75 + 4 ** -0.75 + 5 ** -0.75)
    assert min_nontrivial_degree(T) == 3
    assert min_nontrivial_degree(character_table(cyclic_group(2))) == 1
    assert min_nontrivial_degree(character_table(build_group("SL(2,7)"))) == 3
    with pytest.raises(ValueError):
        character_zeta(T, 0)


def test_soft_bound_S3():
    G = build_group("S3")
    a = G.index(parse_cycles("(1 2 3)"))
    rep = verify_soft_bound(G, a)
    assert rep.holds
    assert rep.index == 2 and rep.n == 1
    assert rep.bound == pytest.approx(2 * 4 / math.sqrt(3))
    assert rep.max_abs_char_value == pytest.approx(1.0)
    with pytest.raises(ValueError):
        verify_soft_bound(G, 0)


def test_soft_bound_abelian():
    G = cyclic_group(6)
    rep = verify_soft_bound(G, 1)
    assert rep.holds and rep.n == 0 and rep.bound == 1.0
    assert rep.max_abs_char_value == pytest.approx(1.0)


@pytest.mark.parametrize("spec", ["S3", "S4", "A4", "A5", "SL(2,3)", "SL(2,5)", "PSL(2,7)"])
def test_soft_bound_never_violated(spec):
    G = build_group(spec)
    T = character_table(G)
    ar = abstractly_regular_mask(G)
    for C in conjugacy_classes(G):
        if ar[C.representative]:
            rep = verify_soft_bound(G, C.representative, T)
            assert rep.violations == 0
            # every element of the regular part is abstractly regular
            covered = set(int(v) for s in rep.excluded for v in s)
            assert all(ar[g] for g in rep.A if int(g) not in covered)


def test_soft_bound_order_10_in_sl25():
    G = build_group("SL(2,5)")
    a = int(np.nonzero(G.element_orders == 10)[0][0])
    rep = verify_soft_bound(G, a)
    assert rep.holds
    assert rep.max_abs_char_value <= rep.bound


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_sl2_regular_semisimple_bound(q):
    G = build_group(f"SL(2,{q})")
    T = character_table(G)
    cls = regular_semisimple_classes(G, field_of_order(q))
    assert cls
    assert np.abs(T.values[:, cls]).max() <= 2 + 1e-6


@pytest.mark.parametrize("q", [2, 3])
def test_singer_bound_sl3(q):
    G = build_group(f"SL(3,{q})")
    T = character_table(G)
    t1 = element_of_matrix(G, singer_pair(2, q).t1)
    c = int(class_of(G)[t1])
    assert np.abs(T.values[:, c]).max() <= 2 * 9 / math.sqrt(3) + 1e-6


def test_export_import(tmp_path):
    G = build_group("A5")
    T = character_table(G)
    back = import_table(export_table(T), G)
    assert back.degrees == T.degrees
    assert np.array_equal(back.values, T.values)
    path = tmp_path / "a5.tbl"
    save_table(T, path)
    assert import_table(path.read_text(), G).degrees == T.degrees
    with pytest.raises(ValueError):
        import_table(export_table(T), build_group("S4"))
    with pytest.raises(ValueError):
        import_table("1 2\n", G)
