import math

import numpy as np
import pytest

from beauvillekit.beauville import (
    BeauvilleCertificate,
    InputError,
    SearchStrategy,
    brute_force_triples,
    classes_of_order,
    generating_triples,
    load_group,
    maximal_overcount_bound,
    quad_sum_count,
    reverify,
    search_structure,
    torus_guided_search,
    verify_structure,
)
from beauvillekit.catalog import build_group
from beauvillekit.grp import conjugacy_classes, maximal_subgroups, sigma


@pytest.fixture(scope="module")
def A5():
    return build_group("A5")


@pytest.fixture(scope="module")
def a6_cert():
    G, spec = load_group("A6")
    rep = search_structure(G, spec=spec)
    assert rep.status == "found"
    return rep.certificate


def test_a5_nonexistence(A5):
    rep = search_structure(A5, spec="A5")
    assert rep.status == "nonexistent"
    assert rep.exit_code == 1
    assert rep.certificate is None
    assert rep.generating_pairs > 0


def test_a5_random_quadruples_refused(A5):
    rng = np.random.default_rng(11)
    for _ in range(300):
        x1, y1, x2, y2 = (int(v) for v in rng.integers(0, 60, 4))
        assert not verify_structure(A5, x1, y1, x2, y2).ok


def test_identity_pair_refused(A5):
    v = verify_structure(A5, 0, 0, 1, 2)
    assert not v.ok and "pair 1" in v.reason


def test_bad_elements(A5):
    with pytest.raises(InputError):
        verify_structure(A5, 0, 0, 0, 999)
    with pytest.raises(InputError):
        verify_structure(A5, (1, 0, 2, 3, 4), 0, 0, 0)


@pytest.mark.parametrize("spec", ["A6", "PSL(2,7)", "PSL(2,8)"])
def test_search_finds_and_round_trips(spec):
    G, canon = load_group(spec)
    rep = search_structure(G, spec=canon)
    assert rep.status == "found" and rep.exit_code == 0
    cert = rep.certificate
    text = cert.serialize()
    back = BeauvilleCertificate.parse(text)
    assert back == cert
    assert back.serialize() == text
    v = reverify(text)
    assert v.ok, v.reason
    assert cert.sigma_intersection == 1
    assert cert.closure_orders == (G.order, G.order)


def test_certificate_records_convention(a6_cert):
    text = a6_cert.serialize()
    assert "left-to-right" in text
    bad = text.replace("left-to-right", "right-to-left")
    assert not reverify(bad).ok


def test_tampered_certificate_rejected(a6_cert):
    cert = BeauvilleCertificate.parse(a6_cert.serialize())
    cert.elements["y2"] = cert.elements["x2"]
    assert not reverify(cert).ok
    cert = BeauvilleCertificate.parse(a6_cert.serialize())
    cert.orders["x1"] += 1
    v = reverify(cert)
    assert not v.ok and "transcript" in v.reason


def test_malformed_certificate():
    with pytest.raises(InputError):
        BeauvilleCertificate.parse("[meta]\ngroup = A6\n")


def test_coprime_shortcut_sound():
    for spec in ["A6", "PSL(2,7)", "A7"]:
        G, canon = load_group(spec)
        cert = search_structure(G, spec=canon).certificate
        o1 = [cert.orders[k] for k in ("x1", "y1", "x1y1")]
        o2 = [cert.orders[k] for k in ("x2", "y2", "x2y2")]
        if all(math.gcd(a, b) == 1 for a in o1 for b in o2):
            assert cert.shortcut == "coprime"
        els = [G.index(cert.elements[k]) for k in ("x1", "y1", "x2", "y2")]
        assert sigma(G, els[0], els[1]) & sigma(G, els[2], els[3]) == {0}


def test_search_deterministic():
    G, canon = load_group("PSL(2,7)")
    a = search_structure(G, SearchStrategy(seed=3), spec=canon)
    b = search_structure(G, SearchStrategy(seed=3), spec=canon)
    assert a.serialize() == b.serialize()
    r1 = search_structure(G, SearchStrategy(mode="random-seeded", seed=5), spec=canon)
    r2 = search_structure(G, SearchStrategy(mode="random-seeded", seed=5), spec=canon)
    assert r1.serialize() == r2.serialize()


def test_threads_do_not_change_result():
    G, canon = load_group("A6")
    a = search_structure(G, SearchStrategy(threads=1), spec=canon)
    b = search_structure(G, SearchStrategy(threads=4), spec=canon)
    assert a.certificate == b.certificate


def test_budget_exhaustion_is_inconclusive(A5):
    rep = search_structure(A5, SearchStrategy(max_pairs=3), spec="A5")
    assert rep.status == "inconclusive" and rep.exit_code == 2


def test_unknown_mode():
    with pytest.raises(InputError):
        SearchStrategy(mode="magic")


def test_quotient_level():
    G, canon = load_group("SL(2,7)", level="quotient")
    assert G.order == 168
    rep = search_structure(G, spec=canon, level="quotient")
    assert rep.status == "found"
    assert reverify(rep.certificate.serialize()).ok


def test_torus_guided():
    rep = torus_guided_search(2, 2)
    assert rep.status == "found"
    assert rep.certificate.orders["x1y1"] == 7
    assert reverify(rep.certificate.serialize()).ok
    rep = torus_guided_search(1, 7)
    assert rep.status == "found"
    assert reverify(rep.certificate.serialize()).ok


def test_torus_guided_nonexistence_agrees_with_exhaustive():
    t = torus_guided_search(1, 5, level="group")
    G, canon = load_group("SL(2,5)")
    e = search_structure(G, spec=canon)
    assert t.status == e.status == "nonexistent"


def test_load_group_errors():
    with pytest.raises(InputError, match="Q"):
        load_group("Q8")


def test_quad_sum_examples(A5):
    assert quad_sum_count(A5, [0]) == 1
    five = classes_of_order(A5, 5)
    assert len(five) == 2
    members = np.concatenate([conjugacy_classes(A5)[i].members for i in five])
    assert quad_sum_count(A5, five) == brute_force_triples(A5, members) == 192


@pytest.mark.parametrize("spec,order", [("S4", 4), ("S4", 3), ("SL(2,5)", 10), ("A5", 3)])
def test_quad_sum_matches_brute_force(spec, order):
    G = build_group(spec)
    X = classes_of_order(G, order)
    members = np.concatenate([conjugacy_classes(G)[i].members for i in X])
    assert quad_sum_count(G, X) == brute_force_triples(G, members)


def test_overcount_identity_class(A5):
    rep = maximal_overcount_bound(A5, [0])
    assert rep.exact == rep.subgroups == len(maximal_subgroups(A5)) == 21


def test_overcount_a5(A5):
    five = classes_of_order(A5, 5)
    rep = maximal_overcount_bound(A5, five)
    assert rep.subgroups == 21
    # only the six dihedral subgroups of order 10 contain 5-cycles
    per = {}
    for o, c in rep.per_subgroup:
        per.setdefault(o, set()).add(c)
    assert per[12] == {0} and per[6] == {0}
    assert rep.exact == sum(c for _, c in rep.per_subgroup) == 72
    assert rep.coarse == 5 * 144 + 10 * 36 + 6 * 100


@pytest.mark.parametrize("spec,order", [("A5", 5), ("S4", 4), ("SL(2,5)", 10)])
def test_overcount_bounds_nongenerating(spec, order):
    G = build_group(spec)
    X = classes_of_order(G, order)
    total = quad_sum_count(G, X)
    gen = generating_triples(G, X)
    assert total >= gen
    assert total - gen <= maximal_overcount_bound(G, X).exact


def test_generating_triples_a5(A5):
    assert generating_triples(A5, classes_of_order(A5, 5)) == 120
