"""Torus arithmetic for the large Ree groups 2F4(q), q = 2^(2f+1)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exactmath import cyclotomic, euler_phi

NORMALIZER_INDEX = 12
PHI_THRESHOLD = 12 * 13


@dataclass(frozen=True)
class ReeTorusOrders:
    f: int
    q: int
    tau1: int
    tau2: int

    @property
    def sqrt_2q(self) -> int:
        return 1 << (self.f + 1)

    @property
    def normalizer_orders(self) -> tuple[int, int]:
        return NORMALIZER_INDEX * self.tau1, NORMALIZER_INDEX * self.tau2


def ree_tau(f: int) -> ReeTorusOrders:
    """tau_{1,2} = 2^(4f+2) +- 2^(3f+2) + 2^(2f+1) +- 2^(f+1) + 1."""
    if f < 1:
        raise ValueError("f must be at least 1")
    a = (1 << (4 * f + 2)) + (1 << (2 * f + 1)) + 1
    b = (1 << (3 * f + 2)) + (1 << (f + 1))
    return ReeTorusOrders(f, 1 << (2 * f + 1), a + b, a - b)


@dataclass
class ReeLemmaReport:
    f: int
    tau: ReeTorusOrders
    congruent_mod_12: bool
    phi: tuple[int, int]
    phi_bound: bool | None  # None when f = 1 (not asserted there)
    coprime: bool
    product_identity: bool
    difference_identity: bool

    @property
    def passed(self) -> bool:
        return (self.congruent_mod_12 and self.coprime and self.phi_bound is not False
                and self.product_identity and self.difference_identity)


def check_ree_lemma(f: int) -> ReeLemmaReport:
    t = ree_tau(f)
    cong = (t.tau1 - 1) % 12 == 0 and (t.tau2 - 1) % 12 == 0
    phis = (euler_phi(t.tau1), euler_phi(t.tau2))
    bound = None if f == 1 else min(phis) >= PHI_THRESHOLD
    coprime = math.gcd(t.tau1, t.tau2) == 1
    prod_ok = t.tau1 * t.tau2 == cyclotomic(12)(t.q)
    diff_ok = t.tau1 - t.tau2 == (1 << (f + 2)) * (t.q + 1)
    return ReeLemmaReport(f, t, cong, phis, bound, coprime, prod_ok, diff_ok)


@dataclass
class FusionBound:
    f: int
    bound: int
    guaranteed_classes: int | None  # from phi(tau) >= 156; None when f = 1
    classes_from_phi: int | None  # the same count from the actual phi values


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ree_class_fusion_bound(f: int) -> FusionBound:
    """At most 12 conjugates of a generator of T lie in T, so phi(tau) >= 156
    generators fall into at least 13 distinct classes."""
    rep = check_ree_lemma(f)
    if f == 1:
        return FusionBound(f, NORMALIZER_INDEX, None, None)
    return FusionBound(f, NORMALIZER_INDEX, _ceil_div(PHI_THRESHOLD, NORMALIZER_INDEX),
                       _ceil_div(min(rep.phi), NORMALIZER_INDEX))
