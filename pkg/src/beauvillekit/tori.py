"""Maximal tori: signed permutations, det(qw - 1), torus pairs per Dynkin type
and explicit Singer-type tori in SL_{r+1}(q)."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .catalog import (
    Matrix,
    block_diag,
    char_poly,
    companion,
    det,
    element_of_matrix,
    mat_mul,
    special_linear_group,
)
from .exactmath import (
    X,
    IntPoly,
    cyclotomic,
    cyclotomic_factorization,
    cyclotomic_product,
    int_det,
    interpolate,
    resultant,
)
from .gf import (
    FieldElement,
    degree_over,
    field_of_order,
    is_squarefree_field,
    make_field,
    minimal_polynomial,
    norm_one_generator,
    relative_norm,
)
from .grp import DEFAULT_CAP, abelian_invariants, center, generate

# --------------------------------------------------------- signed permutations


@dataclass(frozen=True)
class SignedPerm:
    """w: e_i -> signs[i] * e_{perm[i]} (0-based), acting on row vectors.

    On the 2r points {1..r, 1'..r'} point i goes to perm[i] or its primed copy
    according to the sign.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1, one per coordinate")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, r: int) -> "SignedPerm":
        return cls(tuple(range(r)), (1,) * r)

    @classmethod
    def from_cycles(cls, r: int, text: str) -> "SignedPerm":
        """Parse cycles on {1..r, 1'..r'} such as "(1 2 1' 2')(3 4)(3' 4')"."""
        img = list(range(2 * r))
        for body in re.findall(r"\(([^()]*)\)", text):
            toks = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            pts = []
            for t in toks:
                m = re.fullmatch(r"(\d+)('?)", t)
                if not m or not 1 <= int(m.group(1)) <= r:
                    raise ValueError(f"bad point {t!r}")
                pts.append(int(m.group(1)) - 1 + (r if m.group(2) else 0))
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in ({body})")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        if sorted(img) != list(range(2 * r)):
            raise ValueError("cycles do not define a permutation")
        perm, signs = [], []
        for i in range(r):
            j = img[i]
            bar = lambda p: p - r if p >= r else p + r
            if img[i + r] != bar(j):
                raise ValueError("permutation does not respect the pairs {i, i'}")
            perm.append(j % r)
            signs.append(1 if j < r else -1)
        return cls(tuple(perm), tuple(signs))

    @classmethod
    def from_points(cls, pts) -> "SignedPerm":
        r = len(pts) // 2
        return cls(tuple(int(p) % r for p in pts[:r]), tuple(1 if p < r else -1 for p in pts[:r]))

    def matrix(self) -> np.ndarray:
        r = self.rank
        M = np.zeros((r, r), dtype=np.int64)
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            M[i, j] = s
        return M

    def points(self) -> tuple[int, ...]:
        r = self.rank
        out = [0] * (2 * r)
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            out[i] = j if s == 1 else j + r
            out[i + r] = j + r if s == 1 else j
        return tuple(out)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        # left-to-right: apply self first
        perm = tuple(other.perm[self.perm[i]] for i in range(self.rank))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(self.rank))
        return SignedPerm(perm, signs)

    def inverse(self) -> "SignedPerm":
        perm = [0] * self.rank
        signs = [1] * self.rank
        for i, (j, s) in enumerate(zip(self.perm, self.signs)):
            perm[j] = i
            signs[j] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def sign_product(self) -> int:
        return math.prod(self.signs)

    def cycles(self) -> list[tuple[list[int], int]]:
        """Cycles of the underlying permutation with the product of their signs."""
        seen = [False] * self.rank
        out = []
        for i in range(self.rank):
            if seen[i]:
                continue
            cyc, eps, j = [], 1, i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                eps *= self.signs[j]
                j = self.perm[j]
            out.append((cyc, eps))
        return out

    def cycle_type(self) -> list[tuple[int, int]]:
        return sorted((len(c), e) for c, e in self.cycles())

    def __str__(self):
        r = self.rank
        name = lambda p: f"{p % r + 1}{'' if p < r else chr(39)}"
        pts = self.points()
        seen = set()
        parts = []
        for s in range(2 * r):
            if s in seen or pts[s] == s:
                continue
            cyc, p = [], s
            while p not in seen:
                seen.add(p)
                cyc.append(name(p))
                p = pts[p]
            parts.append("(" + " ".join(cyc) + ")")
        return "".join(parts) or "()"


def _cyc(pts) -> str:
    return "(" + " ".join(str(p) for p in pts) + ")"


def _rng(a: int, b: int, prime: bool = False) -> list[str]:
    return [f"{i}'" if prime else str(i) for i in range(a, b + 1)]


def cycle_polynomial(w: SignedPerm) -> IntPoly:
    """Product of x^l - eps over the signed cycles of w."""
    out = IntPoly([1])
    for length, eps in w.cycle_type():
        out = out * (IntPoly.x_power(length) - eps)
    return out


def det_polynomial(w: SignedPerm) -> IntPoly:
    """det(x M_w - I) by exact determinants at r + 1 points, sign-normalized."""
    M = w.matrix()
    r = w.rank
    xs = list(range(r + 1))
    ys = [int_det((x * M - np.eye(r, dtype=np.int64)).tolist()) for x in xs]
    return interpolate(xs, ys).normalized()


def torus_polynomial(w: SignedPerm, reflection: bool = False, twist: int = 1) -> IntPoly:
    """|T| as a polynomial in q.

    ``reflection`` restricts a permutation of r + 1 letters to the
    r-dimensional reflection representation (types A, 2A); ``twist = -1``
    composes with -1, i.e. q -> -q.
    """
    P = det_polynomial(w)
    if reflection:
        P, rem = divmod(P, X - 1)
        if not rem.is_zero():
            raise ArithmeticError("trivial factor missing")
    if twist == -1:
        P = P.compose_neg()
    elif twist != 1:
        raise ValueError("twist must be 1 or -1")
    return P.normalized()


@dataclass
class TorusOrder:
    value: int
    poly: IntPoly
    factorization: list[tuple[int, int]]


def torus_order(w: SignedPerm, q: int, twist: int = 1, reflection: bool = False) -> TorusOrder:
    """|det(q' M_w - I)| with q' = twist * q, divided by |q' - 1| on the reflection part."""
    if q < 2:
        raise ValueError("q must be at least 2")
    qq = twist * q
    M = w.matrix()
    val = abs(int_det((qq * M - np.eye(w.rank, dtype=np.int64)).tolist()))
    if reflection:
        val //= abs(qq - 1)
    P = torus_polynomial(w, reflection, twist)
    if abs(P(q)) != val:
        raise ArithmeticError("determinant and polynomial disagree")
    return TorusOrder(val, P, cyclotomic_factorization(P))


# ----------------------------------------------------------- centralizers

def _hyperoctahedral_points(r: int) -> np.ndarray:
    rows = []
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            rows.append(SignedPerm(perm, signs).points())
    return np.array(rows, dtype=np.int16)


def brute_force_centralizer_order(w: SignedPerm, ambient: str = "B") -> int:
    """Count elements of the hyperoctahedral group (or its D-part) commuting with w."""
    r = w.rank
    H = _hyperoctahedral_points(r)
    wp = np.array(w.points())
    # g w = w g as point maps (left-to-right): w[g[i]] == g[w[i]]
    comm = np.all(wp[H] == H[:, wp], axis=1)
    if ambient == "D":
        even = np.sum(H[:, :r] >= r, axis=1) % 2 == 0
        comm &= even
    return int(np.count_nonzero(comm))


@dataclass
class CentralizerData:
    order: int
    invariants: list[int] | None  # invariant factors when abelian and enumerable
    abelian: bool | None


def _formula_order(w: SignedPerm, ambient: str) -> int:
    if ambient == "A":
        counts: dict[int, int] = {}
        for length, _ in w.cycle_type():
            counts[length] = counts.get(length, 0) + 1
        return math.prod(l ** m * math.factorial(m) for l, m in counts.items())
    counts2: dict[tuple[int, int], int] = {}
    for ct in w.cycle_type():
        counts2[ct] = counts2.get(ct, 0) + 1
    order = math.prod((2 * l) ** m * math.factorial(m) for (l, _), m in counts2.items())
    if ambient == "D":
        odd_available = any(e == -1 or l % 2 == 1 for l, e in counts2)
        if odd_available:
            order //= 2
    return order


def _centralizer_generators(w: SignedPerm, ambient: str) -> list[tuple[int, ...]]:
    r = w.rank
    if ambient == "A":
        n = r
        gens = []
        cycles = [c for c, _ in w.cycles()]
        for c in cycles:
            if len(c) > 1:
                g = list(range(n))
                for a, b in zip(c, c[1:] + c[:1]):
                    g[a] = b
                gens.append(tuple(g))
        by_len: dict[int, list[list[int]]] = {}
        for c in cycles:
            by_len.setdefault(len(c), []).append(c)
        for cs in by_len.values():
            for c1, c2 in zip(cs, cs[1:]):
                g = list(range(n))
                for a, b in zip(c1, c2):
                    g[a], g[b] = b, a
                gens.append(tuple(g))
        return gens or [tuple(range(n))]
    pts = w.points()
    bar = lambda p: p - r if p >= r else p + r
    gens = []
    walks: dict[tuple[int, int], list[list[int]]] = {}
    for cyc, eps in w.cycles():
        g = list(range(2 * r))
        for i in cyc:
            g[i], g[i + r] = pts[i], pts[i + r]
        gens.append(tuple(g))
        if eps == 1:
            f = list(range(2 * r))
            for i in cyc:
                f[i], f[i + r] = i + r, i
            gens.append(tuple(f))
        walk, p = [], cyc[0]
        for _ in range(len(cyc)):
            walk.append(p)
            p = pts[p]
        walks.setdefault((len(cyc), eps), []).append(walk)
    for ws in walks.values():
        for w1, w2 in zip(ws, ws[1:]):
            g = list(range(2 * r))
            for a, b in zip(w1, w2):
                g[a], g[b] = b, a
                g[bar(a)], g[bar(b)] = bar(b), bar(a)
            gens.append(tuple(g))
    return gens


def weyl_centralizer_order(w: SignedPerm, ambient: str = "B", twisted: bool = False,
                           cap: int = DEFAULT_CAP) -> CentralizerData:
    """Centralizer of w in S_{r+1} ("A"), the hyperoctahedral group ("B") or its
    sign-even subgroup ("D").  Twisted types use the full hyperoctahedral group."""
    if ambient not in ("A", "B", "D"):
        raise ValueError(f"unknown ambient {ambient!r}")
    if twisted and ambient == "D":
        ambient = "B"
    if ambient == "D" and w.sign_product() != 1:
        raise ValueError("w is not in the D-type Weyl group")
    order = _formula_order(w, ambient)
    if order > cap:
        return CentralizerData(order, None, None)
    C = generate(_centralizer_generators(w, ambient), cap)
    if ambient == "D":
        r = w.rank
        even = np.sum(C.perms[:, :r] >= r, axis=1) % 2 == 0
        C = C.subgroup(np.nonzero(even)[0])
    if C.order != order:
        raise ArithmeticError(f"centralizer formula {order} disagrees with enumeration {C.order}")
    ab = C.is_abelian()
    return CentralizerData(order, abelian_invariants(C) if ab else None, ab)


# ------------------------------------------------------------- torus pairs

def _center_A(r):
    return lambda q: math.gcd(r + 1, q - 1)


def _center_2A(r):
    return lambda q: math.gcd(r + 1, q + 1)


def _center_2(q):
    return math.gcd(2, q - 1)


def _center_D(r):
    if r % 2 == 0:
        return lambda q: math.gcd(2, q - 1) ** 2
    return lambda q: math.gcd(4, q ** r - 1)


def _center_2D(r):
    return lambda q: math.gcd(4, q ** r + 1)


_EXCEPTIONAL = {
    "3D4": (4, [1, 1, 2, 2], [12], lambda q: 1),
    "E6": (6, [1, 2, 8], [9], lambda q: math.gcd(3, q - 1)),
    "2E6": (6, [1, 2, 8], [18], lambda q: math.gcd(3, q + 1)),
    "E7": (7, [1, 9], [2, 14], lambda q: math.gcd(2, q - 1)),
    "E8": (8, [24], [30], lambda q: 1),
    "F4": (4, [8], [12], lambda q: 1),
    "G2": (2, [2, 2], [3], lambda q: 1),
}

TYPES = ("A", "2A", "B", "C", "D", "2D") + tuple(_EXCEPTIONAL)

# one representative rank per case, and the case labels
CASES = {
    "A": "A", "2A": "2A", "B": "B", "C": "C",
    "D0": "D(r=0 mod 4)", "D2": "D(r=2 mod 4)", "Dodd": "D(r odd)",
    "2Deven": "2D(r even)", "2Dodd": "2D(r odd)",
    "3D4": "3D4", "E6": "E6", "2E6": "2E6", "E7": "E7", "E8": "E8", "F4": "F4", "G2": "G2",
}


def case_ranks(case: str, max_rank: int = 8) -> list[int]:
    lo = {"A": 1, "2A": 2, "B": 2, "C": 2}
    if case in lo:
        return list(range(lo[case], max_rank + 1))
    if case == "D0":
        return [r for r in range(4, max_rank + 1) if r % 4 == 0]
    if case == "D2":
        return [r for r in range(6, max(max_rank, 6) + 1) if r % 4 == 2]
    if case == "Dodd":
        return [r for r in range(5, max(max_rank, 5) + 1) if r % 2]
    if case == "2Deven":
        return [r for r in range(4, max_rank + 1) if r % 2 == 0]
    if case == "2Dodd":
        return [r for r in range(5, max(max_rank, 5) + 1) if r % 2]
    return [_EXCEPTIONAL[case][0]]


def case_type(case: str) -> str:
    if case.startswith("2D"):
        return "2D"
    if case.startswith("D"):
        return "D"
    return case


@dataclass
class TorusPair:
    type: str
    rank: int
    case: str
    order1: IntPoly
    order2: IntPoly
    w1: SignedPerm | None
    w2: SignedPerm | None
    stab1: list[int] | None
    stab2: list[int] | None
    stab_orders: tuple[int, int] | None
    center: Callable[[int], int] = field(repr=False)
    ambient: str = "B"
    reflection: bool = False
    twist: int = 1

    def orders(self, q: int) -> tuple[int, int]:
        return abs(self.order1(q)), abs(self.order2(q))

    def center_order(self, q: int) -> int:
        return self.center(q)

    def weyl_polynomials(self) -> tuple[IntPoly, IntPoly] | None:
        if self.w1 is None:
            return None
        return (torus_polynomial(self.w1, self.reflection, self.twist),
                torus_polynomial(self.w2, self.reflection, self.twist))


def _classical(type_: str, r: int) -> tuple[str, str, str, str, Callable]:
    """(case, w1, w2, ambient, center) in cycle notation."""
    if type_ in ("B", "C"):
        return (type_, _cyc(_rng(1, r) + _rng(1, r, True)),
                _cyc(_rng(1, r)) + _cyc(_rng(1, r, True)), "B", _center_2)
    if type_ == "D":
        if r < 4:
            raise ValueError("type D needs rank at least 4")
        if r % 4 == 0:
            s = r // 2
            w1 = _cyc(_rng(1, s - 1)) + _cyc(_rng(s, r)) + _cyc(_rng(1, s - 1, True)) + _cyc(_rng(s, r, True))
            w2 = _cyc(_rng(1, s - 1) + _rng(1, s - 1, True)) + _cyc(_rng(s, r) + _rng(s, r, True))
            return "D0", w1, w2, "D", _center_D(r)
        if r % 4 == 2:
            w1 = _cyc(_rng(1, r)) + _cyc(_rng(1, r, True))
            w2 = "(1 2 1' 2')" + _cyc(_rng(3, r) + _rng(3, r, True))
            return "D2", w1, w2, "D", _center_D(r)
        w1 = _cyc(_rng(1, r)) + _cyc(_rng(1, r, True))
        w2 = "(1 1')" + _cyc(_rng(2, r) + _rng(2, r, True))
        return "Dodd", w1, w2, "D", _center_D(r)
    if type_ == "2D":
        if r < 4:
            raise ValueError("type 2D needs rank at least 4")
        w1 = _cyc(_rng(1, r) + _rng(1, r, True))
        if r % 2 == 0:
            w2 = "(1 1')" + _cyc(_rng(2, r)) + _cyc(_rng(2, r, True))
            return "2Deven", w1, w2, "B", _center_2D(r)
        w2 = "(1 2 1' 2')" + _cyc(_rng(3, r)) + _cyc(_rng(3, r, True))
        return "2Dodd", w1, w2, "B", _center_2D(r)
    raise ValueError(f"unknown classical type {type_!r}")


@lru_cache(maxsize=None)
def torus_pair_for(type_: str, r: int) -> TorusPair:
    """The two maximal tori used for the given Dynkin type and rank."""
    type_ = type_.strip().upper().replace("^", "")
    if type_ in _EXCEPTIONAL:
        rank, k1, k2, cen = _EXCEPTIONAL[type_]
        if r != rank:
            raise ValueError(f"{type_} has rank {rank}, not {r}")
        return TorusPair(type_, r, type_, cyclotomic_product(k1), cyclotomic_product(k2),
                         None, None, None, None, None, cen, ambient="")
    if r < 1:
        raise ValueError("rank must be positive")
    if type_ in ("A", "2A"):
        if type_ == "2A" and r < 2:
            raise ValueError("type 2A needs rank at least 2")
        w1 = SignedPerm(tuple((i + 1) % (r + 1) for i in range(r + 1)), (1,) * (r + 1))
        w2 = SignedPerm(tuple((i + 1) % r for i in range(r)) + (r,), (1,) * (r + 1))
        twist = -1 if type_ == "2A" else 1
        P1 = torus_polynomial(w1, True, twist)
        P2 = torus_polynomial(w2, True, twist)
        c1 = weyl_centralizer_order(w1, "A")
        c2 = weyl_centralizer_order(w2, "A")
        cen = _center_2A(r) if twist == -1 else _center_A(r)
        return TorusPair(type_, r, type_, P1, P2, w1, w2, c1.invariants, c2.invariants,
                         (c1.order, c2.order), cen, "A", True, twist)
    if type_ in ("B", "C", "D", "2D"):
        if type_ in ("B", "C") and r < 2:
            raise ValueError(f"type {type_} needs rank at least 2")
        case, s1, s2, ambient, cen = _classical(type_, r)
        w1 = SignedPerm.from_cycles(r, s1)
        w2 = SignedPerm.from_cycles(r, s2)
        twisted = type_ == "2D"
        c1 = weyl_centralizer_order(w1, ambient, twisted)
        c2 = weyl_centralizer_order(w2, ambient, twisted)
        return TorusPair(type_, r, case, torus_polynomial(w1), torus_polynomial(w2), w1, w2,
                         c1.invariants, c2.invariants, (c1.order, c2.order), cen, ambient)
    raise ValueError(f"unknown type {type_!r}")


def closed_form_orders(case: str, r: int) -> tuple[IntPoly, IntPoly]:
    """Torus orders written out directly, independent of any Weyl element."""
    x = lambda n: IntPoly.x_power(n)
    if case == "A":
        return (x(r + 1) - 1) // (X - 1), x(r) - 1
    if case == "2A":
        R = ((x(r + 1) - 1) // (X - 1)).compose_neg().normalized()
        return R, (x(r) - (-1) ** r)
    if case in ("B", "C"):
        return x(r) + 1, x(r) - 1
    if case == "D0":
        s = r // 2
        return (x(s - 1) - 1) * (x(s + 1) - 1), (x(s - 1) + 1) * (x(s + 1) + 1)
    if case == "D2":
        return x(r) - 1, (x(r - 2) + 1) * (x(2) + 1)
    if case == "Dodd":
        return x(r) - 1, (x(r - 1) + 1) * (X + 1)
    if case == "2Deven":
        return x(r) + 1, (x(r - 1) - 1) * (X + 1)
    if case == "2Dodd":
        return x(r) + 1, (x(r - 2) - 1) * (x(2) + 1)
    _, k1, k2, _ = _EXCEPTIONAL[case]
    return cyclotomic_product(k1), cyclotomic_product(k2)


@lru_cache(maxsize=None)
def pair_resultant(type_: str, r: int) -> int:
    P = torus_pair_for(type_, r)
    return resultant(P.order1, P.order2)


@dataclass
class CenterCertificate:
    type: str
    rank: int
    case: str
    q: int
    order1: int
    order2: int
    gcd: int
    center: int
    resultant: int
    divides: bool
    divides_resultant: bool

    @property
    def passed(self) -> bool:
        return self.divides and self.divides_resultant


def gcd_divides_center(pair: TorusPair, q: int) -> CenterCertificate:
    o1, o2 = pair.orders(q)
    g = math.gcd(o1, o2)
    z = pair.center_order(q)
    res = pair_resultant(pair.type, pair.rank)
    return CenterCertificate(pair.type, pair.rank, pair.case, q, o1, o2, g, z, res,
                             z % g == 0, res % g == 0)


# -------------------------------------------------------------- Singer tori

@dataclass
class SingerTorusData:
    r: int
    q: int
    t1: Matrix
    t2: Matrix
    alpha: FieldElement
    beta: FieldElement
    order1: int
    order2: int
    index_bound1: int
    index_bound2: int
    t1_regular: bool
    t2_regular: bool


def _mat_pow_list(F, M: Matrix, n: int) -> list[Matrix]:
    out = []
    P = tuple(tuple(1 if i == j else 0 for j in range(len(M))) for i in range(len(M)))
    for _ in range(n):
        out.append(P)
        P = mat_mul(F, P, M)
    return out


def matrix_is_regular(F, M: Matrix) -> bool:
    return is_squarefree_field(char_poly(F, M), F)


@lru_cache(maxsize=None)
def singer_pair(r: int, q: int) -> SingerTorusData:
    """t1 generates a Singer torus; t2 = (degree-r block) + (1x1 block), det 1."""
    if r < 1:
        raise ValueError("r must be positive")
    F = field_of_order(q)
    alpha = norm_one_generator(q, r + 1)
    mp1 = [c.rep for c in minimal_polynomial(alpha, F)]
    t1 = companion(F, mp1)
    E2 = make_field(F.p, F.e * r)
    beta = FieldElement(E2, E2.primitive_element())
    mp2 = [c.rep for c in minimal_polynomial(beta, F)]
    nb = relative_norm(beta, F).rep if r > 1 else beta.rep
    t2 = block_diag(companion(F, mp2), ((F.inv(nb),),))
    if det(F, t1) != 1 or det(F, t2) != 1:
        raise ArithmeticError("Singer elements must have determinant 1")
    return SingerTorusData(r, q, t1, t2, alpha, beta,
                           (q ** (r + 1) - 1) // (q - 1), q ** r - 1, r + 1, r,
                           matrix_is_regular(F, t1), matrix_is_regular(F, t2))


@dataclass
class IntersectionReport:
    r: int
    q: int
    group_order: int
    center_order: int
    torus_orders: tuple[int, int]
    conjugates_checked: int
    failures: int
    t2_centralizer_is_torus: bool
    transcript: list[str]

    @property
    def passed(self) -> bool:
        return self.failures == 0


def verify_torus_intersection(r: int, q: int, cap: int = DEFAULT_CAP) -> IntersectionReport:
    """Check T1 ∩ g^-1 T2 g = Z(G) in SL_{r+1}(q) for every g."""
    data = singer_pair(r, q)
    G = special_linear_group(r + 1, q, cap)
    Z = center(G)
    zset = set(int(v) for v in Z.parent_index)
    i1 = element_of_matrix(G, data.t1)
    i2 = element_of_matrix(G, data.t2)
    T1 = G.closure([i1])
    T2 = G.closure([i2])
    log = [f"G = SL({r + 1},{q}), |G| = {G.order}, |Z| = {Z.order}",
           f"t1 = {data.t1}, |<t1>| = {T1.size}", f"t2 = {data.t2}, |<t2>| = {T2.size}"]
    C1 = np.count_nonzero(G.commutes_with_all(i1))
    C2 = np.count_nonzero(G.commutes_with_all(i2))
    log.append(f"|C(t1)| = {C1}, |C(t2)| = {C2}")
    if C1 != T1.size:
        log.append("C(t1) is larger than <t1>; using <t1>")
    inT1 = np.zeros(G.order, dtype=bool)
    inT1[T1] = True
    hits = np.zeros(G.order, dtype=np.int64)
    for t in T2:
        hits += inT1[G.conjugate_by_all(int(t))]
    central_ok = zset <= set(int(v) for v in T1) and zset <= set(int(v) for v in T2)
    failures = int(np.count_nonzero(hits != Z.order)) + (0 if central_ok else 1)
    log.append(f"conjugates with |T1 ∩ g^-1 T2 g| != |Z|: {failures}")
    return IntersectionReport(r, q, G.order, Z.order, (int(T1.size), int(T2.size)), G.order,
                              failures, C2 == T2.size, log)


@dataclass
class RegularCount:
    torus: int
    order: int
    regular: int
    nonregular: int
    bound: float
    within_bound: bool
    matrix_check: bool


def count_regular_in_torus(data: SingerTorusData, check_matrices: bool = True) -> tuple[RegularCount, RegularCount]:
    """Classify torus elements by whether their eigenvalues generate the full extension."""
    r, q = data.r, data.q
    F = field_of_order(q)
    out = []
    # T1: powers of alpha in F_{q^{r+1}}
    nonreg1 = []
    a = data.alpha.owner.one()
    for k in range(data.order1):
        nonreg1.append(degree_over(a, F) != r + 1)
        a = a * data.alpha
    # T2: (gamma, N(gamma)^-1) with gamma in F_{q^r}
    nonreg2 = []
    g = data.beta.owner.one()
    for k in range(data.order2):
        if r > 1:
            bad = degree_over(g, F) != r
        else:
            bad = g * g == g.owner.one()
        nonreg2.append(bad)
        g = g * data.beta
    bound1 = 2 * q ** ((r + 1) / 2)
    bound2 = 2 * q ** (r / 2) if r > 1 else 2
    for idx, (flags, M, order, bound) in enumerate(
            [(nonreg1, data.t1, data.order1, bound1), (nonreg2, data.t2, data.order2, bound2)], start=1):
        nreg = sum(flags)
        ok = nreg < bound if (idx == 1 or r > 1) else nreg <= bound
        mcheck = True
        if check_matrices:
            for P, bad in zip(_mat_pow_list(F, M, order), flags):
                if matrix_is_regular(F, P) == bad:
                    mcheck = False
                    break
        out.append(RegularCount(idx, order, order - nreg, nreg, bound, ok, mcheck))
    return out[0], out[1]


def regular_semisimple_classes(G, F) -> list[int]:
    """Indices of classes of a matrix group whose representative has squarefree characteristic polynomial."""
    from .catalog import matrix_of
    from .grp import conjugacy_classes

    out = []
    for ci, C in enumerate(conjugacy_classes(G)):
        M = matrix_of(G, C.representative)
        if M is not None and matrix_is_regular(F, M):
            out.append(ci)
    return out
