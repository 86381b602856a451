"""Finite groups by full enumeration.

Every group is stored as a stack of permutations (one row per element,
row 0 the identity).  Matrix groups are turned into permutation groups on
vectors or projective points first, so there is a single code path.

Composition is left-to-right: (st)(i) = t(s(i)).  Matrices act on row
vectors, v -> vM, which is the same convention.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

DEFAULT_CAP = 20_000
LATTICE_CAP = 2_000
CAYLEY_LIMIT = 2_500


class GroupOverflowError(RuntimeError):
    """Enumeration exceeded a configured cap."""


# ------------------------------------------------------------ permutations

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation on points 1..n, e.g. ``(1,2,3)(4 5)``; ``()`` is the identity."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected token {text[pos:m.start()].strip()!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cyc = [int(t) for t in body]
        except ValueError:
            bad = next(t for t in body if not t.lstrip("-").isdigit())
            raise ValueError(f"bad point {bad!r} in {text!r}") from None
        cycles.append(cyc)
    if text[pos:].strip():
        raise ValueError(f"unexpected token {text[pos:].strip()!r}")
    pts = [p for c in cycles for p in c]
    if any(p < 1 for p in pts):
        raise ValueError("points are numbered from 1")
    if len(pts) != len(set(pts)):
        raise ValueError(f"cycles in {text!r} are not disjoint")
    n = max(pts, default=1) if degree is None else degree
    if pts and max(pts) > n:
        raise ValueError(f"point {max(pts)} exceeds degree {n}")
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def format_cycles(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = int(perm[j])
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """s then t."""
    return tuple(t[i] for i in s)


# ------------------------------------------------------------------ groups

@dataclass
class ConjClass:
    representative: int
    size: int
    members: np.ndarray
    order: int = 0


class FiniteGroup:
    """An enumerated permutation group.

    Elements are referred to by their row index in ``perms``; index 0 is the
    identity.  Subgroups keep a ``parent_index`` array mapping their own
    indices back to the parent group.
    """

    def __init__(self, perms: np.ndarray, generators: Sequence[int] = (), name: str = "",
                 parent: "FiniteGroup | None" = None, parent_index: np.ndarray | None = None,
                 action=None):
        self.perms = np.ascontiguousarray(perms, dtype=np.int32)
        self.generators = list(generators)
        self.name = name
        self.parent = parent
        self.parent_index = parent_index
        self.action = action
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<FiniteGroup {self.name or '?'} order={self.order} degree={self.degree}>"

    def perm(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.perms[i])

    def cycles(self, i: int) -> str:
        return format_cycles(self.perms[i])

    # -- lookup
    @cached_property
    def _lookup(self):
        P = self.perms.astype(np.int64)
        n = self.degree
        base = []
        keys = np.zeros(self.order, dtype=np.int64)
        distinct = 1
        for pt in range(n):
            if n ** (len(base) + 1) >= 2 ** 62:
                break
            cand = keys * n + P[:, pt]
            d = len(np.unique(cand))
            if d > distinct:
                base.append(pt)
                keys, distinct = cand, d
            if distinct == self.order:
                break
        if distinct < self.order:
            table = {row.tobytes(): i for i, row in enumerate(self.perms)}
            return ("dict", table)
        radix = np.array([n ** (len(base) - 1 - j) for j in range(len(base))], dtype=np.int64)
        order = np.argsort(keys)
        return ("keys", np.array(base, dtype=np.int64), radix, keys[order], order)

    def lookup(self, rows: np.ndarray, strict: bool = False) -> np.ndarray:
        """Indices of the permutations in ``rows`` (m x degree); -1 where absent.

        Without ``strict`` only the base images are compared, which is exact
        for rows known to lie in the group.
        """
        rows = np.atleast_2d(rows)
        lk = self._lookup
        if lk[0] == "dict":
            r = np.ascontiguousarray(rows, dtype=np.int32)
            return np.array([lk[1].get(row.tobytes(), -1) for row in r], dtype=np.int64)
        _, base, radix, skeys, order = lk
        keys = rows[:, base].astype(np.int64) @ radix
        pos = np.searchsorted(skeys, keys)
        pos = np.minimum(pos, len(skeys) - 1)
        found = skeys[pos] == keys
        idx = np.where(found, order[pos], -1)
        if strict:
            ok = idx >= 0
            same = np.all(self.perms[np.where(ok, idx, 0)] == rows, axis=1)
            idx = np.where(ok & same, idx, -1)
        return idx

    def _lookup_base_images(self, base_rows: np.ndarray) -> np.ndarray:
        lk = self._lookup
        _, base, radix, skeys, order = lk
        keys = base_rows.astype(np.int64) @ radix
        pos = np.minimum(np.searchsorted(skeys, keys), len(skeys) - 1)
        return order[pos]

    def index(self, perm) -> int:
        """Index of a permutation given as images (0-based) or cycle notation."""
        if isinstance(perm, str):
            perm = parse_cycles(perm, self.degree)
        row = np.asarray(perm, dtype=np.int64)
        if row.shape != (self.degree,):
            raise ValueError(f"expected a permutation of degree {self.degree}")
        i = int(self.lookup(row[None, :], strict=True)[0])
        if i < 0:
            raise ValueError(f"{format_cycles(perm)} is not an element of {self.name or 'the group'}")
        return i

    def contains(self, perm) -> bool:
        try:
            self.index(perm)
        except ValueError:
            return False
        return True

    # -- multiplication
    @property
    def cayley(self) -> np.ndarray | None:
        if "cayley" not in self._cache:
            t = None
            if self.order <= CAYLEY_LIMIT:
                n = self.order
                t = np.empty((n, n), dtype=np.int32)
                allidx = np.arange(n)
                for b in range(n):
                    t[:, b] = self._mul_compose(allidx, np.full(n, b))
            self._cache["cayley"] = t
        return self._cache["cayley"]

    def _mul_compose(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        lk = self._lookup
        if lk[0] == "keys":
            base = lk[1]
            imgs = np.take_along_axis(self.perms[b], self.perms[a][:, base], axis=1)
            return self._lookup_base_images(imgs)
        rows = np.take_along_axis(self.perms[b], self.perms[a], axis=1)
        return self.lookup(rows)

    def mul_many(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        shape = a.shape
        a, b = a.ravel(), b.ravel()
        t = self.cayley if self.order <= CAYLEY_LIMIT else None
        if t is not None:
            return t[a, b].astype(np.int64).reshape(shape)
        return self._mul_compose(a, b).reshape(shape)

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_many(a, b))

    @cached_property
    def inverses(self) -> np.ndarray:
        inv_rows = np.argsort(self.perms, axis=1)
        return self.lookup(inv_rows)

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out, base = 0, a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def powers(self, a: int) -> list[int]:
        """e, a, a^2, ... up to (not including) the return to e."""
        out = [0]
        cur = a
        while cur != 0:
            out.append(cur)
            cur = self.mul(cur, a)
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        allidx = np.arange(n)
        cur = allidx.copy()
        k = 1
        while (orders == 0).any():
            cur = self.mul_many(cur, allidx)
            k += 1
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
        return orders

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    def conjugate_by_all(self, h: int) -> np.ndarray:
        """Array of g^-1 h g over all g, indexed by g."""
        allidx = np.arange(self.order)
        return self.mul_many(self.mul_many(self.inverses, h), allidx)

    def commutes_with_all(self, h: int) -> np.ndarray:
        allidx = np.arange(self.order)
        return self.mul_many(h, allidx) == self.mul_many(allidx, h)

    def is_abelian(self) -> bool:
        gens = self.generators or list(range(self.order))
        return all(self.mul(a, b) == self.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    # -- subgroups
    def closure(self, gens: Iterable[int]) -> np.ndarray:
        """Sorted indices of the subgroup generated by ``gens``."""
        gens = np.array(sorted({int(g) for g in gens if int(g) != 0}), dtype=np.int64)
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        while frontier.size and gens.size:
            prod = self.mul_many(frontier[:, None], gens[None, :]).ravel()
            prod = np.unique(prod[~seen[prod]])
            seen[prod] = True
            frontier = prod
        return np.nonzero(seen)[0]

    def subgroup(self, indices, name: str = "", generators: Sequence[int] | None = None) -> "FiniteGroup":
        idx = np.unique(np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices, dtype=np.int64))
        if idx.size == 0 or idx[0] != 0:
            raise ValueError("a subgroup must contain the identity")
        local = {int(v): i for i, v in enumerate(idx)}
        gens = [local[int(g)] for g in generators] if generators is not None else []
        sub = FiniteGroup(self.perms[idx], gens, name=name, parent=self, parent_index=idx, action=self.action)
        if not gens:
            sub.generators = _small_generating_set(sub)
        return sub

    def whole(self) -> np.ndarray:
        return np.arange(self.order)

    @cached_property
    def element_set(self) -> frozenset:
        """Elements as parent indices if this is a subgroup, else own indices."""
        if self.parent_index is not None:
            return frozenset(int(v) for v in self.parent_index)
        return frozenset(range(self.order))


def _small_generating_set(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    have = np.zeros(G.order, dtype=bool)
    have[0] = True
    if G.order == 1:
        return gens
    orders = G.element_orders
    for g in np.argsort(-orders, kind="stable"):
        g = int(g)
        if have[g]:
            continue
        gens.append(g)
        sub = G.closure(gens)
        have[:] = False
        have[sub] = True
        if sub.size == G.order:
            break
    return gens


def generate(gens: Sequence[Sequence[int]], cap: int = DEFAULT_CAP, name: str = "", action=None) -> FiniteGroup:
    """Breadth-first closure of permutation generators (0-based image tuples).

    Elements are numbered in insertion order, identity first.
    """
    gens = [tuple(int(v) for v in g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator (use the identity for the trivial group)")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ValueError("generators have different degrees")
    for g in gens:
        if sorted(g) != list(range(n)):
            raise ValueError(f"{g} is not a permutation")
    G = np.array(gens, dtype=np.int64)
    dtype = np.int32
    ident = np.arange(n, dtype=dtype)
    rows = [ident]
    seen = {ident.tobytes(): 0}
    gen_index = []
    frontier = ident[None, :]
    while frontier.shape[0]:
        # element-major: for each frontier element, each generator in order
        prod = G[:, frontier].transpose(1, 0, 2).reshape(-1, n).astype(dtype)
        new = []
        for row in prod:
            key = row.tobytes()
            if key not in seen:
                seen[key] = len(rows)
                rows.append(row)
                new.append(row)
                if len(rows) > cap:
                    raise GroupOverflowError(f"group order exceeds the enumeration cap {cap}")
        frontier = np.array(new, dtype=dtype).reshape(-1, n)
    for g in gens:
        gen_index.append(seen[np.asarray(g, dtype=dtype).tobytes()])
    return FiniteGroup(np.array(rows, dtype=dtype), gen_index, name=name, action=action)


# ------------------------------------------------------- conjugacy classes

def conjugacy_classes(G: FiniteGroup) -> list[ConjClass]:
    """All classes, ordered by their representative (earliest element)."""
    if "classes" in G._cache:
        return G._cache["classes"]
    n = G.order
    gens = G.generators or list(range(n))
    allidx = np.arange(n)
    src, dst = [], []
    for g in gens:
        conj = G.mul_many(G.mul_many(G.inv(g), allidx), g)
        src.append(allidx)
        dst.append(conj)
    src = np.concatenate(src) if src else allidx
    dst = np.concatenate(dst) if dst else allidx
    graph = coo_matrix((np.ones(len(src)), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    # relabel by first occurrence
    first = {}
    for i, lab in enumerate(labels):
        if lab not in first:
            first[lab] = len(first)
    class_of = np.array([first[l] for l in labels], dtype=np.int64)
    orders = G.element_orders
    classes = []
    for c in range(len(first)):
        members = np.nonzero(class_of == c)[0]
        classes.append(ConjClass(int(members[0]), int(members.size), members, int(orders[members[0]])))
    G._cache["classes"] = classes
    G._cache["class_of"] = class_of
    return classes


def class_of(G: FiniteGroup) -> np.ndarray:
    conjugacy_classes(G)
    return G._cache["class_of"]


def power_classes(G: FiniteGroup, a: int) -> set[int]:
    co = class_of(G)
    return {int(co[p]) for p in G.powers(a)}


def sigma_classes(G: FiniteGroup, x: int, y: int) -> frozenset[int]:
    return frozenset(power_classes(G, x) | power_classes(G, y) | power_classes(G, G.mul(x, y)))


def sigma(G: FiniteGroup, x: int, y: int) -> frozenset[int]:
    """Union of the classes of all powers of x, y and xy (identity included)."""
    classes = conjugacy_classes(G)
    out: set[int] = set()
    for c in sigma_classes(G, x, y):
        out.update(int(m) for m in classes[c].members)
    return frozenset(out)


def is_generating_pair(G: FiniteGroup, x: int, y: int) -> bool:
    return G.closure([x, y]).size == G.order


# -------------------------------------------------- centralizers and friends

def centralizer(G: FiniteGroup, a: int) -> FiniteGroup:
    idx = np.nonzero(G.commutes_with_all(a))[0]
    return G.subgroup(idx, name=f"C({G.cycles(a)})")


def centralizer_of_set(G: FiniteGroup, elems: Iterable[int]) -> np.ndarray:
    mask = np.ones(G.order, dtype=bool)
    for h in elems:
        mask &= G.commutes_with_all(int(h))
    return np.nonzero(mask)[0]


def center(G: FiniteGroup) -> FiniteGroup:
    gens = G.generators or range(G.order)
    return G.subgroup(centralizer_of_set(G, gens), name=f"Z({G.name})")


def _as_parent_indices(G: FiniteGroup, H) -> np.ndarray:
    if isinstance(H, FiniteGroup):
        if H.parent is not G:
            raise ValueError("subgroup does not belong to this group")
        return np.asarray(H.parent_index, dtype=np.int64)
    return np.unique(np.asarray(list(H), dtype=np.int64))


def normalizer(G: FiniteGroup, H) -> FiniteGroup:
    """N_G(H) for H given as a subgroup of G or an index collection."""
    idx = _as_parent_indices(G, H)
    inH = np.zeros(G.order, dtype=bool)
    inH[idx] = True
    if isinstance(H, FiniteGroup) and H.generators:
        gens = [int(H.parent_index[g]) for g in H.generators]
    else:
        gens = [int(v) for v in idx]
    mask = np.ones(G.order, dtype=bool)
    for h in gens:
        mask &= inH[G.conjugate_by_all(h)]
    return G.subgroup(np.nonzero(mask)[0], name="N")


def transporter(G: FiniteGroup, a: int, A) -> np.ndarray:
    """{g : g^-1 a g in A}."""
    idx = _as_parent_indices(G, A)
    inA = np.zeros(G.order, dtype=bool)
    inA[idx] = True
    return np.nonzero(inA[G.conjugate_by_all(a)])[0]


def is_abstractly_regular(G: FiniteGroup, a: int) -> bool:
    """True iff the centralizer of a is abelian."""
    return centralizer(G, a).is_abelian()


def abstractly_regular_mask(G: FiniteGroup) -> np.ndarray:
    """Boolean mask over elements; constant on classes."""
    out = np.zeros(G.order, dtype=bool)
    for c in conjugacy_classes(G):
        out[c.members] = is_abstractly_regular(G, c.representative)
    return out


def maximal_abelian_subgroups_containing(G: FiniteGroup, a: int) -> list[FiniteGroup]:
    """Every maximal abelian subgroup of G through a.

    Abelian subgroups through a live in C(a); they are grown one commuting
    element at a time, and a subgroup is kept when it is self-centralizing.
    """
    start = tuple(G.closure([a]))
    seen = {start}
    queue = deque([start])
    found = []
    while queue:
        H = queue.popleft()
        C = centralizer_of_set(G, H)
        if C.size == len(H):
            found.append(H)
            continue
        inH = set(H)
        for g in C:
            g = int(g)
            if g in inH:
                continue
            K = tuple(G.closure(list(H) + [g]))
            if K not in seen:
                seen.add(K)
                queue.append(K)
                inH.update(K)  # any g inside K gives a subgroup of K, reached later from K
    found.sort(key=lambda H: (len(H), H))
    return [G.subgroup(H, name="A") for H in found]


# ----------------------------------------------------------- subgroup lattice

def _bits(idx) -> int:
    mask = np.zeros(max(int(np.max(idx)) + 1, 1), dtype=bool)
    mask[np.asarray(idx, dtype=np.int64)] = True
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _from_bits(b: int) -> np.ndarray:
    nbytes = (b.bit_length() + 7) // 8
    arr = np.unpackbits(np.frombuffer(b.to_bytes(nbytes, "little"), dtype=np.uint8), bitorder="little")
    return np.nonzero(arr)[0]


@dataclass
class SubgroupClass:
    representative: np.ndarray
    generators: list[int]
    members: list[int]  # bitsets of all conjugates

    @property
    def order(self) -> int:
        return len(self.representative)

    @property
    def size(self) -> int:
        return len(self.members)


def subgroup_classes(G: FiniteGroup, cap: int = LATTICE_CAP) -> list[SubgroupClass]:
    """Conjugacy classes of all subgroups, by cyclic extension.

    Each class representative H is extended by every cyclic subgroup not in
    it; the resulting subgroups are deduplicated up to conjugacy.
    """
    if G.order > cap:
        raise GroupOverflowError(f"group order {G.order} exceeds the subgroup-lattice cap {cap}")
    if "subgroup_classes" in G._cache:
        return G._cache["subgroup_classes"]
    n = G.order
    allidx = np.arange(n)
    conj = np.empty((n, n), dtype=np.int64)
    for g in range(n):
        conj[g] = G.mul_many(G.mul_many(G.inverses[g], allidx), g)
    # one generator per cyclic subgroup
    cyclic_gens = []
    cyc_seen = set()
    for x in range(1, n):
        b = _bits(G.closure([x]))
        if b not in cyc_seen:
            cyc_seen.add(b)
            cyclic_gens.append(x)
    known: dict[int, int] = {}
    classes: list[SubgroupClass] = []

    def add_class(idx: np.ndarray, gens: list[int]) -> None:
        members = []
        member_set = set()
        for g in range(n):
            b = _bits(conj[g][idx])
            if b not in member_set:
                member_set.add(b)
                members.append(b)
        for b in members:
            known[b] = len(classes)
        classes.append(SubgroupClass(idx, gens, members))

    add_class(np.array([0]), [])
    i = 0
    while i < len(classes):
        H = classes[i]
        hb = H.members[0]
        for c in cyclic_gens:
            if (hb >> c) & 1:
                continue
            gens = H.generators + [c]
            K = G.closure(gens)
            kb = _bits(K)
            if kb in known:
                continue
            add_class(K, gens)
        i += 1
    classes.sort(key=lambda C: (C.order, C.representative.tolist()))
    G._cache["subgroup_classes"] = classes
    return classes


def all_subgroups(G: FiniteGroup, cap: int = LATTICE_CAP) -> list[np.ndarray]:
    return [_from_bits(b) for C in subgroup_classes(G, cap) for b in C.members]


def maximal_subgroups(G: FiniteGroup, cap: int = LATTICE_CAP) -> list[FiniteGroup]:
    """All maximal proper subgroups (every conjugate, not just class representatives)."""
    classes = subgroup_classes(G, cap)
    full = (1 << G.order) - 1
    proper = [(C.order, b, ci) for ci, C in enumerate(classes) for b in C.members if b != full]
    out = []
    for ci, C in enumerate(classes):
        if C.order == G.order:
            continue
        rep = C.members[0]
        contained = any(o > C.order and (rep & b) == rep for o, b, _ in proper)
        if not contained:
            for b in C.members:
                out.append(G.subgroup(_from_bits(b), name=f"M{ci}"))
    return out


def subgroup_index_zeta(G: FiniteGroup, s, cap: int = LATTICE_CAP) -> float:
    """Sum over maximal subgroups M of [G:M]^(-s)."""
    s = Fraction(s) if not isinstance(s, float) else s
    total = Fraction(0)
    out = 0.0
    exact = isinstance(s, Fraction) and s.denominator == 1
    for M in maximal_subgroups(G, cap):
        idx = G.order // M.order
        if exact:
            total += Fraction(1, idx ** int(s)) if s >= 0 else Fraction(idx ** int(-s))
        else:
            out += idx ** (-float(s))
    return float(total) if exact else out


# ----------------------------------------------------------------- quotients

def quotient(G: FiniteGroup, N: FiniteGroup, name: str = "") -> tuple[FiniteGroup, np.ndarray]:
    """G/N acting on the cosets of N, with the projection as an index array."""
    nidx = _as_parent_indices(G, N)
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if coset[g] >= 0:
            continue
        members = G.mul_many(nidx, g)
        coset[members] = len(reps)
        reps.append(g)
    reps = np.array(reps, dtype=np.int64)
    gens = [tuple(int(v) for v in coset[G.mul_many(reps, g)]) for g in (G.generators or [0])]
    Q = generate(gens, cap=max(G.order, 1), name=name or f"{G.name}/N")
    images = np.empty((G.order, len(reps)), dtype=np.int32)
    for g in range(G.order):
        images[g] = coset[G.mul_many(reps, g)]
    proj = Q.lookup(images)
    return Q, proj


def quotient_by_center(G: FiniteGroup, name: str = "") -> tuple[FiniteGroup, np.ndarray]:
    return quotient(G, center(G), name=name)


# ---------------------------------------------------------------- helpers

def abelian_invariants(G: FiniteGroup) -> list[int]:
    """Invariant factors of an abelian group (each divides the next)."""
    if not G.is_abelian():
        raise ValueError("group is not abelian")
    return invariants_from_orders(G.element_orders)


def invariants_from_orders(orders) -> list[int]:
    """Invariant factors of a finite abelian group from its element orders."""
    orders = np.asarray(orders, dtype=np.int64)
    n = len(orders)
    if n == 1:
        return []
    from .exactmath import factorize
    per_prime: list[list[int]] = []
    for p, e in factorize(n).prime_powers:
        # count of elements with order dividing p^k, for each k
        counts = [int(np.sum((p ** k) % orders == 0)) for k in range(e + 1)]
        # number of cyclic factors of order >= p^k is log_p(counts[k] / counts[k-1])
        ge = [round(math.log(counts[k] / counts[k - 1], p)) for k in range(1, e + 1)]
        parts = []
        for k in range(1, e + 1):
            exactly = ge[k - 1] - (ge[k] if k < e else 0)
            parts += [p ** k] * exactly
        per_prime.append(sorted(parts, reverse=True))
    width = max(len(x) for x in per_prime)
    inv = [1] * width
    for parts in per_prime:
        for i, v in enumerate(parts):
            inv[i] *= v
    return sorted(v for v in inv if v > 1)
