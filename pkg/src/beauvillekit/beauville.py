"""Unmixed Beauville structures: verification, search and the triple-count comparison."""
from __future__ import annotations

import configparser
import io
import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import CONVENTION
from .catalog import build_group, field_of_order, matrix_of, parse_group_spec
from .chars import CharacterTable, character_table, frobenius_triple_count
from .grp import (
    FiniteGroup,
    centralizer,
    class_of,
    conjugacy_classes,
    format_cycles,
    maximal_subgroups,
    parse_cycles,
    quotient_by_center,
    sigma_classes,
)

DEFAULT_BUDGET = 10 ** 7

FOUND, NONEXISTENT, INCONCLUSIVE = "found", "nonexistent", "inconclusive"
EXIT_CODES = {FOUND: 0, NONEXISTENT: 1, INCONCLUSIVE: 2}


class InputError(ValueError):
    pass


# ------------------------------------------------------------ certificates

@dataclass
class BeauvilleCertificate:
    group: str
    elements: dict[str, str]  # x1, y1, x2, y2 in cycle notation
    orders: dict[str, int]  # x1, y1, x1y1, x2, y2, x2y2
    fingerprints: dict[str, tuple[int, int]]  # order, class size
    closure_orders: tuple[int, int]
    group_order: int
    sigma_classes: tuple[tuple[int, ...], tuple[int, ...]]
    sigma_intersection: int
    shortcut: str = "explicit"
    convention: str = CONVENTION
    level: str = "group"
    matrices: dict[str, str] = field(default_factory=dict)

    def serialize(self) -> str:
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        cp["meta"] = {"kind": "certificate", "group": self.group, "convention": self.convention, "level": self.level,
                      "order": str(self.group_order)}
        cp["elements"] = dict(self.elements)
        if self.matrices:
            cp["matrices"] = dict(self.matrices)
        cp["orders"] = {k: str(v) for k, v in self.orders.items()}
        cp["fingerprints"] = {k: f"{o}:{s}" for k, (o, s) in self.fingerprints.items()}
        cp["transcript"] = {
            "closure1": str(self.closure_orders[0]),
            "closure2": str(self.closure_orders[1]),
            "sigma1_classes": ",".join(map(str, self.sigma_classes[0])),
            "sigma2_classes": ",".join(map(str, self.sigma_classes[1])),
            "sigma_intersection": str(self.sigma_intersection),
            "shortcut": self.shortcut,
        }
        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()

    @classmethod
    def parse(cls, text: str) -> "BeauvilleCertificate":
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        try:
            cp.read_string(text)
            meta, tr = cp["meta"], cp["transcript"]
            ints = lambda s: tuple(int(v) for v in s.split(",") if v)
            return cls(
                group=meta["group"],
                convention=meta["convention"],
                level=meta.get("level", "group"),
                group_order=int(meta["order"]),
                elements=dict(cp["elements"]),
                matrices=dict(cp["matrices"]) if cp.has_section("matrices") else {},
                orders={k: int(v) for k, v in cp["orders"].items()},
                fingerprints={k: tuple(int(t) for t in v.split(":")) for k, v in cp["fingerprints"].items()},
                closure_orders=(int(tr["closure1"]), int(tr["closure2"])),
                sigma_classes=(ints(tr["sigma1_classes"]), ints(tr["sigma2_classes"])),
                sigma_intersection=int(tr["sigma_intersection"]),
                shortcut=tr["shortcut"],
            )
        except (KeyError, configparser.Error, ValueError) as exc:
            raise InputError(f"malformed certificate: {exc}") from None


@dataclass
class Verification:
    ok: bool
    reason: str
    certificate: BeauvilleCertificate | None = None


def _element(G: FiniteGroup, e) -> int:
    if isinstance(e, (int, np.integer)):
        if not 0 <= int(e) < G.order:
            raise InputError(f"element index {e} out of range")
        return int(e)
    try:
        return G.index(e)
    except (KeyError, ValueError) as exc:
        raise InputError(f"{e!r} is not an element of {G.name}") from exc


def _fingerprint(G: FiniteGroup, g: int) -> tuple[int, int]:
    co = class_of(G)
    return G.element_order(g), conjugacy_classes(G)[co[g]].size


def verify_structure(G: FiniteGroup, x1, y1, x2, y2, group_spec: str | None = None,
                     level: str = "group") -> Verification:
    """Check both pairs generate G and the two Σ-sets meet only in the identity."""
    x1, y1, x2, y2 = (_element(G, e) for e in (x1, y1, x2, y2))
    c1 = int(G.closure([x1, y1]).size)
    if c1 != G.order:
        return Verification(False, f"pair 1 does not generate: closure order {c1} of {G.order}")
    c2 = int(G.closure([x2, y2]).size)
    if c2 != G.order:
        return Verification(False, f"pair 2 does not generate: closure order {c2} of {G.order}")
    s1 = sigma_classes(G, x1, y1)
    s2 = sigma_classes(G, x2, y2)
    common = s1 & s2
    classes = conjugacy_classes(G)
    inter = sum(classes[c].size for c in common)
    if inter != 1:
        return Verification(False, f"Σ-sets share {inter} elements (classes {sorted(common)})")
    z1, z2 = G.mul(x1, y1), G.mul(x2, y2)
    named = {"x1": x1, "y1": y1, "x1y1": z1, "x2": x2, "y2": y2, "x2y2": z2}
    o1 = [G.element_order(g) for g in (x1, y1, z1)]
    o2 = [G.element_order(g) for g in (x2, y2, z2)]
    shortcut = "coprime" if all(math.gcd(a, b) == 1 for a in o1 for b in o2) else "explicit"
    mats = {}
    if G.action is not None and not G.action.projective:
        for k in ("x1", "y1", "x2", "y2"):
            M = matrix_of(G, named[k])
            mats[k] = "[" + ";".join(",".join(map(str, r)) for r in M) + "]"
    cert = BeauvilleCertificate(
        group=group_spec or G.name,
        elements={k: format_cycles(G.perm(named[k])) for k in ("x1", "y1", "x2", "y2")},
        orders={k: G.element_order(v) for k, v in named.items()},
        fingerprints={k: _fingerprint(G, v) for k, v in named.items()},
        closure_orders=(c1, c2),
        group_order=G.order,
        sigma_classes=(tuple(sorted(s1)), tuple(sorted(s2))),
        sigma_intersection=inter,
        shortcut=shortcut,
        level=level,
        matrices=mats,
    )
    return Verification(True, "ok", cert)


def group_for_certificate(cert: BeauvilleCertificate) -> FiniteGroup:
    G = build_group(cert.group)
    if cert.level == "quotient":
        G, _ = quotient_by_center(G, name=cert.group)
    return G


def reverify(cert: BeauvilleCertificate | str) -> Verification:
    """Rebuild the group from the certificate text alone and check everything again."""
    if isinstance(cert, str):
        cert = BeauvilleCertificate.parse(cert)
    if cert.convention != CONVENTION:
        return Verification(False, f"unsupported convention {cert.convention!r}")
    G = group_for_certificate(cert)
    try:
        elems = [G.index(parse_cycles(cert.elements[k], G.degree)) for k in ("x1", "y1", "x2", "y2")]
    except (KeyError, ValueError) as exc:
        return Verification(False, f"element not in group: {exc}")
    v = verify_structure(G, *elems, group_spec=cert.group, level=cert.level)
    if not v.ok:
        return v
    fresh = v.certificate
    for attr in ("orders", "fingerprints", "closure_orders", "sigma_classes", "sigma_intersection", "group_order"):
        if getattr(fresh, attr) != getattr(cert, attr):
            return Verification(False, f"transcript mismatch in {attr}")
    return v


# ------------------------------------------------------------------ search

@dataclass
class SearchStrategy:
    mode: str = "exhaustive-classes"  # or torus-guided, random-seeded
    seed: int = 0
    max_pairs: int = DEFAULT_BUDGET
    time_budget: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive-classes", "torus-guided", "random-seeded"):
            raise InputError(f"unknown search mode {self.mode!r}")


@dataclass
class PairRecord:
    x: int
    y: int
    orders: tuple[int, int, int]
    sigma: frozenset

    @property
    def type(self) -> tuple[int, ...]:
        primes = set()
        for o in self.orders:
            n, p = o, 2
            while n > 1 and p * p <= n:
                while n % p == 0:
                    primes.add(p)
                    n //= p
                p += 1
            if n > 1:
                primes.add(n)
        return tuple(sorted(primes))


@dataclass
class SearchReport:
    status: str
    group: str
    group_order: int
    mode: str
    seed: int
    pairs_examined: int
    generating_pairs: int
    sigma_sets: int
    certificate: BeauvilleCertificate | None = None
    transcript: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def serialize(self) -> str:
        if self.certificate is not None:
            return self.certificate.serialize()
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        cp["meta"] = {"kind": "search", "group": self.group, "convention": CONVENTION, "order": str(self.group_order),
                      "status": self.status, "mode": self.mode, "seed": str(self.seed)}
        cp["transcript"] = {"pairs_examined": str(self.pairs_examined),
                            "generating_pairs": str(self.generating_pairs),
                            "sigma_sets": str(self.sigma_sets),
                            "notes": " | ".join(self.transcript)}
        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()


def _ordered_classes(G: FiniteGroup) -> list[int]:
    classes = conjugacy_classes(G)
    idx = [i for i, c in enumerate(classes) if c.representative != 0]
    return sorted(idx, key=lambda i: (-G.element_order(classes[i].representative), -classes[i].size, i))


def _orbit_reps(G: FiniteGroup, C: np.ndarray, allowed: np.ndarray | None = None) -> list[int]:
    """Representatives of the orbits of C (index array) acting on G by conjugation."""
    seen = np.zeros(G.order, dtype=bool)
    if allowed is not None:
        seen |= ~allowed
    inv = G.inverses[C]
    reps = []
    for h in range(G.order):
        if seen[h]:
            continue
        reps.append(h)
        seen[G.mul_many(G.mul_many(inv, h), C)] = True
    return reps


class _Budget:
    def __init__(self, strategy: SearchStrategy):
        self.max_pairs = strategy.max_pairs
        self.deadline = None if strategy.time_budget is None else time.monotonic() + strategy.time_budget
        self.used = 0
        self.exhausted = False

    def take(self) -> bool:
        if self.used >= self.max_pairs or (self.deadline is not None and time.monotonic() > self.deadline):
            self.exhausted = True
            return False
        self.used += 1
        return True


def _pairs_for_class(G: FiniteGroup, ci: int, y_allowed: np.ndarray | None,
                     z_allowed: set[int] | None, budget: _Budget) -> list[PairRecord]:
    classes = conjugacy_classes(G)
    co = class_of(G)
    x = classes[ci].representative
    C = centralizer(G, x).parent_index
    out = []
    for y in _orbit_reps(G, np.asarray(C), y_allowed):
        if y == 0:
            continue
        if not budget.take():
            break
        z = G.mul(x, y)
        if z_allowed is not None and int(co[z]) not in z_allowed:
            continue
        if G.closure([x, y]).size != G.order:
            continue
        orders = (G.element_order(x), G.element_order(y), G.element_order(z))
        out.append(PairRecord(x, int(y), orders, sigma_classes(G, x, int(y))))
    return out


def generating_pairs(G: FiniteGroup, budget: _Budget, x_classes=None, allowed_classes: set[int] | None = None,
                     threads: int = 1) -> list[PairRecord]:
    """Generating pairs up to simultaneous conjugacy, deterministic order."""
    co = class_of(G)
    xs = x_classes if x_classes is not None else _ordered_classes(G)
    y_allowed = None
    if allowed_classes is not None:
        y_allowed = np.isin(co, list(allowed_classes))
    job = lambda ci: _pairs_for_class(G, ci, y_allowed, allowed_classes, budget)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(job, xs))
    else:
        results = [job(ci) for ci in xs]
    return [p for chunk in results for p in chunk]


def _distinct_sigma(pairs: list[PairRecord]) -> list[PairRecord]:
    seen = {}
    for p in pairs:
        seen.setdefault(p.sigma, p)
    return list(seen.values())


def _find_disjoint(G: FiniteGroup, side1: list[PairRecord], side2: list[PairRecord]) -> tuple[PairRecord, PairRecord, str] | None:
    identity_class = int(class_of(G)[0])
    # coprime orders force disjoint Σ-sets
    for a in side1:
        for b in side2:
            if all(math.gcd(u, v) == 1 for u in a.orders for v in b.orders):
                if a.sigma & b.sigma != {identity_class}:
                    raise AssertionError("coprimality shortcut contradicted by explicit Σ check")
                return a, b, "coprime"
    for a in side1:
        for b in side2:
            if a.sigma & b.sigma == {identity_class}:
                return a, b, "explicit"
    return None


def _certify(G: FiniteGroup, a: PairRecord, b: PairRecord, spec: str, level: str) -> BeauvilleCertificate:
    v = verify_structure(G, a.x, a.y, b.x, b.y, group_spec=spec, level=level)
    if not v.ok:
        raise AssertionError(f"search produced an invalid structure: {v.reason}")
    return v.certificate


def search_structure(G: FiniteGroup, strategy: SearchStrategy | None = None, spec: str | None = None,
                     level: str = "group") -> SearchReport:
    strategy = strategy or SearchStrategy()
    spec = spec or G.name
    budget = _Budget(strategy)
    log = [f"|G| = {G.order}, {len(conjugacy_classes(G))} classes, convention {CONVENTION}, k = 0 powers included"]
    if strategy.mode == "random-seeded":
        pairs = _random_pairs(G, strategy, budget)
    else:
        pairs = generating_pairs(G, budget, threads=strategy.threads)
    sig = _distinct_sigma(pairs)
    log.append(f"{budget.used} candidate pairs, {len(pairs)} generating, {len(sig)} distinct Σ class-sets")
    found = _find_disjoint(G, sig, sig) if sig else None
    if found:
        a, b, how = found
        log.append(f"found via {how} check: types {a.orders} and {b.orders}")
        cert = _certify(G, a, b, spec, level)
        return SearchReport(FOUND, spec, G.order, strategy.mode, strategy.seed, budget.used,
                            len(pairs), len(sig), cert, log)
    if strategy.mode == "random-seeded" or budget.exhausted:
        status = INCONCLUSIVE
        log.append("budget exhausted" if budget.exhausted else "random sampling found nothing")
    else:
        status = NONEXISTENT
        log.append("no two generating pairs have Σ-sets meeting only in the identity")
    return SearchReport(status, spec, G.order, strategy.mode, strategy.seed, budget.used,
                        len(pairs), len(sig), None, log)


def _random_pairs(G: FiniteGroup, strategy: SearchStrategy, budget: _Budget) -> list[PairRecord]:
    rng = np.random.default_rng(strategy.seed)
    out = []
    limit = min(strategy.max_pairs, 20 * G.order)
    for _ in range(limit):
        if not budget.take():
            break
        x, y = (int(v) for v in rng.integers(1, G.order, size=2))
        if G.closure([x, y]).size != G.order:
            continue
        z = G.mul(x, y)
        out.append(PairRecord(x, y, (G.element_order(x), G.element_order(y), G.element_order(z)),
                              sigma_classes(G, x, y)))
    return out


# ----------------------------------------------------------- torus guided

def sl_to_psl(H: FiniteGroup, P: FiniteGroup) -> np.ndarray:
    """Projection SL -> PSL as an index array, via the induced action on lines."""
    la, pa = H.action, P.action
    cols = np.array([la.point_index[c] for c in pa.points])
    norm = np.zeros(max(la.points) + 1, dtype=np.int64)
    for c in la.points:
        norm[c] = pa.point_index[pa._normalize(c)]
    codes = np.array(la.points, dtype=np.int64)[H.perms[:, cols]]
    return P.lookup(norm[codes], strict=True)


def torus_guided_search(r: int, q: int, level: str = "quotient", strategy: SearchStrategy | None = None) -> SearchReport:
    """Pairs drawn from regular classes meeting the two Singer-type tori of SL_{r+1}(q)."""
    from .catalog import projective_special_linear_group, special_linear_group
    from .tori import matrix_is_regular, singer_pair

    strategy = strategy or SearchStrategy(mode="torus-guided")
    budget = _Budget(strategy)
    data = singer_pair(r, q)
    F = field_of_order(q)
    H = special_linear_group(r + 1, q)
    if level == "quotient":
        G = projective_special_linear_group(r + 1, q)
        proj = sl_to_psl(H, G)
        spec = f"PSL({r + 1},{q})"
    else:
        G, proj, spec = H, np.arange(H.order), f"SL({r + 1},{q})"
    from .catalog import element_of_matrix

    co = class_of(G)
    log = [f"working in {spec}, |G| = {G.order}"]
    X = []
    for i, t in enumerate((data.t1, data.t2), start=1):
        T = H.closure([element_of_matrix(H, t)])
        reg = [int(h) for h in T if matrix_is_regular(F, matrix_of(H, int(h)))]
        X.append({int(co[proj[h]]) for h in reg})
        log.append(f"T{i}: |T| = {T.size}, regular elements {len(reg)}, classes {sorted(X[-1])}")
    sides = []
    for i, Xi in enumerate(X, start=1):
        pairs = generating_pairs(G, budget, x_classes=sorted(Xi), allowed_classes=Xi, threads=strategy.threads)
        sides.append(_distinct_sigma(pairs))
        log.append(f"side {i}: {len(pairs)} generating pairs inside the torus classes")
    found = _find_disjoint(G, sides[0], sides[1]) if all(sides) else None
    if found is None:
        log.append("strict torus classes fail; second pair taken from an exhaustive scan")
        full = _distinct_sigma(generating_pairs(G, budget, threads=strategy.threads))
        found = _find_disjoint(G, sides[0], full) if sides[0] else None
        if found is None:
            # nothing torus-driven works; only a full scan can certify nonexistence
            found = _find_disjoint(G, full, full)
    if found is None:
        status = INCONCLUSIVE if budget.exhausted else NONEXISTENT
        return SearchReport(status, spec, G.order, "torus-guided", strategy.seed, budget.used, 0, 0, None, log)
    a, b, how = found
    log.append(f"found via {how} check: types {a.orders} and {b.orders}")
    cert = _certify(G, a, b, spec, "group")
    return SearchReport(FOUND, spec, G.order, "torus-guided", strategy.seed, budget.used, 0, 0, cert, log)


# -------------------------------------------------------- counting comparison

def _class_members(G: FiniteGroup, classes) -> np.ndarray:
    cl = conjugacy_classes(G)
    return np.sort(np.concatenate([cl[i].members for i in classes])) if classes else np.array([], dtype=np.int64)


def quad_sum_count(G: FiniteGroup, classes, table: CharacterTable | None = None) -> int:
    """#{(x, y, z) in X^3 : xy = z} for X a union of classes, by character sums."""
    T = table or character_table(G)
    return sum(frobenius_triple_count(T, i, j, k) for i in classes for j in classes for k in classes)


def brute_force_triples(G: FiniteGroup, elems) -> int:
    elems = np.asarray(elems, dtype=np.int64)
    if elems.size == 0:
        return 0
    inX = np.zeros(G.order, dtype=bool)
    inX[elems] = True
    total = 0
    for x in elems:
        total += int(np.count_nonzero(inX[G.mul_many(int(x), elems)]))
    return total


def generating_triples(G: FiniteGroup, classes) -> int:
    X = _class_members(G, classes)
    inX = np.zeros(G.order, dtype=bool)
    inX[X] = True
    count = 0
    for x in X:
        for y in X:
            if inX[G.mul(int(x), int(y))] and G.closure([int(x), int(y)]).size == G.order:
                count += 1
    return count


@dataclass
class OvercountReport:
    exact: int
    coarse: int
    per_subgroup: list[tuple[int, int]]  # (|M|, count)

    @property
    def subgroups(self) -> int:
        return len(self.per_subgroup)


def maximal_overcount_bound(G: FiniteGroup, classes) -> OvercountReport:
    """Triples of X inside some maximal subgroup, summed over all maximal subgroups."""
    X = _class_members(G, classes)
    per = []
    for M in maximal_subgroups(G):
        inM = np.zeros(G.order, dtype=bool)
        inM[M.parent_index] = True
        per.append((M.order, brute_force_triples(G, X[inM[X]])))
    return OvercountReport(sum(c for _, c in per), sum(o * o for o, _ in per), per)


def classes_of_order(G: FiniteGroup, order: int) -> list[int]:
    return [i for i, c in enumerate(conjugacy_classes(G)) if G.element_order(c.representative) == order]


def load_group(spec: str, level: str = "group") -> tuple[FiniteGroup, str]:
    try:
        parsed = parse_group_spec(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    G = build_group(parsed)
    if level == "quotient":
        G, _ = quotient_by_center(G, name=f"{parsed.canonical()}/Z")
    return G, parsed.canonical()
