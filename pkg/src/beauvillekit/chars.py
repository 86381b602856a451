"""Character tables from class matrices, triple counts and character bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .grp import (
    ConjClass,
    FiniteGroup,
    all_subgroups,
    abstractly_regular_mask,
    centralizer,
    class_of,
    conjugacy_classes,
    is_abstractly_regular,
    normalizer,
)

ORTHO_TOL = 1e-8
INT_TOL = 1e-3
MAX_RETRIES = 32
SOFT_CONST = 4 / math.sqrt(3)


class CharacterTableError(RuntimeError):
    pass


class NumericalQualityError(ArithmeticError):
    pass


def class_mult_coeffs(G: FiniteGroup) -> np.ndarray:
    """a[i, j, k] = #{(x, y) in C_i x C_j : xy = z_k} for a fixed z_k in C_k."""
    classes = conjugacy_classes(G)
    co = class_of(G)
    h = len(classes)
    a = np.zeros((h, h, h), dtype=np.int64)
    inv = G.inverses
    for k, C in enumerate(classes):
        # x ranges over G, y = x^-1 z
        y = G.mul_many(inv, C.representative)
        np.add.at(a, (co, co[y], k), 1)
    return a


@dataclass
class CharacterTable:
    classes: list[ConjClass]
    values: np.ndarray  # chi x class
    degrees: list[int]
    order: int
    seed: int = 0
    attempts: int = 1
    coeffs: np.ndarray | None = field(default=None, repr=False)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    def __len__(self):
        return len(self.degrees)

    def row_residual(self) -> float:
        w = self.values * self.sizes[None, :]
        gram = w @ self.values.conj().T
        return float(np.max(np.abs(gram - self.order * np.eye(len(self.degrees)))))

    def column_residual(self) -> float:
        gram = self.values.T @ self.values.conj()
        target = np.diag(self.order / self.sizes)
        return float(np.max(np.abs(gram - target)))

    def value(self, chi: int, g_class: int) -> complex:
        return complex(self.values[chi, g_class])


def _candidate_table(a: np.ndarray, sizes: np.ndarray, order: int, rng) -> np.ndarray | None:
    h = len(sizes)
    coef = rng.standard_normal(h)
    M = np.einsum("j,ijk->ik", coef, a.astype(float))
    evals, evecs = np.linalg.eig(M)
    gaps = np.abs(evals[:, None] - evals[None, :]) + np.eye(h) * 1e9
    if h > 1 and gaps.min() < 1e-6 * max(1.0, np.abs(evals).max()):
        return None
    rows = []
    for v in evecs.T:
        if abs(v[0]) < 1e-12:
            return None
        v = v / v[0]
        norm = float(np.sum(np.abs(v) ** 2 / sizes))
        d = math.sqrt(order / norm)
        rows.append(d * v / sizes)
    return np.array(rows)


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    """Irreducible characters by simultaneous eigenvectors of the class matrices.

    A seeded random combination of class matrices separates the common
    eigenvectors; on a degenerate draw a fresh combination is tried.
    """
    if "character_table" in G._cache and G._cache["character_table"].seed == seed:
        return G._cache["character_table"]
    classes = conjugacy_classes(G)
    sizes = np.array([c.size for c in classes], dtype=np.int64)
    a = class_mult_coeffs(G)
    rng = np.random.default_rng(seed)
    for attempt in range(1, MAX_RETRIES + 1):
        vals = _candidate_table(a, sizes, G.order, rng)
        if vals is None:
            continue
        degs = np.rint(vals[:, 0].real).astype(np.int64)
        if np.any(degs < 1) or int(np.sum(degs ** 2)) != G.order:
            continue
        if np.max(np.abs(vals[:, 0] - degs)) > INT_TOL:
            continue
        # snap the degree column and tidy near-real values
        vals[:, 0] = degs
        vals = np.where(np.abs(vals.imag) < 1e-12, vals.real + 0j, vals)
        order = sorted(range(len(degs)), key=lambda i: (degs[i], -round(vals[i].real.sum(), 6),
                                                        tuple(np.round(vals[i].imag, 6))))
        vals = vals[order]
        T = CharacterTable(classes, vals, [int(degs[i]) for i in order], G.order, seed, attempt, a)
        if T.row_residual() < ORTHO_TOL * G.order and T.column_residual() < 1e-6 * G.order:
            G._cache["character_table"] = T
            return T
    raise CharacterTableError(f"eigenvector separation failed after {MAX_RETRIES} attempts (seed {seed})")


def frobenius_triple_count(T: CharacterTable, i: int, j: int, k: int) -> int:
    """#{(x, y, z) in C_i x C_j x C_k : xy = z} from the character sum."""
    sz = T.sizes
    s = np.sum(T.values[:, i] * T.values[:, j] * np.conj(T.values[:, k]) / np.array(T.degrees))
    val = float(sz[i]) * float(sz[j]) * float(sz[k]) / T.order * s
    if abs(val.imag) > INT_TOL or abs(val.real - round(val.real)) > INT_TOL:
        raise NumericalQualityError(f"triple count {val} is not an integer")
    return int(round(val.real))


def character_zeta(T: CharacterTable, t: float) -> float:
    if t <= 0:
        raise ValueError("t must be positive")
    return float(sum(d ** (-t) for d in T.degrees[1:]))


def min_nontrivial_degree(T: CharacterTable) -> int:
    if len(T.degrees) < 2:
        raise ValueError("the trivial group has no nontrivial characters")
    return min(T.degrees[1:])


# ----------------------------------------------------------- soft bound

@dataclass
class SoftBoundReport:
    a: int
    A: np.ndarray
    excluded: list[np.ndarray]
    n: int
    index: int
    bound: float
    max_abs_char_value: float
    witnesses: list[tuple[int, int]]
    violations: int
    applicable: bool = True
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.applicable and self.violations == 0


def _excluded_family(G: FiniteGroup, a: int, A: FiniteGroup, ar: np.ndarray) -> list[np.ndarray] | None:
    """Greedy cover of the non-regular part of A by subgroups avoiding a."""
    a_local = int(np.searchsorted(A.parent_index, a))
    subs = [s for s in all_subgroups(A, cap=max(A.order, 1)) if a_local not in set(s.tolist())]
    sets = [frozenset(int(v) for v in s) for s in subs]
    maximal = [s for s in sets if not any(s < t for t in sets)]
    bad = {i for i in range(A.order) if not ar[A.parent_index[i]]}
    chosen: list[frozenset] = []
    while bad:
        best = max(maximal, key=lambda s: (len(s & bad), len(s), sorted(s)), default=None)
        if best is None or not (best & bad):
            return None
        chosen.append(best)
        bad -= best
    return [np.array(sorted(A.parent_index[list(s)]), dtype=np.int64) for s in chosen]


def verify_soft_bound(G: FiniteGroup, a: int, table: CharacterTable | None = None) -> SoftBoundReport:
    """Check |chi(a')| <= (4/sqrt 3)^n [N(A):A] on the regular part A° of A = C(a)."""
    T = table or character_table(G)
    if not is_abstractly_regular(G, a):
        raise ValueError("element is not abstractly regular")
    A = centralizer(G, a)  # abelian, hence the unique maximal abelian subgroup through a
    N = normalizer(G, A)
    idx = N.order // A.order
    ar = abstractly_regular_mask(G)
    fam = _excluded_family(G, a, A, ar)
    if fam is None:
        return SoftBoundReport(a, A.parent_index, [], 0, idx, math.nan, math.nan, [], 0, False,
                               "no family of proper subgroups covers the non-regular elements")
    n = len(fam)
    bound = SOFT_CONST ** n * idx
    covered = set()
    for s in fam:
        covered.update(int(v) for v in s)
    regular_part = [int(g) for g in A.parent_index if int(g) not in covered]
    co = class_of(G)
    cls = sorted({int(co[g]) for g in regular_part})
    absval = np.abs(T.values[:, cls])
    best = float(absval.max())
    wit = [(cls[c], int(chi)) for chi, c in zip(*np.nonzero(np.abs(absval - best) < 1e-9))]
    viol = int(np.sum(absval > bound + 1e-6))
    return SoftBoundReport(a, A.parent_index, fam, n, idx, bound, best, wit, viol)


# ------------------------------------------------------------ export

def export_table(T: CharacterTable) -> str:
    lines = ["sizes " + " ".join(str(int(s)) for s in T.sizes)]
    for row in T.values:
        lines.append(" ".join(f"{float(v.real)!r},{float(v.imag)!r}" for v in row))
    return "\n".join(lines) + "\n"


def import_table(text: str, G: FiniteGroup) -> CharacterTable:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "sizes":
        raise ValueError("missing sizes header")
    sizes = [int(v) for v in head[1:]]
    classes = conjugacy_classes(G)
    if sizes != [c.size for c in classes]:
        raise ValueError("class sizes do not match the group")
    rows = []
    for ln in lines[1:]:
        rows.append([complex(*map(float, tok.split(","))) for tok in ln.split()])
    vals = np.array(rows, dtype=complex)
    degs = [int(round(v.real)) for v in vals[:, 0]]
    return CharacterTable(classes, vals, degs, G.order)


def save_table(T: CharacterTable, path: str | Path) -> None:
    Path(path).write_text(export_table(T))
