"""Concrete groups and the group-spec mini language.

``A5``, ``S6``, ``C7``, ``SL(2,7)``, ``PSL(2,7)``, ``SU(3,3)``, ``PSU(3,3)`` or
``@path`` (one permutation generator per line, cycle notation).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .gf import FieldSpec, field_of_order, make_field
from .grp import DEFAULT_CAP, FiniteGroup, generate, parse_cycles

Matrix = tuple[tuple[int, ...], ...]


# ------------------------------------------------------------ matrix algebra

def mat_mul(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = F.add(acc, F.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def det(F: FieldSpec, A: Matrix) -> int:
    a = [list(r) for r in A]
    n = len(a)
    d = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = F.neg(d)
        d = F.mul(d, a[c][c])
        inv = F.inv(a[c][c])
        for r in range(c + 1, n):
            f = F.mul(a[r][c], inv)
            if f:
                a[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[r], a[c])]
    return d


def char_poly(F: FieldSpec, A: Matrix) -> list[int]:
    """Coefficients of det(xI - A), ascending, via sums of principal minors."""
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    for k in range(1, n + 1):
        s = 0
        for rows in itertools.combinations(range(n), k):
            minor = tuple(tuple(A[i][j] for j in rows) for i in rows)
            s = F.add(s, det(F, minor))
        coeffs[n - k] = s if k % 2 == 0 else F.neg(s)
    return coeffs


def companion(F: FieldSpec, poly: list[int]) -> Matrix:
    """Companion matrix of a monic polynomial (ascending coefficients), row-vector convention.

    Row i is e_{i+1} for i < n-1 and the last row holds -c_0, ..., -c_{n-1}, so
    its characteristic polynomial is ``poly``.
    """
    n = len(poly) - 1
    rows = []
    for i in range(n - 1):
        rows.append(tuple(1 if j == i + 1 else 0 for j in range(n)))
    rows.append(tuple(F.neg(poly[j]) for j in range(n)))
    return tuple(rows)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in out)


def format_matrix(A: Matrix) -> str:
    return "[" + ";".join(",".join(str(v) for v in row) for row in A) + "]"


def parse_matrix(text: str) -> Matrix:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad matrix literal {text!r}")
    return tuple(tuple(int(v) for v in row.split(",")) for row in text[1:-1].split(";"))


# ------------------------------------------------------------- actions

@dataclass
class MatrixAction:
    """Linear (nonzero vectors) or projective (lines) action of n x n matrices over F."""

    field: FieldSpec
    dim: int
    projective: bool

    def __post_init__(self):
        q, n = self.field.q, self.dim
        codes = list(range(1, q ** n))
        if self.projective:
            codes = [c for c in codes if self._normalize(c) == c]
        self.points = codes
        self.point_index = {c: i for i, c in enumerate(codes)}
        vecs = np.array([self.vector(c) for c in codes], dtype=np.int64)
        self._vecs = vecs

    def vector(self, code: int) -> list[int]:
        q = self.field.q
        out = []
        for _ in range(self.dim):
            code, r = divmod(code, q)
            out.append(r)
        return out

    def code(self, vec) -> int:
        q = self.field.q
        c = 0
        for v in reversed(list(vec)):
            c = c * q + int(v)
        return c

    def _normalize(self, code: int) -> int:
        v = self.vector(code)
        lead = next(x for x in reversed(v) if x)
        inv = self.field.inv(lead)
        return self.code([self.field.mul(x, inv) for x in v])

    def apply(self, A: Matrix, vec) -> list[int]:
        F = self.field
        out = []
        for j in range(self.dim):
            acc = 0
            for i in range(self.dim):
                acc = F.add(acc, F.mul(vec[i], A[i][j]))
            out.append(acc)
        return out

    def to_perm(self, A: Matrix) -> tuple[int, ...]:
        F = self.field
        mul, add = F.mul_table(), F.add_table()
        M = np.array(A, dtype=np.int64)
        V = self._vecs
        out = np.zeros_like(V)
        for j in range(self.dim):
            acc = np.zeros(len(V), dtype=np.int64)
            for i in range(self.dim):
                acc = add[acc, mul[V[:, i], M[i, j]]]
            out[:, j] = acc
        q = F.q
        codes = out @ (q ** np.arange(self.dim, dtype=np.int64))
        if self.projective:
            codes = [self._normalize(int(c)) for c in codes]
        return tuple(self.point_index[int(c)] for c in codes)

    def to_matrix(self, perm) -> Matrix | None:
        """Recover the matrix from the images of the basis vectors (linear action only)."""
        if self.projective:
            return None
        q = self.field.q
        rows = []
        for i in range(self.dim):
            pt = self.point_index[q ** i]
            rows.append(tuple(self.vector(self.points[int(perm[pt])])))
        return tuple(rows)

    def project(self, other: "MatrixAction", perm) -> tuple[int, ...]:
        """Induced permutation on the lines of ``other`` (projective) from a linear perm."""
        out = []
        for c in other.points:
            img = self.points[int(perm[self.point_index[c]])]
            out.append(other.point_index[other._normalize(img)])
        return tuple(out)


# ---------------------------------------------------------------- builders

def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return generate([(0,)], cap, name="S1")
    if n == 2:
        return generate([(1, 0)], cap, name="S2")
    return generate([parse_cycles("(1,2)", n), tuple(list(range(1, n)) + [0])], cap, name=f"S{n}")


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    if n < 3:
        return generate([tuple(range(n))], cap, name=f"A{n}")
    if n == 3:
        return generate([parse_cycles("(1,2,3)", 3)], cap, name="A3")
    if n % 2:
        long = parse_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n)
    else:
        long = parse_cycles("(" + ",".join(map(str, range(2, n + 1))) + ")", n)
    return generate([parse_cycles("(1,2,3)", n), long], cap, name=f"A{n}")


def cyclic_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return generate([tuple((i + 1) % n for i in range(n))], cap, name=f"C{n}")


def sl_generators(n: int, F: FieldSpec) -> list[Matrix]:
    """Elementary transvections I + w^k E_ij, k < e; they generate SL_n(q)."""
    gens = []
    basis = [F.pow(F.primitive_element(), k) for k in range(F.e)] if F.q > 2 else [1]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for a in basis:
                M = [list(r) for r in identity_matrix(n)]
                M[i][j] = a
                gens.append(tuple(tuple(r) for r in M))
    return gens


def su3_generators(q: int) -> tuple[FieldSpec, list[Matrix]]:
    """Generators of SU_3(q) preserving the antidiagonal hermitian form over F_{q^2}.

    Upper unitriangular u(a, b) = [[1, a, b], [0, 1, -a^q], [0, 0, 1]] with
    b + b^q = -a^(q+1), together with their transposes.
    """
    base = field_of_order(q)
    F = make_field(base.p, 2 * base.e)
    w = F.primitive_element()
    gens = []
    for a in [0] + [F.pow(w, k) for k in range(F.e)]:
        target = F.neg(F.pow(a, q + 1)) if a else 0
        b = next(b for b in range(F.q) if (a or b) and F.add(b, F.pow(b, q)) == target)
        U = ((1, a, b), (0, 1, F.neg(F.pow(a, q))), (0, 0, 1))
        gens.append(U)
        gens.append(tuple(zip(*U)))
    return F, gens


def matrix_group(gens: list[Matrix], F: FieldSpec, projective: bool, name: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    n = len(gens[0])
    action = MatrixAction(F, n, projective)
    perms = [action.to_perm(g) for g in gens]
    return generate(perms, cap, name=name, action=action)


def special_linear_group(n: int, q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    F = field_of_order(q)
    return matrix_group(sl_generators(n, F), F, False, f"SL({n},{q})", cap)


def projective_special_linear_group(n: int, q: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    F = field_of_order(q)
    return matrix_group(sl_generators(n, F), F, True, f"PSL({n},{q})", cap)


def special_unitary_group(n: int, q: int, cap: int = DEFAULT_CAP, projective: bool = False) -> FiniteGroup:
    if n != 3:
        raise ValueError("only SU(3,q) is supported")
    F, gens = su3_generators(q)
    return matrix_group(gens, F, projective, f"{'P' if projective else ''}SU(3,{q})", cap)


def sl_order(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q ** i - 1
    return out


def su3_order(q: int) -> int:
    return q ** 3 * (q ** 3 + 1) * (q ** 2 - 1)


def matrix_of(G: FiniteGroup, i: int) -> Matrix | None:
    if G.action is None:
        return None
    return G.action.to_matrix(G.perms[i])


def element_of_matrix(G: FiniteGroup, A: Matrix) -> int:
    if G.action is None:
        raise ValueError("not a matrix group")
    return G.index(G.action.to_perm(A))


# --------------------------------------------------------------- group specs

_SPEC_RE = [
    (re.compile(r"^A(\d+)$"), "A"),
    (re.compile(r"^S(\d+)$"), "S"),
    (re.compile(r"^C(\d+)$"), "C"),
    (re.compile(r"^(P?SL)\((\d+),(\d+)\)$"), "SL"),
    (re.compile(r"^(P?SU)\((\d+),(\d+)\)$"), "SU"),
]


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # A, S, C, SL, PSL, SU, PSU, FILE
    n: int = 0
    q: int = 0
    path: str = ""

    def canonical(self) -> str:
        if self.kind in ("A", "S", "C"):
            return f"{self.kind}{self.n}"
        if self.kind == "FILE":
            return f"@{self.path}"
        return f"{self.kind}({self.n},{self.q})"

    def __str__(self):
        return self.canonical()


def parse_group_spec(text: str) -> GroupSpec:
    t = text.strip()
    if t.startswith("@"):
        return GroupSpec("FILE", path=t[1:])
    compact = t.replace(" ", "")
    for rx, kind in _SPEC_RE:
        m = rx.match(compact)
        if not m:
            continue
        if kind in ("A", "S", "C"):
            n = int(m.group(1))
            if n < 1:
                raise ValueError(f"bad degree in {text!r}")
            return GroupSpec(kind, n=n)
        name, n, q = m.group(1), int(m.group(2)), int(m.group(3))
        try:
            field_of_order(q)
        except ValueError:
            raise ValueError(f"{q} in {text!r} is not a prime power") from None
        if n < 1:
            raise ValueError(f"bad dimension in {text!r}")
        if kind == "SU" and n != 3:
            raise ValueError(f"only SU(3,q) is supported, got {text!r}")
        return GroupSpec(name, n=n, q=q)
    token = re.match(r"^[A-Za-z]*", compact).group(0) or compact
    raise ValueError(f"cannot parse group spec: unknown token {token!r}")


def read_generator_file(path: str) -> list[tuple[int, ...]]:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError(f"{path}: no generators")
    raw = [parse_cycles(ln) for ln in lines]
    n = max(len(r) for r in raw)
    return [parse_cycles(ln, n) for ln in lines]


def build_group(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    name = spec.canonical()
    if spec.kind == "A":
        G = alternating_group(spec.n, cap)
    elif spec.kind == "S":
        G = symmetric_group(spec.n, cap)
    elif spec.kind == "C":
        G = cyclic_group(spec.n, cap)
    elif spec.kind == "SL":
        G = special_linear_group(spec.n, spec.q, cap)
    elif spec.kind == "PSL":
        G = projective_special_linear_group(spec.n, spec.q, cap)
    elif spec.kind == "SU":
        G = special_unitary_group(3, spec.q, cap)
    elif spec.kind == "PSU":
        G = special_unitary_group(3, spec.q, cap, projective=True)
    else:
        G = generate(read_generator_file(spec.path), cap)
    G.name = name
    return G


@lru_cache(maxsize=32)
def cached_group(spec: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return build_group(spec, cap)
