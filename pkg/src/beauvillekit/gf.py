"""Finite fields F_{p^e} with a deterministic defining polynomial.

Elements are encoded as integers: the coefficient vector (c_0, ..., c_{e-1})
of the residue polynomial becomes sum c_i p^i.  ``FieldSpec`` does the
arithmetic on those integers; ``FieldElement`` is a thin value wrapper.

Extension towers are flattened: F_{q^n} with q = p^e is just F_{p^{en}}, and
F_q sits inside it through an explicit embedding (``embedding``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .exactmath import divisors, factorize, is_prime


# ------------------------------------------------- polynomials over F_p (int lists)

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j, y in enumerate(m):
                a[i - dm + j] = (a[i - dm + j] - c * y) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, n, m, p):
    out, b = [1], _pmod(base, m, p)
    while n:
        if n & 1:
            out = _pmod(_pmul(out, b, p), m, p)
        b = _pmod(_pmul(b, b, p), m, p)
        n >>= 1
    return out


def is_irreducible_mod_p(f: tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic f over F_p."""
    e = len(f) - 1
    if e <= 0:
        return False
    if e == 1:
        return True
    m = list(f)
    x = [0, 1]
    if _psub(_ppowmod(x, p ** e, m, p), x, p):
        return False
    for ell, _ in factorize(e).prime_powers:
        h = _psub(_ppowmod(x, p ** (e // ell), m, p), x, p)
        if len(_pgcd(m, h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over F_p.

    Candidates are ordered by the integer sum c_i p^i, with the constant term
    as the least significant digit.
    """
    for n in range(p ** e):
        low = []
        for _ in range(e):
            n, d = divmod(n, p)
            low.append(d)
        f = tuple(low) + (1,)
        if is_irreducible_mod_p(f, p):
            return f
    raise AssertionError("an irreducible polynomial always exists")


# ------------------------------------------------------------------- fields

TABLE_LIMIT = 1 << 16


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    # -- integer encoding
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, d) -> int:
        v = 0
        for c in reversed(list(d)[: self.e]):
            v = v * self.p + c
        return v

    def _digit_table(self) -> np.ndarray:
        t = self._cache.get("digits")
        if t is None:
            t = np.array([self.digits(a) for a in range(self.q)], dtype=np.int64).reshape(self.q, self.e)
            self._cache["digits"] = t
        return t

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_poly(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        prod = _pmul(_trim(self.digits(a)), _trim(self.digits(b)), self.p)
        return self.from_digits(_pmod(prod, list(self.modulus), self.p) + [0] * self.e)

    def _log_tables(self):
        t = self._cache.get("log")
        if t is None:
            g = self.primitive_element()
            exp = [1] * (self.q - 1)
            for i in range(1, self.q - 1):
                exp[i] = self._mul_poly(exp[i - 1], g)
            log = [0] * self.q
            for i, v in enumerate(exp):
                log[v] = i
            t = (exp, log)
            self._cache["log"] = t
        return t

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        if self.q <= TABLE_LIMIT:
            exp, log = self._log_tables()
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 1 if n == 0 else 0
        if self.e == 1:
            return pow(a, n, self.p)
        if self.q <= TABLE_LIMIT:
            exp, log = self._log_tables()
            return exp[log[a] * n % (self.q - 1)]
        out, b = 1, a
        while n:
            if n & 1:
                out = self._mul_poly(out, b)
            b = self._mul_poly(b, b)
            n >>= 1
        return out

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        for ell, _ in factorize(self.q - 1).prime_powers:
            while n % ell == 0 and self.pow(a, n // ell) == 1:
                n //= ell
        return n

    def primitive_element(self) -> int:
        """Smallest encoded element of order q - 1."""
        g = self._cache.get("prim")
        if g is None:
            primes = factorize(self.q - 1).primes() if self.q > 2 else []
            for cand in range(1, self.q):
                if all(self._slow_pow(cand, (self.q - 1) // ell) != 1 for ell in primes):
                    g = cand
                    break
            self._cache["prim"] = g
        return g

    def _slow_pow(self, a, n):
        out, b = 1, a
        while n:
            if n & 1:
                out = self._mul_poly(out, b)
            b = self._mul_poly(b, b)
            n >>= 1
        return out

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** times)

    def element(self, rep) -> "FieldElement":
        if isinstance(rep, int):
            if not 0 <= rep < self.q:
                raise ValueError(f"encoding {rep} out of range for {self!r}")
            return FieldElement(self, rep)
        return FieldElement(self, self.from_digits([c % self.p for c in rep] + [0] * self.e))

    def elements(self):
        return [FieldElement(self, a) for a in range(self.q)]

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, 1)

    def generator(self) -> "FieldElement":
        return FieldElement(self, self.primitive_element())

    def mul_table(self) -> np.ndarray:
        t = self._cache.get("mul_table")
        if t is None:
            t = np.array([[self.mul(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)
            self._cache["mul_table"] = t
        return t

    def add_table(self) -> np.ndarray:
        t = self._cache.get("add_table")
        if t is None:
            t = np.array([[self.add(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)
            self._cache["add_table"] = t
        return t


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    return FieldSpec(p, e, smallest_irreducible(p, e))


def field_of_order(q: int) -> FieldSpec:
    f = factorize(q).prime_powers
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*f[0])


@dataclass(frozen=True)
class FieldElement:
    owner: FieldSpec
    rep: int

    def _check(self, other):
        if isinstance(other, int):
            return self.owner.element(other % self.owner.p)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.owner != self.owner:
            raise ValueError(f"cannot combine elements of {self.owner!r} and {other.owner!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.add(self.rep, other.rep))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.sub(self.rep, other.rep))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.rep))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.mul(self.rep, other.rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.owner, self.owner.mul(self.rep, self.owner.inv(other.rep)))

    def __pow__(self, n: int):
        return FieldElement(self.owner, self.owner.pow(self.rep, n))

    def inverse(self):
        return FieldElement(self.owner, self.owner.inv(self.rep))

    def order(self) -> int:
        return self.owner.order(self.rep)

    def is_zero(self):
        return self.rep == 0

    def __bool__(self):
        return self.rep != 0

    def __repr__(self):
        return f"{self.owner!r}[{self.rep}]"


# --------------------------------------------------------------- subfields

def _check_subfield(base: FieldSpec, ext: FieldSpec):
    if base.p != ext.p or ext.e % base.e:
        raise ValueError(f"{base!r} does not embed in {ext!r}")


@lru_cache(maxsize=None)
def embedding(base: FieldSpec, ext: FieldSpec) -> tuple[int, ...]:
    """Encoded images of every element of ``base`` inside ``ext``.

    The generator x of ``base`` goes to the smallest root of base.modulus in
    ``ext``; the rest follows by linearity.
    """
    _check_subfield(base, ext)
    if base.e == 1:
        return tuple(range(base.p))
    theta = None
    for cand in range(ext.q):
        acc = 0
        for c in reversed(base.modulus):
            acc = ext.add(ext.mul(acc, cand), c)
        if acc == 0:
            theta = cand
            break
    powers = [1]
    for _ in range(base.e - 1):
        powers.append(ext.mul(powers[-1], theta))
    images = []
    for a in range(base.q):
        v = 0
        for c, tp in zip(base.digits(a), powers):
            v = ext.add(v, ext.mul(c, tp))
        images.append(v)
    return tuple(images)


def embed(a: FieldElement, ext: FieldSpec) -> FieldElement:
    return FieldElement(ext, embedding(a.owner, ext)[a.rep])


def restrict(a: FieldElement, base: FieldSpec) -> FieldElement:
    """Inverse of ``embed``; raises if ``a`` is not in the image of ``base``."""
    images = embedding(base, a.owner)
    try:
        return FieldElement(base, images.index(a.rep))
    except ValueError:
        raise ValueError(f"{a!r} does not lie in the subfield {base!r}") from None


def relative_norm(alpha: FieldElement, base: FieldSpec) -> FieldElement:
    """N_{F_{q^n}/F_q}(alpha) = alpha^((q^n - 1)/(q - 1)), returned in ``base``."""
    ext = alpha.owner
    _check_subfield(base, ext)
    q, qn = base.q, ext.q
    if alpha.rep == 0:
        return base.zero()
    return restrict(alpha ** ((qn - 1) // (q - 1)), base)


def degree_over(alpha: FieldElement, base: FieldSpec) -> int:
    """Least d with alpha^(q^d) = alpha, i.e. [F_q(alpha) : F_q]."""
    ext = alpha.owner
    _check_subfield(base, ext)
    n = ext.e // base.e
    for d in divisors(n):
        if alpha ** (base.q ** d) == alpha:
            return d
    return n


def generates_extension(alpha: FieldElement, base: FieldSpec) -> bool:
    return degree_over(alpha, base) == alpha.owner.e // base.e


def norm_one_generator(q: int, n: int) -> FieldElement:
    """An element of F_{q^n} of norm 1 over F_q that generates F_{q^n} over F_q.

    Built as gamma^(q - 1) from multiplicative generators gamma, taken in
    increasing encoded order until the result generates the extension.
    """
    if n < 2:
        raise ValueError("need n >= 2 for a proper extension")
    base = field_of_order(q)
    ext = make_field(base.p, base.e * n)
    proper = [d for d in divisors(n) if d < n]
    target = (ext.q - 1) // (q - 1)
    for cand in range(1, ext.q):
        if ext.order(cand) != ext.q - 1:
            continue
        alpha = FieldElement(ext, ext.pow(cand, q - 1))
        order = alpha.order()
        if order == target and all((q ** d - 1) % order for d in proper):
            return alpha
    raise RuntimeError(f"no norm-one generator of F_{q}^{n} found")


def minimal_polynomial(alpha: FieldElement, base: FieldSpec) -> list[FieldElement]:
    """Monic minimal polynomial of alpha over ``base``, ascending coefficients."""
    ext = alpha.owner
    _check_subfield(base, ext)
    d = degree_over(alpha, base)
    poly = [ext.one()]
    conj = alpha
    for _ in range(d):
        # multiply poly by (x - conj)
        new = [ext.zero()] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * conj
        poly = new
        conj = conj ** base.q
    return [restrict(c, base) for c in poly]


# ----------------------------------------------- polynomials over a FieldSpec

def poly_mod_field(a: list[int], m: list[int], F: FieldSpec) -> list[int]:
    a = list(a)
    inv = F.inv(m[-1])
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = F.mul(a[i], inv)
        if c:
            for j, y in enumerate(m):
                a[i - dm + j] = F.sub(a[i - dm + j], F.mul(c, y))
    a = a[:dm] if len(a) > dm else a
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_gcd_field(a: list[int], b: list[int], F: FieldSpec) -> list[int]:
    a = [x for x in a]
    b = [x for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        a, b = b, poly_mod_field(a, b, F)
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(x, inv) for x in a]
    return a


def poly_derivative_field(a: list[int], F: FieldSpec) -> list[int]:
    out = []
    for i in range(1, len(a)):
        c = 0
        for _ in range(i % F.p):
            c = F.add(c, a[i])
        out.append(c)
    while out and out[-1] == 0:
        out.pop()
    return out


def is_squarefree_field(a: list[int], F: FieldSpec) -> bool:
    """True iff the polynomial (encoded coefficients, ascending) has no repeated root."""
    d = poly_derivative_field(a, F)
    if not d:
        # derivative zero: a is a p-th power (or constant)
        return len(a) <= 1
    return len(poly_gcd_field(a, d, F)) == 1


def has_root_in(a: list[int], F: FieldSpec) -> bool:
    for x in range(F.q):
        acc = 0
        for c in reversed(a):
            acc = F.add(F.mul(acc, x), c)
        if acc == 0:
            return True
    return False
