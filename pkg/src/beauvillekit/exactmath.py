"""Exact integer and integer-polynomial arithmetic.

Cyclotomic polynomials, Sylvester resultants, prime factorization and the
Euler function.  Everything here is arbitrary precision; nothing rounds.
"""
from __future__ import annotations

import math
import random
from functools import lru_cache, reduce
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class IntPoly:
    """Polynomial with integer coefficients, stored in ascending degree order.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x_power(cls, n: int, coeff: int = 1) -> "IntPoly":
        return cls([0] * n + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        """Division by a polynomial with leading coefficient +-1."""
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lc = other.leading
        if lc not in (1, -1):
            raise ValueError("exact integer division needs a unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        quo = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * lc
            if c:
                quo[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return IntPoly(quo), IntPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return eval_poly(self, x)

    def compose_neg(self) -> "IntPoly":
        """P(-x)."""
        return IntPoly(a if i % 2 == 0 else -a for i, a in enumerate(self.coeffs))

    def normalized(self) -> "IntPoly":
        """Sign-normalize so the leading coefficient is positive."""
        return -self if self.leading < 0 else self

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            m = abs(a)
            if i == 0:
                body = str(m)
            else:
                xp = "x" if i == 1 else f"x^{i}"
                body = xp if m == 1 else f"{m}*{xp}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _as_poly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, int):
        return IntPoly([p])
    raise TypeError(f"cannot coerce {type(p).__name__} to IntPoly")


X = IntPoly([0, 1])


def eval_poly(P: IntPoly, q: int) -> int:
    """Horner evaluation; exact for any integer ``q``."""
    acc = 0
    for a in reversed(P.coeffs):
        acc = acc * q + a
    return acc


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """The k-th cyclotomic polynomial, by dividing x^k - 1 by Phi_d for d | k, d < k."""
    if k < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {k}")
    P = IntPoly.x_power(k) - 1
    for d in divisors(k)[:-1]:
        P, r = divmod(P, cyclotomic(d))
        assert r.is_zero()
    return P


def cyclotomic_product(indices: Sequence[int]) -> IntPoly:
    return reduce(lambda a, b: a * b, (cyclotomic(k) for k in indices), IntPoly([1]))


def cyclotomic_factorization(P: IntPoly, max_index: int | None = None) -> list[tuple[int, int]]:
    """Write P (up to sign) as a product of cyclotomic polynomials.

    Returns ``[(k, multiplicity), ...]`` sorted by k; raises ``ValueError`` if a
    non-cyclotomic factor remains.
    """
    rest = P.normalized()
    if rest.is_zero():
        raise ValueError("zero polynomial has no cyclotomic factorization")
    if max_index is None:
        # phi(k) <= deg forces k <= 2 * deg^2 + 2 (crude but safe)
        max_index = 2 * max(rest.degree, 1) ** 2 + 2
    out = []
    for k in range(1, max_index + 1):
        ck = cyclotomic(k)
        if ck.degree > rest.degree:
            continue
        m = 0
        while rest.degree >= ck.degree:
            quo, r = divmod(rest, ck)
            if not r.is_zero():
                break
            rest = quo
            m += 1
        if m:
            out.append((k, m))
        if rest.degree == 0:
            break
    if rest != IntPoly([1]):
        raise ValueError(f"{P} is not a product of cyclotomic polynomials")
    return out


# ---------------------------------------------------------------- resultants

def sylvester_matrix(P: IntPoly, Q: IntPoly) -> list[list[int]]:
    m, n = P.degree, Q.degree
    size = m + n
    rows = []
    pc = list(reversed(P.coeffs))
    qc = list(reversed(Q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return rows


_RES_PRIMES: list[int] = []


def _resultant_primes(count: int) -> list[int]:
    p = _RES_PRIMES[-1] - 2 if _RES_PRIMES else (1 << 31) - 1
    while len(_RES_PRIMES) < count:
        if is_prime(p):
            _RES_PRIMES.append(p)
        p -= 2
    return _RES_PRIMES[:count]


def _det_mod(mat: np.ndarray, p: int) -> int:
    a = mat % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            det = -det
        pv = int(a[c, c])
        det = det * pv % p
        inv = pow(pv, -1, p)
        below = a[c + 1:, c] * inv % p
        if below.any():
            a[c + 1:] = (a[c + 1:] - np.outer(below, a[c]) % p) % p
    return det % p


def resultant(P: IntPoly, Q: IntPoly) -> int:
    """|res(P, Q)| as the exact determinant of the Sylvester matrix.

    The determinant is computed modulo enough 31-bit primes to exceed twice
    the Hadamard bound, then lifted by CRT.
    """
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    if P.degree == 0:
        return abs(P.leading) ** Q.degree
    if Q.degree == 0:
        return abs(Q.leading) ** P.degree
    rows = sylvester_matrix(P, Q)
    norm_sq = 1
    for r in rows:
        norm_sq *= sum(a * a for a in r)
    # need modulus M with M^2 > 4 * bound^2
    target = 4 * norm_sq
    primes, M = [], 1
    for p in _resultant_primes(10_000):
        primes.append(p)
        M *= p
        if M * M > target:
            break
    residues = []
    for p in primes:
        m = np.array([[a % p for a in r] for r in rows], dtype=np.int64)
        residues.append(_det_mod(m, p))
    value = crt(residues, primes)
    if value > M // 2:
        value -= M
    return abs(value)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    """Integer polynomial through the points (Newton form); raises if not integral."""
    from fractions import Fraction

    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [Fraction(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            new[d + 1] += c
            new[d] -= c * xs[i]
        new[0] += coef[i]
        poly = new
    if any(c.denominator != 1 for c in poly):
        raise ValueError("interpolating polynomial is not integral")
    return IntPoly(int(c) for c in poly)


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    x, M = 0, 1
    for r, m in zip(residues, moduli):
        t = (r - x) * pow(M, -1, m) % m
        x += M * t
        M *= m
    return x % M


def prime_power_base(n: int) -> int | None:
    """l if n = l^k with l prime and k >= 1, else None."""
    if n < 2:
        return None
    f = factorize(n)
    return f.prime_powers[0][0] if len(f.prime_powers) == 1 else None


def cyclotomic_resultant(a: int, b: int) -> int:
    """|res(Phi_a, Phi_b)| in closed form.

    l^phi(min(a, b)) when the larger index over the smaller is a power of the
    prime l, and 1 otherwise.
    """
    if a < 1 or b < 1:
        raise ValueError("cyclotomic indices must be positive")
    if a == b:
        raise ValueError("closed form does not cover res(Phi_a, Phi_a)")
    lo, hi = min(a, b), max(a, b)
    if hi % lo:
        return 1
    ell = prime_power_base(hi // lo)
    return ell ** euler_phi(lo) if ell else 1


# ------------------------------------------------------------- factorization

class Factorization(NamedTuple):
    prime_powers: list[tuple[int, int]]

    def value(self) -> int:
        return math.prod(p ** e for p, e in self.prime_powers)

    def primes(self) -> list[int]:
        return [p for p, _ in self.prime_powers]


TRIAL_LIMIT = 10 ** 6
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PROBABILISTIC_ROUNDS = 64


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = np.ones(TRIAL_LIMIT + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(TRIAL_LIMIT ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return tuple(int(p) for p in np.nonzero(sieve)[0])


def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic below 2^64, 64 seeded Miller-Rabin rounds above."""
    if n < 2:
        return False
    for p in _MR_BASES_64:
        if n % p == 0:
            return n == p
    if n < 1 << 64:
        bases = _MR_BASES_64
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS)]
    return all(_miller_rabin(n, a) for a in bases)


def _pollard_brent(n: int, seed: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    seed = 0
    while True:
        d = _pollard_brent(n, seed)
        if 1 < d < n:
            break
        seed += 1
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 1.

    Trial division by primes up to 10^6, then Pollard rho (Brent) on the
    cofactor.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n <= TRIAL_LIMIT ** 2:
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out)
    return Factorization(sorted(out.items()))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n).prime_powers:
        result = result // p * (p - 1)
    return result


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError("a must be a unit mod n")
    order = euler_phi(n)
    for p, _ in factorize(order).prime_powers:
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def is_prime_power(n: int) -> bool:
    return prime_power_base(n) is not None


def prime_powers_upto(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if is_prime_power(q)]
