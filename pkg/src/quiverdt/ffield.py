"""Finite fields F_q as lookup tables over integer-coded elements.

An element of F_{p^e} = F_p[t]/(f) is stored as the integer sum c_k p^k, where
c_0 + c_1 t + ... + c_{e-1} t^{e-1} is its reduced polynomial. Prime-field
elements are therefore the integers 0..p-1, and integer potential coefficients
embed as ``c % p``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator, Sequence

FieldElem = int


class FieldError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size limit."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                break
            return p, e
    raise FieldError(f"{q} is not a prime power")


# -- polynomials over F_p, coefficient lists low -> high -----------------------


def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _polymod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = _trim([c % p for c in f])
    g = _trim([c % p for c in g])
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    poly = _trim([c % p for c in poly])
    e = len(poly) - 1
    if e < 1:
        return False
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _polymod(poly, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for low in product(range(p), repeat=e):
        f = tuple(reversed(low)) + (1,)
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


class FieldSpec:
    """F_q with q = p^e, presented by a monic irreducible polynomial of degree e."""

    def __init__(self, q: int, poly: Sequence[int] | None = None):
        p, e = prime_power(q)
        if poly is None:
            poly = first_irreducible(p, e)
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != e + 1 or poly[-1] != 1:
            raise FieldError(f"defining polynomial must be monic of degree {e}")
        if e > 1 and not is_irreducible(poly, p):
            raise FieldError(f"polynomial {poly} is reducible over F_{p}")
        self.p, self.e, self.q, self.poly = p, e, q, poly
        self._build_tables()

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        coeffs = [self.to_coeffs(x) for x in range(q)]
        self.add_t = [[self.from_coeffs([(a + b) % p for a, b in zip(ca, cb)]) for cb in coeffs] for ca in coeffs]
        self.neg_t = [self.from_coeffs([-a % p for a in ca]) for ca in coeffs]
        if e == 1:
            self.mul_t = [[x * y % p for y in range(q)] for x in range(q)]
        else:
            self.mul_t = [[self.from_coeffs(_polymod(_polymul(ca, cb, p), self.poly, p)) for cb in coeffs] for ca in coeffs]
        self.inv_t = [None] * q
        for x in range(1, q):
            for y in range(1, q):
                if self.mul_t[x][y] == 1:
                    self.inv_t[x] = y
                    break

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.q, self.poly) == (other.q, other.poly)

    def __hash__(self):
        return hash((self.q, self.poly))

    def __repr__(self):
        return f"FieldSpec(q={self.q}, poly={self.poly})" if self.e > 1 else f"FieldSpec(q={self.q})"

    # element coding
    def to_coeffs(self, x: FieldElem) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> FieldElem:
        cs = list(cs) + [0] * (self.e - len(cs))
        if len(cs) > self.e:
            cs = _polymod(cs, self.poly, self.p) + [0] * self.e
        return sum((c % self.p) * self.p ** k for k, c in enumerate(cs[: self.e]))

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, n: int) -> FieldElem:
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    # arithmetic
    def add(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.add_t[x][y]

    def sub(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.add_t[x][self.neg_t[y]]

    def neg(self, x: FieldElem) -> FieldElem:
        return self.neg_t[x]

    def mul(self, x: FieldElem, y: FieldElem) -> FieldElem:
        return self.mul_t[x][y]

    def inv(self, x: FieldElem) -> FieldElem:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.inv_t[x]

    def pow(self, x: FieldElem, n: int) -> FieldElem:
        if n < 0:
            x, n = self.inv(x), -n
        r = 1
        for _ in range(n):
            r = self.mul_t[r][x]
        return r

    def trace(self, x: FieldElem) -> int:
        """Absolute trace x + x^p + ... + x^{p^{e-1}}, as an integer in 0..p-1."""
        acc, y = 0, x
        for _ in range(self.e):
            acc = self.add_t[acc][y]
            y = self.pow(y, self.p)
        assert acc < self.p
        return acc


@lru_cache(maxsize=None)
def field(q: int, poly: tuple[int, ...] | None = None) -> FieldSpec:
    return FieldSpec(q, poly)


def _polymul(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def trace_to_prime(F: FieldSpec, x: FieldElem) -> int:
    return F.trace(x)


def additive_character(F: FieldSpec, x: FieldElem):
    """psi(x) = zeta_p ** Tr(x) in the exact coefficient ring attached to F."""
    from .coefring import Coef

    return Coef.zeta(F, F.trace(x))


def gl_order(a: Sequence[int], q: int) -> int:
    return prod(q**n - q**k for n in a for k in range(n))


def gaussian_binomial(n: int, d: int, q: int) -> int:
    if d < 0 or d > n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(d))
    den = prod(q ** (i + 1) - 1 for i in range(d))
    return num // den


DEFAULT_MAX_GL = 1 << 13


def enumerate_gl(F: FieldSpec, a: Sequence[int], max_size: int = DEFAULT_MAX_GL) -> Iterator[tuple]:
    """Every tuple of invertible matrices (g_i) in prod GL_{a_i}(F_q), each once."""
    from .linalg import invertible_matrices

    size = gl_order(a, F.q)
    if size > max_size:
        raise BudgetExceeded(f"GL_{tuple(a)}(F_{F.q}) has {size} elements, budget is {max_size}")
    return product(*(invertible_matrices(F, n) for n in a))
