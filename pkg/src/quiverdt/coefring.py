"""Exact arithmetic in Q(zeta_p)[s]/(s^2 - q).

``s`` plays the role of q^{1/2}; powers of the twist variable v = -q^{1/2} are
powers of -s. Elements are stored as a flat tuple of Fractions indexed by
2*k + j for the monomial zeta^k s^j, with 0 <= k < p-1 and j in {0, 1}.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable


class Coef:
    __slots__ = ("p", "q", "c")

    def __init__(self, p: int, q: int, c: Iterable = ()):
        c = [Fraction(x) for x in c]
        size = 2 * (p - 1)
        if len(c) > size:
            raise ValueError("too many coefficients; use Coef.from_raw for unreduced input")
        c += [Fraction(0)] * (size - len(c))
        self.p, self.q, self.c = p, q, tuple(c)

    # constructors -------------------------------------------------------------

    @staticmethod
    def _pq(ring) -> tuple[int, int]:
        if isinstance(ring, Coef):
            return ring.p, ring.q
        if isinstance(ring, tuple):
            return ring
        return ring.p, ring.q  # FieldSpec

    @classmethod
    def rational(cls, ring, r) -> "Coef":
        p, q = cls._pq(ring)
        return cls(p, q, [r])

    @classmethod
    def one(cls, ring) -> "Coef":
        return cls.rational(ring, 1)

    @classmethod
    def zero(cls, ring) -> "Coef":
        return cls.rational(ring, 0)

    @classmethod
    def s(cls, ring) -> "Coef":
        p, q = cls._pq(ring)
        return cls(p, q, [0, 1])

    @classmethod
    def zeta(cls, ring, k: int = 1) -> "Coef":
        p, q = cls._pq(ring)
        raw = {(k % p, 0): Fraction(1)}
        return cls.from_raw(p, q, raw)

    @classmethod
    def neg_s_power(cls, ring, n: int) -> "Coef":
        """(-s)^n for any integer n, using s^2 = q and s^{-1} = s/q."""
        p, q = cls._pq(ring)
        k, r = divmod(n, 2)
        qk = Fraction(q) ** k
        return cls(p, q, [qk]) if r == 0 else cls(p, q, [0, -qk])

    @classmethod
    def from_raw(cls, p: int, q: int, raw: dict[tuple[int, int], Fraction]) -> "Coef":
        """Reduce a dict {(zeta exponent, s exponent): coefficient} with arbitrary exponents >= 0."""
        c = [Fraction(0)] * (2 * (p - 1))
        for (k, j), x in raw.items():
            if not x:
                continue
            x = Fraction(x) * Fraction(q) ** (j // 2)
            j %= 2
            k %= p
            if k == p - 1:
                for i in range(p - 1):
                    c[2 * i + j] -= x
            else:
                c[2 * k + j] += x
        return cls(p, q, c)

    # arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> "Coef":
        if isinstance(other, Coef):
            if (other.p, other.q) != (self.p, self.q):
                raise ValueError(f"ring mismatch: (p, q) = {(self.p, self.q)} vs {(other.p, other.q)}")
            return other
        if isinstance(other, (int, Rational)):
            return Coef(self.p, self.q, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Coef(self.p, self.q, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Coef(self.p, self.q, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Coef(self.p, self.q, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        raw: dict[tuple[int, int], Fraction] = {}
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                if b:
                    key = (i // 2 + j // 2, i % 2 + j % 2)
                    raw[key] = raw.get(key, 0) + a * b
        return Coef.from_raw(self.p, self.q, raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational only; the ring need not be a field."""
        if isinstance(other, Coef):
            r = other.as_rational()
            if r is None:
                raise TypeError("division is only defined by rational elements")
            other = r
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("division of a ring element by zero")
        return Coef(self.p, self.q, [a / other for a in self.c])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only available via Coef.neg_s_power")
        out = Coef.one(self)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (Coef, int, Rational)) else NotImplemented
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash((self.p, self.q, self.c))

    def __bool__(self):
        return any(self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def as_rational(self) -> Fraction | None:
        if any(self.c[1:]):
            return None
        return self.c[0]

    # display / serialization --------------------------------------------------

    def __repr__(self):
        return f"Coef({self})"

    def __str__(self):
        terms = []
        for idx, x in enumerate(self.c):
            if not x:
                continue
            k, j = divmod(idx, 2)
            mono = "*".join(m for m in (f"z^{k}" if k > 1 else ("z" if k == 1 else ""), "s" if j else "") if m)
            if not mono:
                terms.append(str(x))
            elif x == 1:
                terms.append(mono)
            elif x == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{x}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        rows = []
        for k in range(self.p - 1):
            r0, r1 = self.c[2 * k], self.c[2 * k + 1]
            rows.append([r0.numerator, r0.denominator, r1.numerator, r1.denominator])
        return {"zeta_powers": rows}

    @classmethod
    def from_json(cls, ring, data: dict) -> "Coef":
        p, q = cls._pq(ring)
        c = []
        for n0, d0, n1, d1 in data["zeta_powers"]:
            c += [Fraction(n0, d0), Fraction(n1, d1)]
        return cls(p, q, c)
