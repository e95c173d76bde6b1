"""The Hall algebra of a quiver over F_q, in the subobject-first convention.

[N] * [M] = sum_X F^X_{MN} [X], where F^X_{MN} counts subrepresentations U of X
with U ~ N and X/U ~ M. This is opposite to the usual Ringel-Hall product.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .ffield import FieldSpec
from .quiver import DimVector, Potential, Quiver, slope, sub_dimensions
from .repenum import (
    DEFAULT_BUDGET, Budget, Representation, canonical_form, extension_table, is_semistable,
    iso_classes, potential_trace, scale,
)


class HallElement:
    """Finitely supported rational combination of canonical isomorphism classes."""

    def __init__(self, quiver: Quiver, field: FieldSpec, coeffs: Mapping[Representation, Rational] | None = None):
        self.quiver = quiver
        self.field = field
        self.coeffs: dict[Representation, Fraction] = {}
        for M, c in (coeffs or {}).items():
            if M.quiver != quiver or M.field != field:
                raise ValueError("class does not belong to this Hall algebra")
            c = Fraction(c)
            if c:
                self.coeffs[M] = self.coeffs.get(M, Fraction(0)) + c
        self.coeffs = {M: c for M, c in self.coeffs.items() if c}

    @classmethod
    def unit(cls, Q: Quiver, F: FieldSpec) -> "HallElement":
        return cls(Q, F, {Representation.zero(Q, F): 1})

    @classmethod
    def of(cls, M: Representation, coeff=1, budget: Budget = DEFAULT_BUDGET) -> "HallElement":
        return cls(M.quiver, M.field, {canonical_form(M, budget): coeff})

    def items(self):
        return self.coeffs.items()

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, M: Representation) -> Fraction:
        return self.coeffs.get(M, Fraction(0))

    def degrees(self) -> set[DimVector]:
        return {M.dim for M in self.coeffs}

    def component(self, a: Sequence[int]) -> "HallElement":
        a = tuple(a)
        return HallElement(self.quiver, self.field, {M: c for M, c in self.coeffs.items() if M.dim == a})

    def _same(self, other: "HallElement"):
        if self.quiver != other.quiver or self.field != other.field:
            raise ValueError("elements of different Hall algebras")

    def __add__(self, other: "HallElement") -> "HallElement":
        self._same(other)
        acc = dict(self.coeffs)
        for M, c in other.coeffs.items():
            acc[M] = acc.get(M, 0) + c
        return HallElement(self.quiver, self.field, acc)

    def __neg__(self):
        return HallElement(self.quiver, self.field, {M: -c for M, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, r):
        if isinstance(r, Rational):
            return HallElement(self.quiver, self.field, {M: r * c for M, c in self.coeffs.items()})
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, HallElement):
            return hall_product(self, other)
        return self.__rmul__(other)

    def __eq__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return (self.quiver, self.field, self.coeffs) == (other.quiver, other.field, other.coeffs)

    def __repr__(self):
        terms = ", ".join(f"{c}*{M}" for M, c in sorted(self.coeffs.items()))
        return f"HallElement({terms})"


@lru_cache(maxsize=None)
def _product_table(Q: Quiver, F: FieldSpec, n: DimVector, m: DimVector, budget: Budget):
    """(N, M) -> {X: F^X_{MN}} over all classes X of dimension n + m."""
    total = tuple(x + y for x, y in zip(n, m))
    table: dict[tuple[Representation, Representation], dict[Representation, int]] = {}
    for cls in iso_classes(Q, total, F, budget):
        X = cls.rep
        for key, count in extension_table(X, n, budget).items():
            table.setdefault(key, {})[X] = count
    return table


def hall_product(f: HallElement, g: HallElement, bound: Sequence[int] | None = None,
                 budget: Budget = DEFAULT_BUDGET) -> HallElement:
    """f * g with the first factor as subobject; terms of degree beyond ``bound`` are dropped."""
    f._same(g)
    Q, F = f.quiver, f.field
    acc: dict[Representation, Fraction] = {}
    for N, a in f.items():
        for M, b in g.items():
            total = tuple(x + y for x, y in zip(N.dim, M.dim))
            if bound is not None and any(x > y for x, y in zip(total, bound)):
                continue
            row = _product_table(Q, F, N.dim, M.dim, budget).get((N, M), {})
            for X, count in row.items():
                acc[X] = acc.get(X, 0) + a * b * count
    return HallElement(Q, F, acc)


def slice_at(f: HallElement, t: int, W: Potential) -> HallElement:
    """Restriction of f to classes with w(M) = t."""
    return HallElement(f.quiver, f.field, {M: c for M, c in f.items() if potential_trace(M, W) == t})


def all_classes(Q: Quiver, a: Sequence[int], F: FieldSpec, budget: Budget = DEFAULT_BUDGET) -> HallElement:
    return HallElement(Q, F, {c.rep: 1 for c in iso_classes(Q, a, F, budget)})


def tilde_A(Q: Quiver, a: Sequence[int], theta, F: FieldSpec, budget: Budget = DEFAULT_BUDGET) -> HallElement:
    """Sum of the theta-semistable classes of dimension a (the unit when a = 0)."""
    a = Q.dim(a)
    if sum(a) == 0:
        return HallElement.unit(Q, F)
    return HallElement(Q, F, {c.rep: 1 for c in iso_classes(Q, a, F, budget) if is_semistable(c.rep, theta)})


def scaling_orbit(M: Representation, wt: Mapping[str, int], budget: Budget = DEFAULT_BUDGET) -> set[Representation]:
    return {canonical_form(scale(M, t, wt), budget) for t in range(1, M.field.q)}


def is_equivariant(f: HallElement, wt: Mapping[str, int], budget: Budget = DEFAULT_BUDGET) -> bool:
    """Coefficients are constant along every scaling orbit {tM : t in F_q^*}."""
    for M, c in f.items():
        if any(f[N] != c for N in scaling_orbit(M, wt, budget)):
            return False
    return True


def orbit_sum(M: Representation, wt: Mapping[str, int], budget: Budget = DEFAULT_BUDGET) -> HallElement:
    """Sum of the distinct classes in the scaling orbit of M, each with coefficient 1."""
    return HallElement(M.quiver, M.field, {N: 1 for N in scaling_orbit(M, wt, budget)})


def orbit_sums(Q: Quiver, a: Sequence[int], F: FieldSpec, wt: Mapping[str, int],
               budget: Budget = DEFAULT_BUDGET) -> list[HallElement]:
    """Partition of the classes of dimension a into scaling-orbit sums."""
    done: set[Representation] = set()
    out = []
    for cls in iso_classes(Q, a, F, budget):
        if cls.rep in done:
            continue
        f = orbit_sum(cls.rep, wt, budget)
        done |= set(f.coeffs)
        out.append(f)
    return out


def realized_slopes(theta, bound: Sequence[int]) -> list[Fraction]:
    """Slopes of nonzero dimension vectors within ``bound``, in decreasing order."""
    vs = [b for b in sub_dimensions(bound, proper=False) if sum(b)]
    return sorted({slope(theta, b) for b in vs}, reverse=True)


def tilde_A_slope(Q: Quiver, mu: Fraction, theta, F: FieldSpec, bound: Sequence[int],
                  budget: Budget = DEFAULT_BUDGET) -> HallElement:
    """Unit plus all semistable classes of slope mu with dimension within ``bound``."""
    acc = HallElement.unit(Q, F)
    for b in sub_dimensions(bound, proper=False):
        if sum(b) and slope(theta, b) == mu:
            acc = acc + tilde_A(Q, b, theta, F, budget)
    return acc


def hn_product(Q: Quiver, theta, F: FieldSpec, bound: Sequence[int], budget: Budget = DEFAULT_BUDGET) -> HallElement:
    """Ordered product of the slope pieces in decreasing slope, truncated at ``bound``."""
    acc = HallElement.unit(Q, F)
    for mu in realized_slopes(theta, bound):
        acc = hall_product(acc, tilde_A_slope(Q, mu, theta, F, bound, budget), bound, budget)
    return acc


def product_of(elements: Iterable[HallElement], bound=None, budget: Budget = DEFAULT_BUDGET) -> HallElement:
    it = iter(elements)
    acc = next(it)
    for g in it:
        acc = hall_product(acc, g, bound, budget)
    return acc
