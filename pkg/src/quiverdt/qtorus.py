"""Truncated quantum torus and the integration maps from the Hall algebra.

x^a * x^b = (-s)^{<a,b>} x^{a+b} with s^2 = q. Series are truncated componentwise
at a fixed bound; products silently drop terms beyond it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .coefring import Coef
from .hall import HallElement, is_equivariant, slice_at
from .quiver import DimVector, Potential, Quiver, check_homogeneous, skew_form, tits_form
from .repenum import DEFAULT_BUDGET, Budget, aut_order, potential_trace


class QTorusSeries:
    def __init__(self, quiver: Quiver, ring: tuple[int, int], bound: Sequence[int],
                 coeffs: Mapping[DimVector, Coef] | None = None):
        self.quiver = quiver
        self.ring = tuple(ring)  # (p, q)
        self.bound = tuple(bound)
        self.coeffs: dict[DimVector, Coef] = {}
        for a, c in (coeffs or {}).items():
            a = tuple(a)
            if any(x > y for x, y in zip(a, self.bound)):
                continue
            if not isinstance(c, Coef):
                c = Coef.rational(self.ring, c)
            c = self.coeffs.get(a, Coef.zero(self.ring)) + c
            self.coeffs[a] = c
        self.coeffs = {a: c for a, c in self.coeffs.items() if not c.is_zero()}

    @classmethod
    def one(cls, Q: Quiver, ring, bound) -> "QTorusSeries":
        return cls(Q, ring, bound, {Q.zero(): Coef.one(ring)})

    @classmethod
    def monomial(cls, Q: Quiver, ring, bound, a, coeff=1) -> "QTorusSeries":
        return cls(Q, ring, bound, {tuple(a): coeff})

    def __getitem__(self, a) -> Coef:
        return self.coeffs.get(tuple(a), Coef.zero(self.ring))

    def _same(self, other: "QTorusSeries"):
        if (self.quiver, self.ring, self.bound) != (other.quiver, other.ring, other.bound):
            raise ValueError("series over different quantum tori or bounds")

    def __add__(self, other: "QTorusSeries") -> "QTorusSeries":
        self._same(other)
        acc = dict(self.coeffs)
        for a, c in other.coeffs.items():
            acc[a] = acc[a] + c if a in acc else c
        return QTorusSeries(self.quiver, self.ring, self.bound, acc)

    def __neg__(self):
        return QTorusSeries(self.quiver, self.ring, self.bound, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QTorusSeries":
        return QTorusSeries(self.quiver, self.ring, self.bound, {a: x * c for a, x in self.coeffs.items()})

    def __truediv__(self, r) -> "QTorusSeries":
        return QTorusSeries(self.quiver, self.ring, self.bound, {a: x / r for a, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, QTorusSeries):
            return twisted_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, QTorusSeries):
            return NotImplemented
        return (self.quiver, self.ring, self.bound) == (other.quiver, other.ring, other.bound) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = " + ".join(f"({c})*x^{a}" for a, c in sorted(self.coeffs.items()))
        return f"QTorusSeries({terms or 0})"

    def to_json(self) -> dict:
        return {",".join(map(str, a)): c.to_json() for a, c in sorted(self.coeffs.items())}


def twisted_mul(f: QTorusSeries, g: QTorusSeries) -> QTorusSeries:
    f._same(g)
    Q, ring, bound = f.quiver, f.ring, f.bound
    acc: dict[DimVector, Coef] = {}
    for a, x in f.coeffs.items():
        for b, y in g.coeffs.items():
            ab = tuple(i + j for i, j in zip(a, b))
            if any(i > j for i, j in zip(ab, bound)):
                continue
            term = x * y * Coef.neg_s_power(ring, skew_form(Q, a, b))
            acc[ab] = acc[ab] + term if ab in acc else term
    return QTorusSeries(Q, ring, bound, acc)


def _ring_of(f: HallElement) -> tuple[int, int]:
    return (f.field.p, f.field.q)


def _default_bound(f: HallElement) -> DimVector:
    dims = f.degrees() or {f.quiver.zero()}
    return tuple(max(d[i] for d in dims) for i in range(f.quiver.n))


def _integrate(f: HallElement, weight, bound, budget: Budget) -> QTorusSeries:
    Q, ring = f.quiver, _ring_of(f)
    bound = _default_bound(f) if bound is None else tuple(bound)
    acc: dict[DimVector, Coef] = {}
    for M, c in f.items():
        if any(x > y for x, y in zip(M.dim, bound)):
            continue
        term = Coef.neg_s_power(ring, tits_form(Q, M.dim)) * weight(M) * Fraction(c, aut_order(M, budget))
        acc[M.dim] = acc[M.dim] + term if M.dim in acc else term
    return QTorusSeries(Q, ring, bound, acc)


def integrate_I(f: HallElement, bound=None, budget: Budget = DEFAULT_BUDGET) -> QTorusSeries:
    """[M] -> (-s)^{T(dim M)} / #Aut M * x^{dim M}, extended linearly."""
    return _integrate(f, lambda M: 1, bound, budget)


class NotEquivariant(ValueError):
    pass


def integrate_Ieq(f: HallElement, W: Potential, wt: Mapping[str, int], bound=None,
                  budget: Budget = DEFAULT_BUDGET, check: bool = True) -> QTorusSeries:
    """(I(f) - q I(f_0)) / (1 - q), for f with coefficients constant on scaling orbits."""
    if check:
        hom = check_homogeneous(W, wt)
        if not hom:
            raise NotEquivariant(f"potential is not homogeneous: cycles {hom.witness} differ in weight")
        if not is_equivariant(f, wt, budget):
            raise NotEquivariant("element is not constant on scaling orbits")
    q = f.field.q
    if bound is None:
        bound = _default_bound(f)
    full = integrate_I(f, bound, budget)
    zero = integrate_I(slice_at(f, 0, W), bound, budget)
    return (full - zero.scale(q)) / (1 - q)


def integrate_Ipsi(f: HallElement, W: Potential, bound=None, budget: Budget = DEFAULT_BUDGET) -> QTorusSeries:
    """[M] -> psi(w(M)) I([M]) with psi = zeta_p^{Tr(.)}; defined on every element."""
    F = f.field
    return _integrate(f, lambda M: Coef.zeta(F, F.trace(potential_trace(M, W))), bound, budget)
