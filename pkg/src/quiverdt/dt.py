"""Counting DT invariants, their slope series, the HN relation and the wall-crossing solution."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .coefring import Coef
from .ffield import FieldSpec, gl_order
from .quiver import DimVector, Potential, Quiver, skew_form, slope, sub_dimensions, tits_form
from .qtorus import QTorusSeries, twisted_mul
from .repenum import DEFAULT_BUDGET, Budget, enumerate_reps, point_count, potential_trace


def _ring(F: FieldSpec) -> tuple[int, int]:
    return (F.p, F.q)


def dt_from_stack_counts(F: FieldSpec, T: int, stack: Fraction, stack_w0: Fraction) -> Coef:
    q = F.q
    return Coef.neg_s_power(_ring(F), T) * ((stack - q * stack_w0) / (1 - q))


def dt_invariant(Q: Quiver, W: Potential, a: Sequence[int], theta, F: FieldSpec,
                 budget: Budget = DEFAULT_BUDGET) -> Coef:
    """(-s)^{T(a)} (S - q S_0) / (1 - q) with S, S_0 the (w = 0) semistable stack counts."""
    a = Q.dim(a)
    if sum(a) == 0:
        return Coef.one(_ring(F))
    pc = point_count(Q, a, theta, F, W, budget)
    return dt_from_stack_counts(F, tits_form(Q, a), pc.stack, pc.stack_w0)


def dt_character_sum(Q: Quiver, W: Potential, a: Sequence[int], F: FieldSpec,
                     budget: Budget = DEFAULT_BUDGET) -> Coef:
    """(-s)^{T(a)} sum_M psi(w(M)) / #GL_a over all of R(Q, a): the theta = 0 invariant via characters."""
    a = Q.dim(a)
    ring = _ring(F)
    hist = [0] * F.p
    for M in enumerate_reps(Q, a, F, budget):
        hist[F.trace(potential_trace(M, W))] += 1
    total = Coef.zero(ring)
    for k, n in enumerate(hist):
        if n:
            total = total + Coef.zeta(ring, k) * n
    return Coef.neg_s_power(ring, tits_form(Q, a)) * total / gl_order(a, F.q)


def within(bound: Sequence[int]) -> Iterator[DimVector]:
    """Nonzero dimension vectors componentwise below ``bound``."""
    for b in sub_dimensions(bound, proper=False):
        if sum(b):
            yield b


def dt_series(Q: Quiver, W: Potential, mu, theta, F: FieldSpec, bound: Sequence[int],
              budget: Budget = DEFAULT_BUDGET, unit: bool = False) -> QTorusSeries:
    """sum of A_a^theta x^a over nonzero a within bound of slope mu (plus 1 when ``unit``)."""
    mu = Fraction(mu)
    coeffs = {b: dt_invariant(Q, W, b, theta, F, budget) for b in within(bound) if slope(theta, b) == mu}
    if unit:
        coeffs[Q.zero()] = Coef.one(_ring(F))
    return QTorusSeries(Q, _ring(F), bound, coeffs)


def full_series(Q: Quiver, W: Potential, F: FieldSpec, bound: Sequence[int],
                budget: Budget = DEFAULT_BUDGET) -> QTorusSeries:
    """A = 1 + sum over all nonzero a within bound of A_a x^a (theta = 0)."""
    zero = (0,) * Q.n
    return dt_series(Q, W, 0, zero, F, bound, budget, unit=True)


def realized_slopes(theta, bound: Sequence[int]) -> list[Fraction]:
    return sorted({slope(theta, b) for b in within(bound)}, reverse=True)


def hn_product(Q: Quiver, W: Potential, theta, F: FieldSpec, bound: Sequence[int],
               budget: Budget = DEFAULT_BUDGET) -> QTorusSeries:
    acc = QTorusSeries.one(Q, _ring(F), bound)
    for mu in realized_slopes(theta, bound):
        acc = twisted_mul(acc, dt_series(Q, W, mu, theta, F, bound, budget, unit=True))
    return acc


@dataclass
class HNReport:
    ok: bool
    slopes: list[Fraction]
    lhs: QTorusSeries
    rhs: QTorusSeries
    mismatches: list[DimVector] = field(default_factory=list)


def hn_check(Q: Quiver, W: Potential, theta, F: FieldSpec, bound: Sequence[int],
             budget: Budget = DEFAULT_BUDGET) -> HNReport:
    """Compare the theta = 0 series with the slope-ordered product, degree by degree."""
    bound = tuple(bound)
    lhs = full_series(Q, W, F, bound, budget)
    rhs = hn_product(Q, W, theta, F, bound, budget)
    bad = [b for b in sub_dimensions(bound, proper=False) if lhs[b] != rhs[b]]
    return HNReport(not bad, realized_slopes(theta, bound), lhs, rhs, bad)


def compositions(a: Sequence[int]) -> Iterator[tuple[DimVector, ...]]:
    """Ordered tuples of nonzero vectors summing to a."""
    a = tuple(a)
    if not sum(a):
        yield ()
        return
    for first in sub_dimensions(a, proper=False):
        if not sum(first):
            continue
        rest = tuple(x - y for x, y in zip(a, first))
        for tail in compositions(rest):
            yield (first,) + tail


def admissible_tuples(a: Sequence[int], theta) -> list[tuple[DimVector, ...]]:
    """Compositions of a whose proper prefix sums all have slope strictly above mu(a)."""
    a = tuple(a)
    mu = slope(theta, a)
    out = []

    def rec(prefix: tuple[DimVector, ...], acc: DimVector):
        rest = tuple(x - y for x, y in zip(a, acc))
        for nxt in sub_dimensions(rest, proper=False):
            if not sum(nxt):
                continue
            total = tuple(x + y for x, y in zip(acc, nxt))
            if total == a:
                out.append(prefix + (nxt,))
            elif slope(theta, total) > mu:
                rec(prefix + (nxt,), total)

    if sum(a):
        rec((), (0,) * len(a))
    return out


def wall_crossing_solve(Q: Quiver, W: Potential, a: Sequence[int], theta, F: FieldSpec,
                        budget: Budget = DEFAULT_BUDGET) -> Coef:
    """sum over admissible tuples of (-1)^{k-1} (-s)^{sum_{i<j} <a_i, a_j>} prod A_{a_i} (theta = 0 invariants)."""
    a = Q.dim(a)
    ring = _ring(F)
    if not sum(a):
        return Coef.one(ring)
    zero = (0,) * Q.n
    total = Coef.zero(ring)
    for tup in admissible_tuples(a, theta):
        k = len(tup)
        twist = sum(skew_form(Q, x, y) for x, y in combinations(tup, 2))
        term = Coef.neg_s_power(ring, twist) * (-1) ** (k - 1)
        for b in tup:
            term = term * dt_invariant(Q, W, b, zero, F, budget)
        total = total + term
    return total


@dataclass
class DTRecord:
    dim: DimVector
    semistable: int
    semistable_w0: int
    gl: int
    stack: Fraction
    stack_w0: Fraction
    tits: int
    slope: Fraction
    invariant: Coef

    def consistent(self, F: FieldSpec) -> bool:
        return self.invariant == dt_from_stack_counts(F, self.tits, Fraction(self.semistable, self.gl),
                                                      Fraction(self.semistable_w0, self.gl))

    def to_json(self) -> dict:
        return {
            "dim": list(self.dim),
            "slope": str(self.slope),
            "semistable_points": self.semistable,
            "semistable_w0_points": self.semistable_w0,
            "gl_order": self.gl,
            "stack_count": str(self.stack),
            "stack_count_w0": str(self.stack_w0),
            "tits": self.tits,
            "A": self.invariant.to_json(),
            "A_text": str(self.invariant),
        }


@dataclass
class DTReport:
    quiver: Quiver
    field: FieldSpec
    theta: tuple[Fraction, ...]
    bound: DimVector
    records: list[DTRecord]

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]


def dt_report(Q: Quiver, W: Potential, theta, F: FieldSpec, bound: Sequence[int],
              budget: Budget = DEFAULT_BUDGET) -> DTReport:
    theta = tuple(Fraction(x) for x in theta)
    records = []
    for b in within(bound):
        pc = point_count(Q, b, theta, F, W, budget)
        records.append(DTRecord(b, pc.semistable, pc.semistable_w0, pc.gl, pc.stack, pc.stack_w0,
                                tits_form(Q, b), slope(theta, b), dt_invariant(Q, W, b, theta, F, budget)))
    return DTReport(Q, F, theta, tuple(bound), records)
