"""Quiver representations over F_q and everything computed by enumerating them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence

from . import linalg as la
from .ffield import DEFAULT_MAX_GL, BudgetExceeded, FieldSpec, gl_order
from .linalg import Basis, Matrix
from .quiver import DimVector, Potential, Quiver, QuiverError, cyclic_derivative, slope, sub_dimensions

DEFAULT_MAX_POINTS = 1 << 16


@dataclass(frozen=True)
class Budget:
    """Hard limits on enumeration sizes; exceeding one raises BudgetExceeded."""

    max_points: int = DEFAULT_MAX_POINTS
    max_gl: int = DEFAULT_MAX_GL


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    field: FieldSpec
    dim: DimVector
    mats: tuple[Matrix, ...]

    def __post_init__(self):
        Q = self.quiver
        if len(self.dim) != Q.n or len(self.mats) != len(Q.arrows):
            raise QuiverError("representation does not match its quiver")
        for (s, t), M in zip(Q.ends, self.mats):
            if len(M) != self.dim[t] or any(len(r) != self.dim[s] for r in M):
                raise QuiverError("matrix shape does not match the dimension vector")

    @classmethod
    def from_arrays(cls, Q: Quiver, F: FieldSpec, dim: Sequence[int], mats: Mapping[str, Sequence[Sequence[int]]] | None = None):
        """Build from nested lists keyed by arrow name; missing arrows are zero maps."""
        dim = Q.dim(dim)
        mats = mats or {}
        unknown = set(mats) - set(Q.arrow_index)
        if unknown:
            raise QuiverError(f"unknown arrow(s) {sorted(unknown)}")
        out = []
        for a, (s, t) in zip(Q.arrows, Q.ends):
            if a.name in mats:
                out.append(tuple(tuple(int(x) % F.q for x in row) for row in mats[a.name]))
            else:
                out.append(la.zeros(dim[t], dim[s]))
        return cls(Q, F, dim, tuple(out))

    @classmethod
    def zero(cls, Q: Quiver, F: FieldSpec, dim: Sequence[int] | None = None):
        return cls.from_arrays(Q, F, Q.zero() if dim is None else dim)

    def key(self) -> tuple[int, ...]:
        """Flattened entries, arrow by arrow, row-major. Orders orbit elements."""
        return tuple(x for M in self.mats for row in M for x in row)

    def __lt__(self, other: "Representation") -> bool:
        return (self.dim, self.key()) < (other.dim, other.key())

    def mat(self, name: str) -> Matrix:
        return self.mats[self.quiver.arrow_index[name]]

    def path_matrix(self, path: Sequence[str], start: int) -> Matrix:
        """Composite map along ``path`` (traversed left to right) starting at vertex index ``start``."""
        F, Q = self.field, self.quiver
        cur = la.identity(self.dim[start])
        width = self.dim[start]
        v = start
        for x in path:
            i = Q.arrow_index[x]
            s, t = Q.ends[i]
            if s != v:
                raise QuiverError(f"path not composable at {x}")
            cur = la.matmul(F, self.mats[i], cur, self.dim[s], width)
            v = t
        return cur

    def direct_sum(self, other: "Representation") -> "Representation":
        mats = []
        for (s, t), A, B in zip(self.quiver.ends, self.mats, other.mats):
            cs, co = self.dim[s], other.dim[s]
            rows = [tuple(r) + (0,) * co for r in A] + [(0,) * cs + tuple(r) for r in B]
            mats.append(tuple(rows))
        dim = tuple(x + y for x, y in zip(self.dim, other.dim))
        return Representation(self.quiver, self.field, dim, tuple(mats))

    def __str__(self):
        parts = [f"{a.name}={[list(r) for r in M]}" for a, M in zip(self.quiver.arrows, self.mats)]
        return f"<dim {self.dim}: " + ", ".join(parts) + ">"


def simple(Q: Quiver, F: FieldSpec, vertex: str) -> Representation:
    dim = [0] * Q.n
    dim[Q.vertex_index[vertex]] = 1
    return Representation.zero(Q, F, dim)


# -- potential -----------------------------------------------------------------


def potential_trace(M: Representation, W: Potential) -> int:
    F, Q = M.field, M.quiver
    acc = 0
    for c, u in W.terms:
        cf = F.from_int(c)
        if not cf:
            continue
        start = Q.vertex_index[Q.arrow(u[0]).source]
        tr = la.trace(F, M.path_matrix(u, start))
        acc = F.add(acc, F.mul(cf, tr))
    return acc


def scale(M: Representation, t: int, wt: Mapping[str, int]) -> Representation:
    F = M.field
    if t == 0:
        raise ValueError("scaling parameter must be nonzero")
    mats = tuple(la.matscale(F, F.pow(t, wt[a.name]), A) for a, A in zip(M.quiver.arrows, M.mats))
    return Representation(M.quiver, F, M.dim, mats)


def is_jacobian(M: Representation, W: Potential) -> bool:
    F, Q = M.field, M.quiver
    for a, (s, t) in zip(Q.arrows, Q.ends):
        total = la.zeros(M.dim[s], M.dim[t])
        for path, c in cyclic_derivative(Q, W, a.name).items():
            cf = F.from_int(c)
            if cf:
                total = la.matadd(F, total, la.matscale(F, cf, M.path_matrix(path, t)))
        if not la.is_zero(total):
            return False
    return True


# -- enumeration ---------------------------------------------------------------


def rep_space_size(Q: Quiver, a: Sequence[int], q: int) -> int:
    return q ** sum(a[s] * a[t] for s, t in Q.ends)


def enumerate_reps(Q: Quiver, a: Sequence[int], F: FieldSpec, budget: Budget = DEFAULT_BUDGET) -> Iterator[Representation]:
    """All F_q-points of R(Q, a), in lexicographic order of their entries."""
    a = Q.dim(a)
    size = rep_space_size(Q, a, F.q)
    if size > budget.max_points:
        raise BudgetExceeded(f"R(Q, {a}) over F_{F.q} has {size} points, budget is {budget.max_points}")
    shapes = [(a[t], a[s]) for s, t in Q.ends]
    n_entries = sum(r * c for r, c in shapes)
    for flat in product(range(F.q), repeat=n_entries):
        mats, pos = [], 0
        for r, c in shapes:
            mats.append(tuple(flat[pos + i * c: pos + (i + 1) * c] for i in range(r)))
            pos += r * c
        yield Representation(Q, F, a, tuple(mats))


# -- subrepresentations ----------------------------------------------------------

Subrep = tuple[Basis, ...]


def _closed(X: Representation, U: Sequence[Basis], piv: Sequence[tuple[int, ...]], arrows) -> bool:
    F = X.field
    for i in arrows:
        s, t = X.quiver.ends[i]
        M = X.mats[i]
        for u in U[s]:
            if any(la.reduce_vector(F, la.matvec(F, M, u), U[t], piv[t])):
                return False
    return True


def subrepresentations(X: Representation, dim: Sequence[int] | None = None) -> Iterator[Subrep]:
    """Tuples of subspaces (echelon bases per vertex) closed under every arrow.

    With ``dim`` only subrepresentations of that dimension vector are produced.
    """
    Q, F = X.quiver, X.field
    n = Q.n
    if dim is None:
        choices = [[B for d in range(X.dim[i] + 1) for B in la.subspaces(F, X.dim[i], d)] for i in range(n)]
    else:
        if any(d < 0 or d > x for d, x in zip(dim, X.dim)):
            return
        choices = [la.subspaces(F, X.dim[i], dim[i]) for i in range(n)]
    # arrows become checkable once both ends are chosen
    ready = [[i for i, (s, t) in enumerate(Q.ends) if max(s, t) == v] for v in range(n)]
    U: list[Basis] = [()] * n
    piv: list[tuple[int, ...]] = [()] * n

    def rec(v):
        if v == n:
            yield tuple(U)
            return
        for B in choices[v]:
            U[v] = B
            piv[v] = la.pivots(B)
            if _closed(X, U, piv, ready[v]):
                yield from rec(v + 1)

    yield from rec(0)


def subrep_dim(U: Subrep) -> DimVector:
    return tuple(len(B) for B in U)


def restrict(X: Representation, U: Subrep) -> Representation:
    F = X.field
    mats = []
    for (s, t), M in zip(X.quiver.ends, X.mats):
        pt = la.pivots(U[t])
        cols = []
        for u in U[s]:
            v = la.matvec(F, M, u)
            cols.append([v[c] for c in pt])
        mats.append(tuple(tuple(col[r] for col in cols) for r in range(len(U[t]))))
    return Representation(X.quiver, F, subrep_dim(U), tuple(mats))


def quotient_rep(X: Representation, U: Subrep) -> Representation:
    """X/U in the coordinates of the non-pivot standard basis vectors."""
    F, Q = X.field, X.quiver
    piv = [la.pivots(B) for B in U]
    if not _closed(X, U, piv, range(len(Q.arrows))):
        raise QuiverError("U is not a subrepresentation")
    comp = [[j for j in range(X.dim[i]) if j not in piv[i]] for i in range(Q.n)]
    mats = []
    for (s, t), M in zip(Q.ends, X.mats):
        cols = []
        for j in comp[s]:
            v = la.reduce_vector(F, la.column(M, j), U[t], piv[t])
            cols.append([v[c] for c in comp[t]])
        mats.append(tuple(tuple(col[r] for col in cols) for r in range(len(comp[t]))))
    dim = tuple(x - len(B) for x, B in zip(X.dim, U))
    return Representation(Q, F, dim, tuple(mats))


def full_subrep(X: Representation) -> Subrep:
    return tuple(la.identity(d) for d in X.dim)


def zero_subrep(X: Representation) -> Subrep:
    return tuple(() for _ in X.dim)


# -- group action ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _gl_with_inverses(F: FieldSpec, a: DimVector, max_gl: int):
    from .ffield import enumerate_gl

    return tuple((g, tuple(la.inverse(F, x) for x in g)) for g in enumerate_gl(F, a, max_gl))


def act(M: Representation, g: Sequence[Matrix], ginv: Sequence[Matrix]) -> Representation:
    """g . M with (g.M)_x = g_{t(x)} M_x g_{s(x)}^{-1}."""
    F, d = M.field, M.dim
    mats = []
    for (s, t), A in zip(M.quiver.ends, M.mats):
        B = la.matmul(F, A, ginv[s], d[s], d[s])
        mats.append(la.matmul(F, g[t], B, d[t], d[s]))
    return Representation(M.quiver, F, d, tuple(mats))


def orbit(M: Representation, budget: Budget = DEFAULT_BUDGET) -> set[Representation]:
    return {act(M, g, gi) for g, gi in _gl_with_inverses(M.field, M.dim, budget.max_gl)}


@lru_cache(maxsize=None)
def _canonical(M: Representation, max_gl: int) -> Representation:
    return min(orbit(M, Budget(max_gl=max_gl)), key=Representation.key)


def canonical_form(M: Representation, budget: Budget = DEFAULT_BUDGET) -> Representation:
    """Lexicographically least element of the GL-orbit of M."""
    return _canonical(M, budget.max_gl)


def is_isomorphic(M: Representation, N: Representation, budget: Budget = DEFAULT_BUDGET) -> bool:
    if M.quiver != N.quiver or M.dim != N.dim:
        return False
    return canonical_form(M, budget) == canonical_form(N, budget)


@lru_cache(maxsize=None)
def _aut_order(M: Representation, max_gl: int) -> int:
    F, d, Q = M.field, M.dim, M.quiver
    from .ffield import enumerate_gl

    count = 0
    for g in enumerate_gl(F, d, max_gl):
        if all(
            la.matmul(F, g[t], A, d[t], d[s]) == la.matmul(F, A, g[s], d[s], d[s])
            for (s, t), A in zip(Q.ends, M.mats)
        ):
            count += 1
    return count


def aut_order(M: Representation, budget: Budget = DEFAULT_BUDGET) -> int:
    """#Aut M by direct search over GL: elements with g_t M_x = M_x g_s on every arrow."""
    return _aut_order(M, budget.max_gl)


@dataclass(frozen=True)
class IsoClass:
    rep: Representation  # canonical form
    orbit_size: int


@lru_cache(maxsize=None)
def _classes(Q: Quiver, a: DimVector, F: FieldSpec, budget: Budget) -> tuple[IsoClass, ...]:
    seen: set[Representation] = set()
    out = []
    for M in enumerate_reps(Q, a, F, budget):
        if M in seen:
            continue
        orb = orbit(M, budget)
        seen |= orb
        out.append(IsoClass(min(orb, key=Representation.key), len(orb)))
    out.sort(key=lambda c: c.rep.key())
    return tuple(out)


def iso_classes(Q: Quiver, a: Sequence[int], F: FieldSpec, budget: Budget = DEFAULT_BUDGET) -> tuple[IsoClass, ...]:
    """Isomorphism classes of dimension a by sweeping R(Q, a) orbit by orbit."""
    return _classes(Q, Q.dim(a), F, budget)


# -- stability -------------------------------------------------------------------


def _destabilizing_dims(theta, a: DimVector, strict: bool) -> list[DimVector]:
    mu = slope(theta, a)
    out = []
    for b in sub_dimensions(a):
        mb = slope(theta, b)
        if mb > mu or (strict and mb == mu):
            out.append(b)
    return out


def _has_subrep_of_dim(M: Representation, dims: Sequence[DimVector]) -> bool:
    return any(next(subrepresentations(M, b), None) is not None for b in dims)


def is_semistable(M: Representation, theta) -> bool:
    if sum(M.dim) == 0:
        raise QuiverError("stability of the zero representation is undefined")
    return not _has_subrep_of_dim(M, _destabilizing_dims(theta, M.dim, False))


def is_stable(M: Representation, theta) -> bool:
    if sum(M.dim) == 0:
        raise QuiverError("stability of the zero representation is undefined")
    return not _has_subrep_of_dim(M, _destabilizing_dims(theta, M.dim, True))


def _sst_filter(theta, a: DimVector):
    """Predicate for semistability at dimension a, shortcutting when nothing can destabilize."""
    if sum(a) == 0:
        return lambda M: True
    bad = _destabilizing_dims(theta, a, False)
    if not bad:
        return lambda M: True
    return lambda M: not _has_subrep_of_dim(M, bad)


@dataclass(frozen=True)
class PointCount:
    semistable: int
    semistable_w0: int
    gl: int

    @property
    def stack(self) -> Fraction:
        return Fraction(self.semistable, self.gl)

    @property
    def stack_w0(self) -> Fraction:
        return Fraction(self.semistable_w0, self.gl)


@lru_cache(maxsize=None)
def _point_count(Q: Quiver, a: DimVector, theta: tuple, F: FieldSpec, W: Potential, budget: Budget) -> PointCount:
    keep = _sst_filter(theta, a)
    n = n0 = 0
    for M in enumerate_reps(Q, a, F, budget):
        if keep(M):
            n += 1
            if potential_trace(M, W) == 0:
                n0 += 1
    return PointCount(n, n0, gl_order(a, F.q))


def point_count(Q: Quiver, a: Sequence[int], theta, F: FieldSpec, W: Potential | None = None,
                budget: Budget = DEFAULT_BUDGET) -> PointCount:
    """Semistable points of R(Q, a)(F_q), those with w = 0 among them, and #GL_a."""
    theta = tuple(Fraction(x) for x in theta)
    return _point_count(Q, Q.dim(a), theta, F, W or Potential(), budget)


def count_semistable(Q: Quiver, a, theta, F: FieldSpec, w0_only: bool = False, W: Potential | None = None,
                     budget: Budget = DEFAULT_BUDGET) -> int:
    pc = point_count(Q, a, theta, F, W, budget)
    return pc.semistable_w0 if w0_only else pc.semistable


def stack_count(Q: Quiver, a, theta, F: FieldSpec, w0_only: bool = False, W: Potential | None = None,
                budget: Budget = DEFAULT_BUDGET) -> Fraction:
    pc = point_count(Q, a, theta, F, W, budget)
    return pc.stack_w0 if w0_only else pc.stack


# -- Hall numbers ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _extension_table(X: Representation, n: DimVector, max_gl: int) -> dict[tuple[Representation, Representation], int]:
    """Counts of subreps U of dim n in X keyed by (canonical U, canonical X/U)."""
    b = Budget(max_gl=max_gl)
    table: dict[tuple[Representation, Representation], int] = {}
    for U in subrepresentations(X, n):
        key = (canonical_form(restrict(X, U), b), canonical_form(quotient_rep(X, U), b))
        table[key] = table.get(key, 0) + 1
    return table


def hall_number(X: Representation, M: Representation, N: Representation, budget: Budget = DEFAULT_BUDGET) -> int:
    """F^X_{MN}: subreps U of X with U ~ N and X/U ~ M."""
    if tuple(m + n for m, n in zip(M.dim, N.dim)) != X.dim:
        raise QuiverError("dim M + dim N must equal dim X")
    table = _extension_table(X, N.dim, budget.max_gl)
    return table.get((canonical_form(N, budget), canonical_form(M, budget)), 0)


def extension_table(X: Representation, n: Sequence[int], budget: Budget = DEFAULT_BUDGET):
    return _extension_table(X, tuple(n), budget.max_gl)


__all__ = [
    "Budget", "Representation", "IsoClass", "PointCount", "simple", "potential_trace", "scale",
    "is_jacobian", "enumerate_reps", "subrepresentations", "restrict", "quotient_rep", "canonical_form",
    "is_isomorphic", "aut_order", "iso_classes", "is_semistable", "is_stable", "point_count",
    "count_semistable", "stack_count", "hall_number", "extension_table",
]
