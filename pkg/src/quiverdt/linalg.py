"""Dense linear algebra over F_q on tuples of rows.

A matrix with r rows and c columns is a tuple of r row tuples; the column count
is carried explicitly where r may be zero. Vectors are tuples and act as columns.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .ffield import FieldSpec

Matrix = tuple[tuple[int, ...], ...]
Basis = tuple[tuple[int, ...], ...]  # reduced row echelon basis of a subspace


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(F: FieldSpec, A: Matrix, B: Matrix, inner: int, cols: int) -> Matrix:
    """A (r x inner) times B (inner x cols)."""
    add, mul = F.add_t, F.mul_t
    out = []
    for row in A:
        new = [0] * cols
        for k, a in enumerate(row):
            if a:
                ma = mul[a]
                brow = B[k]
                for j in range(cols):
                    b = brow[j]
                    if b:
                        new[j] = add[new[j]][ma[b]]
        out.append(tuple(new))
    return tuple(out)


def matvec(F: FieldSpec, A: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    add, mul = F.add_t, F.mul_t
    out = []
    for row in A:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = add[acc][mul[a][x]]
        out.append(acc)
    return tuple(out)


def matadd(F: FieldSpec, A: Matrix, B: Matrix) -> Matrix:
    add = F.add_t
    return tuple(tuple(add[a][b] for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matscale(F: FieldSpec, c: int, A: Matrix) -> Matrix:
    mc = F.mul_t[c]
    return tuple(tuple(mc[a] for a in row) for row in A)


def trace(F: FieldSpec, A: Matrix) -> int:
    acc = 0
    for i, row in enumerate(A):
        acc = F.add_t[acc][row[i]]
    return acc


def is_zero(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def column(A: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in A)


def rref(F: FieldSpec, rows: Sequence[Sequence[int]], n: int) -> Basis:
    """Reduced row echelon basis of the span of ``rows`` (vectors of length n)."""
    work = [list(r) for r in rows]
    out: list[list[int]] = []
    for c in range(n):
        piv = next((i for i, r in enumerate(work) if r[c]), None)
        if piv is None:
            continue
        r = work.pop(piv)
        inv = F.inv(r[c])
        r = [F.mul(inv, x) for x in r]
        for other in work + out:
            f = other[c]
            if f:
                nf = F.neg(f)
                for j in range(n):
                    other[j] = F.add(other[j], F.mul(nf, r[j]))
        out.append(r)
    out.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
    return tuple(tuple(r) for r in out)


def pivots(basis: Basis) -> tuple[int, ...]:
    return tuple(next(i for i, x in enumerate(r) if x) for r in basis)


def reduce_vector(F: FieldSpec, v: Sequence[int], basis: Basis, piv: Sequence[int] | None = None) -> list[int]:
    """v minus its component along ``basis``; zero exactly when v lies in the span."""
    if piv is None:
        piv = pivots(basis)
    v = list(v)
    add, mul, neg = F.add_t, F.mul_t, F.neg_t
    for row, c in zip(basis, piv):
        f = v[c]
        if f:
            nf = neg[f]
            mf = mul[nf]
            for j, x in enumerate(row):
                if x:
                    v[j] = add[v[j]][mf[x]]
    return v


def rank(F: FieldSpec, A: Matrix, n: int) -> int:
    return len(rref(F, A, n))


@lru_cache(maxsize=None)
def subspaces(F: FieldSpec, n: int, d: int) -> tuple[Basis, ...]:
    """All d-dimensional subspaces of F_q^n as reduced echelon bases, each exactly once."""
    if d < 0 or d > n:
        return ()
    out = []
    for piv in combinations(range(n), d):
        pset = set(piv)
        free = [(r, j) for r, c in enumerate(piv) for j in range(c + 1, n) if j not in pset]
        for vals in product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for r, c in enumerate(piv):
                rows[r][c] = 1
            for (r, j), x in zip(free, vals):
                rows[r][j] = x
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def enumerate_subspaces(F: FieldSpec, n: int, d: int) -> Iterator[Basis]:
    return iter(subspaces(F, n, d))


@lru_cache(maxsize=None)
def invertible_matrices(F: FieldSpec, n: int) -> tuple[Matrix, ...]:
    """GL_n(F_q), built row by row avoiding the span of earlier rows."""
    out: list[Matrix] = []

    def extend(rows):
        if len(rows) == n:
            out.append(tuple(rows))
            return
        basis = rref(F, rows, n)
        piv = pivots(basis)
        for v in product(range(F.q), repeat=n):
            if any(reduce_vector(F, v, basis, piv)):
                extend(rows + [v])

    extend([])
    return tuple(out)


def inverse(F: FieldSpec, A: Matrix) -> Matrix:
    n = len(A)
    if n == 0:
        return ()
    aug = [list(row) + list(e) for row, e in zip(A, identity(n))]
    R = rref(F, aug, 2 * n)
    if len(R) < n or pivots(R)[n - 1] >= n:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(r[n:]) for r in R[:n])
