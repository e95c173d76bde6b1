"""Integer linear systems by column Hermite reduction."""

from __future__ import annotations

from typing import Sequence


def column_hermite(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[tuple[int, int]]]:
    """Return (H, U, pivots) with A @ U = H, U unimodular, H in lower column-echelon form.

    ``pivots`` lists (row, column) of the leading entries of H; pivot entries are positive.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_swap(j, k):
        for M in (H, U):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def col_addmul(dst, src, c):
        # column dst -= c * column src
        for M in (H, U):
            for row in M:
                row[dst] -= c * row[src]

    pivots = []
    r = 0
    for i in range(m):
        if r == n:
            break
        while True:
            nz = [j for j in range(r, n) if H[i][j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(H[i][j]))
            if j != r:
                col_swap(j, r)
            done = True
            for k in range(r + 1, n):
                if H[i][k]:
                    col_addmul(k, r, H[i][k] // H[i][r])
                    if H[i][k]:
                        done = False
            if done:
                break
        if H[i][r] == 0:
            continue
        if H[i][r] < 0:
            for M in (H, U):
                for row in M:
                    row[r] = -row[r]
        pivots.append((i, r))
        r += 1
    return H, U, pivots


def solve_integer_system(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """Some integer x with A x = b, or None when no integer solution exists."""
    m = len(A)
    if m == 0:
        return []
    n = len(A[0])
    H, U, pivots = column_hermite(A)
    y = [0] * n
    pivot_col = dict(pivots)
    for i in range(m):
        acc = sum(H[i][j] * y[j] for j in range(n))
        if i in pivot_col:
            k = pivot_col[i]
            acc -= H[i][k] * y[k]
            num = b[i] - acc
            if num % H[i][k]:
                return None
            y[k] = num // H[i][k]
        elif acc != b[i]:
            return None
    return [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
