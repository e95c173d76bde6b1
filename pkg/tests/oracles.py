"""Naive reference computations over prime fields, sharing no code with the package.

Matrices are nested lists, arithmetic is plain ``% p``.
"""

from fractions import Fraction
from itertools import combinations, product


def det_mod(M, p):
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    det = 1
    for c in range(n):
        r = next((i for i in range(c, n) if M[i][c] % p), None)
        if r is None:
            return 0
        if r != c:
            M[c], M[r] = M[r], M[c]
            det = -det
        det = det * M[c][c] % p
        inv = pow(M[c][c], p - 2, p)
        for i in range(c + 1, n):
            f = M[i][c] * inv % p
            for j in range(c, n):
                M[i][j] = (M[i][j] - f * M[c][j]) % p
    return det % p


def all_matrices(r, c, p):
    for flat in product(range(p), repeat=r * c):
        yield [list(flat[i * c:(i + 1) * c]) for i in range(r)]


def gl_count(n, p):
    return sum(1 for M in all_matrices(n, n, p) if det_mod(M, p))


def mul(A, B, p):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) % p for j in range(len(B[0]))] for i in range(len(A))]


def tr(A, p):
    return sum(A[i][i] for i in range(len(A))) % p


def loop_quiver_counts(n_loops, terms, d, p):
    """Points of R(one vertex with n loops, d) and how many have w = 0.

    ``terms`` are (coefficient, sequence of loop indices); paths compose in traversal order.
    """
    total = zero = 0
    for mats in product(list(all_matrices(d, d, p)), repeat=n_loops):
        w = 0
        for c, cyc in terms:
            P = [[int(i == j) for j in range(d)] for i in range(d)]
            for k in cyc:
                P = mul(mats[k], P, p)
            w = (w + c * tr(P, p)) % p
        total += 1
        zero += w == 0
    return total, zero


def dt_one_vertex(n_loops, terms, d, p):
    """A_d for a one-vertex quiver at theta = 0, as (rational part, coefficient of s).

    (-s)^{T} (S - p S0)/(1 - p) with T = d^2 (1 - n_loops).
    """
    total, zero = loop_quiver_counts(n_loops, terms, d, p)
    g = gl_count(d, p)
    val = (Fraction(total, g) - p * Fraction(zero, g)) / (1 - p)
    T = d * d * (1 - n_loops)
    k, r = divmod(T, 2)
    factor = Fraction(p) ** k
    return (val * factor, Fraction(0)) if r == 0 else (Fraction(0), -val * factor)


def subspace_count_bruteforce(n, d, p):
    """Distinct spans of d-tuples of vectors having dimension d, via sets of their elements."""
    vecs = list(product(range(p), repeat=n))
    spans = set()
    for basis in combinations(vecs, d):
        span = set()
        for coeffs in product(range(p), repeat=d):
            span.add(tuple(sum(c * v[i] for c, v in zip(coeffs, basis)) % p for i in range(n)))
        if len(span) == p ** d:
            spans.add(frozenset(span))
    return len(spans)


def snf_solvable(rows, rhs):
    """Integer solvability via Smith normal forms: equal rank and equal determinantal divisors."""
    import sympy
    from sympy.matrices.normalforms import smith_normal_form

    A = sympy.Matrix(rows)
    Ab = A.row_join(sympy.Matrix(rhs))
    if A.rank() != Ab.rank():
        return False

    def divisor(M):
        D = smith_normal_form(M, domain=sympy.ZZ)
        out = 1
        for i in range(min(D.shape)):
            if D[i, i] != 0:
                out *= D[i, i]
        return abs(out)

    return divisor(A) == divisor(Ab)
