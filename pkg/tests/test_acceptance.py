"""Acceptance gate: ten criteria, each run exhaustively at its stated size and tolerance (exact equality).

Every criterion prints one PASS/FAIL line with its wall time. Run with ``pytest -s`` to see the lines
inline, or ``python tests/test_acceptance.py`` for the summary alone.
"""

import sys
import time
from fractions import Fraction
from itertools import product
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import dt_one_vertex, snf_solvable  # noqa: E402
from quiverdt import Coef, field, load_fixture  # noqa: E402
from quiverdt.dt import dt_character_sum, dt_invariant, hn_check, wall_crossing_solve, within  # noqa: E402
from quiverdt.fixtures import FixtureError, bundled_fixtures, parse_fixture, render_fixture  # noqa: E402
from quiverdt.framed import FRAME, build_framed, build_hat_quiver, count_hat_dim_vectors, hat_dim_vectors  # noqa: E402
from quiverdt.hall import HallElement, orbit_sums  # noqa: E402
from quiverdt.qtorus import integrate_I, integrate_Ieq, integrate_Ipsi  # noqa: E402
from quiverdt.quiver import (  # noqa: E402
    GradingLattice, check_acyclic, check_homogeneous, check_primitive, content, sub_dimensions,
)
from quiverdt.repenum import (  # noqa: E402
    aut_order, enumerate_reps, is_semistable, iso_classes, potential_trace, quotient_rep, restrict, stack_count,
    subrepresentations,
)


def fits(a, bound):
    return all(x <= b for x, b in zip(a, bound))


def plus(a, b):
    return tuple(x + y for x, y in zip(a, b))


def classes(Q, F, bound):
    return [c.rep for a in sub_dimensions(bound, proper=False) for c in iso_classes(Q, a, F)]


def degree(f):
    (d,) = f.degrees()
    return d


def criterion_1():
    checked = 0
    for name, bound in [("a2", (2, 2)), ("jordan_l3", (2,))]:
        Q, F = load_fixture(name).quiver, field(2)
        reps = classes(Q, F, bound)
        for M, N in product(reps, repeat=2):
            if not fits(plus(M.dim, N.dim), bound):
                continue
            f, g = HallElement.of(M), HallElement.of(N)
            if integrate_I(f * g, bound) != integrate_I(f, bound) * integrate_I(g, bound):
                return False, f"I(fg) != I(f)I(g) on {name}"
            checked += 1
    return True, f"{checked} class pairs"


def equivariant_basis(fx, F, bound):
    return [f for a in sub_dimensions(bound, proper=False) for f in orbit_sums(fx.quiver, a, F, fx.wt)]


def criterion_2():
    fx, F, bound = load_fixture("jordan_l3"), field(3), (2,)
    basis = equivariant_basis(fx, F, bound)
    checked = 0
    for f, g in product(basis, repeat=2):
        if not fits(plus(degree(f), degree(g)), bound):
            continue
        Ieq = lambda h: integrate_Ieq(h, fx.potential, fx.wt, bound)  # noqa: E731
        if Ieq(f * g) != Ieq(f) * Ieq(g):
            return False, "I_eq(fg) != I_eq(f) I_eq(g)"
        checked += 1
    return True, f"{checked} orbit-sum pairs"


def criterion_3():
    fx, bound = load_fixture("jordan_l3"), (2,)
    d = check_homogeneous(fx.potential, fx.wt).value
    checked = 0
    for q in (2, 3):
        assert gcd(d, q - 1) == 1
        F = field(q)
        basis = equivariant_basis(fx, F, bound)
        elems = list(basis) + [f * g for f, g in product(basis, repeat=2) if fits(plus(degree(f), degree(g)), bound)]
        for f in elems:
            if integrate_Ieq(f, fx.potential, fx.wt, bound) != integrate_Ipsi(f, fx.potential, bound):
                return False, f"I_eq != I_psi at q={q}"
            checked += 1
    return True, f"{checked} equivariant elements"


def criterion_4():
    fx = load_fixture("a2")
    for q in (2, 3):
        rep = hn_check(fx.quiver, fx.potential, (1, 0), field(q), (2, 2))
        if not rep.ok:
            return False, f"q={q} mismatches at {rep.mismatches}"
    return True, "q=2,3 bound (2,2), 9 degrees each"


def coef(F, r, s=0):
    ring = (F.p, F.q)
    return Coef.rational(ring, Fraction(r)) + Coef.s(ring) * Fraction(s)


def criterion_5():
    a2 = load_fixture("a2")
    n = 0
    for q in (2, 3):
        F = field(q)
        for a in within((2, 2)):
            if wall_crossing_solve(a2.quiver, a2.potential, a, (1, 0), F) != \
                    dt_invariant(a2.quiver, a2.potential, a, (1, 0), F):
                return False, f"A2 a={a} q={q}"
            n += 1
    loop3, F = load_fixture("three_loop"), field(2)
    for a in [(1,), (2,)]:
        direct = dt_invariant(loop3.quiver, loop3.potential, a, (0,), F)
        if wall_crossing_solve(loop3.quiver, loop3.potential, a, (0,), F) != direct:
            return False, f"3-loop a={a}"
        n += 1
    oracle = coef(F, *dt_one_vertex(3, [(1, (0, 1, 2)), (-1, (0, 2, 1))], 2, 2))
    if dt_invariant(loop3.quiver, loop3.potential, (2,), (0,), F) != oracle:
        return False, "3-loop a=(2) disagrees with the 2^12-point oracle"
    return True, f"{n} invariants, 3-loop (2) = {oracle}"


def criterion_6():
    jordan, loop3, a2 = load_fixture("jordan_l3"), load_fixture("three_loop"), load_fixture("a2")
    for q in (2, 3):
        F = field(q)
        oracle = coef(F, *dt_one_vertex(1, [(1, (0, 0, 0))], 1, q))
        for val in (dt_invariant(jordan.quiver, jordan.potential, (1,), (0,), F),
                    dt_character_sum(jordan.quiver, jordan.potential, (1,), F), oracle):
            if val != coef(F, 0):
                return False, f"Jordan A_(1) = {val} at q={q}"
        expected = Fraction(q * q, q - 1)
        oracle = coef(F, *dt_one_vertex(3, [(1, (0, 1, 2)), (-1, (0, 2, 1))], 1, q))
        if not (dt_invariant(loop3.quiver, loop3.potential, (1,), (0,), F) == oracle == coef(F, expected)):
            return False, f"3-loop A_(1) at q={q}"
    F = field(2)
    if dt_invariant(a2.quiver, a2.potential, (1, 1), (1, 0), F) != coef(F, 0, -1):
        return False, "A2 A_(1,1)"
    return True, "Jordan 0 (q=2,3), 3-loop 4 and 9/2, A2 -s"


BURNSIDE_RANGES = {
    "a2": [((2, 2), 2), ((2, 2), 3)],
    "jordan_l2": [((3,), 2), ((2,), 3)],
    "jordan_l3": [((3,), 2), ((2,), 3)],
    "three_loop": [((2,), 2), ((1,), 3)],
    "conifold": [((2, 1), 2), ((1, 1), 3)],
}


def criterion_7():
    n = 0
    for name in bundled_fixtures():
        fx = load_fixture(name)
        thetas = list(fx.stabilities.values()) or [(0,) * fx.quiver.n]
        for bound, q in BURNSIDE_RANGES[name]:
            F = field(q)
            for a in within(bound):
                cls = list(iso_classes(fx.quiver, a, F))
                for theta in thetas:
                    lhs = sum((Fraction(1, aut_order(c.rep)) for c in cls if is_semistable(c.rep, theta)), Fraction(0))
                    if lhs != stack_count(fx.quiver, a, theta, F):
                        return False, f"{name} a={a} q={q} theta={theta}"
                    n += 1
    return True, f"{n} (fixture, dim, q, theta) cases"


def criterion_8():
    expected = {"jordan_l2": False, "jordan_l3": False, "three_loop": True, "conifold": True}
    for name, want in expected.items():
        fx = load_fixture(name)
        res = check_primitive(GradingLattice.from_potential(fx.quiver, fx.potential))
        rows = [content(fx.quiver, u) for u in fx.potential.cycles]
        if res.ok != want or snf_solvable(rows, [1] * len(rows)) != want:
            return False, f"primitivity of {name}"
        if want and any(sum(res.witness[x] for x in u) != 1 for u in fx.potential.cycles):
            return False, f"bad witness for {name}"
    hats = 0
    for name, framing, dims in [("jordan_l3", [("f", FRAME, "1")], [(0,), (1,), (2,)]),
                                ("a2", [("f", FRAME, "1")], [(1, 0), (1, 1), (2, 1)]),
                                ("conifold", [("f", FRAME, "1"), ("g", "2", FRAME)], [(1, 1)]),
                                ("three_loop", [("f", FRAME, "1")], [(1,), (2,)])]:
        fx = load_fixture(name)
        Qp = build_framed(fx.quiver, framing)
        wt = {**{x: max(w, 1) for x, w in fx.wt.items()}, **{f[0]: 1 for f in framing}}
        for a in dims:
            H = build_hat_quiver(Qp, wt, a)
            if not check_acyclic(H.quiver):
                return False, f"hat quiver of {name} {a} has a cycle"
            if len(hat_dim_vectors(H, a)) != count_hat_dim_vectors(H, a):
                return False, f"hat dimension count for {name} {a}"
            hats += 1
    return True, f"primitivity 4/4, {hats} hat quivers"


ADDITIVITY_RANGES = {"a2": (2, 2), "jordan_l2": (3,), "jordan_l3": (3,), "three_loop": (2,), "conifold": (2, 1)}


def criterion_9():
    F = field(2)
    n = 0
    for name in bundled_fixtures():
        fx = load_fixture(name)
        W = fx.potential
        for a in within(ADDITIVITY_RANGES[name]):
            for X in enumerate_reps(fx.quiver, a, F):
                wX = potential_trace(X, W)
                for U in subrepresentations(X):
                    if wX != F.add(potential_trace(restrict(X, U), W), potential_trace(quotient_rep(X, U), W)):
                        return False, f"{name} X={X.key()}"
                    n += 1
    return True, f"{n} (X, subrep) pairs"


PARSER_ERRORS = [
    ("vertex 1\narrow x : 1 -> 1\npotential 1 x zz\n", (3, 15)),
    ("vertex 1\nvertex 2\narrow x : 1 -> 2\narrow y : 1 -> 2\npotential 1 x y\n", (5, 13)),
    ("vertex 1\nvertex 2\narrow x : 1 -> 2\narrow y : 2 -> 2\npotential 1 x y\n", (5, 13)),
    ("vertex 1\narrow x : 1 -> 1\narrow x : 1 -> 1\n", (3, 7)),
    ("vertex 1\narrow x : 1 -> 2\n", (2, 16)),
    ("vertex 1\nstability m : 1/0\n", (2, 15)),
    ("vertex 1\nweight y = 1\n", (2, 8)),
]


def criterion_10():
    for name in bundled_fixtures():
        spec = load_fixture(name)
        if parse_fixture(render_fixture(spec)) != spec:
            return False, f"round trip of {name}"
    for text, where in PARSER_ERRORS:
        try:
            parse_fixture(text)
        except FixtureError as exc:
            if (exc.line, exc.column) != where:
                return False, f"error located at {(exc.line, exc.column)}, expected {where}"
        else:
            return False, f"accepted bad fixture {text!r}"
    return True, f"{len(bundled_fixtures())} fixtures, {len(PARSER_ERRORS)} error cases"


CRITERIA = [
    (1, "integration map I is a homomorphism", criterion_1, 60),
    (2, "I_eq is a homomorphism on orbit sums", criterion_2, 60),
    (3, "I_eq = I_psi when gcd(wt(W), q-1) = 1", criterion_3, 60),
    (4, "HN relation in the quantum torus", criterion_4, 60),
    (5, "wall-crossing = direct definition", criterion_5, 300),
    (6, "concrete invariants vs oracles", criterion_6, 300),
    (7, "Burnside / stack count consistency", criterion_7, 300),
    (8, "primitivity, hat acyclicity, hat counts", criterion_8, 300),
    (9, "additivity of w on subrepresentations", criterion_9, 300),
    (10, "fixture round trip and located errors", criterion_10, 300),
]


def evaluate(number, title, fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < limit
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail}; {elapsed:.1f}s, limit {limit}s)"
    return ok, line


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    ok, line = evaluate(number, title, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
