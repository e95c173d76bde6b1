from fractions import Fraction

import pytest

from quiverdt import field
from quiverdt.fixtures import FixtureSpec, parse_fixture, render_fixture
from quiverdt.framed import (
    FRAME, build_framed, build_hat_quiver, collapse, count_hat_dim_vectors, framed_dim, hat_dim_vectors,
)
from quiverdt.quiver import QuiverError, check_acyclic
from quiverdt.repenum import enumerate_reps, is_semistable

F2 = field(2)


@pytest.fixture(scope="module")
def jordan_f(jordan3):
    return build_framed(jordan3.quiver, [("f", FRAME, "1")])


@pytest.fixture(scope="module")
def a2_f(a2):
    return build_framed(a2.quiver, [("f", FRAME, "1")])


def test_build_framed_examples(jordan3, a2, jordan_f, a2_f):
    assert (jordan_f.n, len(jordan_f.arrows)) == (2, 2)
    assert (a2_f.n, len(a2_f.arrows)) == (3, 2)
    bare = build_framed(a2.quiver, [])
    assert bare.vertices == ("1", "2", FRAME) and bare.arrows == a2.quiver.arrows
    out = build_framed(a2.quiver, [("g", "2", FRAME)])
    assert out.arrow("g").target == FRAME
    with pytest.raises(QuiverError):
        build_framed(a2.quiver, [("g", "1", "2")])
    with pytest.raises(QuiverError):
        build_framed(jordan3.quiver, [("g", FRAME, FRAME)])


def test_hat_quiver_jordan(jordan_f):
    H = build_hat_quiver(jordan_f, {"l": 1, "f": 1}, (1,))
    assert H.N == 2
    assert len(H.quiver.vertices) == 10
    loops = [n for x, n in H.lifts if x == "l"]
    assert loops == [-2, -1, 0, 1]
    assert len([x for x, _ in H.lifts if x == "f"]) == 4
    assert len(hat_dim_vectors(H, (1,))) == 5 == count_hat_dim_vectors(H, (1,))
    assert len(hat_dim_vectors(H, (0,))) == 1


def test_hat_quiver_a2(a2_f):
    H = build_hat_quiver(a2_f, {"x": 1, "f": 1}, (1, 1))
    assert H.N == 3 and len(H.quiver.vertices) == 21
    assert len(hat_dim_vectors(H, (1, 1))) == 49 == count_hat_dim_vectors(H, (1, 1))


def test_zero_weight_cycle_rejected(jordan_f):
    with pytest.raises(QuiverError, match="l"):
        build_hat_quiver(jordan_f, {"l": 0, "f": 1}, (1,))
    with pytest.raises(QuiverError):
        build_hat_quiver(jordan_f, {"l": 1, "f": 0}, (1,))


def test_check_acyclic_examples(jordan3, a2):
    res = check_acyclic(jordan3.quiver)
    assert not res and res.witness == ("l",)
    assert check_acyclic(a2.quiver)


HAT_CASES = [
    ("jordan", {"l": 1, "f": 1}, (1,)), ("jordan", {"l": 2, "f": 1}, (2,)), ("jordan", {"l": 1, "f": 3}, (1,)),
    ("a2", {"x": 1, "f": 1}, (1, 1)), ("a2", {"x": 0, "f": 2}, (2, 1)),
]


def _framed(kind, jordan_f, a2_f):
    return jordan_f if kind == "jordan" else a2_f


@pytest.mark.parametrize("kind, wt, a", HAT_CASES)
def test_hat_structure(kind, wt, a, jordan_f, a2_f):
    Qp = _framed(kind, jordan_f, a2_f)
    H = build_hat_quiver(Qp, wt, a, (Fraction(1),) * Qp.n)
    assert check_acyclic(H.quiver)
    levels = dict(zip(H.quiver.vertices, H.levels))
    for arrow, (x, n) in zip(H.quiver.arrows, H.lifts):
        (_, ls), (_, lt) = levels[arrow.source], levels[arrow.target]
        assert ls == n and lt == n + wt[x] and -H.N <= ls <= lt <= H.N
        if wt[x] > 0:
            assert lt > ls
    for v, (base, _) in zip(H.quiver.vertices, H.levels):
        assert H.theta[H.quiver.vertex_index[v]] == 1
    dims = hat_dim_vectors(H, a)
    assert len(dims) == count_hat_dim_vectors(H, a) == len(set(dims))
    for d in dims:
        totals = dict.fromkeys(Qp.vertices, 0)
        for (v, n), k in zip(H.levels, d):
            totals[v] += k
            if v == FRAME:
                assert k == (n == 0)
        assert tuple(totals[v] for v in Qp.vertices) == framed_dim(a)


# with the framing arrow * -> 1, theta' = (1, 0) destabilizes everything: the vertex 1 part is a subrep
@pytest.mark.parametrize("kind, a, theta, nonempty", [
    ("jordan", (1,), (0, 1), True), ("jordan", (1,), (1, 0), False), ("jordan", (1,), (0, 0), True),
    ("a2", (1, 0), (0, 0, 1), True), ("a2", (1, 1), (0, 0, 1), True), ("a2", (1, 1), (1, 0, 0), False),
])
def test_hat_semistable_collapses_to_semistable(kind, a, theta, nonempty, jordan_f, a2_f):
    Qp = _framed(kind, jordan_f, a2_f)
    wt = {x.name: 1 for x in Qp.arrows}
    H = build_hat_quiver(Qp, wt, a, theta)
    seen = 0
    for d in hat_dim_vectors(H, a):
        for M in enumerate_reps(H.quiver, d, F2):
            if is_semistable(M, H.theta):
                N = collapse(H, M)
                assert N.dim == framed_dim(a)
                assert is_semistable(N, theta)
                seen += 1
    assert (seen > 0) == nonempty


def test_collapse_preserves_blocks(jordan_f):
    H = build_hat_quiver(jordan_f, {"l": 1, "f": 1}, (1,))
    d = next(d for d in hat_dim_vectors(H, (1,)) if d[H.levels.index(("1", 1))])
    for M in enumerate_reps(H.quiver, d, F2):
        N = collapse(H, M)
        assert N.mat("l") == ((0,),)
        assert N.mat("f") == M.mat("f@0")


@pytest.mark.parametrize("kind, wt, a", HAT_CASES)
def test_hat_quiver_text_round_trip(kind, wt, a, jordan_f, a2_f):
    H = build_hat_quiver(_framed(kind, jordan_f, a2_f), wt, a)
    spec = FixtureSpec(H.quiver, weights={x.name: wt[b] for x, (b, _) in zip(H.quiver.arrows, H.lifts)},
                       stabilities={"hat": H.theta})
    again = parse_fixture(render_fixture(spec))
    assert again == spec
