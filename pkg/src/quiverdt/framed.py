"""Framed quivers and the level-graded quiver of torus-fixed framed representations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterator, Mapping, Sequence

from .quiver import Arrow, DimVector, Quiver, QuiverError, check_positive_on_cycles
from .repenum import Representation

FRAME = "*"


def build_framed(Q: Quiver, framing: Sequence[tuple[str, str, str]]) -> Quiver:
    """Q plus a vertex ``*`` and framing arrows (name, source, target) with exactly one end at ``*``."""
    if FRAME in Q.vertices:
        raise QuiverError("quiver already has a vertex named '*'")
    arrows = list(Q.arrows)
    for name, s, t in framing:
        if (s == FRAME) == (t == FRAME):
            raise QuiverError(f"framing arrow {name!r} must join '*' to an old vertex")
        arrows.append(Arrow(name, s, t))
    return Quiver(Q.vertices + (FRAME,), tuple(arrows))


def framed_dim(a: Sequence[int]) -> DimVector:
    return tuple(a) + (1,)


def level_name(vertex: str, n: int) -> str:
    return f"{vertex}@{n}"


@dataclass(frozen=True)
class HatQuiver:
    quiver: Quiver
    base: Quiver
    weights: tuple[tuple[str, int], ...]
    N: int
    theta: tuple[Fraction, ...]
    levels: tuple[tuple[str, int], ...]  # per hat vertex: (base vertex, level)
    lifts: tuple[tuple[str, int], ...]  # per hat arrow: (base arrow, source level)

    @property
    def wt(self) -> dict[str, int]:
        return dict(self.weights)


def build_hat_quiver(Qp: Quiver, wt: Mapping[str, int], a: Sequence[int], theta_prime=None) -> HatQuiver:
    """Vertices (i, n) for -N <= n <= N, arrows (x, n): (s(x), n) -> (t(x), n + wt(x)).

    N = |a'| * max wt with a' = (a, 1). The lifted stability is constant along levels.
    """
    if FRAME not in Qp.vertices:
        raise QuiverError("expected a framed quiver with vertex '*'")
    pos = check_positive_on_cycles(Qp, wt)
    if not pos:
        raise QuiverError(f"weight is not positive on the cycle {' '.join(pos.witness)}")
    for x in Qp.arrows:
        if FRAME in (x.source, x.target) and wt[x.name] < 1:
            raise QuiverError(f"framing arrow {x.name!r} needs positive weight")
    ap = framed_dim(a) if len(a) == Qp.n - 1 else tuple(a)
    m = max((wt[x.name] for x in Qp.arrows), default=0)
    N = sum(ap) * m
    theta_prime = tuple(Fraction(t) for t in (theta_prime or (0,) * Qp.n))
    levels = tuple((v, n) for v in Qp.vertices for n in range(-N, N + 1))
    arrows, lifts = [], []
    for x in Qp.arrows:
        w = wt[x.name]
        for n in range(-N, N - w + 1):
            arrows.append(Arrow(level_name(x.name, n), level_name(x.source, n), level_name(x.target, n + w)))
            lifts.append((x.name, n))
    hat = Quiver(tuple(level_name(v, n) for v, n in levels), tuple(arrows))
    theta_hat = tuple(theta_prime[Qp.vertex_index[v]] for v, _ in levels)
    return HatQuiver(hat, Qp, tuple(sorted(wt.items())), N, theta_hat, levels, tuple(lifts))


def hat_dim_vectors(H: HatQuiver, a: Sequence[int]) -> list[DimVector]:
    """Level decompositions of (a, 1) with the framing dimension sitting at level 0."""
    Qp, N = H.base, H.N
    width = 2 * N + 1
    per_vertex = []
    for v in Qp.vertices:
        if v == FRAME:
            per_vertex.append([tuple(int(n == 0) for n in range(-N, N + 1))])
        else:
            per_vertex.append(list(_spread(a[Qp.vertex_index[v]], width)))
    return [sum(choice, ()) for choice in product(*per_vertex)]


def _spread(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 1:
        yield (total,)
        return
    for k in range(total + 1):
        for rest in _spread(total - k, slots - 1):
            yield (k,) + rest


def count_hat_dim_vectors(H: HatQuiver, a: Sequence[int]) -> int:
    """Stars and bars: prod_i C(a_i + 2N, 2N)."""
    width = 2 * H.N + 1
    out = 1
    for x in a:
        out *= comb(x + width - 1, width - 1)
    return out


def collapse(H: HatQuiver, M: Representation) -> Representation:
    """Forget the grading: a hat representation becomes a Q'-representation, levels ascending."""
    Qp, hat = H.base, H.quiver
    offsets: dict[tuple[str, int], int] = {}
    dims = dict.fromkeys(Qp.vertices, 0)
    for (v, n), d in zip(H.levels, M.dim):
        offsets[(v, n)] = dims[v]
        dims[v] += d
    dim = tuple(dims[v] for v in Qp.vertices)
    blocks = {x.name: [[0] * dim[Qp.vertex_index[x.source]] for _ in range(dim[Qp.vertex_index[x.target]])] for x in Qp.arrows}
    for (xname, n), A in zip(H.lifts, M.mats):
        x = Qp.arrow(xname)
        r0 = offsets[(x.target, n + H.wt[xname])]
        c0 = offsets[(x.source, n)]
        for i, row in enumerate(A):
            for j, val in enumerate(row):
                blocks[xname][r0 + i][c0 + j] = val
    return Representation.from_arrays(Qp, M.field, dim, blocks)
