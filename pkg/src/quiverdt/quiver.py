"""Quivers with potentials: data model, bilinear forms, slopes and weight checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

DimVector = tuple[int, ...]
Theta = tuple[Fraction, ...]
Cycle = tuple[str, ...]


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "arrows", tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex")
        seen = set()
        for a in self.arrows:
            if a.name in seen:
                raise QuiverError(f"duplicate arrow name {a.name!r}")
            seen.add(a.name)
            for v in (a.source, a.target):
                if v not in self.vertices:
                    raise QuiverError(f"arrow {a.name!r} uses undeclared vertex {v!r}")

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def ends(self) -> tuple[tuple[int, int], ...]:
        """(source index, target index) per arrow, in arrow order."""
        vi = self.vertex_index
        return tuple((vi[a.source], vi[a.target]) for a in self.arrows)

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrows[self.arrow_index[name]]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def dim(self, a: Iterable[int]) -> DimVector:
        """Validate and normalize a dimension vector."""
        a = tuple(int(x) for x in a)
        if len(a) != self.n:
            raise QuiverError(f"dimension vector {a} has length {len(a)}, quiver has {self.n} vertices")
        if any(x < 0 for x in a):
            raise QuiverError(f"negative entry in dimension vector {a}")
        return a

    def zero(self) -> DimVector:
        return (0,) * self.n


def _check_len(Q: Quiver, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != Q.n:
            raise QuiverError(f"vector {tuple(v)} does not match {Q.n} vertices")


def euler_form(Q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    _check_len(Q, a, b)
    return sum(x * y for x, y in zip(a, b)) - sum(a[s] * b[t] for s, t in Q.ends)


def skew_form(Q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    return euler_form(Q, a, b) - euler_form(Q, b, a)


def tits_form(Q: Quiver, a: Sequence[int]) -> int:
    return euler_form(Q, a, a)


def as_theta(values: Iterable) -> Theta:
    return tuple(Fraction(v) for v in values)


def slope(theta: Sequence[Fraction], a: Sequence[int]) -> Fraction:
    if len(theta) != len(a):
        raise QuiverError("stability and dimension vector lengths differ")
    total = sum(a)
    if total == 0:
        raise QuiverError("slope of the zero dimension vector is undefined")
    return Fraction(sum(Fraction(t) * x for t, x in zip(theta, a))) / total


def sub_dimensions(a: Sequence[int], proper: bool = True) -> Iterable[DimVector]:
    """All 0 <= b <= a componentwise; with ``proper`` the ends 0 and a are skipped."""
    a = tuple(a)
    zero = (0,) * len(a)
    for b in product(*(range(x + 1) for x in a)):
        if proper and (b == zero or b == a):
            continue
        yield b


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a structural check; ``witness`` explains a failure (or success)."""

    ok: bool
    witness: object = None
    value: object = None

    def __bool__(self) -> bool:
        return self.ok


def is_generic(theta: Sequence[Fraction], a: Sequence[int]) -> CheckResult:
    mu = slope(theta, a)
    for b in sub_dimensions(a):
        if slope(theta, b) == mu:
            return CheckResult(False, b)
    return CheckResult(True)


# -- potentials ---------------------------------------------------------------


def min_rotation(cycle: Sequence[str]) -> Cycle:
    cycle = tuple(cycle)
    return min(cycle[i:] + cycle[:i] for i in range(len(cycle)))


def validate_cycle(Q: Quiver, cycle: Sequence[str]) -> None:
    if not cycle:
        raise QuiverError("empty cycle")
    arrows = [Q.arrow(x) for x in cycle]
    for i in range(len(arrows) - 1):
        if arrows[i].target != arrows[i + 1].source:
            raise QuiverError(
                f"non-composable cycle: {arrows[i].name} ends at {arrows[i].target}, "
                f"{arrows[i + 1].name} starts at {arrows[i + 1].source}"
            )
    if arrows[-1].target != arrows[0].source:
        raise QuiverError(
            f"open cycle: {arrows[-1].name} ends at {arrows[-1].target}, "
            f"{arrows[0].name} starts at {arrows[0].source}"
        )


@dataclass(frozen=True)
class Potential:
    """Integer combination of cycles. Terms are kept rotation-normalized and merged."""

    terms: tuple[tuple[int, Cycle], ...] = ()

    @classmethod
    def build(cls, Q: Quiver, terms: Iterable[tuple[int, Sequence[str]]]) -> "Potential":
        acc: dict[Cycle, int] = {}
        for c, cyc in terms:
            validate_cycle(Q, cyc)
            key = min_rotation(cyc)
            acc[key] = acc.get(key, 0) + int(c)
        return cls(tuple((c, u) for u, c in sorted(acc.items()) if c != 0))

    @property
    def cycles(self) -> list[Cycle]:
        return [u for _, u in self.terms]

    def is_zero(self) -> bool:
        return not self.terms


def content(Q: Quiver, cycle: Sequence[str]) -> tuple[int, ...]:
    counts = Counter(cycle)
    return tuple(counts.get(a.name, 0) for a in Q.arrows)


def cyclic_derivative(Q: Quiver, W: Potential, a: str) -> dict[Cycle, int]:
    """Paths of dW/da keyed by arrow sequence (traversal order), integer coefficients.

    Every path runs from t(a) back to s(a); the empty tuple is the trivial path there.
    """
    Q.arrow(a)
    out: dict[Cycle, int] = {}
    for c, u in W.terms:
        for i, x in enumerate(u):
            if x == a:
                path = u[i + 1:] + u[:i]
                out[path] = out.get(path, 0) + c
    return {p: c for p, c in out.items() if c != 0}


# -- weights -------------------------------------------------------------------


def cycle_weight(wt: Mapping[str, int], cycle: Iterable[str]) -> int:
    return sum(wt[x] for x in cycle)


def check_homogeneous(W: Potential, wt: Mapping[str, int]) -> CheckResult:
    """``value`` carries wt(W) on success; ``witness`` is a pair of cycles of different weight."""
    first = None
    for _, u in W.terms:
        w = cycle_weight(wt, u)
        if first is None:
            first = (u, w)
        elif w != first[1]:
            return CheckResult(False, (first[0], u), None)
    return CheckResult(True, None, None if first is None else first[1])


def find_cycle(Q: Quiver, arrows: Iterable[str] | None = None) -> Cycle | None:
    """Some directed cycle (arrow names) using only ``arrows``, or None if that subquiver is acyclic."""
    allowed = {a.name for a in Q.arrows} if arrows is None else set(arrows)
    out_edges: dict[str, list[Arrow]] = {v: [] for v in Q.vertices}
    for a in Q.arrows:
        if a.name in allowed:
            out_edges[a.source].append(a)
    color = dict.fromkeys(Q.vertices, 0)
    # iterative DFS; stack of (vertex, edge iterator); path keeps arrows on the current branch
    for root in Q.vertices:
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(out_edges[root]))]
        path: list[Arrow] = []
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[v] = 2
                stack.pop()
                if path:
                    path.pop()
                continue
            w = nxt.target
            if color[w] == 1:
                # back edge closes a cycle starting at w
                names = [b.name for b in path] + [nxt.name]
                starts = [b.source for b in path] + [nxt.source]
                return tuple(names[starts.index(w):])
            if color[w] == 0:
                color[w] = 1
                path.append(nxt)
                stack.append((w, iter(out_edges[w])))
    return None


def check_positive_on_cycles(Q: Quiver, wt: Mapping[str, int]) -> CheckResult:
    if any(wt[a.name] < 0 for a in Q.arrows):
        raise QuiverError("weights must be nonnegative")
    cyc = find_cycle(Q, [a.name for a in Q.arrows if wt[a.name] == 0])
    return CheckResult(cyc is None, cyc)


def check_acyclic(Q: Quiver) -> CheckResult:
    cyc = find_cycle(Q)
    return CheckResult(cyc is None, cyc)


# -- grading lattice -----------------------------------------------------------


@dataclass(frozen=True)
class GradingLattice:
    """Presentation of (Z^{arrows} + Z) / <(content(u), -1)> with distinguished class omega."""

    quiver: Quiver
    relations: tuple[tuple[int, ...], ...]
    omega: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "omega", (0,) * len(self.quiver.arrows) + (1,))

    @classmethod
    def from_potential(cls, Q: Quiver, W: Potential) -> "GradingLattice":
        return cls(Q, tuple(content(Q, u) + (-1,) for u in W.cycles))


def check_primitive(L: GradingLattice) -> CheckResult:
    """Whether omega: Z -> Lambda splits.

    A splitting is a functional on Z^{arrows} + Z killing every relation and sending
    omega to 1, i.e. integers g on arrows with g(content(u)) = 1 for each cycle u.
    On success ``witness`` is such a g (dict arrow -> int).
    """
    from .lattice import solve_integer_system

    rows = [r[:-1] for r in L.relations]
    if not rows:
        return CheckResult(True, {a.name: 0 for a in L.quiver.arrows})
    g = solve_integer_system(rows, [1] * len(rows))
    if g is None:
        return CheckResult(False)
    return CheckResult(True, {a.name: x for a, x in zip(L.quiver.arrows, g)})
