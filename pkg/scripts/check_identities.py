"""Sweep the algebraic identities over fixtures and field sizes and print one line per check.

Covers: I homomorphism, I_psi homomorphism, HN relation, wall-crossing vs direct invariants,
and I_eq vs I_psi on orbit sums. Failures are listed, never raised.
"""

import argparse
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from quiverdt import load_fixture
from quiverdt.dt import dt_invariant, hn_check, wall_crossing_solve, within
from quiverdt.ffield import BudgetExceeded
from quiverdt.hall import HallElement, orbit_sums
from quiverdt.qtorus import integrate_I, integrate_Ieq, integrate_Ipsi
from quiverdt.quiver import check_homogeneous, sub_dimensions
from quiverdt.repenum import iso_classes


@dataclass
class SweepConfig:
    cases: list = field(default_factory=lambda: [
        ("a2", (2, 2), 2), ("a2", (2, 2), 3), ("jordan_l3", (2,), 2), ("jordan_l3", (2,), 3),
        ("three_loop", (2,), 2), ("conifold", (1, 1), 2), ("conifold", (1, 1), 3),
    ])


def _fits(a, bound):
    return all(x <= b for x, b in zip(a, bound))


def _plus(a, b):
    return tuple(x + y for x, y in zip(a, b))


def check_case(name, bound, q):
    fx = load_fixture(name)
    Q, W, F = fx.quiver, fx.potential, fx.field_spec(q)
    out = {}
    reps = [c.rep for a in sub_dimensions(bound, proper=False) for c in iso_classes(Q, a, F)]
    pairs = [(HallElement.of(M), HallElement.of(N)) for M, N in product(reps, repeat=2)
             if _fits(_plus(M.dim, N.dim), bound)]
    out["I hom"] = all(integrate_I(f * g, bound) == integrate_I(f, bound) * integrate_I(g, bound) for f, g in pairs)
    out["I_psi hom"] = all(integrate_Ipsi(f * g, W, bound) == integrate_Ipsi(f, W, bound) * integrate_Ipsi(g, W, bound)
                           for f, g in pairs)
    for label, theta in fx.stabilities.items():
        out[f"HN[{label}]"] = hn_check(Q, W, theta, F, bound).ok
        out[f"wall[{label}]"] = all(wall_crossing_solve(Q, W, a, theta, F) == dt_invariant(Q, W, a, theta, F)
                                    for a in within(bound))
    cond = f"gcd={gcd(check_homogeneous(W, fx.wt).value, q - 1)}" if W.terms else "W=0"
    basis = [f for a in sub_dimensions(bound, proper=False) for f in orbit_sums(Q, a, F, fx.wt)]
    agree = all(integrate_Ieq(f, W, fx.wt, bound) == integrate_Ipsi(f, W, bound) for f in basis)
    out[f"I_eq=I_psi ({cond})"] = agree
    return out


def main():
    argparse.ArgumentParser(description=__doc__.splitlines()[0]).parse_args()
    cfg = SweepConfig()
    for name, bound, q in cfg.cases:
        try:
            res = check_case(name, bound, q)
        except BudgetExceeded as exc:
            print(f"{name:<11} q={q} bound={bound}: budget exceeded ({exc})")
            continue
        line = "  ".join(f"{k}:{'ok' if v else 'FAIL'}" for k, v in res.items())
        print(f"{name:<11} q={q} bound={bound}  {line}")


if __name__ == "__main__":
    main()
