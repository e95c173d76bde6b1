"""Compare I_eq and I_psi on scaling-orbit sums, with and without gcd(wt(W), q - 1) = 1.

Outside the gcd condition t -> t^{wt(W)} is not a bijection of F_q^*, and the two maps can disagree.
Prints each orbit sum where they differ.
"""

from dataclasses import dataclass, field
from math import gcd

from quiverdt import load_fixture
from quiverdt.hall import orbit_sums
from quiverdt.qtorus import integrate_Ieq, integrate_Ipsi
from quiverdt.quiver import check_homogeneous, sub_dimensions


@dataclass
class GcdConfig:
    cases: list = field(default_factory=lambda: [
        ("jordan_l2", (2,), 2), ("jordan_l2", (2,), 3), ("jordan_l3", (2,), 3), ("jordan_l3", (1,), 4),
        ("jordan_l3", (1,), 7), ("conifold", (1, 1), 2), ("conifold", (1, 1), 3),
    ])


def report(name, bound, q):
    fx = load_fixture(name)
    F = fx.field_spec(q)
    d = check_homogeneous(fx.potential, fx.wt).value
    g = gcd(d, q - 1)
    diffs, total = [], 0
    for a in sub_dimensions(bound, proper=False):
        for f in orbit_sums(fx.quiver, a, F, fx.wt):
            total += 1
            lhs, rhs = integrate_Ieq(f, fx.potential, fx.wt, bound), integrate_Ipsi(f, fx.potential, bound)
            if lhs != rhs:
                (M, _), *_ = f.items()
                diffs.append(f"    orbit of {M.key()} (dim {M.dim}): I_eq {lhs[M.dim]}  I_psi {rhs[M.dim]}")
    print(f"{name:<10} q={q} wt(W)={d} gcd={g}: {len(diffs)}/{total} orbit sums differ")
    for line in diffs:
        print(line)


def main():
    for case in GcdConfig().cases:
        report(*case)


if __name__ == "__main__":
    main()
