"""Tables of counting DT invariants for the bundled fixtures.

    python scripts/dt_tables.py --fixture three_loop --q 2 3 --bound 2
"""

import argparse
from dataclasses import dataclass, field

from quiverdt import load_fixture
from quiverdt.dt import dt_report
from quiverdt.ffield import BudgetExceeded
from quiverdt.repenum import Budget


@dataclass
class TableConfig:
    fixture: str = "a2"
    qs: list = field(default_factory=lambda: [2, 3])
    theta: str | None = None
    bound: tuple = (2, 2)
    max_points: int = 1 << 16


def run(cfg: TableConfig):
    fx = load_fixture(cfg.fixture)
    theta = fx.theta(cfg.theta)
    budget = Budget(max_points=cfg.max_points)
    print(f"# {cfg.fixture}, theta = {tuple(map(str, theta))}, bound {cfg.bound}")
    print(f"{'q':>3} {'dim':>10} {'slope':>6} {'sst':>8} {'sst_w0':>8} {'#GL':>8}  A")
    for q in cfg.qs:
        F = fx.field_spec(q)
        try:
            rep = dt_report(fx.quiver, fx.potential, theta, F, cfg.bound, budget)
        except BudgetExceeded as exc:
            print(f"{q:>3} skipped: {exc}")
            continue
        for r in rep.records:
            print(f"{q:>3} {str(r.dim):>10} {str(r.slope):>6} {r.semistable:>8} {r.semistable_w0:>8} {r.gl:>8}  {r.invariant}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--fixture", default="a2")
    p.add_argument("--q", type=int, nargs="+", default=[2, 3])
    p.add_argument("--theta", default=None)
    p.add_argument("--bound", default=None, help="comma separated; default 2 per vertex")
    p.add_argument("--max-points", type=int, default=1 << 16)
    a = p.parse_args()
    n = load_fixture(a.fixture).quiver.n
    bound = tuple(int(x) for x in a.bound.split(",")) if a.bound else (2,) * n
    run(TableConfig(a.fixture, a.q, a.theta, bound, a.max_points))


if __name__ == "__main__":
    main()
