"""Command line entry point: ``quiverdt <command> <fixture> [options]``.

Exit status: 0 success, 1 usage or parse error, 2 verification failure,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import dt as dtmod
from .coefring import Coef
from .ffield import BudgetExceeded
from .fixtures import FixtureError, FixtureSpec, load_fixture, render_fixture
from .framed import build_framed, build_hat_quiver, count_hat_dim_vectors, hat_dim_vectors
from .hall import HallElement, hall_product, hn_product as hall_hn_product, all_classes, tilde_A
from .qtorus import NotEquivariant, QTorusSeries, integrate_I, integrate_Ieq, integrate_Ipsi
from .quiver import (
    GradingLattice, QuiverError, check_acyclic, check_homogeneous, check_positive_on_cycles,
    check_primitive, is_generic,
)
from .repenum import Budget, Representation, canonical_form, point_count

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed dimension vector {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Coef):
        return x.to_json()
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


class Context:
    def __init__(self, args):
        self.args = args
        self.fixture: FixtureSpec = load_fixture(args.fixture)
        self.Q = self.fixture.quiver
        self.W = self.fixture.potential
        self.F = self.fixture.field_spec(args.q)
        try:
            self.theta = self.fixture.theta(args.theta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        self.budget = Budget(max_points=args.max_points, max_gl=args.max_gl)
        self.bound = _vector(args.bound) if args.bound else None
        self.dim = _vector(args.dim) if getattr(args, "dim", None) else None
        for v in (self.bound, self.dim):
            if v is not None and len(v) != self.Q.n:
                raise UsageError(f"vector {v} needs {self.Q.n} entries")

    def dims(self) -> list[tuple[int, ...]]:
        if self.dim is not None:
            return [self.dim]
        if self.bound is not None:
            return list(dtmod.within(self.bound))
        raise UsageError("give --dim or --bound")

    def meta(self) -> dict:
        return {
            "command": self.args.command,
            "quiver_hash": self.fixture.digest(),
            "q": self.F.q,
            "field_poly": list(self.F.poly),
            "theta": [str(t) for t in self.theta],
            "bound": None if self.bound is None else list(self.bound),
            "budgets": {"max_points": self.budget.max_points, "max_gl": self.budget.max_gl},
        }


def cmd_check(ctx: Context):
    out = []
    wt = ctx.fixture.wt
    hom = check_homogeneous(ctx.W, wt)
    out.append({"check": "homogeneity", "ok": hom.ok, "wt_W": hom.value,
                "witness": None if hom.ok else [" ".join(u) for u in hom.witness]})
    pos = check_positive_on_cycles(ctx.Q, wt)
    out.append({"check": "positive_on_cycles", "ok": pos.ok, "witness": None if pos.ok else " ".join(pos.witness)})
    prim = check_primitive(GradingLattice.from_potential(ctx.Q, ctx.W))
    out.append({"check": "primitivity", "ok": prim.ok, "witness": prim.witness})
    acyc = check_acyclic(ctx.Q)
    out.append({"check": "acyclic", "ok": acyc.ok, "witness": None if acyc.ok else " ".join(acyc.witness)})
    if ctx.dim is not None or ctx.bound is not None:
        for a in ctx.dims():
            g = is_generic(ctx.theta, a)
            out.append({"check": "generic", "dim": list(a), "ok": g.ok, "witness": None if g.ok else list(g.witness)})
    return out, True


def cmd_count(ctx: Context):
    out = []
    for a in ctx.dims():
        pc = point_count(ctx.Q, a, ctx.theta, ctx.F, ctx.W, ctx.budget)
        out.append({"dim": list(a), "semistable": pc.semistable, "semistable_w0": pc.semistable_w0,
                    "gl_order": pc.gl, "stack": str(pc.stack), "stack_w0": str(pc.stack_w0)})
    return out, True


def cmd_dt(ctx: Context):
    if ctx.dim is not None:
        bound = ctx.dim
        rep = dtmod.dt_report(ctx.Q, ctx.W, ctx.theta, ctx.F, bound, ctx.budget)
        rep.records = [r for r in rep.records if r.dim == ctx.dim]
    else:
        if ctx.bound is None:
            raise UsageError("give --dim or --bound")
        rep = dtmod.dt_report(ctx.Q, ctx.W, ctx.theta, ctx.F, ctx.bound, ctx.budget)
    ok = all(r.consistent(ctx.F) for r in rep.records)
    return rep.to_json(), ok


def _parse_class(ctx: Context, text: str) -> Representation:
    """'<dims>' or '<dims>:<json object arrow -> matrix>', e.g. '1,1:{"x": [[1]]}'."""
    dims, _, mats = text.partition(":")
    try:
        mats = json.loads(mats) if mats.strip() else {}
        return Representation.from_arrays(ctx.Q, ctx.F, _vector(dims), mats)
    except (json.JSONDecodeError, QuiverError, TypeError) as exc:
        raise UsageError(f"bad class {text!r}: {exc}") from None


def _hall_json(f: HallElement) -> list[dict]:
    return [{"dim": list(M.dim), "class": {a.name: [list(r) for r in A] for a, A in zip(M.quiver.arrows, M.mats)},
             "coeff": str(c)} for M, c in sorted(f.items())]


def cmd_hall(ctx: Context):
    if not ctx.args.cls or len(ctx.args.cls) < 1:
        raise UsageError("give at least one --class")
    elems = [HallElement.of(_parse_class(ctx, c), budget=ctx.budget) for c in ctx.args.cls]
    acc = elems[0]
    for g in elems[1:]:
        acc = hall_product(acc, g, budget=ctx.budget)
    return _hall_json(acc), True


def _series_json(s: QTorusSeries) -> list[dict]:
    return [{"dim": list(a), "coeff": c.to_json(), "text": str(c)} for a, c in sorted(s.coeffs.items())]


def cmd_integrate(ctx: Context):
    dims = ctx.dims()
    bound = ctx.bound or ctx.dim
    f = HallElement(ctx.Q, ctx.F)
    for a in dims:
        f = f + tilde_A(ctx.Q, a, ctx.theta, ctx.F, ctx.budget)
    which = ctx.args.map
    if which == "I":
        s = integrate_I(f, bound, ctx.budget)
    elif which == "Ieq":
        s = integrate_Ieq(f, ctx.W, ctx.fixture.wt, bound, ctx.budget)
    else:
        s = integrate_Ipsi(f, ctx.W, bound, ctx.budget)
    return _series_json(s), True


def cmd_verify_hn(ctx: Context):
    if ctx.bound is None:
        raise UsageError("verify-hn needs --bound")
    rep = dtmod.hn_check(ctx.Q, ctx.W, ctx.theta, ctx.F, ctx.bound, ctx.budget)
    results = [{"dim": list(a), "A": rep.lhs[a].to_json(), "product": rep.rhs[a].to_json(),
                "ok": rep.lhs[a] == rep.rhs[a]} for a in dtmod.within(ctx.bound)]
    ok = rep.ok
    if ctx.args.hall:
        lhs = HallElement(ctx.Q, ctx.F)
        for a in dtmod.within(ctx.bound):
            lhs = lhs + all_classes(ctx.Q, a, ctx.F, ctx.budget)
        rhs = hall_hn_product(ctx.Q, ctx.theta, ctx.F, ctx.bound, ctx.budget) - HallElement.unit(ctx.Q, ctx.F)
        results.append({"hall_algebra": True, "ok": lhs == rhs})
        ok = ok and lhs == rhs
    return results, ok


def cmd_wallcross(ctx: Context):
    out, ok = [], True
    for a in ctx.dims():
        direct = dtmod.dt_invariant(ctx.Q, ctx.W, a, ctx.theta, ctx.F, ctx.budget)
        wc = dtmod.wall_crossing_solve(ctx.Q, ctx.W, a, ctx.theta, ctx.F, ctx.budget)
        out.append({"dim": list(a), "direct": direct.to_json(), "wall_crossing": wc.to_json(),
                    "tuples": len(dtmod.admissible_tuples(a, ctx.theta)), "ok": direct == wc})
        ok = ok and direct == wc
    return out, ok


def cmd_hat(ctx: Context):
    framing, fw = [], {}
    for spec in ctx.args.framing or []:
        name, _, rest = spec.partition(":")
        ends, _, w = rest.partition("=")
        src, _, dst = ends.partition("->")
        if not (name and src and dst):
            raise UsageError(f"bad framing arrow {spec!r}; expected name:src->dst[=weight]")
        framing.append((name, src.strip(), dst.strip()))
        fw[name] = int(w) if w else 1
    if ctx.dim is None:
        raise UsageError("hat needs --dim")
    try:
        Qp = build_framed(ctx.Q, framing)
        wt = {**ctx.fixture.wt, **fw}
        theta_p = tuple(ctx.theta) + (Fraction(ctx.args.theta_star),)
        H = build_hat_quiver(Qp, wt, ctx.dim, theta_p)
    except QuiverError as exc:
        raise UsageError(str(exc)) from None
    if ctx.args.format == "text":
        lifted = {x.name: wt[b] for x, (b, _) in zip(H.quiver.arrows, H.lifts)}
        text = render_fixture(FixtureSpec(H.quiver, weights=lifted, stabilities={"lifted": H.theta}))
        return text, True
    acyc = check_acyclic(H.quiver)
    n_dims = len(hat_dim_vectors(H, ctx.dim))
    return [{"N": H.N, "vertices": len(H.quiver.vertices), "arrows": len(H.quiver.arrows),
             "acyclic": acyc.ok, "dim_vectors": n_dims,
             "dim_vectors_closed_form": count_hat_dim_vectors(H, ctx.dim)}], acyc.ok


COMMANDS = {
    "check": cmd_check, "count": cmd_count, "dt": cmd_dt, "hall": cmd_hall, "integrate": cmd_integrate,
    "verify-hn": cmd_verify_hn, "wallcross": cmd_wallcross, "hat": cmd_hat,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quiverdt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("fixture", help="fixture file or bundled fixture name")
        s.add_argument("--q", type=int, default=None, help="field order (default: first field in fixture, else 2)")
        s.add_argument("--theta", default=None, help="stability label or comma-separated rationals")
        s.add_argument("--bound", default=None, help="componentwise truncation bound, e.g. 2,2")
        s.add_argument("--dim", default=None, help="single dimension vector, e.g. 1,1")
        s.add_argument("--format", choices=["json", "table", "text"], default="json")
        s.add_argument("--max-points", type=int, default=Budget().max_points)
        s.add_argument("--max-gl", type=int, default=Budget().max_gl)
        if name == "hall":
            s.add_argument("--class", dest="cls", action="append",
                           help="class as dims or dims:JSON, e.g. '1,1:{\"x\": [[1]]}'; repeat for a product")
        if name == "integrate":
            s.add_argument("--map", choices=["I", "Ieq", "Ipsi"], default="I")
        if name == "verify-hn":
            s.add_argument("--hall", action="store_true", help="also check the factorization in the Hall algebra")
        if name == "hat":
            s.add_argument("--framing", action="append", help="framing arrow name:src->dst[=weight]")
            s.add_argument("--theta-star", default="0", help="stability entry for the framing vertex")
    return p


def _table(rows) -> str:
    if isinstance(rows, str):
        return rows
    flat = []
    for r in rows:
        flat.append({k: (json.dumps(v) if isinstance(v, (dict, list)) else str(v)) for k, v in r.items()})
    cols = list(dict.fromkeys(k for r in flat for k in r))
    widths = {c: max(len(c), *(len(r.get(c, "")) for r in flat)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
    lines += ["  ".join(r.get(c, "").ljust(widths[c]) for c in cols) for r in flat]
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        ctx = Context(args)
        results, ok = COMMANDS[args.command](ctx)
    except (UsageError, FixtureError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotEquivariant as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "text" and isinstance(results, str):
        out.write(results)
    elif args.format == "table":
        print(_table(results), file=out)
    else:
        json.dump({"meta": ctx.meta(), "ok": ok, "results": _jsonable(results)}, out, indent=2)
        out.write("\n")
    return EXIT_OK if ok else EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
