"""Line-oriented fixture format for quivers with potential, weights and stabilities.

    vertex <name>
    arrow <name> : <src> -> <dst>
    potential <+-int> <arrow> <arrow> ...     # one term per line, traversal order
    weight <arrow> = <nonneg int>             # arrows without a weight line get weight 1
    stability <label> : <rational> ...        # one entry per vertex, declared order
    field <q> [poly coefficients]             # optional, low degree first, monic

'#' starts a comment. Vertices must precede the arrows that use them; every
other directive may appear anywhere.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .ffield import FieldError, FieldSpec
from .quiver import Arrow, Potential, Quiver, QuiverError, Theta, min_rotation, validate_cycle

NAME = r"[^\s:=#]+"


class FixtureError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message, self.line, self.column = message, line, column


@dataclass
class FixtureSpec:
    quiver: Quiver
    potential: Potential = field(default_factory=Potential)
    weights: dict[str, int] = field(default_factory=dict)
    stabilities: dict[str, Theta] = field(default_factory=dict)
    fields: list[tuple[int, tuple[int, ...] | None]] = field(default_factory=list)

    @property
    def wt(self) -> dict[str, int]:
        return {a.name: self.weights.get(a.name, 1) for a in self.quiver.arrows}

    def field_spec(self, q: int | None = None) -> FieldSpec:
        from .ffield import field as make_field

        for fq, poly in self.fields:
            if q is None or fq == q:
                return make_field(fq, poly)
        return make_field(q if q is not None else 2)

    def theta(self, label_or_values: str | None) -> Theta:
        """A named stability, or comma-separated rationals in vertex order; default all zero."""
        if label_or_values is None:
            return (Fraction(0),) * self.quiver.n
        if label_or_values in self.stabilities:
            return self.stabilities[label_or_values]
        try:
            vals = tuple(Fraction(x) for x in label_or_values.split(","))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"unknown stability {label_or_values!r}") from None
        if len(vals) != self.quiver.n:
            raise ValueError(f"stability needs {self.quiver.n} entries")
        return vals

    def digest(self) -> str:
        return hashlib.sha256(render_fixture(self).encode()).hexdigest()[:16]


def _parse_int(tok: str, line: int, col: int, what: str) -> int:
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise FixtureError(f"malformed {what} {tok!r}", line, col)
    return int(tok)


def _parse_rational(tok: str, line: int, col: int) -> Fraction:
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", tok):
        raise FixtureError(f"malformed rational {tok!r}", line, col)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise FixtureError(f"malformed rational {tok!r} (zero denominator)", line, col) from None


def _tokens(text: str, start: int = 0) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text) if m.start() >= start]


def parse_fixture(text: str) -> FixtureSpec:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    arrow_where: dict[str, tuple[int, int]] = {}
    deferred = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        toks = _tokens(body)
        word, col = toks[0]
        if word == "vertex":
            if len(toks) != 2:
                raise FixtureError("expected 'vertex <name>'", lineno, col)
            name, c = toks[1]
            if name in vertices:
                raise FixtureError(f"duplicate vertex {name!r}", lineno, c)
            if not re.fullmatch(NAME, name):
                raise FixtureError(f"invalid vertex name {name!r}", lineno, c)
            vertices.append(name)
        elif word == "arrow":
            m = re.fullmatch(rf"\s*arrow\s+(?P<name>{NAME})\s*:\s*(?P<src>{NAME}?)\s*->\s*(?P<dst>{NAME})\s*", body)
            if not m:
                raise FixtureError("expected 'arrow <name> : <src> -> <dst>'", lineno, col)
            name = m.group("name")
            if name in arrow_where:
                raise FixtureError(f"duplicate arrow name {name!r}", lineno, m.start("name") + 1)
            for g in ("src", "dst"):
                if m.group(g) not in vertices:
                    raise FixtureError(f"unknown vertex {m.group(g)!r}", lineno, m.start(g) + 1)
            arrows.append(Arrow(name, m.group("src"), m.group("dst")))
            arrow_where[name] = (lineno, m.start("name") + 1)
        elif word in ("potential", "weight", "stability", "field"):
            deferred.append((word, lineno, body, toks))
        else:
            raise FixtureError(f"unknown directive {word!r}", lineno, col)

    Q = Quiver(tuple(vertices), tuple(arrows))
    terms, weights, stabs, fields = [], {}, {}, []
    seen_cycles: dict[tuple, tuple[int, int]] = {}

    for word, lineno, body, toks in deferred:
        if word == "potential":
            if len(toks) < 3:
                raise FixtureError("expected 'potential <coefficient> <arrow> ...'", lineno, toks[0][1])
            c = _parse_int(toks[1][0], lineno, toks[1][1], "coefficient")
            cyc = [t for t, _ in toks[2:]]
            for t, tc in toks[2:]:
                if t not in Q.arrow_index:
                    raise FixtureError(f"unknown arrow {t!r}", lineno, tc)
            try:
                validate_cycle(Q, cyc)
            except QuiverError as exc:
                raise FixtureError(str(exc), lineno, toks[2][1]) from None
            key = min_rotation(cyc)
            if key in seen_cycles:
                raise FixtureError(f"cycle repeats the term on line {seen_cycles[key][0]} up to rotation", lineno, toks[2][1])
            seen_cycles[key] = (lineno, toks[2][1])
            if c == 0:
                raise FixtureError("potential coefficient must be nonzero", lineno, toks[1][1])
            terms.append((c, cyc))
        elif word == "weight":
            m = re.fullmatch(rf"\s*weight\s+(?P<name>{NAME})\s*=\s*(?P<val>\S+)\s*", body)
            if not m:
                raise FixtureError("expected 'weight <arrow> = <int>'", lineno, toks[0][1])
            name = m.group("name")
            if name not in Q.arrow_index:
                raise FixtureError(f"unknown arrow {name!r}", lineno, m.start("name") + 1)
            if name in weights:
                raise FixtureError(f"duplicate weight for {name!r}", lineno, m.start("name") + 1)
            val = _parse_int(m.group("val"), lineno, m.start("val") + 1, "weight")
            if val < 0:
                raise FixtureError("weights must be nonnegative", lineno, m.start("val") + 1)
            weights[name] = val
        elif word == "stability":
            m = re.fullmatch(rf"\s*stability\s+(?P<label>{NAME})\s*:(?P<rest>.*)", body)
            if not m:
                raise FixtureError("expected 'stability <label> : <rational> ...'", lineno, toks[0][1])
            label = m.group("label")
            if label in stabs:
                raise FixtureError(f"duplicate stability {label!r}", lineno, m.start("label") + 1)
            vals = _tokens(body, m.start("rest"))
            if len(vals) != Q.n:
                raise FixtureError(f"stability {label!r} has {len(vals)} entries, expected {Q.n}", lineno, m.start("label") + 1)
            stabs[label] = tuple(_parse_rational(t, lineno, c) for t, c in vals)
        else:
            q = _parse_int(toks[1][0], lineno, toks[1][1], "field order") if len(toks) > 1 else None
            if q is None:
                raise FixtureError("expected 'field <q> [poly]'", lineno, toks[0][1])
            poly = tuple(_parse_int(t, lineno, c, "polynomial coefficient") for t, c in toks[2:]) or None
            try:
                FieldSpec(q, poly)
            except FieldError as exc:
                raise FixtureError(str(exc), lineno, toks[1][1]) from None
            fields.append((q, poly))

    return FixtureSpec(Q, Potential.build(Q, terms), weights, stabs, fields)


def _fmt_rational(x: Fraction) -> str:
    return str(x)


def render_fixture(spec: FixtureSpec) -> str:
    out = [f"vertex {v}" for v in spec.quiver.vertices]
    out += [f"arrow {a.name} : {a.source} -> {a.target}" for a in spec.quiver.arrows]
    out += [f"potential {c} " + " ".join(u) for c, u in spec.potential.terms]
    out += [f"weight {a} = {w}" for a, w in spec.weights.items()]
    out += [f"stability {k} : " + " ".join(_fmt_rational(x) for x in v) for k, v in spec.stabilities.items()]
    out += [f"field {q}" + ("" if poly is None else " " + " ".join(map(str, poly))) for q, poly in spec.fields]
    return "\n".join(out) + "\n"


def load_fixture(path_or_name: str | Path) -> FixtureSpec:
    """Read a fixture file, or a bundled fixture by name (e.g. ``a2``)."""
    p = Path(path_or_name)
    if p.exists():
        return parse_fixture(p.read_text())
    name = str(path_or_name)
    if not name.endswith(".quiver"):
        name += ".quiver"
    res = resources.files("quiverdt") / "data" / name
    if not res.is_file():
        raise FileNotFoundError(f"no fixture file or bundled fixture named {path_or_name!r}")
    return parse_fixture(res.read_text())


def bundled_fixtures() -> list[str]:
    return sorted(p.name[: -len(".quiver")] for p in (resources.files("quiverdt") / "data").iterdir()
                  if p.name.endswith(".quiver"))
