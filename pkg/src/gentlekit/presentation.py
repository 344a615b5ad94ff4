"""Quiver DSL, gentle-axiom validation and the successor maps sigma / rho.

Composition is right to left: the relation ``rel b . a`` records that the
path "traverse ``a``, then ``b``" lies in the ideal.  Internally a relation
is stored as the ordered pair ``(a, b)`` in traversal order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

TWO_REGULAR = "two-regular-gentle"
TRANSITION = "transition"
BOUNDARY = "boundary"


class ParseError(ValueError):
    """Syntax or reference error in a quiver file."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class NotGentleError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    name: str = "Q"

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow name")
        known = set(self.vertices)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise ValueError(f"arrow {a.name} uses an undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[tuple], name: str = "Q") -> Quiver:
        """Convenience constructor from ``(name, source, target)`` triples."""
        return cls(
            tuple(str(v) for v in vertices),
            tuple(Arrow(str(n), str(s), str(t)) for n, s, t in arrows),
            name,
        )

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    @property
    def _by_name(self) -> dict[str, Arrow]:
        cache = self.__dict__.get("_arrow_cache")
        if cache is None:
            cache = {a.name: a for a in self.arrows}
            object.__setattr__(self, "_arrow_cache", cache)
        return cache

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arrows)

    def out_arrows(self, v: str) -> list[str]:
        return [a.name for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[str]:
        return [a.name for a in self.arrows if a.target == v]

    def source(self, name: str) -> str:
        return self._by_name[name].source

    def target(self, name: str) -> str:
        return self._by_name[name].target

    def order(self, name: str) -> int:
        return self.arrow_names.index(name)


@dataclass(frozen=True)
class RelationSet:
    """Length-two zero relations as ``(first, second)`` pairs in traversal order."""

    pairs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if len(set(self.pairs)) != len(self.pairs):
            raise ValueError("duplicate relation")

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self._set

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def _set(self) -> frozenset:
        cache = self.__dict__.get("_pair_cache")
        if cache is None:
            cache = frozenset(self.pairs)
            object.__setattr__(self, "_pair_cache", cache)
        return cache

    def check_composable(self, quiver: Quiver) -> None:
        for a, b in self.pairs:
            if quiver.target(a) != quiver.source(b):
                raise ValueError(f"relation {b}.{a} is not composable")


@dataclass(frozen=True)
class Violation:
    axiom: str
    where: str
    message: str

    def __str__(self) -> str:
        return f"({self.axiom}) {self.where}: {self.message}"


@dataclass(frozen=True)
class GentlePresentation:
    quiver: Quiver
    relations: RelationSet
    sigma: Mapping[str, str]
    rho: Mapping[str, str]
    vertex_class: Mapping[str, str]

    @property
    def arrows(self) -> tuple[str, ...]:
        return self.quiver.arrow_names

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def s(self, a: str) -> str:
        return self.quiver.source(a)

    def t(self, a: str) -> str:
        return self.quiver.target(a)

    def is_relation(self, first: str, second: str) -> bool:
        return (first, second) in self.relations

    def is_transition(self, v: str) -> bool:
        return self.vertex_class[v] == TRANSITION

    def is_two_regular(self, v: str) -> bool:
        return self.vertex_class[v] == TWO_REGULAR

    def composable_pairs(self) -> list[tuple[str, str]]:
        q = self.quiver
        return [(a, b) for a in q.arrow_names for b in q.out_arrows(q.target(a))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GentlePresentation):
            return NotImplemented
        return self.quiver == other.quiver and self.relations == other.relations

    def __hash__(self) -> int:
        return hash((self.quiver, self.relations))


# --------------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"(?P<arrow>->)|(?P<punct>[:.])|(?P<ident>[\w()'\[\]+]+)|(?P<space>\s+)|(?P<bad>.)"
)
_KEYWORDS = ("quiver", "vertex", "arrow", "rel")


def _tokens(line: str, lineno: int) -> list[tuple[str, int]]:
    out = []
    for m in _TOKEN.finditer(line):
        if m.lastgroup == "space":
            continue
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", lineno, m.start() + 1)
        out.append((m.group(), m.start() + 1))
    return out


def parse(text: str) -> tuple[Quiver, RelationSet]:
    """Parse quiver DSL source into a quiver and its relation set."""
    name = "Q"
    vertices: list[str] = []
    vertex_set: set[str] = set()
    arrows: list[Arrow] = []
    by_name: dict[str, Arrow] = {}
    rels: list[tuple[str, str]] = []
    seen_quiver = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line, lineno)
        if not toks:
            continue
        head, hcol = toks[0]
        rest = toks[1:]

        def expect(cond, msg, col):
            if not cond:
                raise ParseError(msg, lineno, col)

        def eol_col():
            return len(line.rstrip()) + 1

        if head == "quiver":
            expect(not seen_quiver, "second 'quiver' declaration", hcol)
            expect(len(rest) == 1, "expected: quiver NAME", rest[1][1] if len(rest) > 1 else eol_col())
            expect(_is_ident(rest[0][0]), "invalid quiver name", rest[0][1])
            name = rest[0][0]
            seen_quiver = True
        elif head == "vertex":
            expect(rest, "expected at least one vertex identifier", eol_col())
            for tok, col in rest:
                expect(_is_ident(tok), f"invalid vertex identifier {tok!r}", col)
                expect(tok not in vertex_set, f"duplicate vertex {tok!r}", col)
                vertices.append(tok)
                vertex_set.add(tok)
        elif head == "arrow":
            shape = [t for t, _ in rest]
            if len(rest) != 5 or shape[1] != ":" or shape[3] != "->":
                bad = _first_mismatch(rest, ["ID", ":", "ID", "->", "ID"])
                raise ParseError("expected: arrow NAME : SRC -> TGT", lineno, bad if bad else eol_col())
            (an, acol), _, (src, scol), _, (tgt, tcol) = rest
            expect(_is_ident(an), f"invalid arrow name {an!r}", acol)
            expect(an not in by_name, f"duplicate arrow {an!r}", acol)
            expect(src in vertex_set, f"undeclared vertex {src!r}", scol)
            expect(tgt in vertex_set, f"undeclared vertex {tgt!r}", tcol)
            arrow = Arrow(an, src, tgt)
            arrows.append(arrow)
            by_name[an] = arrow
        elif head == "rel":
            shape = [t for t, _ in rest]
            if len(rest) != 3 or shape[1] != ".":
                bad = _first_mismatch(rest, ["ID", ".", "ID"])
                raise ParseError("expected: rel B . A", lineno, bad if bad else eol_col())
            (b, bcol), _, (a, acol) = rest
            expect(b in by_name, f"undeclared arrow {b!r}", bcol)
            expect(a in by_name, f"undeclared arrow {a!r}", acol)
            expect(
                by_name[a].target == by_name[b].source,
                f"relation {b}.{a} is not composable: t({a})={by_name[a].target} but s({b})={by_name[b].source}",
                bcol,
            )
            expect((a, b) not in rels, f"duplicate relation {b}.{a}", bcol)
            rels.append((a, b))
        else:
            raise ParseError(f"unknown keyword {head!r}", lineno, hcol)

    return Quiver(tuple(vertices), tuple(arrows), name), RelationSet(tuple(rels))


def _is_ident(tok: str) -> bool:
    return tok not in (":", ".", "->") and tok not in _KEYWORDS


def _first_mismatch(toks, pattern) -> int | None:
    for (tok, col), want in zip(toks, pattern):
        if want == "ID":
            if not _is_ident(tok):
                return col
        elif tok != want:
            return col
    if len(toks) > len(pattern):
        return toks[len(pattern)][1]
    return None


def serialize(quiver: Quiver, relations: RelationSet) -> str:
    """Canonical DSL text; ``parse(serialize(q, r)) == (q, r)``."""
    lines = [f"quiver {quiver.name}"]
    if quiver.vertices:
        lines.append("vertex " + " ".join(quiver.vertices))
    for a in quiver.arrows:
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}")
    for a, b in relations:
        lines.append(f"rel {b} . {a}")
    return "\n".join(lines) + "\n"


def load(path) -> GentlePresentation:
    with open(path, encoding="utf-8") as fh:
        q, r = parse(fh.read())
    return validate(q, r)


# ------------------------------------------------------------------ validation


def find_violations(quiver: Quiver, relations: RelationSet) -> list[Violation]:
    """Every failure of (Ge1)-(Ge4), in declaration order."""
    out: list[Violation] = []
    for v in quiver.vertices:
        n_out = len(quiver.out_arrows(v))
        n_in = len(quiver.in_arrows(v))
        if n_out > 2:
            out.append(Violation("Ge1", f"vertex {v}", f"{n_out} arrows start here"))
        if n_in > 2:
            out.append(Violation("Ge2", f"vertex {v}", f"{n_in} arrows end here"))
    for a in quiver.arrow_names:
        nexts = quiver.out_arrows(quiver.target(a))
        in_rel = [b for b in nexts if (a, b) in relations]
        free = [b for b in nexts if (a, b) not in relations]
        if len(in_rel) > 1:
            out.append(Violation("Ge3", f"arrow {a}", f"relations with {', '.join(in_rel)}"))
        if len(free) > 1:
            out.append(Violation("Ge3", f"arrow {a}", f"non-relation continuations {', '.join(free)}"))
    for b in quiver.arrow_names:
        prevs = quiver.in_arrows(quiver.source(b))
        in_rel = [a for a in prevs if (a, b) in relations]
        free = [a for a in prevs if (a, b) not in relations]
        if len(in_rel) > 1:
            out.append(Violation("Ge4", f"arrow {b}", f"relations with {', '.join(in_rel)}"))
        if len(free) > 1:
            out.append(Violation("Ge4", f"arrow {b}", f"non-relation predecessors {', '.join(free)}"))
    return out


def _classify_vertex(quiver: Quiver, relations: RelationSet, v: str) -> str:
    ins = quiver.in_arrows(v)
    outs = quiver.out_arrows(v)
    through = [(a, b) for a in ins for b in outs if (a, b) in relations]
    if len(ins) == 1 and len(outs) == 1 and not through:
        return TRANSITION
    if len(ins) == 2 and len(outs) == 2 and len(through) == 2:
        firsts = {a for a, _ in through}
        seconds = {b for _, b in through}
        if len(firsts) == 2 and len(seconds) == 2:
            return TWO_REGULAR
    return BOUNDARY


def validate(quiver: Quiver, relations: RelationSet) -> GentlePresentation:
    """Check (Ge1)-(Ge4) and derive sigma, rho and the vertex classes.

    Raises :class:`NotGentleError` listing every violated axiom.
    """
    relations.check_composable(quiver)
    violations = find_violations(quiver, relations)
    if violations:
        raise NotGentleError(violations)
    sigma: dict[str, str] = {}
    rho: dict[str, str] = {}
    for a in quiver.arrow_names:
        for b in quiver.out_arrows(quiver.target(a)):
            if (a, b) in relations:
                rho[a] = b
            else:
                sigma[a] = b
    classes = {v: _classify_vertex(quiver, relations, v) for v in quiver.vertices}
    return GentlePresentation(
        quiver,
        relations,
        MappingProxyType(sigma),
        MappingProxyType(rho),
        MappingProxyType(classes),
    )


def from_text(text: str) -> GentlePresentation:
    return validate(*parse(text))


def opposite(gp: GentlePresentation) -> GentlePresentation:
    """Reverse every arrow; relations reverse to relations."""
    q = gp.quiver
    rq = Quiver(q.vertices, tuple(Arrow(a.name, a.target, a.source) for a in q.arrows), q.name + "_op")
    return validate(rq, RelationSet(tuple((b, a) for a, b in gp.relations)))


def rename(gp: GentlePresentation, vertex_map: Mapping[str, str], arrow_map: Mapping[str, str],
           arrow_order: list[str] | None = None) -> GentlePresentation:
    """Relabel vertices/arrows, optionally permuting the declaration order of arrows."""
    q = gp.quiver
    order = arrow_order if arrow_order is not None else list(q.arrow_names)
    arrows = tuple(
        Arrow(arrow_map[n], vertex_map[q.source(n)], vertex_map[q.target(n)]) for n in order
    )
    rq = Quiver(tuple(vertex_map[v] for v in q.vertices), arrows, q.name)
    rels = RelationSet(tuple((arrow_map[a], arrow_map[b]) for a, b in gp.relations))
    return validate(rq, rels)


@dataclass(frozen=True)
class StrictReport:
    admissible_complete: bool
    offending_arrows: tuple[str, ...] = ()
    offending_vertices: tuple[str, ...] = field(default=())


def classify_strict(gp: GentlePresentation) -> StrictReport:
    """Every vertex 2-regular or transition, and every arrow on an admissible cycle."""
    from .combinatorics import admissible_decomposition

    bad_vertices = tuple(v for v in gp.vertices if gp.vertex_class[v] == BOUNDARY)
    uncovered = admissible_decomposition(gp).uncovered
    return StrictReport(not bad_vertices and not uncovered, tuple(uncovered), bad_vertices)


def require_strict(gp: GentlePresentation) -> None:
    rep = classify_strict(gp)
    if not rep.admissible_complete:
        raise NotAdmissibleError(rep)


class NotAdmissibleError(ValueError):
    def __init__(self, report: StrictReport):
        self.report = report
        parts = []
        if report.offending_vertices:
            parts.append("boundary vertices " + ", ".join(report.offending_vertices))
        if report.offending_arrows:
            parts.append("arrows off admissible cycles " + ", ".join(report.offending_arrows))
        super().__init__("presentation is not admissible-complete: " + "; ".join(parts))
