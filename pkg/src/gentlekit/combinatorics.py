"""Chains of the successor maps: admissible cycles, differential paths,
the glued quiver Q', finite projectivity, injective dimension, Koszul dual.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .presentation import Arrow, GentlePresentation, Quiver, RelationSet, validate

CYCLE = "cycle"
WALK = "walk"


class InconsistencyError(RuntimeError):
    """Two equivalent criteria disagreed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class AdmissiblePath:
    arrows: tuple[str, ...]
    is_cycle: bool

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class DifferentialPath:
    arrows: tuple[str, ...]
    kind: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_cycle(self) -> bool:
        return self.kind == CYCLE


def _chain(succ, start: str) -> tuple[tuple[str, ...], bool]:
    # succ is injective, so the first repeat can only be the start itself
    out = [start]
    cur = succ.get(start)
    while cur is not None and cur != start:
        out.append(cur)
        cur = succ.get(cur)
    return tuple(out), cur == start


def admissible_path(gp: GentlePresentation, alpha: str) -> AdmissiblePath:
    """Maximal repetition-free sigma-chain starting at ``alpha``."""
    arrows, closed = _chain(gp.sigma, alpha)
    return AdmissiblePath(arrows, closed)


def differential_path(gp: GentlePresentation, alpha: str) -> DifferentialPath:
    arrows, closed = _chain(gp.rho, alpha)
    return DifferentialPath(arrows, CYCLE if closed else WALK)


def _rotate_to_first(gp: GentlePresentation, arrows: tuple[str, ...]) -> tuple[str, ...]:
    k = min(range(len(arrows)), key=lambda i: gp.quiver.order(arrows[i]))
    return arrows[k:] + arrows[:k]


@dataclass(frozen=True)
class AdmissibleDecomposition:
    cycles: tuple[AdmissiblePath, ...]
    uncovered: tuple[str, ...]

    @property
    def lengths(self) -> list[int]:
        return sorted((c.length for c in self.cycles), reverse=True)

    @property
    def covers(self) -> bool:
        return not self.uncovered


def admissible_decomposition(gp: GentlePresentation) -> AdmissibleDecomposition:
    """Cyclic sigma-orbits, each rotated to start at its first-declared arrow."""
    seen: set[str] = set()
    cycles = []
    for a in gp.arrows:
        if a in seen:
            continue
        p = admissible_path(gp, a)
        if p.is_cycle:
            seen.update(p.arrows)
            cycles.append(AdmissiblePath(_rotate_to_first(gp, p.arrows), True))
    uncovered = tuple(a for a in gp.arrows if a not in seen)
    return AdmissibleDecomposition(tuple(cycles), uncovered)


@dataclass(frozen=True)
class DifferentialDecomposition:
    cycles: tuple[DifferentialPath, ...]
    walks: tuple[DifferentialPath, ...]  # maximal walks only


def differential_decomposition(gp: GentlePresentation) -> DifferentialDecomposition:
    """Differential cycles plus the maximal differential walks.

    A walk is maximal when its first arrow has no rho-preimage.
    """
    has_pre = set(gp.rho.values())
    seen: set[str] = set()
    cycles = []
    walks = []
    for a in gp.arrows:
        if a in seen:
            continue
        d = differential_path(gp, a)
        if d.is_cycle:
            seen.update(d.arrows)
            cycles.append(DifferentialPath(_rotate_to_first(gp, d.arrows), CYCLE))
    for a in gp.arrows:
        if a not in seen and a not in has_pre:
            walks.append(differential_path(gp, a))
    return DifferentialDecomposition(tuple(cycles), tuple(walks))


# ------------------------------------------------------------------ glued quiver


@dataclass(frozen=True)
class GluedComponent:
    kind: str  # "A" or "A~"
    arrows: tuple[str, ...]  # in path order

    @property
    def length(self) -> int:
        return len(self.arrows)


@dataclass(frozen=True)
class GluedQuiver:
    components: tuple[GluedComponent, ...]
    isolated: tuple[str, ...]
    vertex_map: dict  # class representative -> original vertex
    arrow_ends: dict  # arrow -> (source class, target class)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def glue_split(gp: GentlePresentation) -> GluedQuiver:
    """Split vertices along relations: s_b ~ t_a whenever b.a is a non-relation."""
    uf = _UnionFind()
    for a in gp.arrows:
        uf.find(("s", a))
        uf.find(("t", a))
    for a in gp.arrows:
        for b in gp.quiver.out_arrows(gp.t(a)):
            if not gp.is_relation(a, b):
                uf.union(("s", b), ("t", a))

    ends = {a: (uf.find(("s", a)), uf.find(("t", a))) for a in gp.arrows}
    vertex_map = {}
    for a in gp.arrows:
        vertex_map[ends[a][0]] = gp.s(a)
        vertex_map[ends[a][1]] = gp.t(a)

    out_of = {}
    into = {}
    for a, (u, v) in ends.items():
        if u in out_of or v in into:
            raise InconsistencyError("glued quiver is not equioriented")
        out_of[u] = a
        into[v] = a

    done: set[str] = set()
    comps = []
    for a in gp.arrows:
        if a in done:
            continue
        # walk backwards to the start of a line (or all the way round a cycle)
        first = a
        while True:
            prev = into.get(ends[first][0])
            if prev is None or prev == a:
                break
            first = prev
        path = [first]
        cur = out_of.get(ends[first][1])
        while cur is not None and cur != first:
            path.append(cur)
            cur = out_of.get(ends[cur][1])
        kind = "A~" if cur == first else "A"
        done.update(path)
        path_t = tuple(path)
        if kind == "A~":
            path_t = _rotate_to_first(gp, path_t)
        comps.append(GluedComponent(kind, path_t))

    touched = {gp.s(a) for a in gp.arrows} | {gp.t(a) for a in gp.arrows}
    isolated = tuple(v for v in gp.vertices if v not in touched)
    return GluedQuiver(tuple(comps), isolated, vertex_map, ends)


@dataclass(frozen=True)
class FiniteProjectivity:
    finite_projective: bool
    witness: tuple[str, ...]  # arrows not on admissible cycles


def is_finite_projective(gp: GentlePresentation) -> FiniteProjectivity:
    """Both criteria (cycle cover of Q, cyclic components of Q') must agree."""
    dec = admissible_decomposition(gp)
    glued = glue_split(gp)
    by_cycles = dec.covers
    by_glue = all(c.kind == "A~" for c in glued.components)
    if by_cycles != by_glue:
        raise InconsistencyError(
            f"admissible-cycle cover says {by_cycles}, glued quiver says {by_glue}"
        )
    return FiniteProjectivity(by_cycles, dec.uncovered)


# ------------------------------------------------------------- injective dim


def connected_components(gp: GentlePresentation) -> list[tuple[list[str], list[str]]]:
    """Underlying undirected components as (vertices, arrows), in declaration order."""
    uf = _UnionFind()
    for v in gp.vertices:
        uf.find(v)
    for a in gp.arrows:
        uf.union(gp.s(a), gp.t(a))
    groups: dict = {}
    for v in gp.vertices:
        groups.setdefault(uf.find(v), ([], []))[0].append(v)
    for a in gp.arrows:
        groups[uf.find(gp.s(a))][1].append(a)
    return list(groups.values())


def _is_cycle_mod_square(gp: GentlePresentation, vertices: list[str], arrows: list[str]) -> bool:
    if len(vertices) != len(arrows):
        return False
    for v in vertices:
        if len(gp.quiver.out_arrows(v)) != 1 or len(gp.quiver.in_arrows(v)) != 1:
            return False
    return all(gp.is_relation(a, gp.quiver.out_arrows(gp.t(a))[0]) for a in arrows)


def differential_walk_lengths(gp: GentlePresentation) -> dict[str, int]:
    """Length of d_a for every arrow a whose differential path is a walk."""
    out = {}
    for a in gp.arrows:
        d = differential_path(gp, a)
        if not d.is_cycle:
            out[a] = d.length
    return out


def injective_dimension(gp: GentlePresentation) -> int:
    walks = differential_walk_lengths(gp)
    if walks:
        return max(walks.values())
    for vertices, arrows in connected_components(gp):
        if not arrows:
            continue
        if not _is_cycle_mod_square(gp, vertices, arrows):
            return 1
    return 0


# ------------------------------------------------------------------- Koszul


def koszul_dual(gp: GentlePresentation) -> GentlePresentation:
    """Opposite quiver; relations are the reversed composable non-relations.

    Arrow names are kept, so applying this twice returns the original.
    """
    q = gp.quiver
    opp = Quiver(
        q.vertices,
        tuple(Arrow(a.name, a.target, a.source) for a in q.arrows),
        q.name + "_dual",
    )
    pairs = tuple((b, a) for a, b in gp.composable_pairs() if not gp.is_relation(a, b))
    return validate(opp, RelationSet(pairs))


def cycle_length_multiset(paths) -> Counter:
    return Counter(p.length for p in paths)
