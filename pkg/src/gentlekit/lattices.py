"""Lattices over the completed algebra as symbolic labels.

Indecomposable lattices are the projectives P_j and the arrow ideals
L_a = A a; L_a is projective (isomorphic to P_t(a)) exactly when t(a) is a
transition vertex.  Translate, syzygy and resolutions all come from rho.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import differential_path
from .presentation import GentlePresentation, require_strict


@dataclass(frozen=True, order=True)
class Projective:
    vertex: str

    def __str__(self):
        return f"P{self.vertex}"


@dataclass(frozen=True, order=True)
class ArrowIdeal:
    arrow: str

    def __str__(self):
        return f"L[{self.arrow}]"


LatticeLabel = Projective | ArrowIdeal


def canonicalize(gp: GentlePresentation, label: LatticeLabel) -> LatticeLabel:
    if isinstance(label, ArrowIdeal) and gp.is_transition(gp.t(label.arrow)):
        return Projective(gp.t(label.arrow))
    return label


def is_projective(gp: GentlePresentation, label: LatticeLabel) -> bool:
    return isinstance(canonicalize(gp, label), Projective)


def radical(gp: GentlePresentation, j: str) -> LatticeLabel:
    """rad P_j for a transition vertex j: the ideal of its unique outgoing arrow."""
    if not gp.is_transition(j):
        raise ValueError(f"vertex {j} is not a transition vertex")
    return canonicalize(gp, ArrowIdeal(gp.quiver.out_arrows(j)[0]))


PERIODIC = "periodic"
FINITE = "finite"


@dataclass(frozen=True)
class Resolution:
    kind: str
    terms: tuple[str, ...]  # vertices j of the projectives P_j, from the cover outwards
    maps: tuple[str, ...]  # map i is right multiplication by maps[i]

    @property
    def period(self) -> int | None:
        return len(self.maps) if self.kind == PERIODIC else None

    @property
    def length(self) -> int | None:
        """Projective dimension for a finite resolution."""
        return len(self.terms) - 1 if self.kind == FINITE else None

    def term(self, i: int) -> str:
        if self.kind == PERIODIC:
            return self.terms[i % len(self.terms)]
        return self.terms[i] if i < len(self.terms) else None


def projective_resolution(gp: GentlePresentation, alpha: str) -> Resolution:
    require_strict(gp)
    d = differential_path(gp, alpha)
    terms = tuple(gp.t(a) for a in d.arrows)
    return Resolution(PERIODIC if d.is_cycle else FINITE, terms, d.arrows)


def syzygy(gp: GentlePresentation, alpha: str) -> LatticeLabel | None:
    """Kernel of the cover P_t(a) -> L_a, read off the relation set.

    The kernel is generated by the arrows b leaving t(a) with b.a in I; None
    when the cover is an isomorphism.
    """
    gens = [b for b in gp.quiver.out_arrows(gp.t(alpha)) if (alpha, b) in gp.relations]
    if not gens:
        return None
    (b,) = gens
    return canonicalize(gp, ArrowIdeal(b))


def tau(gp: GentlePresentation, node: LatticeLabel) -> LatticeLabel | None:
    """Auslander-Reiten translate; None on projectives."""
    node = canonicalize(gp, node)
    if isinstance(node, Projective):
        return None
    return canonicalize(gp, ArrowIdeal(gp.rho[node.arrow]))


def is_mcm(gp: GentlePresentation, alpha: str) -> bool:
    """Whether L_a is a non-projective maximal Cohen-Macaulay module."""
    require_strict(gp)
    return differential_path(gp, alpha).is_cycle


IRREDUCIBLE_SYZYGY = "syzygy"
IRREDUCIBLE_COVER = "cover"
IRREDUCIBLE_RADICAL = "radical"


@dataclass(frozen=True)
class Edge:
    source: LatticeLabel
    target: LatticeLabel
    kind: str


@dataclass(frozen=True)
class TauOrbit:
    nodes: tuple[LatticeLabel, ...]  # in tau order: nodes[i+1] = tau(nodes[i])
    periodic: bool


@dataclass(frozen=True)
class ARQuiver:
    nodes: tuple[LatticeLabel, ...]
    edges: tuple[Edge, ...]
    tau: dict
    orbits: tuple[TauOrbit, ...]

    @property
    def finite_orbits(self) -> list[TauOrbit]:
        return [o for o in self.orbits if not o.periodic]

    @property
    def periodic_orbits(self) -> list[TauOrbit]:
        return [o for o in self.orbits if o.periodic]

    @property
    def non_projective(self) -> list[ArrowIdeal]:
        return [n for n in self.nodes if isinstance(n, ArrowIdeal)]


def ar_quiver(gp: GentlePresentation) -> ARQuiver:
    """Almost-split sequences of arrow ideals plus radical embeddings."""
    require_strict(gp)
    order = {a: i for i, a in enumerate(gp.arrows)}
    nodes: list[LatticeLabel] = [Projective(v) for v in gp.vertices]
    ideals = [ArrowIdeal(a) for a in gp.arrows if gp.is_two_regular(gp.t(a))]
    nodes.extend(ideals)

    edges = []
    tau_map = {}
    for L in ideals:
        a = L.arrow
        cover = Projective(gp.t(a))
        kernel = canonicalize(gp, ArrowIdeal(gp.rho[a]))
        edges.append(Edge(kernel, cover, IRREDUCIBLE_SYZYGY))
        edges.append(Edge(cover, L, IRREDUCIBLE_COVER))
        tau_map[L] = kernel
    for j in gp.vertices:
        if gp.is_transition(j):
            edges.append(Edge(radical(gp, j), Projective(j), IRREDUCIBLE_RADICAL))

    has_pre = {n for n in tau_map.values() if isinstance(n, ArrowIdeal)}
    orbits = []
    seen = set()
    for L in ideals:
        if L in has_pre:
            continue
        chain = [L]
        cur = tau_map[L]
        while isinstance(cur, ArrowIdeal):
            chain.append(cur)
            cur = tau_map[cur]
        chain.append(cur)
        seen.update(chain)
        orbits.append(TauOrbit(tuple(chain), False))
    for L in ideals:
        if L in seen:
            continue
        chain = [L]
        cur = tau_map[L]
        while cur != L:
            chain.append(cur)
            cur = tau_map[cur]
        seen.update(chain)
        k = min(range(len(chain)), key=lambda i: order[chain[i].arrow])
        orbits.append(TauOrbit(tuple(chain[k:] + chain[:k]), True))

    return ARQuiver(tuple(nodes), tuple(edges), tau_map, tuple(orbits))
