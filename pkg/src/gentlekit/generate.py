"""Random gentle presentations, built by gluing equioriented lines and cycles.

Every gentle quiver arises this way: take a disjoint union of equioriented
type A / type A~ quivers and identify some pairs of vertices; composites
that cross a glued pair become zero relations.
"""

from __future__ import annotations

import random

from .presentation import GentlePresentation, Quiver, RelationSet, validate


def random_gentle(
    rng: random.Random,
    n_arrows: int,
    p_cycle: float = 0.5,
    p_glue: float = 0.5,
    n_isolated: int = 0,
    name: str = "random",
) -> GentlePresentation:
    # pieces of the glued quiver: (is_cycle, length)
    pieces = []
    left = n_arrows
    while left:
        k = rng.randint(1, left)
        pieces.append((rng.random() < p_cycle, k))
        left -= k

    prime_vertices = []
    prime_arrows = []  # (source, target) in the glued quiver
    for idx, (cyc, k) in enumerate(pieces):
        n_v = k if cyc else k + 1
        vs = [(idx, i) for i in range(n_v)]
        prime_vertices.extend(vs)
        for i in range(k):
            prime_arrows.append((vs[i], vs[(i + 1) % n_v]))
    return _glue(rng, prime_vertices, prime_arrows, p_glue, n_isolated, name)


def random_admissible(
    rng: random.Random,
    n_arrows: int,
    p_glue: float = 0.5,
    max_vertices: int | None = None,
    name: str = "random",
) -> GentlePresentation:
    """Every piece a cycle, so every vertex ends up 2-regular or transition."""
    while True:
        gp = random_gentle(rng, n_arrows, p_cycle=1.0, p_glue=p_glue, name=name)
        if max_vertices is None or len(gp.vertices) <= max_vertices:
            return gp


def _glue(rng, prime_vertices, prime_arrows, p_glue, n_isolated, name):
    order = list(prime_vertices)
    rng.shuffle(order)
    merged = {}
    free = list(order)
    while free:
        u = free.pop()
        if free and rng.random() < p_glue:
            v = free.pop(rng.randrange(len(free)))
            merged[u] = merged[v] = (u, v)
        else:
            merged[u] = (u,)

    classes = []
    for u in order:
        if merged[u] not in classes:
            classes.append(merged[u])
    rng.shuffle(classes)
    vname = {cls: f"v{i + 1}" for i, cls in enumerate(classes)}

    perm = list(range(len(prime_arrows)))
    rng.shuffle(perm)
    aname = {i: f"a{k + 1}" for k, i in enumerate(perm)}

    arrows = []
    for k in range(len(prime_arrows)):
        i = perm.index(k)
        src, tgt = prime_arrows[i]
        arrows.append((aname[i], vname[merged[src]], vname[merged[tgt]]))

    rels = []
    for i, (_, t_i) in enumerate(prime_arrows):
        for j, (s_j, _) in enumerate(prime_arrows):
            if merged[t_i] == merged[s_j] and t_i != s_j:
                rels.append((aname[i], aname[j]))
    rels.sort(key=lambda r: (int(r[0][1:]), int(r[1][1:])))

    vertices = [vname[c] for c in classes] + [f"w{i + 1}" for i in range(n_isolated)]
    q = Quiver.build(vertices, arrows, name)
    return validate(q, RelationSet(tuple(rels)))
