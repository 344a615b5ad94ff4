"""Graphviz DOT text for quivers and AR quivers."""

from __future__ import annotations

from .lattices import IRREDUCIBLE_COVER, ARQuiver, Projective
from .presentation import GentlePresentation


def _q(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def quiver_dot(gp: GentlePresentation) -> str:
    """Each arrow gets a small label node so relations can join arrow labels
    with dotted, non-constraining edges."""
    q = gp.quiver
    lines = [f"digraph {_q(q.name)} {{"]
    for v in q.vertices:
        shape = "doublecircle" if gp.is_two_regular(v) else "circle"
        lines.append(f"  {_q('v' + v)} [label={_q(v)}, shape={shape}];")
    for a in q.arrows:
        lab = "arrow:" + a.name
        lines.append(f"  {_q(lab)} [label={_q(a.name)}, shape=plaintext];")
        lines.append(f"  {_q('v' + a.source)} -> {_q(lab)} [arrowhead=none];")
        lines.append(f"  {_q(lab)} -> {_q('v' + a.target)};")
    for first, second in gp.relations:
        lines.append(
            f"  {_q('arrow:' + first)} -> {_q('arrow:' + second)} "
            "[style=dotted, dir=none, constraint=false];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def ar_dot(arq: ARQuiver, name: str = "AR") -> str:
    """Solid edges are irreducible maps, dashed edges the translate."""
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for n in arq.nodes:
        shape = "box" if isinstance(n, Projective) else "ellipse"
        lines.append(f"  {_q(n)} [shape={shape}];")
    for e in arq.edges:
        head = "onormal" if e.kind == IRREDUCIBLE_COVER else "normal"
        lines.append(f"  {_q(e.source)} -> {_q(e.target)} [style=solid, arrowhead={head}];")
    for src, dst in arq.tau.items():
        lines.append(f"  {_q(src)} -> {_q(dst)} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
