"""Fibres of the gentle order over Spec k[[c]].

At the generic point the algebra is a product of full matrix rings, one
block per admissible cycle.  The special fibre is A/cA, presented by the
quiver with its zero relations plus the image of c at each vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SignAssignment, assign_signs, basis_rank
from .combinatorics import admissible_decomposition, admissible_path
from .presentation import GentlePresentation, require_strict


def generic_fibre(gp: GentlePresentation) -> list[int]:
    """Matrix block sizes, largest first."""
    require_strict(gp)
    return admissible_decomposition(gp).lengths


def rank(gp: GentlePresentation, eps: SignAssignment | None = None) -> int:
    require_strict(gp)
    return basis_rank(gp, eps if eps is not None else assign_signs(gp))


@dataclass(frozen=True)
class FibreRelation:
    """``sum of paths = 0``; each path is a tuple of arrows in traversal order."""

    paths: tuple[tuple[str, ...], ...]

    def __str__(self):
        return " + ".join(".".join(reversed(p)) for p in self.paths) + " = 0"


@dataclass(frozen=True)
class SpecialFibre:
    zero_relations: tuple[tuple[str, str], ...]
    extra_relations: tuple[FibreRelation, ...]
    dimension: int


def special_fibre(gp: GentlePresentation, eps: SignAssignment | None = None) -> SpecialFibre:
    """c e_v = 0 at each vertex: one cycle at a transition vertex, a sum of two at a 2-regular one."""
    require_strict(gp)
    extra = []
    for v in gp.vertices:
        cycles = tuple(admissible_path(gp, a).arrows for a in gp.quiver.out_arrows(v))
        extra.append(FibreRelation(cycles))
    return SpecialFibre(tuple(gp.relations), tuple(extra), rank(gp, eps))


def intermediate_dim(gp: GentlePresentation, n: int, eps: SignAssignment | None = None) -> int:
    """k-dimension of A / c^n A."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n * rank(gp, eps)


@dataclass(frozen=True)
class FibreReport:
    rank: int
    generic: tuple[int, ...]
    special: SpecialFibre

    def intermediate_dim(self, n: int) -> int:
        if n < 1:
            raise ValueError("n must be at least 1")
        return n * self.rank


def fibre_report(gp: GentlePresentation, eps: SignAssignment | None = None) -> FibreReport:
    return FibreReport(rank(gp, eps), tuple(generic_fibre(gp)), special_fibre(gp, eps))
