"""The singularity category as finite data.

Indecomposable objects are the arrow ideals L_a for arrows a on
differential cycles; the category is semisimple, the inverse shift acts by
rho and the Serre functor fixes every object.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .combinatorics import differential_decomposition, differential_path
from .lattices import ArrowIdeal, tau
from .presentation import GentlePresentation, require_strict


class NotInSingularityCategory(ValueError):
    pass


def dc_arrows(gp: GentlePresentation) -> list[str]:
    """Arrows lying on differential cycles, in declaration order."""
    require_strict(gp)
    return [a for a in gp.arrows if differential_path(gp, a).is_cycle]


def _check(gp: GentlePresentation, alpha: str) -> None:
    if not differential_path(gp, alpha).is_cycle:
        raise NotInSingularityCategory(f"arrow {alpha} does not lie on a differential cycle")


def shift_inverse(gp: GentlePresentation, alpha: str) -> str:
    _check(gp, alpha)
    return gp.rho[alpha]


def shift(gp: GentlePresentation, alpha: str) -> str:
    _check(gp, alpha)
    (pre,) = [a for a, b in gp.rho.items() if b == alpha]
    return pre


def orbits(gp: GentlePresentation) -> list[tuple[str, ...]]:
    """rho-orbits on the differential-cycle arrows, each from its first-declared member."""
    require_strict(gp)
    out = []
    seen = set()
    for a in gp.arrows:
        if a in seen or not differential_path(gp, a).is_cycle:
            continue
        orbit = [a]
        cur = gp.rho[a]
        while cur != a:
            orbit.append(cur)
            cur = gp.rho[cur]
        seen.update(orbit)
        out.append(tuple(orbit))
    return out


@dataclass(frozen=True)
class SingularityInvariant:
    orbit_lengths: tuple[int, ...]  # sorted descending

    @property
    def multiset(self) -> Counter:
        return Counter(self.orbit_lengths)

    def as_list(self) -> list[int]:
        return list(self.orbit_lengths)


def invariant(gp: GentlePresentation) -> SingularityInvariant:
    lengths = tuple(sorted((len(o) for o in orbits(gp)), reverse=True))
    # independent route: differential cycles found by the combinatorics module
    cyc = sorted((c.length for c in differential_decomposition(gp).cycles), reverse=True)
    if list(lengths) != cyc:
        raise RuntimeError("rho-orbits disagree with the differential cycles")
    return SingularityInvariant(lengths)


def hom_dim(gp: GentlePresentation, alpha: str, beta: str) -> int:
    _check(gp, alpha)
    _check(gp, beta)
    return int(alpha == beta)


def serre(gp: GentlePresentation, alpha: str) -> str:
    """Serre functor on objects, computed as shift after AR translate."""
    _check(gp, alpha)
    translated = tau(gp, ArrowIdeal(alpha))
    if not isinstance(translated, ArrowIdeal):
        raise RuntimeError(f"translate of L[{alpha}] is projective")
    result = shift(gp, translated.arrow)
    if result != alpha:
        raise RuntimeError(f"Serre functor moved L[{alpha}] to L[{result}]")
    return result


@dataclass(frozen=True)
class Comparison:
    compatible: bool
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def verdict(self) -> str:
        if self.compatible:
            return (
                f"compatible: both have differential-cycle lengths {list(self.left)} "
                "(necessary condition for derived equivalence only)"
            )
        return (
            f"incompatible: differential-cycle lengths {list(self.left)} vs {list(self.right)} "
            "(fails a necessary condition for derived equivalence)"
        )


def compare(gp1: GentlePresentation, gp2: GentlePresentation) -> Comparison:
    a = invariant(gp1).orbit_lengths
    b = invariant(gp2).orbit_lengths
    return Comparison(a == b, a, b)
