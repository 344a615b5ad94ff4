"""Plain-data summaries for JSON output.

Everything here returns dicts, lists, strings, ints and bools only, so
``json.dumps(..., sort_keys=True)`` is deterministic and round-trips.
"""

from __future__ import annotations

import json

from .algebra import SignAssignment, ThetaReport, assign_signs, verify_theta
from .combinatorics import (
    admissible_decomposition,
    differential_decomposition,
    glue_split,
    injective_dimension,
    is_finite_projective,
    koszul_dual,
)
from .fibres import fibre_report
from .lattices import ar_quiver
from .presentation import GentlePresentation, classify_strict
from .singularity import dc_arrows, invariant, orbits


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def presentation_summary(gp: GentlePresentation) -> dict:
    return {
        "name": gp.quiver.name,
        "vertices": list(gp.vertices),
        "arrows": [[a.name, a.source, a.target] for a in gp.quiver.arrows],
        "relations": [[b, a] for a, b in gp.relations],  # as written: rel b . a
        "vertex_classes": dict(gp.vertex_class),
    }


def strict_summary(gp: GentlePresentation) -> dict:
    rep = classify_strict(gp)
    return {
        "admissible_complete": rep.admissible_complete,
        "offending_arrows": list(rep.offending_arrows),
        "offending_vertices": list(rep.offending_vertices),
    }


def singularity_summary(gp: GentlePresentation) -> dict:
    return {
        "dc_arrows": dc_arrows(gp),
        "orbits": [list(o) for o in orbits(gp)],
        "invariant": invariant(gp).as_list(),
    }


def fibre_summary(gp: GentlePresentation, eps: SignAssignment | None = None) -> dict:
    fr = fibre_report(gp, eps)
    return {
        "rank": fr.rank,
        "generic": list(fr.generic),
        "special_relations": [f"{b}.{a} = 0" for a, b in fr.special.zero_relations]
        + [str(r) for r in fr.special.extra_relations],
        "special_dimension": fr.special.dimension,
    }


def ar_summary(gp: GentlePresentation) -> dict:
    arq = ar_quiver(gp)
    return {
        "nodes": [str(n) for n in arq.nodes],
        "non_projective": len(arq.non_projective),
        "edges": [[str(e.source), str(e.target), e.kind] for e in arq.edges],
        "tau": {str(k): str(v) for k, v in arq.tau.items()},
        "finite_orbits": [[str(n) for n in o.nodes] for o in arq.finite_orbits],
        "periodic_orbits": [[str(n) for n in o.nodes] for o in arq.periodic_orbits],
    }


def theta_summary(rep: ThetaReport) -> dict:
    return {
        "trunc": rep.N,
        "ok": rep.ok,
        "checks": dict(rep.checks),
        "generators": rep.per_generator(),
        "failures": [str(f) for f in rep.failures],
    }


def koszul_summary(gp: GentlePresentation) -> dict:
    dual = koszul_dual(gp)
    return {
        "relations": [[b, a] for a, b in dual.relations],
        "admissible_cycle_lengths": admissible_decomposition(dual).lengths,
        "differential_cycle_lengths": sorted(
            (c.length for c in differential_decomposition(dual).cycles), reverse=True
        ),
    }


def build_report(
    gp: GentlePresentation,
    eps: SignAssignment | None = None,
    theta_trunc: int | None = None,
) -> dict:
    """Full analysis; lattice, singularity and fibre parts need strictness and
    are null otherwise."""
    adm = admissible_decomposition(gp)
    diff = differential_decomposition(gp)
    glued = glue_split(gp)
    fp = is_finite_projective(gp)
    strict = classify_strict(gp).admissible_complete
    rep = {
        "presentation": presentation_summary(gp),
        "gentle": True,
        "strict": strict_summary(gp),
        "sigma": dict(gp.sigma),
        "rho": dict(gp.rho),
        "admissible_cycles": [list(c.arrows) for c in adm.cycles],
        "uncovered_arrows": list(adm.uncovered),
        "differential_cycles": [list(c.arrows) for c in diff.cycles],
        "differential_walks": [list(w.arrows) for w in diff.walks],
        "injective_dimension": injective_dimension(gp),
        "finite_projective": {"value": fp.finite_projective, "witness": list(fp.witness)},
        "glued_quiver": {
            "components": [
                {"type": c.kind, "length": c.length, "arrows": list(c.arrows)}
                for c in glued.components
            ],
            "isolated": list(glued.isolated),
        },
        "koszul_dual": koszul_summary(gp),
        "signs": None,
        "ar_quiver": None,
        "singularity": None,
        "fibres": None,
        "omega_verify": None,
    }
    if strict:
        if eps is None:
            eps = assign_signs(gp)
        rep["signs"] = dict(eps.eps)
        rep["ar_quiver"] = ar_summary(gp)
        rep["singularity"] = singularity_summary(gp)
        rep["fibres"] = fibre_summary(gp, eps)
        if theta_trunc is not None:
            rep["omega_verify"] = theta_summary(verify_theta(gp, eps, theta_trunc))
    return rep


INVARIANT_KEYS = ("ar_quiver", "singularity", "injective_dimension", "fibres")


def invariants(report: dict) -> dict:
    """The parts of a report that must not depend on the sign choice."""
    return {k: report[k] for k in INVARIANT_KEYS}
