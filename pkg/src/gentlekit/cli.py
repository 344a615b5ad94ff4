"""Command-line front end: ``gentlekit SUBCOMMAND FILE.gq [options]``.

Exit codes: 0 success, 1 validation failure, 2 I/O or syntax error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .algebra import assign_signs, verify_theta
from .combinatorics import koszul_dual
from .export import ar_dot, quiver_dot
from .lattices import ar_quiver
from .presentation import (
    NotAdmissibleError,
    NotGentleError,
    ParseError,
    classify_strict,
    load,
    serialize,
)
from .report import (
    ar_summary,
    build_report,
    dumps,
    fibre_summary,
    singularity_summary,
    theta_summary,
)
from .singularity import compare

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--dot", action="store_true", help="emit a Graphviz digraph")
    common.add_argument("--trunc", type=int, default=4, metavar="N", help="truncation order c^N (default 4)")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--figures", metavar="DIR", help="also render PNG figures into DIR")
    common.add_argument(
        "--flip-signs", action="store_true", help="use the opposite valid sign assignment"
    )

    p = _Parser(prog="gentlekit", description="Gentle orders: combinatorics and verification.")
    p.add_argument("--version", action="version", version=f"gentlekit {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "check": "validate the gentle axioms and strictness",
        "analyze": "full report",
        "ar-quiver": "Auslander-Reiten quiver of lattices",
        "sing": "singularity category invariant",
        "koszul": "Koszul dual presentation in the input language",
        "fibre": "generic and special fibres",
        "omega-verify": "verify the dualising bimodule isomorphism",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("file")
    sp = sub.add_parser("compare", parents=[common], help="compare singularity invariants")
    sp.add_argument("file")
    sp.add_argument("other")
    return p


def _strict_or_fail(gp) -> None:
    rep = classify_strict(gp)
    if not rep.admissible_complete:
        raise NotAdmissibleError(rep)


def _signs(gp, args):
    eps = assign_signs(gp)
    return eps.flipped(gp) if args.flip_signs else eps


def _figures(args, gp, with_ar: bool) -> list[str]:
    if not args.figures:
        return []
    from .plotting import draw_ar_quiver, draw_quiver

    out = Path(args.figures)
    stem = gp.quiver.name
    paths = [draw_quiver(gp, out / f"{stem}_quiver.png")]
    if with_ar:
        paths.append(draw_ar_quiver(ar_quiver(gp), out / f"{stem}_ar.png", f"{stem}: AR quiver"))
    return [str(p) for p in paths]


def _cmd_check(gp, args) -> tuple[str, int]:
    rep = classify_strict(gp)
    if args.dot:
        return quiver_dot(gp), EXIT_OK if rep.admissible_complete else EXIT_INVALID
    if args.json:
        text = dumps({"gentle": True, "strict": rep.admissible_complete,
                      "offending_arrows": list(rep.offending_arrows),
                      "offending_vertices": list(rep.offending_vertices)})
    else:
        text = f"gentle: yes; strict: {'yes' if rep.admissible_complete else 'no'}\n"
    if not rep.admissible_complete:
        print(f"gentlekit: {NotAdmissibleError(rep)}", file=sys.stderr)
        return text, EXIT_INVALID
    return text, EXIT_OK


def _cmd_analyze(gp, args) -> tuple[str, int]:
    strict = classify_strict(gp).admissible_complete
    rep = build_report(gp, _signs(gp, args) if strict else None)
    if args.dot:
        return quiver_dot(gp), EXIT_OK
    if args.json:
        return dumps(rep), EXIT_OK
    lines = [
        f"quiver {gp.quiver.name}: {len(gp.vertices)} vertices, {len(gp.arrows)} arrows, "
        f"{len(gp.relations)} relations",
        f"strict: {'yes' if strict else 'no'}",
        "admissible cycles: " + "; ".join(" ".join(c) for c in rep["admissible_cycles"]),
        "uncovered arrows: " + " ".join(rep["uncovered_arrows"]),
        "differential cycles: " + "; ".join(" ".join(c) for c in rep["differential_cycles"]),
        "differential walks: " + "; ".join(" ".join(w) for w in rep["differential_walks"]),
        f"injective dimension w: {rep['injective_dimension']}",
        f"finite projective: {'yes' if rep['finite_projective']['value'] else 'no'}"
        + (" (witness " + " ".join(rep["finite_projective"]["witness"]) + ")"
           if rep["finite_projective"]["witness"] else ""),
        "glued quiver: " + ", ".join(f"{c['type']}{c['length']}" for c in rep["glued_quiver"]["components"]),
        "koszul dual admissible cycle lengths: "
        + str(rep["koszul_dual"]["admissible_cycle_lengths"]),
    ]
    if strict:
        ar = rep["ar_quiver"]
        lines += [
            f"AR quiver: {len(ar['nodes'])} nodes, {len(ar['finite_orbits'])} finite and "
            f"{len(ar['periodic_orbits'])} periodic tau-orbits",
            f"singularity invariant: {rep['singularity']['invariant']}",
            f"generic fibre blocks: {rep['fibres']['generic']}; rank {rep['fibres']['rank']}",
        ]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_ar(gp, args) -> tuple[str, int]:
    _strict_or_fail(gp)
    arq = ar_quiver(gp)
    if args.dot:
        return ar_dot(arq, gp.quiver.name + "_AR"), EXIT_OK
    summary = ar_summary(gp)
    if args.json:
        return dumps(summary), EXIT_OK
    lines = [f"nodes ({len(arq.nodes)}): " + " ".join(summary["nodes"])]
    for o in arq.orbits:
        kind = "periodic" if o.periodic else "finite"
        lines.append(f"{kind} tau-orbit: " + " -> ".join(str(n) for n in o.nodes))
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_sing(gp, args) -> tuple[str, int]:
    _strict_or_fail(gp)
    s = singularity_summary(gp)
    if args.json:
        return dumps(s), EXIT_OK
    lines = [f"invariant: {s['invariant']}", "dc arrows: " + " ".join(s["dc_arrows"])]
    lines += ["shift orbit: " + " ".join(o) for o in s["orbits"]]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_koszul(gp, args) -> tuple[str, int]:
    dual = koszul_dual(gp)
    if args.dot:
        return quiver_dot(dual), EXIT_OK
    if args.json:
        return dumps(build_report(dual)["presentation"]), EXIT_OK
    return serialize(dual.quiver, dual.relations), EXIT_OK


def _cmd_fibre(gp, args) -> tuple[str, int]:
    _strict_or_fail(gp)
    f = fibre_summary(gp, _signs(gp, args))
    if args.json:
        return dumps(f), EXIT_OK
    lines = [
        "generic fibre: " + " x ".join(f"Mat{n}" for n in f["generic"]),
        f"rank: {f['rank']}",
        f"special fibre (dimension {f['special_dimension']}):",
    ]
    lines += ["  " + r for r in f["special_relations"]]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_omega(gp, args) -> tuple[str, int]:
    _strict_or_fail(gp)
    if args.trunc < 2:
        raise _Usage("--trunc must be at least 2")
    rep = verify_theta(gp, _signs(gp, args), args.trunc)
    code = EXIT_OK if rep.ok else EXIT_INVALID
    if args.json:
        return dumps(theta_summary(rep)), code
    bad = {}
    for f in rep.failures:
        bad.setdefault(f.generator, set()).add(f.check)
    width = max([len(g) for g in rep.generators] + [9])
    lines = [f"truncation c^{rep.N}", f"{'generator':<{width}}  right-linear  left-linear"]
    for g in rep.generators:
        r = "fail" if "right-linear" in bad.get(g, ()) else "pass"
        l = "fail" if "left-linear" in bad.get(g, ()) else "pass"
        lines.append(f"{g:<{width}}  {r:<12}  {l}")
    for check in ("psi-theta", "theta-psi"):
        n_bad = sum(1 for f in rep.failures if f.check == check)
        lines.append(f"{check}: {'pass' if not n_bad else 'fail'} ({rep.checks[check]} identities)")
    lines.append(f"overall: {'pass' if rep.ok else 'FAIL'} ({sum(rep.checks.values())} identities)")
    for f in rep.failures[:20]:
        print(str(f), file=sys.stderr)
    return "\n".join(lines) + "\n", code


def _cmd_compare(gp, other, args) -> tuple[str, int]:
    _strict_or_fail(gp)
    _strict_or_fail(other)
    c = compare(gp, other)
    if args.json:
        return dumps({"compatible": c.compatible, "left": list(c.left), "right": list(c.right),
                      "verdict": c.verdict}), EXIT_OK
    return c.verdict + "\n", EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "analyze": _cmd_analyze,
    "ar-quiver": _cmd_ar,
    "sing": _cmd_sing,
    "koszul": _cmd_koszul,
    "fibre": _cmd_fibre,
    "omega-verify": _cmd_omega,
}


def run(argv=None) -> tuple[int, str]:
    """Run one command; returns (exit code, stdout text). Diagnostics go to stderr."""
    try:
        args = _parser().parse_args(argv)
    except _Usage as e:
        print(f"gentlekit: {e}", file=sys.stderr)
        return EXIT_IO, ""
    try:
        gp = load(args.file)
        if args.command == "compare":
            text, code = _cmd_compare(gp, load(args.other), args)
        else:
            text, code = COMMANDS[args.command](gp, args)
        strict = classify_strict(gp).admissible_complete
        for p in _figures(args, gp, strict):
            print(f"wrote {p}", file=sys.stderr)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            text = ""
    except OSError as e:
        print(f"gentlekit: {e}", file=sys.stderr)
        return EXIT_IO, ""
    except ParseError as e:
        print(f"gentlekit: {args.file}: {e}", file=sys.stderr)
        return EXIT_IO, ""
    except NotGentleError as e:
        print(f"gentlekit: {args.file}: not gentle", file=sys.stderr)
        for v in e.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_INVALID, ""
    except NotAdmissibleError as e:
        print(f"gentlekit: {e}", file=sys.stderr)
        return EXIT_INVALID, ""
    except _Usage as e:
        print(f"gentlekit: {e}", file=sys.stderr)
        return EXIT_IO, ""
    return code, text


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
