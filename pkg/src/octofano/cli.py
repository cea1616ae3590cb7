"""Command-line front end: ``octofano <subcommand> [flags]``.

Exit status is 0 when every check a command performs passes, 1 when a check
fails or a domain error is raised, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, TextIO

from . import cayley_dickson as cd
from . import fano_octonions as fo
from . import finite_geometry as fg
from . import identities as ids
from .qcalc import galois_number, gaussian_binomial
from .tables import MultTable

CODINGS = {
    "fano": lambda: fo.fano_table(),
    "points": lambda: fo.recode(fo.fano_table(), fo.FANO_LABELING, fo.POINT_LABELING),
    "cd": lambda: fo.cd_octonion_table(),
}
LABELINGS = {"fano": fo.FANO_LABELING, "points": fo.POINT_LABELING, "cd": fo.FANO_LABELING}


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _frac(c: Fraction) -> str:
    return str(c)


def cmd_galois(args, out: TextIO) -> int:
    binomials = [gaussian_binomial(args.n, k, args.q) for k in range(args.n + 1)]
    total = galois_number(args.n, args.q)
    if args.format == "json":
        out.write(_dump({"n": args.n, "q": args.q, "gaussian_binomials": binomials, "galois_number": total}) + "\n")
    else:
        out.write(f"{total}\n")
    return 0


def cmd_subspaces(args, out: TextIO) -> int:
    k = args.k if args.k is not None else args.dim
    if k is None:
        raise ValueError("subspaces needs --k (or --dim)")
    subs = fg.enumerate_subspaces(args.n, args.q, k)
    if args.format == "json":
        out.write(fg.subspaces_to_json(subs) + "\n")
    else:
        for s in subs:
            out.write(f"{s.label()}  {{{', '.join(s.point_strings())}}}\n")
        out.write(f"# {len(subs)} subspaces of dimension {k} in V({args.n},{args.q})\n")
    return 0


def cmd_lattice(args, out: TextIO) -> int:
    lat = fg.build_lattice(args.n, args.q)
    if args.format == "dot":
        out.write(fg.lattice_to_dot(lat))
    elif args.format == "json":
        nodes = lat.nodes
        index = {s: i for i, s in enumerate(nodes)}
        out.write(
            _dump(
                {
                    "n": lat.n,
                    "q": lat.q,
                    "nodes": [{"dim": s.dim, "basis": [fg.vector_string(r) for r in s.basis]} for s in nodes],
                    "covers": [[index[lo], index[u]] for lo, u in lat.covers],
                }
            )
            + "\n"
        )
    else:
        for k, level in enumerate(lat.levels):
            out.write(f"dim {k}: {len(level)}\n")
        out.write(f"total: {len(lat)} (G({args.n},{args.q}) = {galois_number(args.n, args.q)})\n")
        out.write(f"covering pairs: {len(lat.covers)}\n")
    return 0


def cmd_fano(args, out: TextIO) -> int:
    ps = fg.projective_space(2, args.q)
    labels = ps.line_labels()
    if args.format == "json":
        data = {
            "q": args.q,
            "points": [ps.point_label(i) for i in range(len(ps.points))],
            "lines": sorted(labels),
        }
        out.write(_dump(data) + "\n")
        return 0
    if args.format == "dot":
        out.write(fg.incidence_to_dot(ps))
        return 0
    axioms = fg.plane_axioms(ps)
    dual = fg.duality_check(ps)
    for i, line in enumerate(labels, start=1):
        out.write(f"L{i} = {{{', '.join(line)}}}\n")
    for name, ok in axioms.items():
        out.write(f"{name}: {ok}\n")
    out.write(f"self-dual: {dual.is_self_dual_plane}\n")
    return 0 if all(axioms.values()) and dual.is_self_dual_plane else 1


def _load_table(args) -> MultTable:
    if getattr(args, "table", None):
        with open(args.table) as fh:
            return MultTable.from_json(fh.read())
    return CODINGS[args.coding]()


def cmd_octonion_table(args, out: TextIO) -> int:
    t = _load_table(args)
    labeling = LABELINGS[args.coding]
    if args.format == "json":
        out.write(t.to_json() + "\n")
    elif args.format == "dot":
        out.write(fo.fano_table_to_dot(t, labeling))
    else:
        out.write(t.render() + "\n\n")
        if args.coding != "cd":
            out.write(f"labeling: {labeling}\n")
        out.write(fo.rules_text(t, labeling) + "\n")
    return 0


def cmd_validate(args, out: TextIO) -> int:
    t = _load_table(args)
    r = fo.validate_table(t)
    if args.format == "json":
        out.write(
            _dump(
                {
                    "anticommutative": r.anticommutative,
                    "units_square_to_minus_one": r.units_square_to_minus_one,
                    "norm_composing": r.norm_composing,
                    "alternative": r.alternative,
                    "failures": [{"check": f.check, "witness": list(f.witness)} for f in r.failures],
                }
            )
            + "\n"
        )
    else:
        out.write(f"anticommutative: {r.anticommutative}\n")
        out.write(f"units_square_to_minus_one: {r.units_square_to_minus_one}\n")
        out.write(f"norm_composing: {r.norm_composing}\n")
        out.write(f"alternative: {r.alternative}\n")
        for f in r.failures:
            out.write(f"failure {f.check}: {f.witness}\n")
    return 0 if r.valid else 1


def cmd_identity(args, out: TextIO) -> int:
    source = fo.fano_table() if args.source == "fano" else None
    if source is not None and args.n != 8:
        raise ValueError("--source fano needs --n 8")
    ident = ids.derive_identity(args.n, source)
    if not ids.verify_identity(ident):
        out.write(f"{args.n}-square residual is nonzero ({len(ident.residual)} terms); no identity\n")
        return 1
    out.write(ids.emit_identity(ident, args.format) + "\n")
    return 0


def cmd_probe(args, out: TextIO) -> int:
    r = cd.probe_law(args.level, args.law, trials=args.trials, seed=args.seed)
    cex = [[_frac(c) for c in e.coeffs] for e in r.counterexample] if r.counterexample else None
    if args.format == "json":
        out.write(
            _dump(
                {
                    "level": r.level,
                    "law": r.law.value,
                    "holds": r.holds,
                    "counterexample": cex,
                    "basis_tuples_checked": r.basis_tuples_checked,
                    "random_trials": r.random_trials,
                }
            )
            + "\n"
        )
    else:
        out.write(f"{cd.NAMES[r.level]} (level {r.level}), {r.law.value}: {'holds' if r.holds else 'fails'}\n")
        out.write(f"basis tuples checked: {r.basis_tuples_checked}, random trials: {r.random_trials}\n")
        if r.counterexample:
            out.write("counterexample: " + ", ".join(str(e) for e in r.counterexample) + "\n")
    return 0


def cmd_sweep(args, out: TextIO) -> int:
    if not args.orientations:
        raise ValueError("sweep needs --orientations")
    results = fo.sweep_orientations()
    valid = [f for f, ok in results if ok]
    if args.format == "json":
        out.write(_dump({"total": len(results), "valid": len(valid), "valid_flips": [list(f) for f in valid]}) + "\n")
    else:
        out.write(f"{len(valid)} of {len(results)} orientation assignments validate\n")
    return 0


def cmd_acceptance(args, out: TextIO) -> int:
    from .acceptance import run_all

    outcomes = run_all()
    for o in outcomes:
        out.write(o.line() + "\n")
    passed = sum(o.ok for o in outcomes)
    out.write(f"{passed}/{len(outcomes)} criteria passed\n")
    return 0 if passed == len(outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octofano", description="Finite geometry, q-combinatorics and octonion toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    s = sub.add_parser("galois", help="Gaussian binomials and the Galois number G(n,q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    fmt(s)
    s.set_defaults(func=cmd_galois)

    s = sub.add_parser("subspaces", help="list the k-dimensional subspaces of V(n,q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--dim", type=int, help="alias for --k")
    fmt(s)
    s.set_defaults(func=cmd_subspaces)

    s = sub.add_parser("lattice", help="subspace lattice of V(n,q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    fmt(s, ("text", "json", "dot"))
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("fano", help="projective plane PG(2,q), Fano plane by default")
    s.add_argument("--q", type=int, default=2)
    fmt(s, ("text", "json", "dot"))
    s.set_defaults(func=cmd_fano)

    for name, func, formats in (
        ("octonion-table", cmd_octonion_table, ("text", "json", "dot")),
        ("validate", cmd_validate, ("text", "json")),
    ):
        s = sub.add_parser(name)
        s.add_argument("--coding", choices=sorted(CODINGS), default="fano")
        s.add_argument("--table", help="JSON table file (see docs/formats.md)")
        fmt(s, formats)
        s.set_defaults(func=func)

    s = sub.add_parser("identity", help="derive and emit an n-square identity")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--source", choices=("cd", "fano"), default="cd")
    fmt(s)
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("probe", help="probe an algebraic law on a Cayley-Dickson level")
    s.add_argument("--level", type=int, required=True)
    s.add_argument("--law", choices=[l.value for l in cd.Law], required=True)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    fmt(s)
    s.set_defaults(func=cmd_probe)

    s = sub.add_parser("sweep", help="validate all 128 orientations of the Fano coding")
    s.add_argument("--orientations", action="store_true")
    fmt(s)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("acceptance", help="run the acceptance criteria")
    s.set_defaults(func=cmd_acceptance)
    return p


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
