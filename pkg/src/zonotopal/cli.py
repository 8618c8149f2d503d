"""Command-line front end: ``zonotopal <command> FILE [options]``.

Exit status is 0 when everything passes, 2 when a verification fails and 1
for bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebras, equivariance, matroid, orlik_terao, schubert
from .errors import AuditFailure, ZonotopalError
from .fileio import load_space, parse_automorphisms
from .report import Report, _jsonable
from .space import gale_dual

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class _Usage(Exception):
    pass


def _ordering(a, text):
    if text is None:
        return None
    labels = [x for x in text.replace(",", " ").split() if x]
    if sorted(labels) != sorted(a.labels):
        raise _Usage(f"--ordering must list every label once: {' '.join(a.labels)}")
    return labels


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(_jsonable(payload), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _report_out(args, reports: list[Report], header: list[str] | None = None) -> int:
    ok = all(r.passed for r in reports)
    lines = list(header or [])
    for r in reports:
        lines.append(f"== {r.title}")
        lines.extend(r.lines())
    lines.append("PASS" if ok else "FAIL")
    _emit(args, {"passed": ok, "reports": [r.to_json() for r in reports]}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_matroid(args, a) -> int:
    space = gale_dual(a) if args.dual else a
    m = matroid.matroid_of(space)
    circ = [m.labels_of(c) for c in matroid.circuits(m)]
    lat = matroid.flats(m)
    fl = [{"flat": m.labels_of(f), "rank": lat.ranks[f], "mu": lat.mobius_to_top[f]}
          for f in lat.flats]
    nb, ni, ns = matroid.counts(m)
    tut = matroid.tutte(m)
    terms = sorted(tut.items())
    payload = {"rank": m.full_rank, "circuits": circ, "flats": fl,
               "counts": {"bases": nb, "independent": ni, "spanning": ns},
               "tutte": [{"x": i, "y": j, "coeff": c} for (i, j), c in terms]}
    lines = [f"rank {m.full_rank}", "circuits:"]
    lines += ["  {" + " ".join(c) + "}" for c in circ]
    lines.append("flats (rank, mu(F,E)):")
    lines += [f"  {{{' '.join(f['flat'])}}} {f['rank']} {f['mu']}" for f in fl]
    lines.append(f"bases {nb} independent {ni} spanning {ns}")
    lines.append("tutte " + " + ".join(f"{c}*x^{i}*y^{j}" for (i, j), c in terms))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_hilbert(args, a) -> int:
    if args.kind in algebras.KIND_K:
        h = algebras.hilbert(a, algebras.KIND_K[args.kind])
    elif args.kind == "otbar":
        h = orlik_terao.otbar_hilbert(a)
    else:
        h = orlik_terao.srbar_hilbert(a)
    _emit(args, {"kind": args.kind, "hilbert": list(h)}, [" ".join(map(str, h))])
    return EXIT_OK


def _automorphisms(args, a):
    if args.aut is None:
        return [("identity", equivariance.AutoElem.identity(a.n))]
    gens = parse_automorphisms(Path(args.aut).read_text(encoding="utf-8"))
    return [(f"generator {i + 1}", equivariance.AutoElem.from_labels(a, p, s))
            for i, (p, s) in enumerate(gens)]


def cmd_verify(args, a) -> int:
    t = args.theorem
    if t == "internal":
        reports = [orlik_terao.verify_internal(a)]
    elif t == "central":
        reports = [orlik_terao.verify_central(a)]
    elif t == "hr-internal":
        order = _ordering(a, args.ordering)
        reports = [orlik_terao.verify_hr_internal(a, None if order is None else [order])]
    else:
        reports = []
        for name, g in _automorphisms(args, a):
            r = equivariance.verify_equivariant_internal(a, g)
            reports.append(Report(f"{r.title} ({name})", r.checks))
    return _report_out(args, reports)


def cmd_betti(args, a) -> int:
    table = schubert.betti_table(a)
    lines = [f"{e.i} {{{' '.join(e.S)}}} {e.mult}" for e in table.entries]
    _emit(args, schubert.betti_json(table), lines)
    return EXIT_OK


def cmd_euler(args, a) -> int:
    if args.graded:
        lhs, rhs = schubert.graded_euler_sides(a)
        ok = lhs == rhs
        ls, rs = schubert.laurent_str(lhs), schubert.laurent_str(rhs)
        line = f"{ls} = {rs} : PASS" if ok else f"{ls} != {rs} : FAIL"
        payload = {"passed": ok, "lhs": {str(k): v for k, v in lhs.items()},
                   "rhs": {str(k): v for k, v in rhs.items()}}
        _emit(args, payload, [line])
        return EXIT_OK if ok else EXIT_FAIL
    rep = schubert.euler_identity(a)
    lines = []
    for c in rep.checks:
        prefix = "" if c.name == "betti" else f"{c.name}: "
        if c.passed:
            lines.append(f"{prefix}{c.detail} = {c.lhs} : PASS")
        else:
            lines.append(f"{prefix}{c.detail} = {c.lhs} != {c.rhs} : FAIL")
    _emit(args, rep.to_json(), lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_char(args, a) -> int:
    rows = []
    for name, g in _automorphisms(args, a):
        rows.append((name, equivariance.char_on(a, g, args.which, args.deg)))
    payload = {"which": args.which, "deg": args.deg,
               "traces": [{"aut": n, "trace": str(v)} for n, v in rows]}
    _emit(args, payload, [f"{n}: {v}" for n, v in rows])
    return EXIT_OK


def cmd_audit(args, a) -> int:
    header = f"# seed {args.seed}"
    try:
        algebras.random_alpha_audit(a, args.k, trials=args.trials, seed=args.seed)
    except AuditFailure as exc:
        _emit(args, {"seed": args.seed, "k": args.k, "trials": args.trials, "passed": False,
                     "alpha": list(exc.alpha), "degree": exc.d},
              [header, f"audit k={args.k} trials={args.trials} : FAIL", str(exc)])
        return EXIT_FAIL
    _emit(args, {"seed": args.seed, "k": args.k, "trials": args.trials, "passed": True},
          [header, f"audit k={args.k} trials={args.trials} : PASS"])
    return EXIT_OK


COMMANDS = {
    "matroid": cmd_matroid,
    "hilbert": cmd_hilbert,
    "verify": cmd_verify,
    "betti": cmd_betti,
    "euler": cmd_euler,
    "char": cmd_char,
    "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="matrix file (.mat) or graph file (.graph)")
    common.add_argument("--mode", choices=["graphical", "cographical"],
                        help="read the input as a graph (default for .graph files: cographical)")
    common.add_argument("--format", choices=["text", "json"], default="text")

    p = argparse.ArgumentParser(prog="zonotopal", description="Zonotopal algebra toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("matroid", parents=[common], help="rank, circuits, flats, counts, Tutte")
    s.add_argument("--dual", action="store_true", help="work with the Gale dual")

    s = sub.add_parser("hilbert", parents=[common], help="Hilbert functions")
    s.add_argument("--kind", required=True,
                   choices=["internal", "central", "external", "otbar", "srbar"])

    s = sub.add_parser("verify", parents=[common], help="direct-sum and equivariance checks")
    s.add_argument("--theorem", required=True,
                   choices=["internal", "central", "hr-internal", "equivariant"])
    s.add_argument("--ordering", help="label order for hr-internal, comma or space separated")
    s.add_argument("--aut", help="automorphism file for the equivariant check")

    sub.add_parser("betti", parents=[common], help="Betti table of the Schubert variety")

    s = sub.add_parser("euler", parents=[common], help="Euler characteristic identities")
    s.add_argument("--graded", action="store_true")

    s = sub.add_parser("char", parents=[common], help="traces of automorphisms")
    s.add_argument("--which", required=True, choices=sorted(equivariance.WHICH))
    s.add_argument("--deg", required=True, type=int)
    s.add_argument("--aut", help="automorphism file (default: identity)")

    s = sub.add_parser("audit", parents=[common], help="random non-minimal alpha audit")
    s.add_argument("--k", required=True, type=int)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        a = load_space(args.path, args.mode)
        return COMMANDS[args.command](args, a)
    except (ZonotopalError, _Usage, OSError, ValueError, KeyError) as exc:
        print(f"zonotopal: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
