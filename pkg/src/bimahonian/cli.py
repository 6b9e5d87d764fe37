"""Command-line interface: ``bimahonian <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails, 2 on invalid
arguments and 3 when a budget is exceeded.  JSON output is sorted and
deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional

from .cyclotomic import GaloisAut
from .distributions import (
    bimahonian_fake,
    bimahonian_fmaj,
    bimahonian_molien,
    mahonian,
    wright_recurrence,
)
from .errors import BudgetExceeded
from .poly import BiPoly
from .sieving import (
    DEFAULT_MAX_WORK,
    check_bicsp,
    group_exponent,
    is_regular,
    make_instance,
    regular_cyclic_subgroups,
    regular_elements,
)
from .suites import SUITES, run_suite
from .tableaux import (
    DEFAULT_MAX_CELLS,
    MultiPartition,
    colored_rsk,
    fake_degree,
    tableau_statistics,
)
from .wreath import DEFAULT_MAX_GROUP_ORDER, format_window, parse_window, word_statistics

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

METHOD_NAMES = {"fake": "fake_degree", "fmaj": "fmaj_sum", "molien": "molien", "wright": "wright_recurrence"}


class UsageError(ValueError):
    pass


def _poly_csv(p: BiPoly) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "q", "coeff"])
    for (i, j), c in p.sorted_terms():
        writer.writerow([i, j, str(c)])
    return buf.getvalue()


def _emit_poly(args, p: BiPoly) -> str:
    if args.format == "csv":
        return _poly_csv(p)
    if args.format == "pretty":
        return str(p) + "\n"
    return _dumps(p.to_json())


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _sigma_int(args) -> int:
    s = 1 if args.sigma is None else args.sigma
    if math.gcd(s, args.d) != 1:
        raise UsageError(f"--sigma {s} is not coprime to d={args.d}")
    return s % args.d


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _check_common(args):
    if getattr(args, "d", None) is not None and args.d < 1:
        raise UsageError("--d must be positive")
    if getattr(args, "n", None) is not None and args.n < 0:
        raise UsageError("--n must be nonnegative")
    for name in ("max_group_order", "max_cells"):
        if getattr(args, name, 1) <= 0:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")


def _compute(method: str, args, s: int) -> BiPoly:
    if method == "fake":
        return bimahonian_fake(args.d, args.n, s, max_cells=args.max_cells)
    if method == "fmaj":
        return bimahonian_fmaj(args.d, args.n, s, max_order=args.max_group_order)
    if method == "molien":
        return bimahonian_molien(args.d, args.n, s, max_order=args.max_group_order)
    if args.d != 1 or s != 0:
        raise UsageError("the recurrence method needs --d 1")
    return wright_recurrence(args.n)


def cmd_distribution(args):
    _need(args, "d", "n")
    s = _sigma_int(args)
    if args.method != "all":
        return _emit_poly(args, _compute(args.method, args, s)), 0
    methods = ["fake", "fmaj", "molien"] + (["wright"] if args.d == 1 else [])
    polys = {METHOD_NAMES[m]: _compute(m, args, s) for m in methods}
    equal = len(set(polys.values())) == 1
    if args.format == "pretty":
        text = "".join(f"{name}: {p}\n" for name, p in polys.items())
        text += f"verdict: {'equal' if equal else 'different'}\n"
    elif args.format == "csv":
        raise UsageError("--format csv takes a single method")
    else:
        text = _dumps({
            "d": args.d, "n": args.n, "sigma": s,
            "methods": {name: p.to_json() for name, p in polys.items()},
            "verdict": "equal" if equal else "different",
        })
    return text, 0 if equal else EXIT_MISMATCH


def cmd_mahonian(args):
    _need(args, "d", "n")
    return _emit_poly(args, mahonian(args.d, args.n)), 0


def cmd_fake_degree(args):
    _need(args, "shape")
    try:
        shape = MultiPartition.from_json(json.loads(args.shape))
    except (json.JSONDecodeError, TypeError) as exc:
        raise UsageError(f"malformed --shape: {exc}") from exc
    return _emit_poly(args, fake_degree(shape, args.max_cells)), 0


def _stats_doc(des, maj, fmaj):
    return {"des": sorted(des), "maj": maj, "fmaj": fmaj}


def cmd_rsk(args):
    _need(args, "d", "w")
    w = parse_window(args.w, args.d)
    P, Q = colored_rsk(w)
    ws = word_statistics(w)
    ps, qs = tableau_statistics(P), tableau_statistics(Q)
    doc = {
        "w": format_window(w),
        "shape": P.shape.to_json(),
        "P": P.to_json(),
        "Q": Q.to_json(),
        "stats": {
            "w": _stats_doc(ws.des_set, ws.maj, ws.fmaj),
            "P": _stats_doc(ps.des_set, ps.maj, ps.fmaj),
            "Q": _stats_doc(qs.des_set, qs.maj, qs.fmaj),
        },
    }
    if args.format == "pretty":
        lines = [f"w = {doc['w']}", f"shape = {doc['shape']}", f"P = {doc['P']}", f"Q = {doc['Q']}"]
        for key, st in doc["stats"].items():
            lines.append(f"{key}: Des={st['des']} maj={st['maj']} fmaj={st['fmaj']}")
        return "\n".join(lines) + "\n", 0
    return _dumps(doc), 0


def cmd_regular(args):
    _need(args, "d", "n")
    found = regular_elements(args.d, args.n, args.max_group_order)
    doc = [{"element": format_window(w), "certificates": [c.to_json() for c in certs]} for w, certs in found]
    if args.format == "pretty":
        lines = []
        for w, certs in found:
            evs = ", ".join(str(c.eigenvalue) for c in certs)
            lines.append(f"{format_window(w)}  order {w.order()}  eigenvalues {evs}")
        return "\n".join(lines) + "\n", 0
    return _dumps(doc), 0


def _certificate_for(text: str, d: int):
    w = parse_window(text, d)
    certs = is_regular(w)
    if not certs:
        raise UsageError(f"{text!r} is not a regular element")
    return certs[0]


def cmd_bicsp(args):
    _need(args, "d", "n")
    m = group_exponent(args.d, args.n)
    if args.sigma is None:
        sigma = GaloisAut(m, 1)
    else:
        if math.gcd(args.sigma, m) != 1:
            raise UsageError(f"--sigma {args.sigma} is not a unit modulo {m}")
        sigma = GaloisAut(m, args.sigma)
    if (args.c is None) != (args.c2 is None):
        raise UsageError("give both --c and --c2, or neither")
    if args.c is not None:
        pairs = [(_certificate_for(args.c, args.d), _certificate_for(args.c2, args.d))]
    else:
        subs = regular_cyclic_subgroups(args.d, args.n, args.max_group_order)
        pairs = [(A.certificate, B.certificate) for A in subs for B in subs]
    poly = bimahonian_molien(args.d, args.n, sigma.restrict(args.d), max_order=args.max_group_order)
    docs = []
    ok = True
    for ca, cb in pairs:
        if ca.element.n != args.n or cb.element.n != args.n:
            raise UsageError("regular elements must have length n")
        rep = check_bicsp(make_instance(ca, cb, sigma, poly), args.max_work)
        ok = ok and rep.passed
        doc = {"c": format_window(ca.element), "c2": format_window(cb.element), "s": sigma.s}
        doc.update(rep.to_json())
        docs.append(doc)
    if args.format == "pretty":
        lines = [f"c={x['c']} c2={x['c2']} k={x['k']} l={x['l']} (i): {x['pass_i']} (ii): {x['pass_ii']}"
                 for x in docs]
        return "\n".join(lines) + "\n", 0 if ok else EXIT_MISMATCH
    return _dumps(docs), 0 if ok else EXIT_MISMATCH


def cmd_verify(args):
    d = 1 if args.d is None else args.d
    n = args.n
    if n is None:
        n = 3
    if args.suite == "springer" and d != 1:
        raise UsageError("the springer suite needs --d 1")
    checks = run_suite(args.suite, d, n, degree=args.degree)
    ok = all(c.passed for c in checks)
    if args.format == "pretty":
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.suite}: {c.name} {json.dumps(c.inputs)}" for c in checks]
        lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
        return "\n".join(lines) + "\n", 0 if ok else EXIT_MISMATCH
    doc = {"suite": args.suite, "d": d, "n": n, "passed": ok, "checks": [c.to_json() for c in checks]}
    return _dumps(doc), 0 if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bimahonian",
                                     description="Bimahonian distributions of G(d,1,n) and their verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=("json", "csv", "pretty")):
        p.add_argument("--d", type=int, help="order of the cyclic factor (d=1 is the symmetric group)")
        p.add_argument("--n", type=int, help="rank")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_GROUP_ORDER)
        p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
        return p

    p = common(sub.add_parser("distribution", help="the sigma-bimahonian distribution"))
    p.add_argument("--sigma", type=int, help="exponent s of zeta -> zeta^s (default 1)")
    p.add_argument("--method", choices=["fake", "fmaj", "molien", "wright", "all"], default="molien")
    p.set_defaults(func=cmd_distribution)

    p = common(sub.add_parser("mahonian", help="the product formula W(q)"))
    p.set_defaults(func=cmd_mahonian)

    p = common(sub.add_parser("fake-degree", help="fake degree polynomial of a shape"))
    p.add_argument("--shape", help="JSON list of partitions, highest color index first, e.g. '[[1],[2,1]]'")
    p.set_defaults(func=cmd_fake_degree)

    p = common(sub.add_parser("rsk", help="colored Robinson-Schensted of a window word"), fmt=("json", "pretty"))
    p.add_argument("--w", help="window word, e.g. '2,-1' (d=2) or '0:2,1:1'")
    p.set_defaults(func=cmd_rsk)

    p = common(sub.add_parser("regular", help="regular elements with certificates"), fmt=("json", "pretty"))
    p.set_defaults(func=cmd_regular)

    p = common(sub.add_parser("bicsp", help="bicyclic sieving check"), fmt=("json", "pretty"))
    p.add_argument("--sigma", type=int, help="exponent s, a unit modulo the group exponent (default 1)")
    p.add_argument("--c", help="first regular element (default: all regular cyclic subgroups)")
    p.add_argument("--c2", help="second regular element")
    p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK)
    p.set_defaults(func=cmd_bicsp)

    p = common(sub.add_parser("verify", help="run a verification suite"), fmt=("json", "pretty"))
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--degree", type=int, default=6, help="degree bound for the genfun suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_common(args)
        text, status = args.func(args)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
