"""Command-line front end.  Every subcommand builds a RunReport; exit status is 0 iff nothing failed."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List

from . import __version__
from .cumulant import (Chart, pfaffian_pluecker_suite, tangent_in_z, verify_main_theorem,
                       verify_secant_lemmas, x_to_y, y_to_z, resolved_sign)
from .minuscule import compositions, parse_family, verify_detsum, verify_laplace
from .plethysm import s3_wedge_report
from .secant import (check_hwv, hwv, in_D, ideal_degree_d, orbit_ring_multiplicity,
                     orbit_ring_oracle, quotient_degree3, sym_power_dimension, cubic_ideal_table)

SCHEMA = 1

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


@dataclass
class RunReport:
    command: List[str]
    checks: List[Dict] = field(default_factory=list)
    payload: Dict = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    def check(self, name: str, ok: bool, flagged: bool = False, **detail):
        status = FLAGGED if (ok and flagged) else (PASS if ok else FAIL)
        self.checks.append({"name": name, "status": status, **detail})

    @property
    def failed(self) -> bool:
        return any(c["status"] == FAIL for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        out = {"schema": SCHEMA, "command": self.command, "checks": self.checks, "payload": self.payload,
               "ok": not self.failed}
        if timings:
            out["timings"] = self.timings
        return out


def _weight_label(w) -> str:
    return json.dumps(w, separators=(",", ":"))


def _identity_job(args):
    spec, pairing, w = args
    fam = parse_family(spec, pairing)
    res = {"detsum": verify_detsum(fam, w)}
    for parts in compositions(fam.degree(w)):
        res["laplace(" + ",".join(map(str, parts)) + ")"] = verify_laplace(fam, w, parts)
    return w, res


def _map(fn, jobs_in, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, jobs_in))
    return [fn(j) for j in jobs_in]


# -- subcommands --------------------------------------------------------------

def cmd_plethysm(args, rep: RunReport):
    rows = s3_wedge_report(args.k, args.dim)
    nonzero = [r for r in rows if r["closed_form"]]
    rep.payload["rows"] = nonzero if not args.all else rows
    rep.check("closed-form-vs-oracle", all(r["agree"] for r in rows), k=args.k)


def cmd_verify(args, rep: RunReport):
    if args.what == "identities":
        fam = parse_family(args.family, args.pairing)
        results = _map(_identity_job, [(args.family, args.pairing, w) for w in fam.nonzero_weights()], args.jobs)
        for w, res in results:
            for name, ok in res.items():
                rep.check(f"{name}@{_weight_label(w)}", ok)
        rep.payload["family"] = fam.label()
    elif args.what == "secant-lemmas":
        fam = parse_family(args.family, args.pairing)
        r = verify_secant_lemmas(fam)
        rep.check("y-form", r["y"])
        rep.check("z-form", r["z"])
        t = tangent_in_z(fam)
        rep.check("tangent-single-constant", t.consistent)
        rep.payload.update({"family": fam.label(), "resolved_sign": r["sign"], "tangent_c_vs_det_2n2": str(t.c),
                            "mismatches": r["mismatches"]})
    elif args.what == "pfaffian-pluecker":
        results = pfaffian_pluecker_suite(args.n)
        for r in results:
            rep.check("pfaffian" + "".join(map(str, r["six"])), r["passed"], sign=r["sign"])
        rep.payload["count"] = len(results)
    elif args.what == "main-theorem":
        fam = parse_family(args.family)
        r = verify_main_theorem(fam, args.samples, args.seed)
        rep.check("generic-samples", r["generic"], relations=r["relations"])
        for k, ok in r["vertex"].items():
            rep.check("vertex:" + k, ok)
        rep.payload.update(r)


def cmd_cumulant(args, rep: RunReport):
    fam = parse_family(args.family, args.pairing)
    chart = Chart(fam)
    table = x_to_y(chart) if args.coords == "y" else y_to_z(chart)
    src = "x" if args.coords == "y" else "y"
    rep.payload["family"] = fam.label()
    rep.payload["coords"] = args.coords
    rep.payload["in_terms_of"] = src
    rep.payload["resolved_sign"] = resolved_sign()
    rep.payload["coordinates"] = [
        {"weight": _weight_label(w), "degree": fam.degree(w), "poly": str(p)}
        for w, p in sorted(table.items(), key=lambda wp: (fam.degree(wp[0]), wp[0]))
    ]


def cmd_ideal(args, rep: RunReport):
    piece = ideal_degree_d(args.k, args.n, args.s, args.d, seed=args.seed)
    rep.payload.update({
        "k": args.k, "n": args.n, "s": args.s, "d": args.d,
        "dimension": piece.dimension,
        "ambient_dimension": sym_power_dimension(args.k, args.n, args.d),
        "points_used": piece.points_used,
        "isotypic": piece.isotypic().in_convention("columns").to_json_list(),
    })
    if args.basis:
        rep.payload["basis"] = [str(p) for p in piece.basis]
    if args.s >= args.d:
        rep.check("no-low-degree", piece.dimension == 0)


def cmd_cubics(args, rep: RunReport):
    ideal_dim = None
    if args.kernel:
        ideal_dim = ideal_degree_d(args.k, args.n, 2, 3, seed=args.seed).dimension
    q = quotient_degree3(args.k, args.n, ideal_dim)
    table, entries = cubic_ideal_table(args.k, args.n)
    rep.payload.update({
        "k": args.k, "n": args.n,
        "ideal": table.to_json_list(),
        "ideal_dimension": q["ideal_dimension"],
        "s3_dimension": q["s3_dimension"],
        "quotient": {name: t.to_json_list() for name, t in q["readings"].items()},
        "quotient_dimensions": q["reading_dimensions"],
        "dimension_identity": q["identity_holds"],
        "clamped": [list(t) for t in q["flagged"]],
    })
    if args.kernel:
        rep.check("theorem-vs-kernel", table.dimension(args.n) == ideal_dim)
    rep.check("dimension-identity", any(q["identity_holds"].values()), flagged=bool(q["flagged"]))


def cmd_hwv(args, rep: RunReport):
    P = hwv(args.k)
    rep.payload["k"] = args.k
    rep.payload["terms"] = len(P)
    if args.show:
        rep.payload["polynomial"] = str(P)
    if args.check:
        r = check_hwv(args.k, P)
        rep.payload.update({k: v for k, v in r.items() if k not in ("passed",)})
        rep.check("raising-killed", r["raising_killed"])
        rep.check("weight", r["weight_ok"])
        rep.check("nonzero-at-Q", r["value_at_Q"] != "0")


def cmd_orbit_ring(args, rep: RunReport):
    alpha = [int(x) for x in args.alpha.split(",")]
    if len(alpha) != 2 * args.k:
        raise SystemExit(f"--alpha needs {2 * args.k} entries")
    mult = orbit_ring_multiplicity(alpha, args.k)
    oracle = orbit_ring_oracle(alpha, args.k)
    rep.payload.update({"alpha": alpha, "k": args.k, "in_D": in_D(alpha, args.k), "multiplicity": mult,
                        "lr_oracle": oracle})
    rep.check("formula-vs-lr", mult == oracle)


# -- parsing ------------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--timings", action="store_true", default=d(False), help="include timings in JSON")
    p.add_argument("--family", default=d("A:2,4"), help="A:k,n or D:n")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(True)
    parser = argparse.ArgumentParser(prog="secgrass", parents=[_common(False)],
                                     description="Exact checks for secants of minuscule varieties.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plethysm", parents=[common], help="plethysm tables")
    p.add_argument("table", choices=["s3-wedge"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--all", action="store_true", help="include zero rows")
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("verify", parents=[common], help="identity suites")
    p.add_argument("what", choices=["identities", "secant-lemmas", "pfaffian-pluecker", "main-theorem"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--pairing", choices=["sorted", "reversed"], default="sorted")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cumulant", parents=[common], help="coordinate changes")
    p.add_argument("action", choices=["show"])
    p.add_argument("--coords", choices=["y", "z"], default="y")
    p.add_argument("--pairing", choices=["sorted", "reversed"], default="sorted")
    p.set_defaults(func=cmd_cumulant)

    p = sub.add_parser("ideal", parents=[common], help="degree-d ideal of a Grassmannian secant")
    for name in ("k", "n", "s", "d"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--basis", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("cubics", parents=[common], help="cubic ideal and quotient tables")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kernel", action="store_true", help="also compute I_3 by evaluation kernel")
    p.set_defaults(func=cmd_cubics)

    p = sub.add_parser("hwv", parents=[common], help="highest weight cubics")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--show", action="store_true")
    p.set_defaults(func=cmd_hwv)

    p = sub.add_parser("orbit-ring", parents=[common], help="open-orbit coordinate ring multiplicity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", required=True, help="comma-separated, length 2k")
    p.set_defaults(func=cmd_orbit_ring)
    return parser


def _print_text(rep: RunReport, out):
    print("secgrass " + " ".join(rep.command), file=out)
    for key, val in rep.payload.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{key}:", file=out)
            for row in val:
                print("  " + " ".join(f"{k}={v}" for k, v in row.items()), file=out)
        else:
            print(f"{key}: {val}", file=out)
    for c in rep.checks:
        print(f"[{c['status'].upper()}] {c['name']}", file=out)
    nfail = sum(c["status"] == FAIL for c in rep.checks)
    print(f"{len(rep.checks) - nfail}/{len(rep.checks)} checks passed", file=out)


def dispatch(argv: List[str]) -> RunReport:
    args = build_parser().parse_args(argv)
    rep = RunReport(list(argv))
    t0 = time.perf_counter()
    args.func(args, rep)
    rep.timings["total_s"] = round(time.perf_counter() - t0, 4)
    rep.args = args
    return rep


def main(argv: List[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    rep = dispatch(argv)
    if rep.args.json:
        json.dump(rep.to_dict(rep.args.timings), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _print_text(rep, sys.stdout)
    return 1 if rep.failed else 0


if __name__ == "__main__":
    sys.exit(main())
