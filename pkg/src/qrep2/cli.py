"""Command-line front end.

Subcommands:

* ``build``    -- assemble one representation and write it out (JSON
                  manifest or one Matrix Market file per generator).
* ``verify``   -- run the full check suite on a freshly assembled
                  representation or on a previously written JSON manifest.
* ``diagram``  -- print the weight-diagram table for a label.
* ``compare``  -- cross-validate the assembled representation against the
                  highest-weight oracle and arbitrate between the two
                  closed-form coefficient families.

Exit codes: 0 success, 1 a verification or comparison failed, 2 usage.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .assembly import assemble, load_json, save_json, save_matrix_market
from .diagram import RepLabel, build_diagram, dimension
from .oracle import PBW_DIM_CAP, invariant_compare, pbw_construct
from .primitive import REGION_LEFT, REGION_RIGHT, ab_coefficients, solve_ab_numeric
from .verify import check_defining_relations, verify_representation

__all__ = ["RunConfig", "main"]

SURVIVOR_CUTOFF = 1e-8  # max |closed form - solver| for a family to survive


@dataclass
class RunConfig:
    """Options shared by the subcommands, resolved from argv."""

    command: str
    p: int | None = None
    q: int | None = None
    t: float = 0.0
    variant: str = "numeric_solver"
    tol: float = 1e-9
    out: str | None = None
    fmt: str = "json"
    as_json: bool = False
    infile: str | None = None


def _add_label_args(sp, required: bool = True) -> None:
    sp.add_argument("--p", type=int, required=required, help="first label entry")
    sp.add_argument("--q", type=int, required=required, help="second label entry")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--t", type=float, default=0.0,
                   help="deformation parameter (default 0)")
    g.add_argument("--qdef", type=float, default=None,
                   help="deformation base; equivalent to --t ln(qdef)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qrep2",
                                 description="generator matrices for the "
                                             "two-parameter representation family")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="assemble and write one representation")
    _add_label_args(b)
    b.add_argument("--variant", choices=["closed_form_b", "closed_form_a",
                                         "numeric_solver"],
                   default="numeric_solver")
    b.add_argument("--format", dest="fmt", choices=["json", "matrixmarket"],
                   default="json")
    b.add_argument("--out", default=None,
                   help="output path (json) or stem (matrixmarket)")

    v = sub.add_parser("verify", help="run the full check suite")
    _add_label_args(v, required=False)
    v.add_argument("--in", dest="infile", default=None,
                   help="verify a previously written JSON manifest instead")
    v.add_argument("--variant", choices=["closed_form_b", "closed_form_a",
                                         "numeric_solver"],
                   default="numeric_solver")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--json", dest="as_json", action="store_true",
                   help="machine-readable report")

    d = sub.add_parser("diagram", help="print the weight-diagram table")
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--q", type=int, required=True)

    c = sub.add_parser("compare", help="cross-validate against the oracle")
    _add_label_args(c)
    c.add_argument("--tol", type=float, default=1e-9)
    c.add_argument("--json", dest="as_json", action="store_true")
    return ap


def _resolve_t(args, ap: argparse.ArgumentParser) -> float:
    qdef = getattr(args, "qdef", None)
    if qdef is not None:
        if qdef <= 0:
            ap.error("--qdef must be positive")
        return math.log(qdef)
    return args.t


def _cmd_build(cfg: RunConfig) -> int:
    label = RepLabel.of(cfg.p, cfg.q)
    gen = assemble(label, cfg.t, cfg.variant)
    if cfg.fmt == "json":
        out = cfg.out or f"rep_p{cfg.p}_q{cfg.q}.json"
        path = save_json(gen, out)
        print(f"wrote {path} (dim {gen.dim})")
    else:
        stem = cfg.out or f"rep_p{cfg.p}_q{cfg.q}"
        paths = save_matrix_market(gen, stem)
        print(f"wrote {len(paths)} files (dim {gen.dim}):")
        for pth in paths:
            print(f"  {pth}")
    return 0


def _print_reports(reports, gen) -> None:
    print(f"label ({gen.label.p},{gen.label.q})  t={gen.t}  dim={gen.dim}")
    for rep in reports:
        print(f"\n{rep.title}")
        if rep.note:
            print(f"  [{rep.note}]")
        for c in rep.checks:
            status = "PASS" if c.passed else "FAIL"
            print(f"  {c.name:<18} residual {c.residual:11.3e}  "
                  f"tol {c.tol:9.1e}  {status}  @ {c.location}")


def _cmd_verify(cfg: RunConfig, ap: argparse.ArgumentParser) -> int:
    if cfg.infile is not None:
        gen = load_json(cfg.infile)
    else:
        if cfg.p is None or cfg.q is None:
            ap.error("verify needs either --in or both --p and --q")
        gen = assemble(RepLabel.of(cfg.p, cfg.q), cfg.t, cfg.variant)
    if cfg.tol <= 0:
        ap.error("--tol must be positive")
    reports = verify_representation(gen, tol=cfg.tol)
    ok = all(r.passed for r in reports)
    if cfg.as_json:
        print(json.dumps({"passed": ok,
                          "reports": [r.to_dict() for r in reports]}, indent=1))
    else:
        _print_reports(reports, gen)
        print(f"\noverall: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_diagram(p: int, q: int) -> int:
    label = RepLabel.of(p, q)
    dg = build_diagram(label)
    if label.swapped:
        print(f"note: label ({p},{q}) handled as ({label.p},{label.q}) "
              f"with the two lowering roles exchanged")
    print(f"label ({label.p},{label.q})  dim {dimension(label)}")
    print(f"{'k':>3} {'s':>3} {'h1':>4} {'h2':>4} {'mult':>5}  region")
    for (k, s) in sorted(dg.points, key=lambda ks: (ks[1], ks[0])):
        h1, h2 = dg.weight(k, s)
        region = "seam" if s == label.q else ("left" if s < label.q else "right")
        print(f"{k:>3} {s:>3} {h1:>4} {h2:>4} {dg.mult(k, s):>5}  {region}")
    return 0


def _arbitrate(label: RepLabel, t: float) -> dict:
    """Max deviation of each closed-form family from the numeric solver,
    per region, over every transition line and coefficient index."""
    out = {}
    regions = []
    if label.q >= 1:
        regions.append((REGION_LEFT, range(0, label.q)))
    if label.p >= 1:
        regions.append((REGION_RIGHT, range(label.q, label.p + label.q)))
    for region, s_range in regions:
        devs = {}
        for variant in ("closed_form_b", "closed_form_a"):
            dev = 0.0
            for s in s_range:
                ref = solve_ab_numeric(label, s, region, t)
                cand = ab_coefficients(label, s, region, t, variant)
                for i in range(1, len(ref.a) + 1):
                    dev = max(dev, abs(cand.a_at(i) - ref.a_at(i)))
                for i in range(1, len(ref.b) + 1):
                    dev = max(dev, abs(cand.b_at(i) - ref.b_at(i)))
            devs[variant] = dev
        out[region] = devs
    return out


def _cmd_compare(cfg: RunConfig, ap: argparse.ArgumentParser) -> int:
    label = RepLabel.of(cfg.p, cfg.q)
    if dimension(label) > PBW_DIM_CAP:
        ap.error(f"dimension {dimension(label)} exceeds the oracle cap {PBW_DIM_CAP}")
    gen = assemble(label, cfg.t, "closed_form_a")
    orc = pbw_construct(label, cfg.t)
    inv = invariant_compare(gen, orc, tol=cfg.tol)

    arb = _arbitrate(label, cfg.t)
    survivors = {}
    for region, devs in arb.items():
        survivors[region] = [v for v, d in devs.items() if d < SURVIVOR_CUTOFF]
    arb_ok = all(len(v) == 1 for v in survivors.values())
    named = sorted({v[0] for v in survivors.values() if len(v) == 1})

    # corroboration: do the defining relations hold with each family?
    relation_status = {}
    for variant in ("closed_form_b", "closed_form_a"):
        rep = check_defining_relations(assemble(label, cfg.t, variant), tol=cfg.tol)
        relation_status[variant] = (rep.passed, rep.worst().residual)

    ok = inv.passed and arb_ok
    if cfg.as_json:
        print(json.dumps({
            "passed": ok,
            "invariants": inv.to_dict(),
            "arbitration": {r: {v: d for v, d in devs.items()}
                            for r, devs in arb.items()},
            "survivors": survivors,
            "relations": {v: {"passed": s[0], "worst": s[1]}
                          for v, s in relation_status.items()},
        }, indent=1))
        return 0 if ok else 1

    print(f"label ({label.p},{label.q})  t={cfg.t}  dim={inv.dim}")
    print(f"oracle invariants: weights {'match' if inv.weights_equal else 'DIFFER'}, "
          f"trace residual {inv.trace_residual:.3e}, "
          f"singular-value residual {inv.sv_residual:.3e} "
          f"-> {'PASS' if inv.passed else 'FAIL'}")
    if not arb:
        print("no transition lines; nothing to arbitrate")
    for region, devs in arb.items():
        print(f"arbitration ({region} region, vs numeric solver):")
        for v, d in sorted(devs.items()):
            verdict = "SURVIVES" if d < SURVIVOR_CUTOFF else "REJECTED"
            print(f"  {v:<16} max deviation {d:9.3e}  {verdict}")
    for v, (passed, worst) in relation_status.items():
        print(f"relations with {v}: {'pass' if passed else 'FAIL'} "
              f"(worst residual {worst:.3e})")
    if named:
        print(f"surviving family: {', '.join(named)}")
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    cfg = RunConfig(command=args.command,
                    p=getattr(args, "p", None), q=getattr(args, "q", None),
                    t=_resolve_t(args, ap) if hasattr(args, "t") else 0.0,
                    variant=getattr(args, "variant", "numeric_solver"),
                    tol=getattr(args, "tol", 1e-9),
                    out=getattr(args, "out", None),
                    fmt=getattr(args, "fmt", "json"),
                    as_json=getattr(args, "as_json", False),
                    infile=getattr(args, "infile", None))
    if cfg.command == "build":
        return _cmd_build(cfg)
    if cfg.command == "verify":
        return _cmd_verify(cfg, ap)
    if cfg.command == "diagram":
        return _cmd_diagram(args.p, args.q)
    return _cmd_compare(cfg, ap)


if __name__ == "__main__":
    sys.exit(main())
