"""Command-line interface: build model representations, compute
invariant reports, and print census tables.

Exit codes: 0 ok, 2 usage or validation problems, 3 construction
failures, 4 computation failures.  The ANOSOV_TOL environment variable
overrides the proximality gap tolerance.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import invariants
from .errors import (AnosovError, ComputationError, ConstructionError,
                     InvalidInput, UnsupportedCupError)
from .fuchsian import fuchsian_from_polygon
from .models import (Representation, diagonal_fuchsian, epsilon_twist, hybrid,
                     irreducible_fuchsian, orthogonal_catalog,
                     twisted_diagonal)
from .surface import Decomposition, standard_presentation

FORMAT_VERSION = "1"


# --------------------------------------------------------------- persistence


def _matrix_to_rows(M):
    # decimal with 17 significant digits round-trips float64 exactly
    return [[repr(float(x)) for x in row] for row in np.asarray(M)]


def _rows_to_matrix(rows):
    return np.array([[float(x) for x in row] for row in rows], dtype=float)


def serialize_rep(rep):
    return {
        "format_version": FORMAT_VERSION,
        "genus": rep.genus,
        "n": rep.n,
        "family": rep.family,
        "generators": {nm: _matrix_to_rows(M)
                       for nm, M in rep.generators.items()},
        "metadata": rep.metadata,
        "relator_residue": repr(rep.relator_residue),
    }


def parse_rep(doc):
    if doc.get("format_version") != FORMAT_VERSION:
        raise InvalidInput("unsupported format version %r"
                           % (doc.get("format_version"),))
    pres = standard_presentation(int(doc["genus"]))
    gens = {nm: _rows_to_matrix(rows)
            for nm, rows in doc["generators"].items()}
    residue = doc.get("relator_residue")
    return Representation(doc["family"], int(doc["n"]), pres, gens,
                          metadata=doc.get("metadata"),
                          certified_residue=None if residue is None
                          else float(residue))


def load_rep(path):
    with open(path, "r") as fh:
        return parse_rep(json.load(fh))


def save_rep(rep, path):
    with open(path, "w") as fh:
        json.dump(serialize_rep(rep), fh, indent=1)
        fh.write("\n")


# ------------------------------------------------------------------ commands


def _parse_bits(text, count):
    bits = [int(c) for c in text.replace(",", "").strip()]
    if len(bits) != count or any(b not in (0, 1) for b in bits):
        raise InvalidInput("expected %d bits, got %r" % (count, text))
    return bits


def cmd_build(args):
    if args.genus < 2:
        raise InvalidInput("genus must be >= 2")
    if args.model == "hybrid":
        if args.chi_left is None:
            raise InvalidInput("--model hybrid needs --chi-left")
        rep = hybrid(args.genus, args.chi_left, adjustment=args.adjust,
                     m=args.m)
    elif args.model in ("irr", "diag"):
        iota = fuchsian_from_polygon(args.genus)
        build = irreducible_fuchsian if args.model == "irr" else diagonal_fuchsian
        rep = build(iota, n=args.n)
    elif args.model == "twisted":
        if args.sw1_target is None or args.sw2_target is None:
            raise InvalidInput("--model twisted needs --sw1-target and "
                               "--sw2-target")
        alpha = _parse_bits(args.sw1_target, 2 * args.genus)
        theta = orthogonal_catalog(alpha, args.sw2_target, args.n,
                                   genus=args.genus)
        rep = twisted_diagonal(fuchsian_from_polygon(args.genus), theta)
    else:
        raise InvalidInput("unknown model %r" % (args.model,))
    if args.epsilon == -1:
        rep = epsilon_twist(rep, -1)
    save_rep(rep, args.output)
    summary = {"model": args.model, "genus": args.genus, "n": rep.n,
               "relator_residue": rep.relator_residue,
               "output": args.output}
    if args.model == "hybrid":
        gl = rep.metadata["curves"][0]["genus_l"] \
            if args.chi_left % 2 == 0 else (1 - args.chi_left) // 2
        gamma = Decomposition(args.genus, gl).gamma
        hol = rep(gamma)
        summary["curve_holonomy_diagonal"] = [float(x) for x in np.diag(hol)]
    print(json.dumps(summary, indent=1))
    return 0


def cmd_invariants(args):
    rep = load_rep(args.path)
    report = {"tag": rep.tag, "genus": rep.genus, "n": rep.n,
              "relator_residue": rep.relator_residue}
    s1 = invariants.sw1(rep)
    report["sw1"] = {"surface_bits": list(s1.surface_bits),
                     "fiber_bit": s1.fiber_bit}
    try:
        report["sw2"] = invariants.sw2(rep)
    except UnsupportedCupError as exc:
        # even-n twisted models with orientation-reversing twists have
        # no supported cup evaluation; report the obstruction instead
        report["sw2"] = None
        report["sw2_diagnostic"] = str(exc)
    except InvalidInput:
        report["sw2"] = None
    report["toledo"] = invariants.toledo(rep)
    report["euler"] = None
    if rep.n == 2 and s1.is_zero():
        try:
            report["euler"] = int(invariants.euler_relative(rep))
        except InvalidInput:
            pass
    cls_report = {"sw1": s1, "sw2": report["sw2"], "tag": rep.tag,
                  "toledo": report["toledo"]}
    if report["euler"] is not None:
        from .cohomology import TorsionClassZ
        cls_report["euler"] = TorsionClassZ(rep.genus, report["euler"])
    try:
        report["component"] = invariants.classify_component(
            cls_report, rep.n, rep.genus)
    except InvalidInput as exc:
        report["component"] = None
        report["component_diagnostic"] = str(exc)
    if args.verify:
        report["positivity"] = invariants.positivity_suite(
            rep, samples=args.samples, seed=args.seed)
        report["anosov"] = invariants.eigen_suite(
            rep, samples=args.samples, seed=args.seed)
        if not report["anosov"]["all_pass"]:
            _emit(report, args.output)
            failing = [e for e in report["anosov"]["results"]
                       if not e["ok"]]
            raise AnosovError("eigenvalue check failed on %r"
                              % failing[0]["word"])
    _emit(report, args.output)
    return 0


def _emit(doc, output):
    text = json.dumps(doc, indent=1)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_census(args):
    table = invariants.census(args.n, args.genus, variant=args.variant,
                              k=args.k, center_order=args.center_order)
    if args.csv:
        keys = sorted(table)
        print(",".join(keys))
        print(",".join(str(table[k]) for k in keys))
    else:
        print(json.dumps(table, indent=1))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="maxrep",
        description="Build and classify maximal symplectic "
                    "surface-group representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a model representation")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--n", type=int, default=2)
    b.add_argument("--model", required=True,
                   choices=["irr", "diag", "twisted", "hybrid"])
    b.add_argument("--chi-left", type=int, default=None)
    b.add_argument("--adjust", type=int, default=1, choices=[1, -1])
    b.add_argument("--sw1-target", default=None)
    b.add_argument("--sw2-target", type=int, default=None, choices=[0, 1])
    b.add_argument("--m", type=float, default=0.5)
    b.add_argument("--epsilon", type=int, default=1, choices=[1, -1])
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--output", required=True)
    b.set_defaults(func=cmd_build)

    i = sub.add_parser("invariants", help="invariant report for a saved "
                                          "representation")
    i.add_argument("path")
    i.add_argument("--verify", action="store_true")
    i.add_argument("--samples", type=int, default=50)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--output", default=None)
    i.set_defaults(func=cmd_invariants)

    c = sub.add_parser("census", help="component count tables")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--variant", default="sp",
                   choices=["sp", "sp-cover", "psp", "hitchin-cover"])
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--center-order", type=int, default=None)
    c.add_argument("--csv", action="store_true")
    c.set_defaults(func=cmd_census)

    args = parser.parse_args(argv)
    tol = os.environ.get("ANOSOV_TOL")
    if tol is not None:
        invariants.ANOSOV_GAP_TOL = float(tol)
    try:
        return args.func(args)
    except InvalidInput as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print("construction error: %s" % exc, file=sys.stderr)
        return 3
    except (ComputationError, AnosovError) as exc:
        print("computation error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
