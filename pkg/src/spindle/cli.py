"""Command-line entry point: compute invariants, run verification suites,
serve cached results.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cache
from . import characters as ch
from . import dynkin as dy
from . import endalg as ea
from . import qanalogues as qa
from . import truncsym as ts
from . import verify as vf
from .errors import (
    DomainError,
    ExactDivisionError,
    ResourceBudgetError,
    SpindleError,
    UsageError,
)
from .qpoly import QPolynomial, factored_str, poly_str
from .rootsystem import DEFAULT_WEYL_BUDGET, build_root_system

FULL_WEYL_BUDGET = 10**10


def _parse_weight(text, rank):
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}")
    if len(coords) != rank:
        raise UsageError(
            f"weight has {len(coords)} coordinates, rank is {rank}"
        )
    if any(c < 0 for c in coords):
        raise UsageError("weight coordinates must be nonnegative")
    return coords


def _emit_poly(poly, fmt, out):
    if fmt == "text":
        out.write(factored_str(poly) + "\n")
    elif fmt == "json":
        out.write(json.dumps(poly.to_json(), sort_keys=True) + "\n")
    else:
        out.write("exponent,coefficient\n")
        for e, c in enumerate(poly.coeffs):
            out.write(f"{e},{c}\n")


def _emit_series(series, fmt, out):
    if fmt == "text":
        denom = "".join(
            f"(1 - q^{d})" for d in series.denominator_exponents
        )
        out.write(f"({factored_str(series.numerator)}) / {denom}\n")
    elif fmt == "json":
        out.write(json.dumps(series.to_json(), sort_keys=True) + "\n")
    else:
        out.write("exponent,coefficient\n")
        for e, c in enumerate(series.numerator.coeffs):
            out.write(f"{e},{c}\n")
        out.write("# denominator exponents: "
                  + ",".join(str(d) for d in series.denominator_exponents)
                  + "\n")


def _emit_rows(rows, header, fmt, out):
    """rows: list of tuples of printable scalars."""
    if fmt == "json":
        out.write(json.dumps(
            [dict(zip(header, r)) for r in rows], sort_keys=True
        ) + "\n")
        return
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for r in rows:
            out.write(",".join(str(x) for x in r) + "\n")
        return
    widths = [
        max(len(str(h)), max((len(str(r[i])) for r in rows), default=0))
        for i, h in enumerate(header)
    ]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)) + "\n")
    for r in rows:
        out.write("  ".join(str(x).ljust(w) for x, w in zip(r, widths)) + "\n")


def _weight_str(w):
    return "(" + ",".join(str(x) for x in w) + ")"


def cmd_compute(args, out):
    sub = args.subcommand
    fmt = args.format
    if sub == "truncsym":
        if args.n is None or args.m is None:
            raise UsageError("truncsym needs --n and --m")
        _emit_poly(ts.box_partition_poincare(args.n, args.m), fmt, out)
        return 0
    if sub == "end-alg-a":
        if args.n is None or args.kind is None:
            raise UsageError("end-alg-a needs --n and --kind")
        rep = ea.build_rep(args.n, args.kind, dim_bound=args.matrix_budget)
        comm = ea.commutant(rep)
        rows = [
            ("dimension", rep.dimension),
            ("highest_weight", _weight_str(rep.highest_weight)),
            ("commutant_dimension", comm.dimension),
            ("graded_polynomial",
             poly_str(QPolynomial(comm.graded_dimensions()))),
            ("commutative", comm.is_commutative()),
            ("socle_dimension", ea.socle_dimension(comm)),
            ("lowest_vector_bijection", ea.check_bijection(rep, comm)),
            ("lefschetz", ea.lefschetz_check(comm)),
            ("e_power_projections", ea.e_power_projections(rep)),
            ("invariants_dimension", ea.a_invariants_dimension(rep)),
        ]
        _emit_rows(rows, ("property", "value"), fmt, out)
        return 0

    if args.type is None or args.rank is None:
        raise UsageError(f"{sub} needs --type and --rank")
    rs = build_root_system(args.type, args.rank)

    if sub == "root-system":
        rows = [
            ("type", f"{rs.type_letter}{rs.rank}"),
            ("positive_roots", len(rs.positive_roots)),
            ("exponents", " ".join(str(e) for e in rs.exponents)),
            ("degrees", " ".join(str(d) for d in rs.degrees)),
            ("weyl_order", rs.weyl_order),
            ("highest_root_height", max(rs.root_heights)),
        ]
        _emit_rows(rows, ("property", "value"), fmt, out)
        return 0

    if args.weight is None:
        raise UsageError(f"{sub} needs --weight")
    lam = _parse_weight(args.weight, rs.rank)
    weyl_budget = FULL_WEYL_BUDGET if args.full_weyl else args.weyl_budget

    if sub == "character":
        entries = cache.cached(
            "character", rs.type_letter, rs.rank, lam,
            lambda: ch.irreducible_character(
                rs, lam, dim_budget=args.dim_budget
            ).to_json(),
        )
        rows = [(_weight_str(mu), m) for mu, m in entries]
        _emit_rows(rows, ("weight", "multiplicity"), fmt, out)
        return 0
    if sub == "dynkin":
        data = cache.cached(
            "dynkin", rs.type_letter, rs.rank, lam,
            lambda: dy.dynkin_product(rs, lam).to_json(),
        )
        _emit_poly(QPolynomial.from_json(data), fmt, out)
        return 0
    if sub == "t-poly":
        _emit_poly(qa.t_poly(rs, lam), fmt, out)
        return 0
    if sub == "lusztig":
        mu = _parse_weight(args.mu, rs.rank) if args.mu else (0,) * rs.rank
        _emit_poly(
            qa.lusztig_q_multiplicity(rs, lam, mu, budget=weyl_budget),
            fmt, out,
        )
        return 0
    if sub == "jump":
        mu = _parse_weight(args.mu, rs.rank) if args.mu else lam
        _emit_poly(
            qa.jump_tensor(rs, lam, mu, method=args.method,
                           budget=weyl_budget, dim_budget=args.dim_budget),
            fmt, out,
        )
        return 0
    if sub == "f-lambda":
        data = cache.cached(
            "f-lambda", rs.type_letter, rs.rank, lam,
            lambda: qa.f_lambda(
                rs, lam, method=args.method,
                budget=weyl_budget, dim_budget=args.dim_budget,
            ).to_json(),
            extra=args.method,
        )
        _emit_poly(QPolynomial.from_json(data), fmt, out)
        return 0
    if sub == "poincare-cg":
        _emit_series(
            qa.poincare_cg(rs, lam, method=args.method,
                           budget=weyl_budget, dim_budget=args.dim_budget),
            fmt, out,
        )
        return 0
    if sub == "poincare-ct":
        _emit_series(
            qa.poincare_ct(rs, lam, dim_budget=args.dim_budget), fmt, out
        )
        return 0
    if sub == "tensor-square":
        pieces = ch.decompose_tensor_square(rs, lam, dim_budget=args.dim_budget)
        rows = [(_weight_str(nu), c) for nu, c in pieces]
        _emit_rows(rows, ("highest_weight", "multiplicity"), fmt, out)
        return 0
    raise UsageError(f"unknown compute subcommand {sub!r}")


def cmd_verify(args, out):
    options = {
        "max_rank": args.max_rank,
        "height_bound": args.height_bound,
    }
    results = vf.run_suite(args.suite, **options)
    failures = 0
    for suite, check in results:
        status = "PASS" if check.ok else "FAIL"
        line = f"{status} [{suite}] {check.label}"
        if not check.ok:
            failures += 1
            if check.detail:
                line += f" :: {check.detail}"
        out.write(line + "\n")
    out.write(
        f"{len(results) - failures}/{len(results)} checks passed\n"
    )
    return 0 if failures == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spindle",
        description=(
            "Exact invariants of simple Lie algebra representations: "
            "Dynkin polynomials, q-multiplicities, jump polynomials, graded "
            "series, and their verification suites.  Weights are given in "
            "fundamental-weight coordinates with Bourbaki node numbering."
        ),
    )
    parser.add_argument(
        "--cache-dir",
        help="result cache directory (also via SPINDLE_CACHE_DIR)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one invariant")
    pc.add_argument(
        "subcommand",
        choices=[
            "root-system", "character", "dynkin", "jump", "lusztig",
            "t-poly", "f-lambda", "poincare-cg", "poincare-ct",
            "tensor-square", "end-alg-a", "truncsym",
        ],
    )
    pc.add_argument("--type", help="type letter A-G")
    pc.add_argument("--rank", type=int)
    pc.add_argument("--weight", help="comma-separated fundamental coordinates")
    pc.add_argument("--mu", help="second weight where applicable")
    pc.add_argument("--format", choices=["text", "json", "csv"],
                    default="text")
    pc.add_argument("--method", choices=["auto", "weyl", "closed"],
                    default="auto")
    pc.add_argument("--n", type=int, help="for end-alg-a / truncsym")
    pc.add_argument("--m", type=int, help="for truncsym")
    pc.add_argument("--kind", help="S<m> or E<k> for end-alg-a")
    pc.add_argument("--weyl-budget", type=int, default=DEFAULT_WEYL_BUDGET)
    pc.add_argument("--dim-budget", type=int, default=ch.DEFAULT_DIM_BUDGET)
    pc.add_argument("--matrix-budget", type=int, default=ea.DEFAULT_DIM_BOUND)
    pc.add_argument("--full-weyl", action="store_true",
                    help="lift the Weyl enumeration budget")

    pv = sub.add_parser("verify", help="run an identity suite")
    pv.add_argument("suite", choices=list(vf.SUITES) + ["all"])
    pv.add_argument("--max-rank", type=int, default=None)
    pv.add_argument("--height-bound", type=int, default=None)
    pv.add_argument("--full-weyl", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache_dir:
        os.environ["SPINDLE_CACHE_DIR"] = args.cache_dir
    out = sys.stdout
    try:
        if args.command == "compute":
            return cmd_compute(args, out)
        return cmd_verify(args, out)
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, DomainError, ExactDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpindleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
