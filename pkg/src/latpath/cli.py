"""Command-line interface: reference tables, series output, verification
suites and OEIS lookups.

Exit codes: 0 success, 1 verification failure, 2 path-budget exhaustion,
3 internal consistency failure between computation routes.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import bijection, enumerate as brute, oeis_client
from .gf import ConsistencyFailure, class_gf, default_order, moebius_coeffs, residual, moebius_step
from .paths import FAMILIES, Family, Pattern, family as family_by_name, reversed_complement
from .series import Series

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BUDGET = 2
EXIT_INCONSISTENT = 3

DEFAULT_TABLE_N = {"dyck": 9, "motzkin": 9, "skew-dyck": 9, "skew-motzkin": 11}
DEFAULT_PATTERN_LEN = {"dyck": 3, "motzkin": 2, "skew-dyck": 2, "skew-motzkin": 1}
ORACLE_CAP = {"dyck": 8, "motzkin": 9, "skew-dyck": 6, "skew-motzkin": 9}


def all_patterns(fam: Family, max_len: int) -> list[str]:
    alphabet = sorted(fam.alphabet)
    out = []
    for length in range(1, max_len + 1):
        out.extend("".join(p) for p in itertools.product(alphabet, repeat=length))
    return out


def pattern_key(pi: str):
    return (len(pi), pi)


# -- table ----------------------------------------------------------------


def build_table(fam: Family, max_len: int, n: int, budget=None) -> list[dict]:
    """One row per group of patterns sharing a coefficient sequence."""
    pats = sorted(all_patterns(fam, max_len), key=pattern_key)
    brute.precompute_base(fam, pats, n, budget=budget)
    groups: dict = {}
    for pi in pats:
        gf = class_gf(fam, Pattern(pi), n, budget=budget)
        values = tuple(gf.A.int_coeffs()[1 : n + 1])
        groups.setdefault(values, []).append(pi)
    rows = [
        {"patterns": sorted(ps, key=pattern_key), "values": list(vals)}
        for vals, ps in groups.items()
    ]
    rows.sort(key=lambda row: pattern_key(row["patterns"][0]))
    return rows


def verify_table_cells(fam: Family, rows: list[dict], n: int, budget=None) -> bool:
    cap = min(n, ORACLE_CAP[fam.name])
    for row in rows:
        for pi in row["patterns"]:
            table = brute.count_class(fam, Pattern(pi), cap, budget=budget)
            if table.totals() != row["values"][:cap]:
                return False
    return True


def render_table(rows: list[dict], fam: Family, n: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"family": fam.name, "n": n, "rows": rows}, indent=2, sort_keys=True
        ) + "\n"
    labels = [", ".join(row["patterns"]) for row in rows]
    if fmt == "csv":
        lines = ["patterns," + ",".join(f"a{j}" for j in range(1, n + 1))]
        for row, label in zip(rows, labels):
            lines.append(
                "+".join(row["patterns"]) + "," + ",".join(map(str, row["values"]))
            )
        return "\n".join(lines) + "\n"
    # text-table
    width = max(len(s) for s in labels)
    header = f"{'pattern h_pi':{width}} | a_n, 1 <= n <= {n}"
    lines = [header, "-" * len(header)]
    for row, label in zip(rows, labels):
        lines.append(f"{label:{width}} | " + ", ".join(map(str, row["values"])))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    fam = family_by_name(args.family)
    n = args.n if args.n is not None else DEFAULT_TABLE_N[fam.name]
    max_len = (
        args.max_pattern_len
        if args.max_pattern_len is not None
        else DEFAULT_PATTERN_LEN[fam.name]
    )
    rows = build_table(fam, max_len, n, budget=args.budget)
    if args.verify_level != "none":
        if not verify_table_cells(fam, rows, n, budget=args.budget):
            print("table cells disagree with the exhaustive oracle", file=sys.stderr)
            return EXIT_INCONSISTENT
    sys.stdout.write(render_table(rows, fam, n, args.format))
    return EXIT_OK


# -- series ---------------------------------------------------------------


def render_bfile(values: list[int]) -> str:
    # values[n] = a(n), n = 0..order; tables index from n = 1, so the
    # constant term appears only in the degenerate order-0 output.
    if len(values) == 1:
        return f"0 {values[0]}\n"
    return "".join(f"{n} {values[n]}\n" for n in range(1, len(values)))


def cmd_series(args) -> int:
    fam = family_by_name(args.family)
    order = args.order if args.order is not None else default_order(fam)
    pattern = Pattern(args.pattern)
    gf = class_gf(fam, pattern, order, budget=args.budget)
    levels = {k: gf.per_level[k].int_coeffs() for k in range(len(gf.per_level))}
    if args.level is not None:
        values = gf.level(args.level).int_coeffs()
    else:
        values = gf.A.int_coeffs()
    if args.format == "b-file":
        sys.stdout.write(render_bfile(values))
    elif args.format == "json":
        doc = {
            "family": fam.name,
            "pattern": pattern.steps,
            "order": order,
            "coefficients": values,
            "levels": {str(k): v for k, v in levels.items()},
        }
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        sys.stdout.write("\n".join(f"{n},{a}" for n, a in enumerate(values)) + "\n")
    else:
        label = f"A_{args.level}" if args.level is not None else "A"
        sys.stdout.write(
            f"{label}(x) for {fam.name}, pattern {pattern.steps}, order {order}:\n"
        )
        sys.stdout.write(" ".join(map(str, values)) + "\n")
    return EXIT_OK


# -- verify ---------------------------------------------------------------


def _verification_checks(level: str, corrupt_base: bool):
    """Yield (name, thunk) pairs; each thunk returns True on success."""
    plans = [
        (FAMILIES["dyck"], 2, 7),
        (FAMILIES["motzkin"], 1, 8),
        (FAMILIES["skew-dyck"], 1, 6),
        (FAMILIES["skew-motzkin"], 1, 8),
    ]
    if level == "full":
        plans = [
            (FAMILIES["dyck"], 3, 8),
            (FAMILIES["motzkin"], 2, 9),
            (FAMILIES["skew-dyck"], 2, 7),
            (FAMILIES["skew-motzkin"], 1, 9),
        ]

    def oracle_agreement(fam, pats, order):
        def run():
            brute.precompute_base(fam, pats, order)
            for pi in pats:
                pattern = Pattern(pi)
                bases = None
                if corrupt_base:
                    r = max(pattern.amplitude, 1)
                    bases = [
                        brute.base_series(fam, pattern, k, order) for k in range(r + 1)
                    ]
                    coeffs = list(bases[-1].coeffs)
                    coeffs[min(4, order)] += 1
                    bases[-1] = Series(coeffs)
                gf = class_gf(fam, pattern, order, bases=bases)
                cap = min(order, ORACLE_CAP[fam.name])
                table = brute.count_class(fam, pattern, cap)
                if gf.A.int_coeffs()[1 : cap + 1] != table.totals():
                    return False
                for k in range(len(gf.per_level)):
                    if gf.level(k).int_coeffs()[: cap + 1] != table.level(k)[: cap + 1]:
                        return False
            return True

        return run

    def residuals(fam, pats, order):
        def run():
            brute.precompute_base(fam, pats, order)
            from .gf import solve_quadratic, system_for, iterate_system

            for pi in pats:
                spec = system_for(fam, Pattern(pi), order)
                coeffs = moebius_coeffs(spec.p, spec.q, spec.u, spec.v)
                A_iter = iterate_system(spec, order).A
                A_quad = solve_quadratic(coeffs, order)
                if not residual(coeffs, A_iter).is_zero():
                    return False
                if not residual(coeffs, A_quad).is_zero():
                    return False
            return True

        return run

    def moebius_law(fam, pats, order):
        def run():
            brute.precompute_base(fam, pats, order)
            from .gf import iterate_system, system_for

            for pi in pats:
                spec = system_for(fam, Pattern(pi), order)
                coeffs = moebius_coeffs(spec.p, spec.q, spec.u, spec.v)
                run_gf = iterate_system(spec, order)
                for k in range(spec.r + 1, spec.r + 4):
                    if moebius_step(coeffs, run_gf.partial_sum(k - 1)) != run_gf.partial_sum(k):
                        return False
            return True

        return run

    for fam, max_len, order in plans:
        pats = all_patterns(fam, max_len)
        yield f"oracle agreement {fam.name} (len<={max_len}, order {order})", oracle_agreement(fam, pats, order)
        yield f"quadratic residuals {fam.name}", residuals(fam, pats, order)
        yield f"moebius step law {fam.name}", moebius_law(fam, pats, order)

    if level == "full":

        def symmetry():
            for pi in all_patterns(FAMILIES["dyck"], 3):
                if not bijection.verify_reversed_complement_symmetry(FAMILIES["dyck"], Pattern(pi), 8):
                    return False
            for pi in all_patterns(FAMILIES["motzkin"], 2):
                if not bijection.verify_reversed_complement_symmetry(FAMILIES["motzkin"], Pattern(pi), 8):
                    return False
            return True

        def phi_preserving():
            # checks injectivity and size/level preservation; the image can
            # legitimately leave the sibling class for junction-straddling
            # patterns, so no onto-check here
            for fam, max_len, max_steps in (
                (FAMILIES["dyck"], 3, 10),
                (FAMILIES["motzkin"], 2, 10),
            ):
                for pi in all_patterns(fam, max_len):
                    pattern = Pattern(pi)
                    sigma = reversed_complement(pattern)
                    r = pattern.amplitude
                    for steps in range(0, max_steps + 1):
                        if fam.semilength and steps % 2:
                            continue
                        size = steps // 2 if fam.semilength else steps
                        dom = [
                            p
                            for p in brute.member_paths(fam, pattern, size)
                            if p.pattern_height(pattern) in (0, r)
                        ]
                        image = [bijection.phi(p, pattern) for p in dom]
                        if len({q.steps for q in image}) != len(dom):
                            return False
                        for src, dst in zip(dom, image):
                            if dst.size != src.size:
                                return False
                            if dst.pattern_height(sigma) != src.pattern_height(pattern):
                                return False
            return True

        yield "reversed-complement series equality", symmetry
        yield "explicit map injective, size- and level-preserving", phi_preserving


def cmd_verify(args) -> int:
    failures = 0
    for name, thunk in _verification_checks(args.level, args.corrupt_base):
        try:
            ok = thunk()
        except ConsistencyFailure:
            ok = False
        print(("ok  " if ok else "FAIL") + f"  {name}")
        if not ok:
            failures += 1
    print(f"{'all checks passed' if not failures else f'{failures} check(s) failed'}")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


# -- oeis -----------------------------------------------------------------


def cmd_oeis(args) -> int:
    if args.mode == "off":
        print("(oeis lookups disabled)")
        return EXIT_OK
    terms = [int(t) for t in args.from_series.replace(",", " ").split()]
    try:
        entries = oeis_client.lookup(terms, mode=args.mode, cache_path=args.cache)
    except oeis_client.NetworkUnavailable as exc:
        print(f"warning: network unavailable ({exc}); falling back to cache", file=sys.stderr)
        entries = oeis_client.lookup(terms, mode="cache-only", cache_path=args.cache)
    if not entries:
        print("no match")
    for e in entries:
        print(f"{e.a_number} {e.name}".rstrip())
    return EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latpath",
        description="Enumerate lattice-path classes constrained by the "
        "maximal height of a pattern occurrence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fam_choices = sorted(FAMILIES)

    p_table = sub.add_parser("table", help="print one count row per pattern group")
    p_table.add_argument("--family", required=True, choices=fam_choices)
    p_table.add_argument("--max-pattern-len", type=int, default=None)
    p_table.add_argument("--n", type=int, default=None, help="largest size column")
    p_table.add_argument(
        "--format", choices=["text-table", "csv", "json"], default="text-table"
    )
    p_table.add_argument(
        "--verify-level", choices=["none", "cross"], default="none",
        help="cross: recheck every printed cell against the exhaustive oracle",
    )
    p_table.add_argument("--budget", type=int, default=None)
    p_table.set_defaults(func=cmd_table)

    p_series = sub.add_parser("series", help="print coefficients of one class")
    p_series.add_argument("--family", required=True, choices=fam_choices)
    p_series.add_argument("--pattern", required=True)
    p_series.add_argument("--order", type=int, default=None)
    p_series.add_argument("--level", type=int, default=None, help="print one level only")
    p_series.add_argument(
        "--format", choices=["text", "b-file", "json", "csv"], default="text"
    )
    p_series.add_argument("--budget", type=int, default=None)
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="run the cross-validation suites")
    p_verify.add_argument("--level", choices=["cross", "full"], default="cross")
    p_verify.add_argument(
        "--corrupt-base", action="store_true", help=argparse.SUPPRESS
    )
    p_verify.set_defaults(func=cmd_verify)

    p_oeis = sub.add_parser("oeis", help="match a sequence against OEIS")
    p_oeis.add_argument(
        "--mode", choices=["off", "cache-only", "network"], default="cache-only"
    )
    p_oeis.add_argument(
        "--from-series", required=True, help="comma- or space-separated terms"
    )
    p_oeis.add_argument("--cache", default=None, help="cache file path")
    p_oeis.set_defaults(func=cmd_oeis)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except brute.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
