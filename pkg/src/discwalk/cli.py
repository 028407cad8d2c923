"""Command-line front end.

Subcommands
-----------
expand          expand a family kernel into a coefficient table (JSON)
walk            apply a dimension-walk operator to a table
check           PD / strict-PD verdict for a table or a symbolic index set
gram            empirical Gram-matrix eigenvalue check on sampled sphere points
counterexample  reproduce the walk counterexamples and compare verdicts
plot-data       CSV samples of a kernel on a Cartesian grid over [-1, 1]^2

Exit codes: 0 success, 2 usage/domain error, 3 quadrature capacity error,
4 counterexample verdict mismatch.  Verdicts themselves are data and exit 0.
All outputs are deterministic given flags and seed.  ``--nmax`` bounds the
expansion indices for ``expand`` and the progression check N_max elsewhere.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import CapacityError, DiscWalkError, DomainError
from .families import (
    FamilySpec,
    eval_family,
    family_alpha,
    family_from_dict,
    make_family,
)
from .positivity import (
    COUNTEREXAMPLE_EXPECTED,
    IndexSet,
    counterexample_sets,
    counterexample_table,
    difference_set,
    gram_matrix,
    is_pd,
    min_eigenvalue,
    sample_sphere,
    spd_verdict,
)
from .quadrature import build_rule, coefficient_sum, default_rule, expand, synthesize
from .tables import CoefficientTable
from .walks import descente_x, descente_z, descente_zbar, montee_z, montee_zbar

_WALK_OPS = {
    "dz": descente_z,
    "dzbar": descente_zbar,
    "dx": descente_x,
    "iz": montee_z,
    "izbar": montee_zbar,
}


def _read_text_or_inline(value: str) -> str:
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read()
    return value


def _parse_params(pairs: list[str] | None) -> dict:
    params: dict = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise DomainError(f"--param expects key=value, got {pair!r}")
        key, raw = pair.split("=", 1)
        try:
            params[key] = int(raw)
        except ValueError:
            try:
                params[key] = float(raw)
            except ValueError:
                raise DomainError(f"--param value for {key!r} is not numeric: {raw!r}")
    return params


def _resolve_family(args) -> FamilySpec:
    if getattr(args, "family", None) and getattr(args, "builtin", None):
        raise DomainError("--family and --builtin are mutually exclusive")
    if getattr(args, "family", None):
        try:
            doc = json.loads(_read_text_or_inline(args.family))
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid family JSON: {exc}") from exc
        spec = family_from_dict(doc)
        if args.q is not None and spec.q != args.q:
            raise DomainError(f"--q {args.q} contradicts family document q = {spec.q}")
        return spec
    if getattr(args, "builtin", None):
        if args.q is None:
            raise DomainError("--builtin requires --q")
        return make_family(args.builtin, args.q, _parse_params(args.param))
    raise DomainError("one of --family or --builtin (or --in) is required")


def _table_q(table: CoefficientTable, q: int | None) -> int:
    if q is not None:
        if abs(table.alpha - (q - 2)) > 1e-9:
            raise DomainError(f"--q {q} contradicts table alpha = {table.alpha}")
        return q
    derived = table.alpha + 2.0
    if abs(derived - round(derived)) > 1e-9 or round(derived) < 2:
        raise DomainError(
            f"cannot derive an integer q >= 2 from table alpha = {table.alpha}; pass --q"
        )
    return int(round(derived))


def _function_from_args(args, need_q: bool = True) -> tuple:
    """(callable on disk points, q or None) from --in table or a family spec."""
    if getattr(args, "infile", None):
        if getattr(args, "family", None) or getattr(args, "builtin", None):
            raise DomainError("--in and --family/--builtin are mutually exclusive")
        table = CoefficientTable.load(args.infile)
        q = _table_q(table, args.q) if need_q else None
        return (lambda z: synthesize(table, z)), q
    spec = _resolve_family(args)
    return (lambda z: eval_family(spec, z)), spec.q


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_expand(args) -> int:
    spec = _resolve_family(args)
    alpha = family_alpha(spec)
    if args.radial_order or args.angular_order:
        deg = args.mmax + args.nmax
        rule = build_rule(
            alpha,
            args.radial_order or deg + 8,
            args.angular_order or 2 * deg + 8,
        )
    else:
        rule = default_rule(alpha, args.mmax, args.nmax)
    table = expand(lambda z: eval_family(spec, z), alpha, args.mmax, args.nmax, rule)
    table.save(args.out)
    print(f"coefficient_sum {coefficient_sum(table, tol=args.tol)!r}")
    print(f"max_imag_abs {table.max_abs_imag()!r}")
    return 0


def _cmd_walk(args) -> int:
    table = CoefficientTable.load(args.infile)
    result = _WALK_OPS[args.op](table)
    if args.op in ("iz", "izbar"):
        print(f"constant {result.constant!r}")
        result.table.save(args.out)
    else:
        result.save(args.out)
    return 0


def _cmd_check(args) -> int:
    if args.set and args.infile:
        raise DomainError("--in and --set are mutually exclusive")
    if args.set:
        s = IndexSet.loads(_read_text_or_inline(args.set))
        doc = {
            "input": "set",
            "n_max": args.nmax,
            "spd": spd_verdict(s, args.nmax).to_dict(),
        }
    elif args.infile:
        table = CoefficientTable.load(args.infile)
        q = _table_q(table, args.q)
        report = is_pd(table, tol=args.tol)
        doc = {
            "input": "table",
            "q": q,
            "n_max": args.nmax,
            "pd": {
                "ok": report.ok,
                "violations": [
                    {"m": m, "n": n, "re": v.real, "im": v.imag}
                    for m, n, v in report.violations
                ],
            },
            "spd": None,
        }
        if report.ok:
            s = difference_set(table, threshold=args.threshold, min_index=0)
            doc["set"] = s.to_dict()
            doc["spd"] = spd_verdict(s, args.nmax).to_dict()
    else:
        raise DomainError("one of --in or --set is required")
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_gram(args) -> int:
    f, q = _function_from_args(args)
    pts = sample_sphere(q, args.points, args.seed)
    g = gram_matrix(f, pts)
    evals = np.linalg.eigvalsh(g)
    low = min_eigenvalue(g)
    print(f"min_eigenvalue {low!r}")
    print(f"max_eigenvalue {float(evals[-1])!r}")
    print("PASS" if low >= -1e-8 else "FAIL")
    return 0


def _cmd_counterexample(args) -> int:
    q = args.q if args.q is not None else 2
    table, base_set = counterexample_table(args.case, q, args.truncation)
    sets = counterexample_sets(args.case)
    expected = COUNTEREXAMPLE_EXPECTED[args.case]
    walked = {
        "f": table,
        "dz": descente_z(table),
        "dzbar": descente_zbar(table),
        "dx": descente_x(table),
    }
    verdicts = {}
    pd_flags = {}
    match = True
    for op in ("f", "dz", "dzbar", "dx"):
        verdict = spd_verdict(sets[op], args.nmax)
        verdicts[op] = verdict.to_dict()
        pd_flags[op] = is_pd(walked[op], tol=args.tol).ok
        if verdict.is_spd != expected[op] or not pd_flags[op]:
            match = False
    doc = {
        "case": args.case,
        "q": q,
        "truncation": args.truncation,
        "n_max": args.nmax,
        "expected_spd": expected,
        "pd": pd_flags,
        "verdicts": verdicts,
        "sets": {op: sets[op].to_dict() for op in ("f", "dz", "dzbar", "dx")},
        "base_set": base_set.to_dict(),
        "match": match,
    }
    print(json.dumps(doc, indent=2))
    return 0 if match else 4


def _cmd_plot_data(args) -> int:
    if args.grid < 2:
        raise DomainError(f"--grid must be at least 2, got {args.grid}")
    f, _q = _function_from_args(args, need_q=False)
    axis = np.linspace(-1.0, 1.0, args.grid)
    lines = ["x,y,re,im"]
    for x in axis:
        for y in axis:
            if x * x + y * y <= 1.0:
                v = complex(f(complex(x, y)))
                lines.append(f"{float(x)!r},{float(y)!r},{v.real!r},{v.imag!r}")
            else:
                lines.append(f"{float(x)!r},{float(y)!r},,")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} rows to {args.out}")
    return 0


# --------------------------------------------------------------------------
# parser


def _add_family_inputs(p: argparse.ArgumentParser, with_table: bool = False) -> None:
    p.add_argument("--family", help="family spec JSON (inline or @file)")
    p.add_argument("--builtin", help="family name: product|poisson|exponential|aktas|horn|lauricella")
    p.add_argument("--param", action="append", help="family parameter key=value (repeatable)")
    if with_table:
        p.add_argument("--in", dest="infile", help="coefficient table JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discwalk",
        description="Disc-polynomial expansions, dimension walks and positive definiteness "
        "of isotropic kernels on complex spheres.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=None, help="complex sphere parameter (q >= 2)")
    common.add_argument("--tol", type=float, default=1e-10, help="numerical tolerance")
    common.add_argument("--seed", type=int, default=42, help="RNG seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a family into a coefficient table")
    _add_family_inputs(p)
    p.add_argument("--mmax", type=int, default=8, help="largest z-index m in the table")
    p.add_argument("--nmax", type=int, default=8, help="largest conj(z)-index n in the table")
    p.add_argument("--out", required=True)
    p.add_argument("--radial-order", type=int, default=None)
    p.add_argument("--angular-order", type=int, default=None)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("walk", parents=[common], help="apply a dimension-walk operator")
    p.add_argument("--op", required=True, choices=sorted(_WALK_OPS))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("check", parents=[common], help="PD / strict-PD verdict")
    p.add_argument("--in", dest="infile", help="coefficient table JSON file")
    p.add_argument("--set", help="index set JSON (inline or @file)")
    p.add_argument("--nmax", type=int, default=64, help="progression check bound N_max")
    p.add_argument("--threshold", type=float, default=0.0,
                   help="strict positivity threshold for the difference set")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix eigenvalue check")
    _add_family_inputs(p, with_table=True)
    p.add_argument("--points", type=int, default=40)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("counterexample", parents=[common], help="reproduce walk counterexamples")
    p.add_argument("--case", required=True, choices=["i", "ii", "iii"])
    p.add_argument("--truncation", type=int, default=40)
    p.add_argument("--nmax", type=int, default=64, help="progression check bound N_max")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("plot-data", parents=[common], help="CSV grid samples of a kernel")
    _add_family_inputs(p, with_table=True)
    p.add_argument("--grid", type=int, default=41)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_plot_data)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DiscWalkError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
