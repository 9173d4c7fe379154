"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 cap exceeded, 4 root iteration
did not converge, 5 product-formula hypothesis not met.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import DomRootsError, HypothesisNotMet, InvalidSpec, NoConvergence, ParseError, TooLarge
from .families import FAMILIES, FamilySpec, cumulative_coverage, generate, members, member_polynomial
from .graph import Graph, parse_graph6, to_graph6, MAX_VERTEX_CAP
from .lexprod import FORMS, cross_check_product
from .polynomial import (
    DEFAULT_ENUMERATION_CAP,
    MAX_ENUMERATION_CAP,
    count_by_enumeration,
    count_by_inclusion_exclusion,
)
from .roots import DEFAULT_TOL, certificate_report, certify_no_nonzero_real_roots, classify, find_all_roots
from .svg import render_svg

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_CONVERGENCE = 4
EXIT_HYPOTHESIS = 5


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_graphs(args) -> list[Graph]:
    texts = list(args.g6 or [])
    if args.g6_file:
        with open(args.g6_file) as fh:
            texts += [line.strip() for line in fh if line.strip()]
    if not texts:
        raise UsageError("no input graphs; use --g6 or --g6-file")
    return [parse_graph6(t, cap=MAX_VERTEX_CAP) for t in texts]


def _parse_range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return range(int(lo), int(hi) + 1)
        k = int(text)
        return range(k, k + 1)
    except ValueError:
        raise UsageError(f"bad --range {text!r}; expected LO:HI") from None


def _parse_ints(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.replace(";", ",").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _parse_window(text: str) -> tuple[float, float, float, float]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad --window {text!r}") from None
    if len(vals) != 4 or not (vals[1] > vals[0] and vals[3] > vals[2]):
        raise UsageError(f"--window needs RE_MIN,RE_MAX,IM_MIN,IM_MAX with min < max, got {text!r}")
    return vals


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------


def cmd_poly(args) -> int:
    lines = []
    status = EXIT_OK
    for g in _read_graphs(args):
        p = count_by_enumeration(g, cap=args.cap, workers=args.workers)
        obj = p.to_json()
        if args.verify:
            obj["verified"] = count_by_inclusion_exclusion(g, cap=args.cap) == p
            if not obj["verified"]:
                status = 1
        lines.append(_dump(obj))
    _emit("\n".join(lines) + "\n", args.out)
    return status


def _roots_payload(g: Graph, args) -> tuple[dict, int]:
    p = count_by_enumeration(g, cap=args.cap, workers=args.workers)
    try:
        rs = find_all_roots(p)
    except NoConvergence as exc:
        obj = {
            "zero_multiplicity": exc.zero_multiplicity,
            "roots": [{"re": z.real, "im": z.imag, "residual": r} for z, r in zip(exc.roots, exc.residuals)],
            "polynomial": p.to_json(),
            "error": str(exc),
        }
        return obj, EXIT_CONVERGENCE
    obj = rs.to_json()
    obj["polynomial"] = p.to_json()
    if args.certify:
        obj["classification"] = classify(rs, args.tol).to_json()
        obj["certificate"] = certificate_report(p)
    return obj, EXIT_OK


def cmd_roots(args) -> int:
    lines, status = [], EXIT_OK
    for g in _read_graphs(args):
        obj, code = _roots_payload(g, args)
        status = max(status, code)
        lines.append(_dump(obj))
    _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_lexprod(args) -> int:
    graphs = _read_graphs(args)
    if len(graphs) != 2:
        raise UsageError(f"lexprod needs exactly two graphs, got {len(graphs)}")
    report = cross_check_product(graphs[0], graphs[1], form=args.form, cap=args.cap, workers=args.workers)
    _emit(_dump(report) + "\n", args.out)
    if report["hypothesis"] is not None:
        print(f"hypothesis not met: {report['hypothesis']}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK if report["equal"] else 1


def cmd_density(args) -> int:
    if not args.family:
        raise UsageError("density needs --family")
    fixed = _parse_ints(args.params)
    k_range = _parse_range(args.range)
    window = _parse_window(args.window)
    cloud, seq = cumulative_coverage(
        args.family, k_range, window, args.grid, fixed=fixed, cap=args.cap, workers=args.workers
    )
    report = {
        "family": args.family,
        "fixed_params": list(fixed),
        "range": [k_range.start, k_range.stop - 1],
        "window": list(window),
        "grid": args.grid,
        "points": len(cloud.points),
        "coverage": seq[-1]["coverage"] if seq else 0.0,
        "sequence": seq,
        "errors": list(cloud.errors),
    }
    report_text = json.dumps(report, indent=2) + "\n"
    if args.out:
        with open(args.out + ".csv", "w") as fh:
            fh.write(cloud.to_csv())
        with open(args.out + ".json", "w") as fh:
            fh.write(report_text)
        if args.format == "svg":
            with open(args.out + ".svg", "w") as fh:
                fh.write(render_svg(cloud, window))
        sys.stdout.write(report_text)
    elif args.format == "csv":
        sys.stdout.write(cloud.to_csv())
    elif args.format == "svg":
        sys.stdout.write(render_svg(cloud, window))
    else:
        sys.stdout.write(report_text)
    if seq and all(s["points"] == 0 for s in seq) and cloud.errors:
        return EXIT_CONVERGENCE
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.family:
        raise UsageError("verify needs --family")
    fixed = _parse_ints(args.params)
    out = []
    status = EXIT_OK
    for spec in members(args.family, _parse_range(args.range), fixed):
        p = member_polynomial(spec, cap=args.cap, workers=args.workers)
        try:
            rs = find_all_roots(p)
        except NoConvergence:
            status = EXIT_CONVERGENCE
            continue
        cls = classify(rs, args.tol)
        out.append({
            "params": list(spec.params),
            "order": p.n,
            "no_nonzero_real_roots": certify_no_nonzero_real_roots(p),
            "has_positive_real_part": cls.has_positive_real_part,
            "max_real_part": max((z.real for z in rs.roots), default=0.0),
        })
    _emit(json.dumps({"family": args.family, "members": out}, indent=2) + "\n", args.out)
    return status


def cmd_generate(args) -> int:
    if not args.family:
        raise UsageError("generate needs --family")
    g = generate(FamilySpec(args.family, _parse_ints(args.params)))
    _emit(to_graph6(g) + "\n", args.out)
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g6", action="append", help="graph6 string (repeatable)")
    common.add_argument("--g6-file", help="file with one graph6 string per line")
    common.add_argument("--family", help=f"family id: {', '.join(sorted(FAMILIES))}")
    common.add_argument("--params", help="family parameters, comma separated (fixed ones when sweeping)")
    common.add_argument("--range", default="1:8", help="sweep of the first family parameter, LO:HI inclusive")
    common.add_argument("--window", default="-3,3,-3,3", help="RE_MIN,RE_MAX,IM_MIN,IM_MAX")
    common.add_argument("--grid", type=int, default=20, help="coverage grid size m (m x m cells)")
    common.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                        help=f"enumeration cap override (at most {MAX_ENUMERATION_CAP})")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="real-axis tolerance")
    common.add_argument("--verify", action="store_true", help="cross-check with inclusion-exclusion")
    common.add_argument("--certify", action="store_true", help="add classification and Sturm certificate")
    common.add_argument("--form", choices=FORMS, default="general", help="product formula variant")
    common.add_argument("--out", help="output file (density: output path prefix)")

    parser = argparse.ArgumentParser(prog="domroots", description="Domination polynomials and their roots.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, func, text in (
        ("poly", cmd_poly, "domination polynomial of each input graph"),
        ("roots", cmd_roots, "complex domination roots of each input graph"),
        ("lexprod", cmd_lexprod, "closed form vs enumeration for the lexicographic product G[H]"),
        ("density", cmd_density, "root cloud and coverage statistics over a family sweep"),
        ("verify", cmd_verify, "real-root and positive-real-part checks over a family sweep"),
        ("generate", cmd_generate, "graph6 of a family member"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cap > MAX_ENUMERATION_CAP or args.cap < 1:
            raise UsageError(f"--cap must be in 1..{MAX_ENUMERATION_CAP}")
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        return args.func(args)
    except TooLarge as exc:
        code, message = EXIT_CAP, str(exc)
    except NoConvergence as exc:
        code, message = EXIT_CONVERGENCE, str(exc)
    except HypothesisNotMet as exc:
        code, message = EXIT_HYPOTHESIS, str(exc)
    except (ParseError, InvalidSpec, UsageError, DomRootsError, ValueError, OSError) as exc:
        code, message = EXIT_PARSE, str(exc)
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
