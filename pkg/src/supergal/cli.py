"""Command line entry point: ``supergal analyze input.json``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .clusters import DEFAULT_MAX_ROOTS, CurveInput, to_latex
from .errors import ConsistencyError, PreconditionError
from .graph import to_dot
from .report import GaloisReport, assemble_report

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_CONSISTENCY = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supergal")
    sub = parser.add_subparsers(dest="command", required=True)
    an = sub.add_parser("analyze", help="semistable reduction data of y^n = f(x)")
    an.add_argument("input", type=Path, help="curve description (JSON)")
    an.add_argument("--latex", type=Path, help="write the cluster picture as LaTeX")
    an.add_argument("--dot", type=Path, help="write the dual graph as Graphviz; orbits go to <stem>.frobenius.dot")
    an.add_argument("--json", type=Path, help="write the full report as JSON")
    an.add_argument("--oracle", action="store_true", help="cross-check clusters against triple classes")
    an.add_argument("--max-roots", type=int, default=DEFAULT_MAX_ROOTS)
    return parser


def summary(report: GaloisReport) -> str:
    fams = report.families
    lines = [
        f"p = {report.input.p}, n = {report.input.n}, deg f = {report.input.degree}",
        f"proper clusters: {len(report.picture)}  (s_max in image: {report.picture.smax_in_image})",
    ]
    for cid, fam in fams.items():
        lines.append(
            f"  s{cid}: {fam.equation()}  d={fam.d} genus={fam.genus_each} e_t={fam.e_t} "
            f"frob shift={fam.frobenius_vertex_shift}"
        )
    g = report.graph
    lines.append(f"dual graph: |V| = {len(g.vertices)}, |E| = {len(g.edges)}, toric rank = {report.toric_rank}")
    lines.append(
        f"genus: {report.abelian_genus_sum} (abelian) + {report.toric_rank} (toric) = {report.curve_genus}"
    )
    mult = ", ".join(f"Phi_{k}^{m}" for k, m in sorted(report.h1_action.eigenvalue_multiplicities.items()))
    lines.append(f"Frobenius on H1(graph): order {report.h1_action.order}, charpoly = {mult or '1'}")
    for cid, ch in report.twist_characters:
        lines.append(f"  twist on s{cid}, d={ch.d}: {ch.description}")
    lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in report.checks.items()))
    return "\n".join(lines)


def analyze(args: argparse.Namespace) -> int:
    try:
        curve = CurveInput.from_json(args.input.read_text())
        report = assemble_report(curve, max_roots=args.max_roots, oracle=args.oracle)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_PRECONDITION
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        print(json.dumps(exc.diagnostics, indent=2, default=str), file=sys.stderr)
        return EXIT_CONSISTENCY

    print(summary(report))
    if args.latex:
        args.latex.write_text(to_latex(report.picture))
    if args.dot:
        args.dot.write_text(to_dot(report.graph, report.families))
        args.dot.with_suffix(".frobenius.dot").write_text(
            to_dot(report.graph, report.families, color_orbits=True)
        )
    if args.json:
        args.json.write_text(json.dumps(report.to_dict(), indent=2, default=str) + "\n")
    if report.checks.get("oracle", "").startswith("FAIL"):
        return EXIT_CONSISTENCY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    return analyze(args)


if __name__ == "__main__":
    sys.exit(main())
