"""Command-line interface: validate, secondary, stability, ehrhart and corpus.

Exit codes: 0 success, 1 parse error, 2 validation failure, 3 enumeration
cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .configuration import ConfigurationError, PointConfiguration, format_point, validate_star
from .documents import ConfigDocument, ParseError, dump_report, parse_heights, rational, rationals, read_config
from .ehrhart import ehrhart_polynomial, h_vector, h_vector_checks, simplex_bound
from .gkz import SecondaryPolytope, facet_equation, secondary_polytope
from .stability import verify_main_theorem, weight_polytope_H
from .subdivision import DEFAULT_CAP, EnumerationCapExceeded, coarse_subdivisions, regular_subdivision

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_CAP = 3


class CommandFailure(Exception):
    def __init__(self, code: int, message: str, report: dict | None = None):
        super().__init__(message)
        self.code = code
        self.report = report


def load(path) -> ConfigDocument:
    try:
        return read_config(path)
    except ParseError as exc:
        raise CommandFailure(EXIT_PARSE, f"{path}:{exc}") from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise CommandFailure(EXIT_PARSE, f"{path}: {exc}") from exc


def _header(command: str, doc: ConfigDocument) -> dict:
    return {"command": command, "name": doc.name, "n": str(doc.n), "points": str(len(doc.points))}


def validation_report(doc: ConfigDocument) -> tuple[dict, PointConfiguration | None]:
    report = _header("validate", doc)
    try:
        config = PointConfiguration(doc.points)
    except ConfigurationError as exc:
        report.update(valid=False, message=str(exc), missing=None, invariant_factors=[])
        return report, None
    check = validate_star(config)
    report.update(
        valid=check.valid,
        message=check.message,
        missing=None if check.missing is None else format_point(check.missing),
        invariant_factors=[str(f) for f in check.invariant_factors],
    )
    return report, config if check.valid else None


def validated(doc: ConfigDocument) -> PointConfiguration:
    report, config = validation_report(doc)
    if config is None:
        raise CommandFailure(EXIT_INVALID, report["message"], report)
    return config


def compute_secondary(config: PointConfiguration, cap: int) -> SecondaryPolytope:
    try:
        return secondary_polytope(config, cap)
    except EnumerationCapExceeded as exc:
        raise CommandFailure(EXIT_CAP, f"enumeration cap {exc.cap} exceeded") from exc


def secondary_report(
    doc: ConfigDocument,
    config: PointConfiguration,
    sec: SecondaryPolytope,
    triangulations: bool = False,
    facets: bool = False,
    heights=None,
) -> dict:
    report = _header("secondary", doc)
    report.update(
        triangulation_count=str(len(sec.triangulations)),
        regular_count=str(len(sec.regular_indices())),
        dimension=str(sec.dim),
        vertices=[rationals(v) for v in sec.hull.vertices],
    )
    if triangulations:
        report["triangulations"] = [
            {
                "cells": str(t),
                "regular": r.regular,
                "gkz": rationals(g.entries),
                "witness": None if r.heights is None else rationals(r.heights),
                "certificate": None if r.certificate is None else rationals(r.certificate),
            }
            for t, g, r in zip(sec.triangulations, sec.gkz, sec.regularity)
        ]
    if facets:
        entries = []
        for sub, normal in coarse_subdivisions(config, sec):
            eq = facet_equation(config, normal, sec)
            entries.append(
                {
                    "cells": str(sub),
                    "normal": rationals(eq.normal),
                    "rhs": rational(eq.rhs),
                    "orientation": eq.orientation,
                    "tight": [str(i) for i in eq.tight],
                }
            )
        report["coarse_subdivisions"] = entries
    if heights is not None:
        sub = regular_subdivision(config, heights)
        report["subdivision"] = {
            "heights": rationals(heights),
            "cells": str(sub),
            "triangulation": sub.is_triangulation,
        }
    return report


def stability_report(doc: ConfigDocument, config: PointConfiguration, sec: SecondaryPolytope) -> dict:
    thm = verify_main_theorem(config, sec)
    cert = thm.verdict.certificate
    report = _header("stability", doc)
    report.update(
        degree=str(thm.degree),
        t=rational(thm.t),
        diagonal_location=thm.diagonal_location,
        semistable=thm.semistable,
        polystable=thm.polystable,
        weight_polytope=[rationals(v) for v in weight_polytope_H(config, sec).vertices],
        certificate={
            "location": cert.location,
            "coefficients": None if cert.coefficients is None else rationals(cert.coefficients),
            "separator": None
            if cert.separator is None
            else {"normal": rationals(cert.separator[0]), "offset": rational(cert.separator[1])},
        },
        scaled_volume=rational(thm.scaled_volume),
        relation_holds=thm.relation_holds,
        projection_injective=thm.projection_injective,
        tight_facets=str(sum(1 for f in thm.facet_slacks if f.slack == 0)),
        theorem=thm.status,
    )
    return report


def ehrhart_report(doc: ConfigDocument, config: PointConfiguration) -> dict:
    e = ehrhart_polynomial(config)
    h = h_vector(e)
    checks = h_vector_checks(e, h)
    bound = simplex_bound(config)
    report = _header("ehrhart", doc)
    report.update(
        polynomial=str(e),
        coefficients=rationals(e.coefficients),
        counts=[str(c) for c in e.values],
        held_out={"l": str(e.degree + 1), "count": str(e.held_out)},
        h_vector=[str(x) for x in h],
        checks={
            "h0_is_one": checks.h0_is_one,
            "h1_counts_points": checks.h1_counts_points,
            "sum_is_degree": checks.sum_is_degree,
            "nonnegative": checks.nonnegative,
        },
        bound={
            "card": str(bound.card),
            "bound": rational(bound.bound),
            "equality": bound.equality,
            "unimodular_simplex": bound.is_unimodular_simplex,
        },
    )
    return report


def corpus_entry(path: str, cap: int = DEFAULT_CAP) -> dict:
    """Full pipeline for one document; failures are recorded, not raised."""
    entry = {"file": Path(path).name, "name": Path(path).stem, "status": "ok", "exit_code": str(EXIT_OK)}
    try:
        doc = load(path)
        entry["name"] = doc.name
        entry["validate"] = validation_report(doc)[0]
        config = validated(doc)
        sec = compute_secondary(config, cap)
        entry["secondary"] = secondary_report(doc, config, sec, True, True, doc.heights)
        entry["stability"] = stability_report(doc, config, sec)
        entry["ehrhart"] = ehrhart_report(doc, config)
    except CommandFailure as exc:
        entry.update(status="error", exit_code=str(exc.code), error=str(exc))
    except Exception as exc:  # keep the rest of the corpus running
        entry.update(status="error", exit_code=str(EXIT_INVALID), error=f"{type(exc).__name__}: {exc}")
    return entry


def corpus_report(directory, cap: int = DEFAULT_CAP, jobs: int = 1) -> dict:
    paths = sorted(str(p) for p in Path(directory).glob("*.txt"))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(corpus_entry, paths, [cap] * len(paths)))
    else:
        entries = [corpus_entry(p, cap) for p in paths]
    entries.sort(key=lambda e: (e["name"], e["file"]))
    failed = sum(1 for e in entries if e["status"] != "ok")
    return {
        "command": "corpus",
        "summary": {"documents": str(len(entries)), "ok": str(len(entries) - failed), "failed": str(failed)},
        "documents": entries,
    }


def _heights_arg(text: str):
    try:
        return parse_heights(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(f"column {exc.column}: {exc.message}") from exc


class _Parser(argparse.ArgumentParser):
    # usage errors are input parse errors; argparse's default 2 would
    # collide with the validation-failure code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricsec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, target="path"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(target)
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default %(default)s)")
        return p

    add("validate", "check the lattice-point and generation condition")
    p = add("secondary", "triangulations, GKZ vectors and the secondary polytope")
    p.add_argument("--triangulations", action="store_true", help="list every triangulation")
    p.add_argument("--facets", action="store_true", help="list coarse subdivisions with facet equations")
    p.add_argument("--heights", type=_heights_arg, help="comma-separated rational heights")
    add("stability", "H-semistability and H-polystability verdicts")
    add("ehrhart", "Ehrhart polynomial, h-vector and the volume bound")
    p = add("corpus", "run every *.txt document in a directory", target="directory")
    p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes (default 1)")
    return parser


def run(args) -> tuple[int, dict | None]:
    if args.command == "corpus":
        report = corpus_report(args.directory, args.cap, args.jobs)
        return (EXIT_OK if report["summary"]["failed"] == "0" else EXIT_INVALID), report
    doc = load(args.path)
    if args.command == "validate":
        report, config = validation_report(doc)
        return (EXIT_OK if config is not None else EXIT_INVALID), report
    config = validated(doc)
    if args.command == "ehrhart":
        return EXIT_OK, ehrhart_report(doc, config)
    sec = compute_secondary(config, args.cap)
    if args.command == "stability":
        return EXIT_OK, stability_report(doc, config, sec)
    heights = args.heights if args.heights is not None else doc.heights
    if heights is not None and len(heights) != len(config):
        raise CommandFailure(EXIT_PARSE, f"{len(heights)} heights for {len(config)} points")
    return EXIT_OK, secondary_report(doc, config, sec, args.triangulations, args.facets, heights)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = run(args)
    except CommandFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        code, report = exc.code, exc.report
    if report is not None:
        text = dump_report(report)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
