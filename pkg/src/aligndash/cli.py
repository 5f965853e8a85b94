"""Command-line front end: evaluate a campaign and write the dashboard.

Exit codes: 0 success, 1 bad arguments, 2 configuration or file problems,
3 parse errors inside an input file.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .alignio import Alignment, AlignmentParseError, parse_alignment
from .campaign import ConfigError, discover_results, load_track_config
from .dashboard import (
    build_dataset,
    dataset_counts,
    default_spec,
    encode_dataset,
    format_decimal,
    render_dashboard,
)
from .evaluation import (
    BaselineConfig,
    BaselineMode,
    ConfusionCounts,
    baseline_match,
    macro_average,
    metrics,
    micro_average,
)
from .ontology import (
    RdfSyntax,
    RdfSyntaxError,
    UnsupportedSyntaxError,
    load_ontology_file,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_PARSE = 3


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="aligndash",
        description="Evaluate ontology alignments and build an interactive "
                    "dashboard.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser(
        "evaluate", help="score matcher results against reference alignments")
    evaluate.add_argument("--config", required=True, type=Path,
                          help="track configuration JSON file")
    evaluate.add_argument("--results", required=True, type=Path,
                          help="root of the matcher results folders")
    evaluate.add_argument("--out", type=Path, default=Path("dashboard.html"),
                          help="dashboard output path (default: %(default)s)")
    evaluate.add_argument("--csv", type=Path, default=None,
                          help="also dump the annotated dataset as CSV")
    evaluate.add_argument("--report", type=Path, default=None,
                          help="write the per-matcher metric report CSV")
    evaluate.add_argument("--baseline", default="both",
                          choices=["labels", "localnames", "both", "off"],
                          help="baseline matcher for residual flags "
                               "(default: %(default)s)")
    evaluate.add_argument("--ontology-syntax", default="auto",
                          choices=["auto", "rdfxml", "turtle", "ntriples"],
                          help="override the extension-based RDF syntax "
                               "detection for ontology files")
    evaluate.add_argument("--jobs", type=int, default=1, metavar="N",
                          help="parallel evaluation workers")
    evaluate.add_argument("--flat", action="store_true",
                          help="results are <matcher>.rdf files "
                               "(single-testcase runs)")
    evaluate.add_argument("--title", default="Alignment evaluation dashboard",
                          help="dashboard page title")
    return parser


def _warn(message: str):
    print(f"warning: {message}", file=sys.stderr)


def _load_index(path: Path, syntax: RdfSyntax | None = None):
    try:
        return load_ontology_file(path, syntax)
    except RdfSyntaxError as exc:
        raise RdfSyntaxError(f"{path}: {exc}") from None


def _load_systems(found, pairs, jobs):
    """Parse all discovered result files; returns {(matcher, key): Alignment}."""
    def load(item):
        (matcher, case_key), path = item
        try:
            with open(path, "rb") as handle:
                return (matcher, case_key), parse_alignment(handle)
        except AlignmentParseError as exc:
            raise AlignmentParseError(f"{path}: {exc}") from None
    items = [(pair, found[pair]) for pair in pairs if pair in found]
    if jobs > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return dict(pool.map(load, items))
    return dict(load(item) for item in items)


def _evaluate(args) -> int:
    config = load_track_config(args.config)
    if not config.testcases:
        raise ConfigError(f"{args.config}: no testcases configured")
    matchers, found = discover_results(args.results, config, flat=args.flat)
    if not matchers:
        raise ConfigError(f"no matcher results under {args.results}")
    syntax = (None if args.ontology_syntax == "auto"
              else RdfSyntax(args.ontology_syntax))

    references = {}
    indices = {}
    for case in config.testcases:
        with open(case.reference, "rb") as handle:
            try:
                references[case.key] = parse_alignment(handle)
            except AlignmentParseError as exc:
                raise AlignmentParseError(f"{case.reference}: {exc}") from None
        indices[case.key] = (_load_index(case.left_ontology, syntax),
                             _load_index(case.right_ontology, syntax))

    baselines = {}
    if args.baseline != "off":
        baseline_config = BaselineConfig(mode=BaselineMode(args.baseline))
        for case in config.testcases:
            left, right = indices[case.key]
            baselines[case.key] = baseline_match(left, right, baseline_config)

    pairs = [(matcher, case.key) for matcher in matchers
             for case in config.testcases]
    systems = _load_systems(found, pairs, args.jobs)
    results = []
    for matcher in matchers:
        for case in config.testcases:
            system = systems.get((matcher, case.key))
            if system is None:
                _warn(f"no result file for matcher {matcher!r} on "
                      f"{case.track}/{case.id}; treating as empty alignment")
                system = Alignment()
            for note in system.warnings:
                _warn(f"{matcher} on {case.track}/{case.id}: {note}")
            results.append((matcher, case, system))

    dataset = build_dataset(results, references, indices, baselines,
                            jobs=args.jobs)
    counts = dataset_counts(dataset)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    spec = default_spec(dataset, title=args.title)
    args.out.write_bytes(render_dashboard(spec))
    print(f"dashboard written to {args.out} ({len(dataset)} rows)")

    if args.csv is not None:
        args.csv.parent.mkdir(parents=True, exist_ok=True)
        args.csv.write_text(encode_dataset(dataset), encoding="utf-8")
        print(f"dataset written to {args.csv}")
    if args.report is not None:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        write_metric_report(counts, args.report)
        print(f"metric report written to {args.report}")

    _print_summary(matchers, counts)
    return EXIT_OK


def _per_matcher_counts(matchers, counts):
    by_matcher = {matcher: [] for matcher in matchers}
    for (matcher, _, _), case_counts in sorted(counts.items()):
        by_matcher[matcher].append(case_counts)
    return by_matcher


def _print_summary(matchers, counts):
    by_matcher = _per_matcher_counts(matchers, counts)
    header = (f"{'matcher':<24} {'micro-P':>8} {'micro-R':>8} {'micro-F1':>8} "
              f"{'macro-P':>8} {'macro-R':>8} {'macro-F1':>8}")
    print(header)
    print("-" * len(header))
    for matcher in matchers:
        micro = micro_average(by_matcher[matcher])
        macro = macro_average(by_matcher[matcher])
        print(f"{matcher:<24} {micro.precision:>8.4f} {micro.recall:>8.4f} "
              f"{micro.f1:>8.4f} {macro.precision:>8.4f} {macro.recall:>8.4f} "
              f"{macro.f1:>8.4f}")


REPORT_COLUMNS = ("matcher", "track", "testcase", "tp", "fp", "fn",
                  "micro_p", "micro_r", "micro_f1",
                  "macro_p", "macro_r", "macro_f1")


def write_metric_report(counts: dict[tuple[str, str, str], ConfusionCounts],
                        path: Path):
    """Write per-(matcher, track) and per-(matcher, testcase) metric rows.

    Track rows aggregate their test cases (micro and macro); testcase rows
    carry their own counts and metrics, with the macro columns left empty.
    """
    groups: dict[tuple[str, str], dict[str, ConfusionCounts]] = {}
    for (matcher, track, case_id), case_counts in counts.items():
        groups.setdefault((matcher, track), {})[case_id] = case_counts

    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for (matcher, track) in sorted(groups):
            per_case = groups[(matcher, track)]
            ordered = [per_case[case_id] for case_id in sorted(per_case)]
            total = ConfusionCounts()
            for c in ordered:
                total = total + c
            micro = micro_average(ordered)
            macro = macro_average(ordered)
            writer.writerow((matcher, track, "", total.tp, total.fp, total.fn,
                             format_decimal(micro.precision),
                             format_decimal(micro.recall),
                             format_decimal(micro.f1),
                             format_decimal(macro.precision),
                             format_decimal(macro.recall),
                             format_decimal(macro.f1)))
            for case_id in sorted(per_case):
                c = per_case[case_id]
                m = metrics(c)
                writer.writerow((matcher, track, case_id, c.tp, c.fp, c.fn,
                                 format_decimal(m.precision),
                                 format_decimal(m.recall),
                                 format_decimal(m.f1), "", "", ""))


def run(argv=None) -> int:
    """Parse arguments and run; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _evaluate(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (AlignmentParseError, RdfSyntaxError,
            UnsupportedSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
