"""Dashboard assembly: annotated rows, control configuration, HTML output.

The dashboard is a single HTML file: the row dataset goes in as one CSV text
block, the control list as a JSON config block, and the interactive UI as an
inline script.  Nothing references the network, so the file works from local
disk.
"""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from html import escape
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .alignio import Alignment, Relation
from .campaign import CaseKey, TestCase
from .evaluation import (
    ConfusionCounts,
    EvalOutcome,
    classify,
    residual_reference,
)
from .ontology import ElementType, OntologyIndex

__all__ = [
    "AnnotatedCell", "ControlKind", "DashboardSpec", "DEFAULT_CONTROLS",
    "MissingReferenceError", "MissingOntologyError", "build_dataset",
    "dataset_counts", "default_spec", "customize", "render_dashboard",
    "encode_dataset", "decode_dataset", "decode_embedded_dataset",
    "embedded_config", "format_decimal", "CSV_COLUMNS",
]

CSV_COLUMNS = ("track", "testcase", "matcher", "source", "target", "relation",
               "confidence", "outcome", "left_type", "right_type", "residual")


class MissingReferenceError(KeyError):
    """A result row references a test case with no reference alignment."""


class MissingOntologyError(KeyError):
    """A result row references a test case with no loaded ontology pair."""


class ControlKind(Enum):
    TRACK_SELECTOR = "track_selector"
    TESTCASE_SELECTOR = "testcase_selector"
    CONFIDENCE_HISTOGRAM = "confidence_histogram"
    RELATION_CHART = "relation_chart"
    MATCHER_CHART = "matcher_chart"
    OUTCOME_CHART = "outcome_chart"
    LEFT_TYPE_CHART = "left_type_chart"
    RIGHT_TYPE_CHART = "right_type_chart"
    RESIDUAL_CHART = "residual_chart"
    PER_TESTCASE_STACK = "per_testcase_stack"
    PER_MATCHER_STACK = "per_matcher_stack"
    METRIC_TABLE = "metric_table"
    CORRESPONDENCE_TABLE = "correspondence_table"


DEFAULT_CONTROLS: tuple[ControlKind, ...] = tuple(ControlKind)


@dataclass(frozen=True)
class AnnotatedCell:
    """One dashboard row: a classified correspondence with its facet values."""

    track: str
    testcase: str
    matcher: str
    source: str
    target: str
    relation: Relation
    confidence: float
    outcome: EvalOutcome
    left_type: ElementType
    right_type: ElementType
    residual: bool


@dataclass(frozen=True)
class DashboardSpec:
    title: str
    controls: tuple[ControlKind, ...]
    confidence_bin_width: float = 0.05
    dataset: tuple[AnnotatedCell, ...] = ()

    def __post_init__(self):
        if len(set(self.controls)) != len(self.controls):
            raise ValueError("duplicate dashboard controls")
        if not self.confidence_bin_width > 0:
            raise ValueError("confidence bin width must be positive")


def build_dataset(
    results: Iterable[tuple[str, TestCase, Alignment]],
    references: Mapping[CaseKey, Alignment],
    indices: Mapping[CaseKey, tuple[OntologyIndex, OntologyIndex]],
    baselines: Mapping[CaseKey, Alignment] | None = None,
    jobs: int = 1,
) -> list[AnnotatedCell]:
    """Classify every (matcher, testcase) result and annotate the rows.

    Each row carries the element types of both entities (false negatives
    included) and the residual flag derived from the test case's baseline
    alignment; a missing baseline entry means an empty baseline, i.e. the
    whole reference is residual.  Rows come back sorted by track, testcase,
    matcher, source, target, so identical inputs build identical datasets.
    """
    results = list(results)
    seen: set[tuple[str, CaseKey]] = set()
    for matcher, case, _ in results:
        if (matcher, case.key) in seen:
            raise ValueError(f"duplicate result for matcher {matcher!r} on "
                             f"testcase {case.key}")
        seen.add((matcher, case.key))
        if case.key not in references:
            raise MissingReferenceError(
                f"no reference alignment for testcase {case.key}")
        if case.key not in indices:
            raise MissingOntologyError(
                f"no ontology indices for testcase {case.key}")

    residual_keys = {}
    for case_key in {case.key for _, case, _ in results}:
        baseline = (baselines or {}).get(case_key, Alignment())
        residual_keys[case_key] = residual_reference(references[case_key],
                                                     baseline)

    def annotate(item: tuple[str, TestCase, Alignment]) -> list[AnnotatedCell]:
        matcher, case, system = item
        left_index, right_index = indices[case.key]
        residual = residual_keys[case.key]
        rows = []
        for cell, outcome in classify(system, references[case.key],
                                      case.completeness):
            rows.append(AnnotatedCell(
                track=case.track, testcase=case.id, matcher=matcher,
                source=cell.source, target=cell.target,
                relation=cell.relation, confidence=cell.confidence,
                outcome=outcome,
                left_type=left_index.type_of(cell.source),
                right_type=right_index.type_of(cell.target),
                residual=(outcome is not EvalOutcome.FALSE_POSITIVE
                          and cell.key in residual),
            ))
        return rows

    if jobs > 1 and len(results) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(annotate, results))
    else:
        chunks = [annotate(item) for item in results]

    dataset = [row for chunk in chunks for row in chunk]
    dataset.sort(key=lambda r: (r.track, r.testcase, r.matcher, r.source,
                                r.target, r.relation.raw))
    return dataset


def dataset_counts(dataset: Iterable[AnnotatedCell],
                   ) -> dict[tuple[str, str, str], ConfusionCounts]:
    """Confusion counts per (matcher, track, testcase) from annotated rows."""
    counts: dict[tuple[str, str, str], ConfusionCounts] = {}
    for row in dataset:
        group = (row.matcher, row.track, row.testcase)
        counts[group] = counts.get(group, ConfusionCounts()) + ConfusionCounts(
            tp=row.outcome is EvalOutcome.TRUE_POSITIVE,
            fp=row.outcome is EvalOutcome.FALSE_POSITIVE,
            fn=row.outcome is EvalOutcome.FALSE_NEGATIVE)
    return counts


def default_spec(dataset: Sequence[AnnotatedCell],
                 title: str = "Alignment evaluation dashboard") -> DashboardSpec:
    """All thirteen controls in canonical order over the given rows."""
    return DashboardSpec(title=title, controls=DEFAULT_CONTROLS,
                         confidence_bin_width=0.05, dataset=tuple(dataset))


def customize(spec: DashboardSpec, add: Iterable[ControlKind] = (),
              remove: Iterable[ControlKind] = ()) -> DashboardSpec:
    """Drop the ``remove`` controls, then append missing ``add`` ones."""
    removed = set(remove)
    controls = [c for c in spec.controls if c not in removed]
    for kind in add:
        if kind not in controls:
            controls.append(kind)
    return replace(spec, controls=tuple(controls))


def format_decimal(value: float) -> str:
    """Decimal text with at most six fractional digits, no exponent."""
    text = f"{value:.6f}".rstrip("0")
    return text + "0" if text.endswith(".") else text


_OUTCOME_BY_WIRE = {o.value: o for o in EvalOutcome}
_TYPE_BY_WIRE = {t.value: t for t in ElementType}


def encode_dataset(dataset: Iterable[AnnotatedCell]) -> str:
    """Serialize rows to the embedded CSV format (also used for --csv dumps)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in dataset:
        writer.writerow((
            row.track, row.testcase, row.matcher, row.source, row.target,
            row.relation.raw, format_decimal(row.confidence),
            row.outcome.value, row.left_type.value, row.right_type.value,
            "true" if row.residual else "false"))
    return out.getvalue()


def decode_dataset(text: str) -> list[AnnotatedCell]:
    """Inverse of encode_dataset."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected dataset header: {header}")
    rows = []
    for record in reader:
        if not record:
            continue
        (track, testcase, matcher, source, target, relation, confidence,
         outcome, left_type, right_type, residual) = record
        rows.append(AnnotatedCell(
            track=track, testcase=testcase, matcher=matcher, source=source,
            target=target, relation=Relation.from_token(relation),
            confidence=float(confidence), outcome=_OUTCOME_BY_WIRE[outcome],
            left_type=_TYPE_BY_WIRE[left_type],
            right_type=_TYPE_BY_WIRE[right_type],
            residual=residual == "true"))
    return rows


def _ui_bundle() -> str:
    return (resources.files("aligndash") / "assets" /
            "dashboard_ui.js").read_text(encoding="utf-8")


def _stylesheet() -> str:
    return (resources.files("aligndash") / "assets" /
            "dashboard.css").read_text(encoding="utf-8")


def _json_block(payload: object) -> str:
    # "</" must not appear verbatim inside inline <script> content
    return json.dumps(payload, ensure_ascii=False).replace("</", "<\\/")


def render_dashboard(spec: DashboardSpec) -> bytes:
    """Emit the complete self-contained dashboard HTML document.

    The document embeds the dataset CSV and the control configuration as
    inert JSON script blocks plus the UI bundle inline; it loads from local
    disk with no server and no external requests.
    """
    bundle = _ui_bundle()
    if "</script" in bundle:
        raise ValueError("UI bundle must not contain '</script'")
    config = {
        "title": spec.title,
        "controls": [kind.value for kind in spec.controls],
        "confidenceBinWidth": spec.confidence_bin_width,
    }
    html = f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8"/>
<meta name="viewport" content="width=device-width, initial-scale=1"/>
<title>{escape(spec.title)}</title>
<style>
{_stylesheet()}
</style>
</head>
<body>
<div id="app"><noscript>This dashboard needs JavaScript enabled.</noscript></div>
<script id="dashboard-config" type="application/json">{_json_block(config)}</script>
<script id="dashboard-data" type="application/json">{_json_block({"csv": encode_dataset(spec.dataset)})}</script>
<script>
{bundle}
</script>
</body>
</html>
"""
    return html.encode("utf-8")


_BLOCK_RE = re.compile(
    r'<script id="dashboard-(config|data)" type="application/json">(.*?)'
    r'</script>', re.S)


def _embedded_blocks(html: bytes | str) -> dict[str, object]:
    if isinstance(html, bytes):
        html = html.decode("utf-8")
    return {name: json.loads(body) for name, body in _BLOCK_RE.findall(html)}


def embedded_config(html: bytes | str) -> dict:
    """The control configuration embedded in a rendered dashboard."""
    return _embedded_blocks(html)["config"]


def decode_embedded_dataset(html: bytes | str) -> list[AnnotatedCell]:
    """Recover the full dataset from a rendered dashboard document."""
    return decode_dataset(_embedded_blocks(html)["data"]["csv"])
