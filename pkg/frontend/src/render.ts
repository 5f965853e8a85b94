import {
  CategoryControl,
  HistogramControl,
  MetricTableControl,
  TableControl,
  ViewData,
} from "./view";
import { Row } from "./types";

export interface Handlers {
  onToggle(control: CategoryControl, value: string): void;
  onBrush(lo: number, hi: number): void;
  onClearBrush(): void;
  onReset(): void;
  onPage(delta: number): void;
}

const CONTROL_TITLES: Record<string, string> = {
  track_selector: "Track",
  testcase_selector: "Test case",
  confidence_histogram: "Confidence",
  relation_chart: "Relation",
  matcher_chart: "Matcher",
  outcome_chart: "Outcome",
  left_type_chart: "Left element type",
  right_type_chart: "Right element type",
  residual_chart: "Residual true positives",
  per_testcase_stack: "Correspondences per test case",
  per_matcher_stack: "Correspondences per matcher",
  metric_table: "Matcher performance",
  correspondence_table: "Correspondences",
};

const WIDE_CONTROLS = new Set([
  "per_testcase_stack", "per_matcher_stack", "metric_table",
  "correspondence_table",
]);

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function prettyCategory(control: CategoryControl, value: string): string {
  if (control.dimension === "leftType" || control.dimension === "rightType") {
    return value.toLowerCase().replace(/_/g, " ");
  }
  return value;
}

function metric(value: number): string {
  return value.toFixed(4);
}

export function renderDashboard(
  root: HTMLElement,
  title: string,
  view: ViewData,
  handlers: Handlers,
): void {
  const doc = root.ownerDocument;
  root.textContent = "";

  const header = el(doc, "div", "ad-header");
  header.appendChild(el(doc, "h1", "", title));
  header.appendChild(el(
    doc, "span", "ad-rowcount",
    `${view.visibleCount.toLocaleString("en-US")} of ` +
    `${view.totalRows.toLocaleString("en-US")} correspondences visible`));
  root.appendChild(header);

  const toolbar = el(doc, "div", "ad-toolbar");
  const reset = el(doc, "button", "ad-reset", "Clear all filters");
  reset.addEventListener("click", () => handlers.onReset());
  toolbar.appendChild(reset);
  toolbar.appendChild(el(
    doc, "span", "ad-note",
    "Metrics and counts are computed over the currently visible rows; " +
    "filtering never reclassifies a correspondence (a thresholded-away " +
    "true positive does not become a false negative)."));
  root.appendChild(toolbar);

  const grid = el(doc, "div", "ad-controls");
  root.appendChild(grid);
  for (const control of view.controls) {
    const card = el(doc, "div", "ad-card");
    if (WIDE_CONTROLS.has(control.kind)) card.classList.add("ad-wide");
    card.dataset.kind = control.kind;
    grid.appendChild(card);
    const heading = el(doc, "h3", "",
                       CONTROL_TITLES[control.kind] ?? control.kind);
    card.appendChild(heading);
    switch (control.kind) {
      case "confidence_histogram":
        renderHistogram(card, control as HistogramControl, handlers);
        break;
      case "metric_table":
        renderMetricTable(card, control as MetricTableControl);
        break;
      case "correspondence_table":
        renderCorrespondenceTable(card, control as TableControl, handlers);
        break;
      default:
        renderCategories(card, control as CategoryControl, handlers);
    }
  }
}

function renderCategories(
  card: HTMLElement,
  control: CategoryControl,
  handlers: Handlers,
): void {
  const doc = card.ownerDocument;
  if (control.filtered) {
    card.querySelector("h3")!.appendChild(
      el(doc, "span", "ad-filtered-tag", "filtered"));
  }
  if (control.categories.length === 0) {
    card.appendChild(el(doc, "div", "ad-empty", "no data"));
    return;
  }
  if (control.stacked) {
    const legend = el(doc, "div", "ad-legend");
    legend.appendChild(el(doc, "span", "ad-tp", "TP"));
    legend.appendChild(el(doc, "span", "ad-fp", "FP"));
    legend.appendChild(el(doc, "span", "ad-fn", "FN"));
    card.appendChild(legend);
  }
  const anySelected = control.categories.some((c) => c.selected);
  for (const category of control.categories) {
    const row = el(doc, "div", "ad-bar-row");
    row.dataset.value = category.value;
    if (category.selected) row.classList.add("ad-selected");
    else if (anySelected) row.classList.add("ad-dimmed");
    row.appendChild(el(doc, "div", "ad-bar-label",
                       prettyCategory(control, category.value)));
    const track = el(doc, "div", "ad-bar-track");
    if (control.stacked) {
      for (const [share, cls] of [
        [category.tp, "ad-tp"], [category.fp, "ad-fp"],
        [category.fn, "ad-fn"],
      ] as const) {
        const fill = el(doc, "div", `ad-bar-fill ${cls}`);
        fill.style.width = `${(100 * share) / control.maxCount}%`;
        track.appendChild(fill);
      }
    } else {
      const fill = el(doc, "div", "ad-bar-fill");
      fill.style.width = `${(100 * category.count) / control.maxCount}%`;
      track.appendChild(fill);
    }
    row.appendChild(track);
    row.appendChild(el(doc, "div", "ad-bar-count",
                       String(category.count)));
    row.addEventListener("click", () =>
      handlers.onToggle(control, category.value));
    card.appendChild(row);
  }
}

function renderHistogram(
  card: HTMLElement,
  control: HistogramControl,
  handlers: Handlers,
): void {
  const doc = card.ownerDocument;
  if (control.brush) {
    card.querySelector("h3")!.appendChild(el(
      doc, "span", "ad-filtered-tag",
      `[${control.brush[0]}, ${control.brush[1]}]`));
  }
  const hist = el(doc, "div", "ad-hist");
  let dragStart: number | null = null;
  control.bins.forEach((bin, index) => {
    const bar = el(doc, "div", "ad-hist-bin");
    bar.style.height = `${Math.max(1, (100 * bin.count) / control.maxCount)}%`;
    bar.title = `[${bin.lo.toFixed(2)}, ${bin.hi.toFixed(2)}): ${bin.count}`;
    if (!bin.inBrush) bar.classList.add("ad-out");
    bar.dataset.bin = String(index);
    bar.addEventListener("pointerdown", () => {
      dragStart = index;
    });
    bar.addEventListener("pointerup", () => {
      const start = dragStart === null ? index : dragStart;
      dragStart = null;
      const lo = control.bins[Math.min(start, index)].lo;
      const hi = control.bins[Math.max(start, index)].hi;
      handlers.onBrush(round2(lo), round2(hi));
    });
    hist.appendChild(bar);
  });
  card.appendChild(hist);

  const axis = el(doc, "div", "ad-hist-axis");
  axis.appendChild(el(doc, "span", "", "0"));
  axis.appendChild(el(doc, "span", "",
                      control.bins[control.bins.length - 1].hi.toFixed(2)));
  card.appendChild(axis);

  const brushRow = el(doc, "div", "ad-brush");
  brushRow.appendChild(el(doc, "span", "", "interval"));
  const lo = el(doc, "input") as HTMLInputElement;
  lo.type = "number";
  lo.step = "0.01";
  lo.value = control.brush ? String(control.brush[0]) : "";
  const hi = lo.cloneNode() as HTMLInputElement;
  hi.value = control.brush ? String(control.brush[1]) : "";
  const apply = el(doc, "button", "ad-reset", "apply");
  apply.addEventListener("click", () => {
    const a = Number(lo.value);
    const b = Number(hi.value);
    if (Number.isFinite(a) && Number.isFinite(b) && a <= b) {
      handlers.onBrush(a, b);
    }
  });
  const clear = el(doc, "button", "ad-reset", "clear");
  clear.addEventListener("click", () => handlers.onClearBrush());
  brushRow.append(lo, el(doc, "span", "", "to"), hi, apply, clear);
  card.appendChild(brushRow);
}

function round2(value: number): number {
  return Math.round(value * 100) / 100;
}

function renderMetricTable(card: HTMLElement,
                           control: MetricTableControl): void {
  const doc = card.ownerDocument;
  if (control.rows.length === 0) {
    card.appendChild(el(doc, "div", "ad-empty", "no visible rows"));
    return;
  }
  const table = el(doc, "table", "ad-table");
  const head = el(doc, "tr");
  for (const column of ["matcher", "TP", "FP", "FN", "micro-P", "micro-R",
                        "micro-F1", "macro-P", "macro-R", "macro-F1"]) {
    head.appendChild(el(doc, "th", column === "matcher" ? "" : "ad-num",
                        column));
  }
  table.appendChild(head);
  for (const row of control.rows) {
    const tr = el(doc, "tr");
    tr.appendChild(el(doc, "td", "", row.matcher));
    for (const value of [row.tp, row.fp, row.fn]) {
      tr.appendChild(el(doc, "td", "ad-num", String(value)));
    }
    for (const value of [row.micro.precision, row.micro.recall, row.micro.f1,
                         row.macro.precision, row.macro.recall,
                         row.macro.f1]) {
      tr.appendChild(el(doc, "td", "ad-num", metric(value)));
    }
    table.appendChild(tr);
  }
  card.appendChild(table);
}

function renderCorrespondenceTable(
  card: HTMLElement,
  control: TableControl,
  handlers: Handlers,
): void {
  const doc = card.ownerDocument;
  const table = el(doc, "table", "ad-table");
  const head = el(doc, "tr");
  for (const column of ["test case", "matcher", "source", "target",
                        "relation", "confidence", "outcome", "residual"]) {
    head.appendChild(el(doc, "th", "", column));
  }
  table.appendChild(head);
  for (const row of control.rows) {
    table.appendChild(correspondenceRow(doc, row));
  }
  card.appendChild(table);

  const pager = el(doc, "div", "ad-pagination");
  const prev = el(doc, "button", "", "previous");
  prev.disabled = control.page === 0;
  prev.addEventListener("click", () => handlers.onPage(-1));
  const next = el(doc, "button", "", "next");
  next.disabled = control.page >= control.pageCount - 1;
  next.addEventListener("click", () => handlers.onPage(1));
  pager.append(
    prev, next,
    el(doc, "span", "",
       `page ${control.page + 1} of ${control.pageCount} — ` +
       `${control.total.toLocaleString("en-US")} rows`));
  card.appendChild(pager);
}

function correspondenceRow(doc: Document, row: Row): HTMLTableRowElement {
  const tr = el(doc, "tr", `ad-row-${row.outcome.toLowerCase()}`);
  tr.appendChild(el(doc, "td", "", `${row.track} / ${row.testcase}`));
  tr.appendChild(el(doc, "td", "", row.matcher));
  tr.appendChild(el(doc, "td", "ad-uri", row.source));
  tr.appendChild(el(doc, "td", "ad-uri", row.target));
  tr.appendChild(el(doc, "td", "", row.relation));
  tr.appendChild(el(doc, "td", "ad-num", row.confidence.toFixed(6)
    .replace(/0+$/, "").replace(/\.$/, ".0")));
  tr.appendChild(el(doc, "td", `ad-outcome-${row.outcome.toLowerCase()}`,
                    row.outcome));
  tr.appendChild(el(doc, "td", "", row.residual ? "residual" : "trivial"));
  return tr;
}
