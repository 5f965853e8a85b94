import { beforeEach, describe, expect, it } from "vitest";

import { Dashboard } from "../src/controller";
import {
  CategoryControl,
  HistogramControl,
  MetricTableControl,
  TableControl,
  ViewData,
} from "../src/view";
import { loadEmbeddedPage, mountPoint } from "./helpers";

function control<T>(view: ViewData, kind: string): T {
  const found = view.controls.find((c) => c.kind === kind);
  expect(found, `control ${kind} missing`).toBeDefined();
  return found as T;
}

function categoryCounts(view: ViewData, kind: string): Map<string, number> {
  const data = control<CategoryControl>(view, kind);
  return new Map(data.categories.map((c) => [c.value, c.count]));
}

describe("drill-down behavior", () => {
  let dashboard: Dashboard;
  let initial: ViewData;

  beforeEach(() => {
    const { config, rows } = loadEmbeddedPage();
    dashboard = new Dashboard(mountPoint(), config, rows);
    initial = dashboard.update();
  });

  it("renders every configured control", () => {
    expect(initial.controls).toHaveLength(13);
    expect(document.querySelectorAll(".ad-card")).toHaveLength(13);
  });

  it("matcher + outcome=FN shows only that matcher's false negatives", () => {
    dashboard.toggle("matcher", "matcherB");
    const view = dashboard.toggle("outcome", "FN");
    const table = control<TableControl>(view, "correspondence_table");
    expect(table.total).toBe(7);
    expect(table.rows.every(
      (r) => r.matcher === "matcherB" && r.outcome === "FN")).toBe(true);
    const dom = document.querySelectorAll("[data-kind=correspondence_table] tr");
    expect(dom).toHaveLength(1 + 7); // header + rows, single page
  });

  it("clearing filters restores the initial counts exactly", () => {
    dashboard.toggle("matcher", "matcherB");
    dashboard.toggle("outcome", "FN");
    dashboard.setBrush(0.59, 1.05);
    const restored = dashboard.reset();
    expect(restored.visibleCount).toBe(initial.visibleCount);
    for (const kind of ["track_selector", "testcase_selector", "matcher_chart",
                        "outcome_chart", "left_type_chart", "residual_chart",
                        "per_testcase_stack", "per_matcher_stack"]) {
      expect(categoryCounts(restored, kind)).toEqual(
        categoryCounts(initial, kind));
    }
  });

  it("a chart's own selection never changes its own totals", () => {
    const before = categoryCounts(initial, "matcher_chart");
    const view = dashboard.toggle("matcher", "matcherA");
    expect(categoryCounts(view, "matcher_chart")).toEqual(before);
    // but other charts do change
    expect(categoryCounts(view, "outcome_chart")).not.toEqual(
      categoryCounts(initial, "outcome_chart"));
  });

  it("selector and stack dimensions filter independently", () => {
    const stacksBefore = categoryCounts(initial, "per_matcher_stack");
    const view = dashboard.toggle("matcher", "matcherA");
    // the per-matcher stack is its own dimension, so matcherB drops to
    // its filtered count rather than keeping the unfiltered totals
    const stacks = categoryCounts(view, "per_matcher_stack");
    expect(stacks.get("matcherA")).toBe(stacksBefore.get("matcherA"));
    expect(stacks.get("matcherB")).toBe(0);
  });

  it("unfiltered categorical counts sum to the total row count", () => {
    for (const kind of ["track_selector", "testcase_selector",
                        "matcher_chart", "outcome_chart", "relation_chart",
                        "left_type_chart", "right_type_chart",
                        "residual_chart"]) {
      const counts = [...categoryCounts(initial, kind).values()];
      expect(counts.reduce((a, b) => a + b, 0)).toBe(initial.totalRows);
    }
  });

  it("confidence brush keeps rows inside the closed interval", () => {
    const view = dashboard.setBrush(0.59, 1.05);
    const table = control<TableControl>(view, "correspondence_table");
    expect(table.total).toBeGreaterThan(0);
    const metricTable = control<MetricTableControl>(view, "metric_table");
    expect(metricTable.rows.length).toBeGreaterThan(0);
    // FN rows carry the reference confidence 1.0 and stay visible
    expect(
      control<TableControl>(dashboard.update(), "correspondence_table")
        .rows.every((r) => r.confidence >= 0.59 && r.confidence <= 1.05),
    ).toBe(true);
    const boundary = dashboard.setBrush(0.59, 0.59);
    // nothing in the fixture sits exactly on 0.59, so the view empties;
    // the histogram itself still shows its unbrushed totals
    const hist = control<HistogramControl>(boundary, "confidence_histogram");
    expect(hist.bins.reduce((a, b) => a + b.count, 0))
      .toBe(initial.totalRows);
    expect(boundary.visibleCount).toBe(0);
  });

  it("histogram ignores its own brush but honors other filters", () => {
    const before = control<HistogramControl>(initial, "confidence_histogram");
    const brushed = dashboard.setBrush(0.8, 1.05);
    const after = control<HistogramControl>(brushed, "confidence_histogram");
    expect(after.bins.map((b) => b.count)).toEqual(
      before.bins.map((b) => b.count));
    const filtered = dashboard.toggle("matcher", "matcherA");
    const histogram = control<HistogramControl>(filtered,
                                                "confidence_histogram");
    expect(histogram.bins.reduce((a, b) => a + b.count, 0)).toBeLessThan(
      initial.totalRows);
  });

  it("paginates the correspondence table at 15 rows", () => {
    const table = control<TableControl>(initial, "correspondence_table");
    expect(table.rows).toHaveLength(15);
    expect(table.pageCount).toBe(2);
    const next = dashboard.turnPage(1);
    const page2 = control<TableControl>(next, "correspondence_table");
    expect(page2.page).toBe(1);
    expect(page2.rows).toHaveLength(19 - 15);
  });

  it("row color coding classes match outcomes in the DOM", () => {
    dashboard.update();
    const rows = document.querySelectorAll(
      "[data-kind=correspondence_table] tr[class^=ad-row-]");
    expect(rows.length).toBeGreaterThan(0);
    for (const row of rows) {
      const outcome = row.querySelector("[class^=ad-outcome-]")!.textContent!;
      expect(row.className).toBe(`ad-row-${outcome.toLowerCase()}`);
    }
  });

  it("clicking a bar row in the DOM applies the filter", () => {
    const card = document.querySelector("[data-kind=outcome_chart]")!;
    const fnRow = [...card.querySelectorAll(".ad-bar-row")].find(
      (r) => (r as HTMLElement).dataset.value === "FN") as HTMLElement;
    fnRow.click();
    const table = document.querySelector(
      "[data-kind=correspondence_table] .ad-pagination span")!;
    expect(table.textContent).toContain("10 rows"); // 3+4+2+1 FNs? no: 1+2+4+3
  });
});

describe("customized pages", () => {
  it("omits controls removed from the embedded config", () => {
    const { config, rows } = loadEmbeddedPage();
    const trimmed = {
      ...config,
      controls: config.controls.filter((c) => c !== "correspondence_table"),
    };
    const dashboard = new Dashboard(mountPoint(), trimmed, rows);
    const view = dashboard.update();
    expect(view.controls).toHaveLength(12);
    expect(document.querySelector("[data-kind=correspondence_table]"))
      .toBeNull();
  });

  it("renders an empty dataset with zero counts everywhere", () => {
    const { config } = loadEmbeddedPage();
    const dashboard = new Dashboard(mountPoint(), config, []);
    const view = dashboard.update();
    expect(view.totalRows).toBe(0);
    const table = view.controls.find(
      (c) => c.kind === "correspondence_table") as TableControl;
    expect(table.total).toBe(0);
    expect(document.querySelectorAll(".ad-card")).toHaveLength(13);
  });
});
