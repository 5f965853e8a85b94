import { describe, expect, it } from "vitest";

import { computeMetrics, metricSet } from "../src/metrics";
import { loadEmbeddedPage, loadReport } from "./helpers";

describe("metricSet conventions", () => {
  it("matches the engine's edge cases", () => {
    expect(metricSet(0, 0, 0)).toEqual({ precision: 1, recall: 1, f1: 1 });
    expect(metricSet(5, 0, 0)).toEqual({ precision: 1, recall: 1, f1: 1 });
    expect(metricSet(0, 0, 3)).toEqual({ precision: 0, recall: 0, f1: 0 });
    expect(metricSet(0, 3, 0)).toEqual({ precision: 0, recall: 0, f1: 0 });
    const m = metricSet(2, 1, 1);
    expect(m.precision).toBeCloseTo(2 / 3, 12);
    expect(m.recall).toBeCloseTo(2 / 3, 12);
    expect(m.f1).toBeCloseTo(2 / 3, 12);
  });
});

describe("metric agreement with the CLI report", () => {
  // the report values carry 6 decimal digits
  const DISPLAY_TOLERANCE = 5e-7;

  it("unfiltered table equals the track rows of the metric report", () => {
    const { rows } = loadEmbeddedPage();
    const report = loadReport().filter((r) => r.testcase === "");
    const table = computeMetrics(rows);
    expect(table.map((r) => r.matcher)).toEqual(
      report.map((r) => r.matcher));
    for (const [index, row] of table.entries()) {
      const expected = report[index];
      expect(row.tp).toBe(expected.tp);
      expect(row.fp).toBe(expected.fp);
      expect(row.fn).toBe(expected.fn);
      const got = [row.micro.precision, row.micro.recall, row.micro.f1,
                   row.macro.precision, row.macro.recall, row.macro.f1];
      const want = [...expected.micro, ...expected.macro!];
      got.forEach((value, i) =>
        expect(Math.abs(value - want[i])).toBeLessThan(DISPLAY_TOLERANCE));
    }
  });

  it("single-testcase filter makes micro equal macro", () => {
    const { rows } = loadEmbeddedPage();
    const visible = rows.filter((r) => r.testcase === "tc1");
    for (const row of computeMetrics(visible)) {
      expect(row.micro.precision).toBeCloseTo(row.macro.precision, 12);
      expect(row.micro.recall).toBeCloseTo(row.macro.recall, 12);
      expect(row.micro.f1).toBeCloseTo(row.macro.f1, 12);
    }
  });

  it("TP-only visibility gives perfect precision and recall", () => {
    const { rows } = loadEmbeddedPage();
    const visible = rows.filter((r) => r.outcome === "TP");
    const table = computeMetrics(visible);
    expect(table.length).toBeGreaterThan(0);
    for (const row of table) {
      expect(row.micro).toEqual({ precision: 1, recall: 1, f1: 1 });
      expect(row.macro).toEqual({ precision: 1, recall: 1, f1: 1 });
    }
  });

  it("macro skips test cases with no visible rows for the matcher", () => {
    const { rows } = loadEmbeddedPage();
    // matcherA on tc1 alone: (4,0,1) -> P=1, R=0.8
    const visible = rows.filter(
      (r) => !(r.matcher === "matcherA" && r.testcase === "tc2"));
    const matcherA = computeMetrics(visible)
      .find((r) => r.matcher === "matcherA")!;
    expect(matcherA.macro.precision).toBeCloseTo(1.0, 12);
    expect(matcherA.macro.recall).toBeCloseTo(0.8, 12);
  });
});
