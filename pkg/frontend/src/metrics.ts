import { MetricSet, Row } from "./types";
import { caseLabel } from "./filters";

/** Same edge-case conventions as the evaluation engine: empty-vs-empty is
 * perfect, one-sided emptiness scores zero. */
export function metricSet(tp: number, fp: number, fn: number): MetricSet {
  const precision = tp + fp > 0 ? tp / (tp + fp) : fn === 0 ? 1 : 0;
  const recall = tp + fn > 0 ? tp / (tp + fn) : fp === 0 ? 1 : 0;
  const f1 =
    precision + recall === 0
      ? 0
      : (2 * precision * recall) / (precision + recall);
  return { precision, recall, f1 };
}

export interface MatcherMetrics {
  matcher: string;
  tp: number;
  fp: number;
  fn: number;
  micro: MetricSet;
  macro: MetricSet;
}

interface Tally {
  tp: number;
  fp: number;
  fn: number;
}

function tallyRow(tally: Tally, row: Row): void {
  if (row.outcome === "TP") tally.tp++;
  else if (row.outcome === "FP") tally.fp++;
  else tally.fn++;
}

/**
 * Per-matcher micro and macro metrics over the visible rows.  Micro sums the
 * matcher's visible confusion counts; macro averages per-test-case metrics
 * over test cases that still have at least one visible row for the matcher,
 * with F1 recomputed from the averaged precision and recall.
 */
export function computeMetrics(visible: Iterable<Row>): MatcherMetrics[] {
  const byMatcher = new Map<string, Tally>();
  const byCase = new Map<string, Map<string, Tally>>();
  for (const row of visible) {
    let total = byMatcher.get(row.matcher);
    if (!total) {
      total = { tp: 0, fp: 0, fn: 0 };
      byMatcher.set(row.matcher, total);
    }
    tallyRow(total, row);

    let cases = byCase.get(row.matcher);
    if (!cases) {
      cases = new Map();
      byCase.set(row.matcher, cases);
    }
    const label = caseLabel(row);
    let tally = cases.get(label);
    if (!tally) {
      tally = { tp: 0, fp: 0, fn: 0 };
      cases.set(label, tally);
    }
    tallyRow(tally, row);
  }

  const result: MatcherMetrics[] = [];
  for (const matcher of [...byMatcher.keys()].sort()) {
    const total = byMatcher.get(matcher)!;
    const perCase = [...byCase.get(matcher)!.values()].map((t) =>
      metricSet(t.tp, t.fp, t.fn),
    );
    const precision =
      perCase.reduce((acc, m) => acc + m.precision, 0) / perCase.length;
    const recall =
      perCase.reduce((acc, m) => acc + m.recall, 0) / perCase.length;
    const f1 =
      precision + recall === 0
        ? 0
        : (2 * precision * recall) / (precision + recall);
    result.push({
      matcher,
      ...total,
      micro: metricSet(total.tp, total.fp, total.fn),
      macro: { precision, recall, f1 },
    });
  }
  return result;
}
