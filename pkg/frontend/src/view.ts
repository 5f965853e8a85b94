import {
  ACCESSORS,
  Dimension,
  FilterState,
  computeMasks,
  confidenceBit,
  dimensionBit,
  passesAll,
  passesAllBut,
} from "./filters";
import { MatcherMetrics, computeMetrics } from "./metrics";
import { DashboardConfig, OUTCOME_ORDER, Row, TYPE_ORDER } from "./types";

export const PAGE_SIZE = 15;

export interface CategoryDatum {
  value: string;
  count: number;
  tp: number;
  fp: number;
  fn: number;
  selected: boolean;
}

export interface CategoryControl {
  kind: string;
  dimension: Dimension;
  stacked: boolean;
  filtered: boolean;
  categories: CategoryDatum[];
  maxCount: number;
}

export interface HistogramBin {
  lo: number;
  hi: number;
  count: number;
  inBrush: boolean;
}

export interface HistogramControl {
  kind: "confidence_histogram";
  bins: HistogramBin[];
  brush: [number, number] | null;
  maxCount: number;
}

export interface MetricTableControl {
  kind: "metric_table";
  rows: MatcherMetrics[];
}

export interface TableControl {
  kind: "correspondence_table";
  total: number;
  page: number;
  pageCount: number;
  rows: Row[];
}

export type ControlData =
  | CategoryControl
  | HistogramControl
  | MetricTableControl
  | TableControl;

export interface ViewData {
  totalRows: number;
  visibleCount: number;
  controls: ControlData[];
}

const CONTROL_DIMENSIONS: Record<string, Dimension> = {
  track_selector: "track",
  testcase_selector: "testcase",
  relation_chart: "relation",
  matcher_chart: "matcher",
  outcome_chart: "outcome",
  left_type_chart: "leftType",
  right_type_chart: "rightType",
  residual_chart: "residual",
  per_testcase_stack: "perTestCase",
  per_matcher_stack: "perMatcher",
};

const STACKED_CONTROLS = new Set(["per_testcase_stack", "per_matcher_stack"]);

/** Fixed category universes so chart axes stay stable while filtering. */
export class Universes {
  readonly categories = new Map<Dimension, string[]>();
  readonly binCount: number;
  readonly binWidth: number;

  constructor(rows: Row[], binWidth: number) {
    for (const dim of Object.values(CONTROL_DIMENSIONS)) {
      if (this.categories.has(dim)) continue;
      const seen = new Set<string>();
      const accessor = ACCESSORS[dim];
      for (const row of rows) seen.add(accessor(row));
      this.categories.set(dim, sortCategories(dim, [...seen]));
    }
    this.binWidth = binWidth;
    let maxConfidence = 1.0;
    for (const row of rows) {
      if (row.confidence > maxConfidence) maxConfidence = row.confidence;
    }
    // domain [0, max(1, maxConf) + width): the top edge may exceed 1.0
    this.binCount = Math.max(1, Math.ceil((maxConfidence + binWidth) / binWidth));
  }
}

function sortCategories(dim: Dimension, values: string[]): string[] {
  if (dim === "outcome") {
    return OUTCOME_ORDER.filter((o) => values.includes(o));
  }
  if (dim === "leftType" || dim === "rightType") {
    const known = TYPE_ORDER.filter((t) => values.includes(t));
    const extra = values.filter((v) => !TYPE_ORDER.includes(v)).sort();
    return [...known, ...extra];
  }
  if (dim === "residual") {
    return ["residual", "trivial"].filter((v) => values.includes(v));
  }
  return values.sort();
}

function categoryControl(
  kind: string,
  rows: Row[],
  masks: Uint16Array,
  state: FilterState,
  universes: Universes,
): CategoryControl {
  const dimension = CONTROL_DIMENSIONS[kind];
  const accessor = ACCESSORS[dimension];
  const bit = dimensionBit(dimension);
  const counts = new Map<string, CategoryDatum>();
  for (const value of universes.categories.get(dimension) ?? []) {
    counts.set(value, {
      value,
      count: 0,
      tp: 0,
      fp: 0,
      fn: 0,
      selected: state.isSelected(dimension, value),
    });
  }
  for (let i = 0; i < rows.length; i++) {
    if (!passesAllBut(masks[i], bit)) continue;
    const datum = counts.get(accessor(rows[i]));
    if (!datum) continue;
    datum.count++;
    const outcome = rows[i].outcome;
    if (outcome === "TP") datum.tp++;
    else if (outcome === "FP") datum.fp++;
    else datum.fn++;
  }
  const categories = [...counts.values()];
  let maxCount = 1;
  for (const c of categories) if (c.count > maxCount) maxCount = c.count;
  return {
    kind,
    dimension,
    stacked: STACKED_CONTROLS.has(kind),
    filtered: state.hasFilter(dimension),
    categories,
    maxCount,
  };
}

function histogramControl(
  rows: Row[],
  masks: Uint16Array,
  state: FilterState,
  universes: Universes,
): HistogramControl {
  const width = universes.binWidth;
  const counts = new Array<number>(universes.binCount).fill(0);
  const bit = confidenceBit();
  for (let i = 0; i < rows.length; i++) {
    if (!passesAllBut(masks[i], bit)) continue;
    let bin = Math.floor(rows[i].confidence / width);
    if (bin < 0) bin = 0;
    if (bin >= counts.length) bin = counts.length - 1;
    counts[bin]++;
  }
  const brush = state.brush;
  const bins = counts.map((count, index) => {
    const lo = index * width;
    const hi = (index + 1) * width;
    return {
      lo,
      hi,
      count,
      inBrush: brush === null || (hi > brush[0] && lo <= brush[1]),
    };
  });
  return {
    kind: "confidence_histogram",
    bins,
    brush,
    maxCount: Math.max(1, ...counts),
  };
}

export function visibleRows(rows: Row[], masks: Uint16Array): Row[] {
  const out: Row[] = [];
  for (let i = 0; i < rows.length; i++) {
    if (passesAll(masks[i])) out.push(rows[i]);
  }
  return out;
}

export function computeView(
  rows: Row[],
  config: DashboardConfig,
  state: FilterState,
  universes: Universes,
  page = 0,
): ViewData {
  const masks = computeMasks(rows, state);
  const visible = visibleRows(rows, masks);
  const controls: ControlData[] = [];
  for (const kind of config.controls) {
    if (kind in CONTROL_DIMENSIONS) {
      controls.push(categoryControl(kind, rows, masks, state, universes));
    } else if (kind === "confidence_histogram") {
      controls.push(histogramControl(rows, masks, state, universes));
    } else if (kind === "metric_table") {
      controls.push({ kind: "metric_table", rows: computeMetrics(visible) });
    } else if (kind === "correspondence_table") {
      const pageCount = Math.max(1, Math.ceil(visible.length / PAGE_SIZE));
      const current = Math.min(Math.max(page, 0), pageCount - 1);
      controls.push({
        kind: "correspondence_table",
        total: visible.length,
        page: current,
        pageCount,
        rows: visible.slice(current * PAGE_SIZE, (current + 1) * PAGE_SIZE),
      });
    }
    // unknown kinds in the embedded config are skipped
  }
  return { totalRows: rows.length, visibleCount: visible.length, controls };
}
