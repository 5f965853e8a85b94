import { Row } from "./types";

/**
 * Categorical cross-filter dimensions.  The test-case selector and the two
 * stacks are separate dimensions even though they read the same row fields,
 * so each chart keeps its own totals while filtering the others.
 */
export const DIMENSIONS = [
  "track", "testcase", "matcher", "relation", "outcome",
  "leftType", "rightType", "residual", "perTestCase", "perMatcher",
] as const;

export type Dimension = (typeof DIMENSIONS)[number];

export function caseLabel(row: Row): string {
  return `${row.track} / ${row.testcase}`;
}

export const ACCESSORS: Record<Dimension, (row: Row) => string> = {
  track: (r) => r.track,
  testcase: caseLabel,
  matcher: (r) => r.matcher,
  relation: (r) => r.relation,
  outcome: (r) => r.outcome,
  leftType: (r) => r.leftType,
  rightType: (r) => r.rightType,
  residual: (r) => (r.residual ? "residual" : "trivial"),
  perTestCase: caseLabel,
  perMatcher: (r) => r.matcher,
};

const CONFIDENCE_BIT = DIMENSIONS.length; // the brush has its own mask bit
export const ALL_PASS = (1 << (DIMENSIONS.length + 1)) - 1;

/** Selected categories per dimension plus the confidence brush. */
export class FilterState {
  readonly selected = new Map<Dimension, Set<string>>();
  brush: [number, number] | null = null;

  toggle(dim: Dimension, value: string): void {
    let set = this.selected.get(dim);
    if (!set) {
      set = new Set();
      this.selected.set(dim, set);
    }
    if (set.has(value)) set.delete(value);
    else set.add(value);
    if (set.size === 0) this.selected.delete(dim);
  }

  isSelected(dim: Dimension, value: string): boolean {
    const set = this.selected.get(dim);
    return set !== undefined && set.has(value);
  }

  hasFilter(dim: Dimension): boolean {
    return this.selected.has(dim);
  }

  isEmpty(): boolean {
    return this.selected.size === 0 && this.brush === null;
  }

  clear(): void {
    this.selected.clear();
    this.brush = null;
  }
}

/**
 * One bit per dimension (plus the brush): bit set means the row passes that
 * dimension's filter.  A row is visible iff all bits are set; a chart counts
 * rows where all bits except possibly its own are set.
 */
export function computeMasks(rows: Row[], state: FilterState): Uint16Array {
  const masks = new Uint16Array(rows.length);
  const active: Array<[number, Set<string>, (row: Row) => string]> = [];
  DIMENSIONS.forEach((dim, bit) => {
    const set = state.selected.get(dim);
    if (set && set.size > 0) active.push([bit, set, ACCESSORS[dim]]);
  });
  const brush = state.brush;
  for (let i = 0; i < rows.length; i++) {
    const row = rows[i];
    let mask = ALL_PASS;
    for (const [bit, set, accessor] of active) {
      if (!set.has(accessor(row))) mask &= ~(1 << bit);
    }
    if (brush && (row.confidence < brush[0] || row.confidence > brush[1])) {
      mask &= ~(1 << CONFIDENCE_BIT);
    }
    masks[i] = mask;
  }
  return masks;
}

export function dimensionBit(dim: Dimension): number {
  return DIMENSIONS.indexOf(dim);
}

export function confidenceBit(): number {
  return CONFIDENCE_BIT;
}

/** Does the row pass every filter except (optionally) one dimension's own? */
export function passesAllBut(mask: number, exceptBit: number): boolean {
  return (mask | (1 << exceptBit)) === ALL_PASS;
}

export function passesAll(mask: number): boolean {
  return mask === ALL_PASS;
}
