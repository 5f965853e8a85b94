export type Outcome = "TP" | "FP" | "FN";

/** One decoded dataset row (a classified correspondence). */
export interface Row {
  track: string;
  testcase: string;
  matcher: string;
  source: string;
  target: string;
  relation: string;
  confidence: number;
  outcome: Outcome;
  leftType: string;
  rightType: string;
  residual: boolean;
}

/** Embedded page configuration written by the dashboard generator. */
export interface DashboardConfig {
  title: string;
  controls: string[];
  confidenceBinWidth: number;
}

export interface MetricSet {
  precision: number;
  recall: number;
  f1: number;
}

export const OUTCOME_ORDER: Outcome[] = ["TP", "FP", "FN"];

export const TYPE_ORDER = [
  "CLASS",
  "OBJECT_PROPERTY",
  "DATATYPE_PROPERTY",
  "ANNOTATION_PROPERTY",
  "RDF_PROPERTY",
  "INSTANCE",
  "UNKNOWN",
];
