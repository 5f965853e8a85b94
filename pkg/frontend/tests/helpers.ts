import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { decodeRows } from "../src/csv";
import { DashboardConfig, Outcome, Row } from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));

export function fixturePath(name: string): string {
  return join(here, "fixtures", name);
}

export interface EmbeddedPage {
  config: DashboardConfig;
  csv: string;
  rows: Row[];
}

/** Pull the two embedded JSON blocks out of a rendered dashboard file. */
export function loadEmbeddedPage(name = "minicampaign.html"): EmbeddedPage {
  const html = readFileSync(fixturePath(name), "utf-8");
  const blocks = new Map<string, string>();
  const pattern =
    /<script id="dashboard-(config|data)" type="application\/json">(.*?)<\/script>/gs;
  for (const match of html.matchAll(pattern)) {
    blocks.set(match[1], match[2]);
  }
  const config = JSON.parse(blocks.get("config")!) as DashboardConfig;
  const csv = (JSON.parse(blocks.get("data")!) as { csv: string }).csv;
  return { config, csv, rows: decodeRows(csv) };
}

export interface ReportRow {
  matcher: string;
  track: string;
  testcase: string;
  tp: number;
  fp: number;
  fn: number;
  micro: [number, number, number];
  macro: [number, number, number] | null;
}

/** The primary CLI's metric report, the oracle for UI metric agreement. */
export function loadReport(name = "minicampaign_report.csv"): ReportRow[] {
  const lines = readFileSync(fixturePath(name), "utf-8").trim().split("\n");
  return lines.slice(1).map((line) => {
    const f = line.split(",");
    return {
      matcher: f[0],
      track: f[1],
      testcase: f[2],
      tp: Number(f[3]),
      fp: Number(f[4]),
      fn: Number(f[5]),
      micro: [Number(f[6]), Number(f[7]), Number(f[8])],
      macro: f[9] === "" ? null : [Number(f[9]), Number(f[10]), Number(f[11])],
    };
  });
}

export function syntheticRows(n: number): Row[] {
  const outcomes: Outcome[] = ["TP", "FP", "FN"];
  const types = ["CLASS", "OBJECT_PROPERTY", "DATATYPE_PROPERTY",
                 "ANNOTATION_PROPERTY", "RDF_PROPERTY", "INSTANCE", "UNKNOWN"];
  const rows: Row[] = new Array(n);
  let seed = 42;
  const random = () => {
    // deterministic LCG so latency runs are reproducible
    seed = (seed * 1103515245 + 12345) & 0x7fffffff;
    return seed / 0x7fffffff;
  };
  for (let i = 0; i < n; i++) {
    const outcome = outcomes[i % 3];
    rows[i] = {
      track: `track${i % 3}`,
      testcase: `tc${i % 40}`,
      matcher: `matcher${i % 12}`,
      source: `http://left.example.org/kg/resource/entity_${i}`,
      target: `http://right.example.org/kg/resource/entity_${i}`,
      relation: "=",
      confidence: Math.round(random() * 1e6) / 1e6,
      outcome,
      leftType: types[i % types.length],
      rightType: types[(i + 3) % types.length],
      residual: outcome !== "FP" && i % 5 === 0,
    };
  }
  return rows;
}

export function mountPoint(): HTMLElement {
  document.body.innerHTML = "";
  const root = document.createElement("div");
  root.id = "app";
  document.body.appendChild(root);
  return root;
}
