import { Outcome, Row } from "./types";

const COMMA = 44;
const QUOTE = 34;
const LF = 10;
const CR = 13;

/**
 * RFC-4180-style CSV parser tuned for big embedded datasets: unquoted
 * fields take a scan-ahead fast path, quoted fields use indexOf hops.
 */
export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let record: string[] = [];
  let i = 0;
  const n = text.length;
  while (i < n) {
    let field: string;
    if (text.charCodeAt(i) === QUOTE) {
      i++;
      let value = "";
      for (;;) {
        const q = text.indexOf('"', i);
        if (q < 0) {
          throw new Error("unterminated quoted CSV field");
        }
        if (text.charCodeAt(q + 1) === QUOTE) {
          value += text.slice(i, q + 1);
          i = q + 2;
        } else {
          value += text.slice(i, q);
          i = q + 1;
          break;
        }
      }
      field = value;
    } else {
      let j = i;
      while (j < n) {
        const c = text.charCodeAt(j);
        if (c === COMMA || c === LF || c === CR) break;
        j++;
      }
      field = text.slice(i, j);
      i = j;
    }
    const c = i < n ? text.charCodeAt(i) : -1;
    if (c === COMMA) {
      record.push(field);
      i++;
    } else if (c === LF || c === CR || c === -1) {
      record.push(field);
      rows.push(record);
      record = [];
      if (c === CR && text.charCodeAt(i + 1) === LF) i += 2;
      else if (c !== -1) i++;
    } else {
      throw new Error(`malformed CSV near offset ${i}`);
    }
  }
  // a trailing newline leaves no dangling record; blank lines do
  return rows.filter((r) => r.length > 1 || r[0] !== "");
}

export const CSV_COLUMNS = [
  "track", "testcase", "matcher", "source", "target", "relation",
  "confidence", "outcome", "left_type", "right_type", "residual",
];

const OUTCOMES = new Set(["TP", "FP", "FN"]);

/** Decode the embedded dataset CSV into typed rows; throws on bad shape. */
export function decodeRows(text: string): Row[] {
  const records = parseCsv(text);
  if (records.length === 0) return [];
  const header = records[0];
  if (header.join(",") !== CSV_COLUMNS.join(",")) {
    throw new Error(`unexpected dataset header: ${header.join(",")}`);
  }
  const rows: Row[] = new Array(records.length - 1);
  for (let i = 1; i < records.length; i++) {
    const r = records[i];
    if (r.length !== CSV_COLUMNS.length) {
      throw new Error(`row ${i} has ${r.length} fields`);
    }
    const confidence = Number(r[6]);
    if (!Number.isFinite(confidence)) {
      throw new Error(`row ${i} has bad confidence ${r[6]}`);
    }
    if (!OUTCOMES.has(r[7])) {
      throw new Error(`row ${i} has unknown outcome ${r[7]}`);
    }
    rows[i - 1] = {
      track: r[0],
      testcase: r[1],
      matcher: r[2],
      source: r[3],
      target: r[4],
      relation: r[5],
      confidence,
      outcome: r[7] as Outcome,
      leftType: r[8],
      rightType: r[9],
      residual: r[10] === "true",
    };
  }
  return rows;
}
