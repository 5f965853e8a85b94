"use strict";
(() => {
  // src/csv.ts
  var COMMA = 44;
  var QUOTE = 34;
  var LF = 10;
  var CR = 13;
  function parseCsv(text) {
    const rows = [];
    let record = [];
    let i = 0;
    const n = text.length;
    while (i < n) {
      let field;
      if (text.charCodeAt(i) === QUOTE) {
        i++;
        let value = "";
        for (; ; ) {
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
          const c2 = text.charCodeAt(j);
          if (c2 === COMMA || c2 === LF || c2 === CR) break;
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
    return rows.filter((r) => r.length > 1 || r[0] !== "");
  }
  var CSV_COLUMNS = [
    "track",
    "testcase",
    "matcher",
    "source",
    "target",
    "relation",
    "confidence",
    "outcome",
    "left_type",
    "right_type",
    "residual"
  ];
  var OUTCOMES = /* @__PURE__ */ new Set(["TP", "FP", "FN"]);
  function decodeRows(text) {
    const records = parseCsv(text);
    if (records.length === 0) return [];
    const header = records[0];
    if (header.join(",") !== CSV_COLUMNS.join(",")) {
      throw new Error(`unexpected dataset header: ${header.join(",")}`);
    }
    const rows = new Array(records.length - 1);
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
        outcome: r[7],
        leftType: r[8],
        rightType: r[9],
        residual: r[10] === "true"
      };
    }
    return rows;
  }

  // src/filters.ts
  var DIMENSIONS = [
    "track",
    "testcase",
    "matcher",
    "relation",
    "outcome",
    "leftType",
    "rightType",
    "residual",
    "perTestCase",
    "perMatcher"
  ];
  function caseLabel(row) {
    return `${row.track} / ${row.testcase}`;
  }
  var ACCESSORS = {
    track: (r) => r.track,
    testcase: caseLabel,
    matcher: (r) => r.matcher,
    relation: (r) => r.relation,
    outcome: (r) => r.outcome,
    leftType: (r) => r.leftType,
    rightType: (r) => r.rightType,
    residual: (r) => r.residual ? "residual" : "trivial",
    perTestCase: caseLabel,
    perMatcher: (r) => r.matcher
  };
  var CONFIDENCE_BIT = DIMENSIONS.length;
  var ALL_PASS = (1 << DIMENSIONS.length + 1) - 1;
  var FilterState = class {
    constructor() {
      this.selected = /* @__PURE__ */ new Map();
      this.brush = null;
    }
    toggle(dim, value) {
      let set = this.selected.get(dim);
      if (!set) {
        set = /* @__PURE__ */ new Set();
        this.selected.set(dim, set);
      }
      if (set.has(value)) set.delete(value);
      else set.add(value);
      if (set.size === 0) this.selected.delete(dim);
    }
    isSelected(dim, value) {
      const set = this.selected.get(dim);
      return set !== void 0 && set.has(value);
    }
    hasFilter(dim) {
      return this.selected.has(dim);
    }
    isEmpty() {
      return this.selected.size === 0 && this.brush === null;
    }
    clear() {
      this.selected.clear();
      this.brush = null;
    }
  };
  function computeMasks(rows, state) {
    const masks = new Uint16Array(rows.length);
    const active = [];
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
  function dimensionBit(dim) {
    return DIMENSIONS.indexOf(dim);
  }
  function confidenceBit() {
    return CONFIDENCE_BIT;
  }
  function passesAllBut(mask, exceptBit) {
    return (mask | 1 << exceptBit) === ALL_PASS;
  }
  function passesAll(mask) {
    return mask === ALL_PASS;
  }

  // src/render.ts
  var CONTROL_TITLES = {
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
    correspondence_table: "Correspondences"
  };
  var WIDE_CONTROLS = /* @__PURE__ */ new Set([
    "per_testcase_stack",
    "per_matcher_stack",
    "metric_table",
    "correspondence_table"
  ]);
  function el(doc, tag, className = "", text = "") {
    const node = doc.createElement(tag);
    if (className) node.className = className;
    if (text) node.textContent = text;
    return node;
  }
  function prettyCategory(control, value) {
    if (control.dimension === "leftType" || control.dimension === "rightType") {
      return value.toLowerCase().replace(/_/g, " ");
    }
    return value;
  }
  function metric(value) {
    return value.toFixed(4);
  }
  function renderDashboard(root, title, view, handlers) {
    var _a;
    const doc = root.ownerDocument;
    root.textContent = "";
    const header = el(doc, "div", "ad-header");
    header.appendChild(el(doc, "h1", "", title));
    header.appendChild(el(
      doc,
      "span",
      "ad-rowcount",
      `${view.visibleCount.toLocaleString("en-US")} of ${view.totalRows.toLocaleString("en-US")} correspondences visible`
    ));
    root.appendChild(header);
    const toolbar = el(doc, "div", "ad-toolbar");
    const reset = el(doc, "button", "ad-reset", "Clear all filters");
    reset.addEventListener("click", () => handlers.onReset());
    toolbar.appendChild(reset);
    toolbar.appendChild(el(
      doc,
      "span",
      "ad-note",
      "Metrics and counts are computed over the currently visible rows; filtering never reclassifies a correspondence (a thresholded-away true positive does not become a false negative)."
    ));
    root.appendChild(toolbar);
    const grid = el(doc, "div", "ad-controls");
    root.appendChild(grid);
    for (const control of view.controls) {
      const card = el(doc, "div", "ad-card");
      if (WIDE_CONTROLS.has(control.kind)) card.classList.add("ad-wide");
      card.dataset.kind = control.kind;
      grid.appendChild(card);
      const heading = el(
        doc,
        "h3",
        "",
        (_a = CONTROL_TITLES[control.kind]) != null ? _a : control.kind
      );
      card.appendChild(heading);
      switch (control.kind) {
        case "confidence_histogram":
          renderHistogram(card, control, handlers);
          break;
        case "metric_table":
          renderMetricTable(card, control);
          break;
        case "correspondence_table":
          renderCorrespondenceTable(card, control, handlers);
          break;
        default:
          renderCategories(card, control, handlers);
      }
    }
  }
  function renderCategories(card, control, handlers) {
    const doc = card.ownerDocument;
    if (control.filtered) {
      card.querySelector("h3").appendChild(
        el(doc, "span", "ad-filtered-tag", "filtered")
      );
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
      row.appendChild(el(
        doc,
        "div",
        "ad-bar-label",
        prettyCategory(control, category.value)
      ));
      const track = el(doc, "div", "ad-bar-track");
      if (control.stacked) {
        for (const [share, cls] of [
          [category.tp, "ad-tp"],
          [category.fp, "ad-fp"],
          [category.fn, "ad-fn"]
        ]) {
          const fill = el(doc, "div", `ad-bar-fill ${cls}`);
          fill.style.width = `${100 * share / control.maxCount}%`;
          track.appendChild(fill);
        }
      } else {
        const fill = el(doc, "div", "ad-bar-fill");
        fill.style.width = `${100 * category.count / control.maxCount}%`;
        track.appendChild(fill);
      }
      row.appendChild(track);
      row.appendChild(el(
        doc,
        "div",
        "ad-bar-count",
        String(category.count)
      ));
      row.addEventListener("click", () => handlers.onToggle(control, category.value));
      card.appendChild(row);
    }
  }
  function renderHistogram(card, control, handlers) {
    const doc = card.ownerDocument;
    if (control.brush) {
      card.querySelector("h3").appendChild(el(
        doc,
        "span",
        "ad-filtered-tag",
        `[${control.brush[0]}, ${control.brush[1]}]`
      ));
    }
    const hist = el(doc, "div", "ad-hist");
    let dragStart = null;
    control.bins.forEach((bin, index) => {
      const bar = el(doc, "div", "ad-hist-bin");
      bar.style.height = `${Math.max(1, 100 * bin.count / control.maxCount)}%`;
      bar.title = `[${bin.lo.toFixed(2)}, ${bin.hi.toFixed(2)}): ${bin.count}`;
      if (!bin.inBrush) bar.classList.add("ad-out");
      bar.dataset.bin = String(index);
      bar.addEventListener("pointerdown", () => {
        dragStart = index;
      });
      bar.addEventListener("pointerup", () => {
        const start = dragStart === null ? index : dragStart;
        dragStart = null;
        const lo2 = control.bins[Math.min(start, index)].lo;
        const hi2 = control.bins[Math.max(start, index)].hi;
        handlers.onBrush(round2(lo2), round2(hi2));
      });
      hist.appendChild(bar);
    });
    card.appendChild(hist);
    const axis = el(doc, "div", "ad-hist-axis");
    axis.appendChild(el(doc, "span", "", "0"));
    axis.appendChild(el(
      doc,
      "span",
      "",
      control.bins[control.bins.length - 1].hi.toFixed(2)
    ));
    card.appendChild(axis);
    const brushRow = el(doc, "div", "ad-brush");
    brushRow.appendChild(el(doc, "span", "", "interval"));
    const lo = el(doc, "input");
    lo.type = "number";
    lo.step = "0.01";
    lo.value = control.brush ? String(control.brush[0]) : "";
    const hi = lo.cloneNode();
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
  function round2(value) {
    return Math.round(value * 100) / 100;
  }
  function renderMetricTable(card, control) {
    const doc = card.ownerDocument;
    if (control.rows.length === 0) {
      card.appendChild(el(doc, "div", "ad-empty", "no visible rows"));
      return;
    }
    const table = el(doc, "table", "ad-table");
    const head = el(doc, "tr");
    for (const column of [
      "matcher",
      "TP",
      "FP",
      "FN",
      "micro-P",
      "micro-R",
      "micro-F1",
      "macro-P",
      "macro-R",
      "macro-F1"
    ]) {
      head.appendChild(el(
        doc,
        "th",
        column === "matcher" ? "" : "ad-num",
        column
      ));
    }
    table.appendChild(head);
    for (const row of control.rows) {
      const tr = el(doc, "tr");
      tr.appendChild(el(doc, "td", "", row.matcher));
      for (const value of [row.tp, row.fp, row.fn]) {
        tr.appendChild(el(doc, "td", "ad-num", String(value)));
      }
      for (const value of [
        row.micro.precision,
        row.micro.recall,
        row.micro.f1,
        row.macro.precision,
        row.macro.recall,
        row.macro.f1
      ]) {
        tr.appendChild(el(doc, "td", "ad-num", metric(value)));
      }
      table.appendChild(tr);
    }
    card.appendChild(table);
  }
  function renderCorrespondenceTable(card, control, handlers) {
    const doc = card.ownerDocument;
    const table = el(doc, "table", "ad-table");
    const head = el(doc, "tr");
    for (const column of [
      "test case",
      "matcher",
      "source",
      "target",
      "relation",
      "confidence",
      "outcome",
      "residual"
    ]) {
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
      prev,
      next,
      el(
        doc,
        "span",
        "",
        `page ${control.page + 1} of ${control.pageCount} \u2014 ${control.total.toLocaleString("en-US")} rows`
      )
    );
    card.appendChild(pager);
  }
  function correspondenceRow(doc, row) {
    const tr = el(doc, "tr", `ad-row-${row.outcome.toLowerCase()}`);
    tr.appendChild(el(doc, "td", "", `${row.track} / ${row.testcase}`));
    tr.appendChild(el(doc, "td", "", row.matcher));
    tr.appendChild(el(doc, "td", "ad-uri", row.source));
    tr.appendChild(el(doc, "td", "ad-uri", row.target));
    tr.appendChild(el(doc, "td", "", row.relation));
    tr.appendChild(el(doc, "td", "ad-num", row.confidence.toFixed(6).replace(/0+$/, "").replace(/\.$/, ".0")));
    tr.appendChild(el(
      doc,
      "td",
      `ad-outcome-${row.outcome.toLowerCase()}`,
      row.outcome
    ));
    tr.appendChild(el(doc, "td", "", row.residual ? "residual" : "trivial"));
    return tr;
  }

  // src/metrics.ts
  function metricSet(tp, fp, fn) {
    const precision = tp + fp > 0 ? tp / (tp + fp) : fn === 0 ? 1 : 0;
    const recall = tp + fn > 0 ? tp / (tp + fn) : fp === 0 ? 1 : 0;
    const f1 = precision + recall === 0 ? 0 : 2 * precision * recall / (precision + recall);
    return { precision, recall, f1 };
  }
  function tallyRow(tally, row) {
    if (row.outcome === "TP") tally.tp++;
    else if (row.outcome === "FP") tally.fp++;
    else tally.fn++;
  }
  function computeMetrics(visible) {
    const byMatcher = /* @__PURE__ */ new Map();
    const byCase = /* @__PURE__ */ new Map();
    for (const row of visible) {
      let total = byMatcher.get(row.matcher);
      if (!total) {
        total = { tp: 0, fp: 0, fn: 0 };
        byMatcher.set(row.matcher, total);
      }
      tallyRow(total, row);
      let cases = byCase.get(row.matcher);
      if (!cases) {
        cases = /* @__PURE__ */ new Map();
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
    const result = [];
    for (const matcher of [...byMatcher.keys()].sort()) {
      const total = byMatcher.get(matcher);
      const perCase = [...byCase.get(matcher).values()].map(
        (t) => metricSet(t.tp, t.fp, t.fn)
      );
      const precision = perCase.reduce((acc, m) => acc + m.precision, 0) / perCase.length;
      const recall = perCase.reduce((acc, m) => acc + m.recall, 0) / perCase.length;
      const f1 = precision + recall === 0 ? 0 : 2 * precision * recall / (precision + recall);
      result.push({
        matcher,
        ...total,
        micro: metricSet(total.tp, total.fp, total.fn),
        macro: { precision, recall, f1 }
      });
    }
    return result;
  }

  // src/types.ts
  var OUTCOME_ORDER = ["TP", "FP", "FN"];
  var TYPE_ORDER = [
    "CLASS",
    "OBJECT_PROPERTY",
    "DATATYPE_PROPERTY",
    "ANNOTATION_PROPERTY",
    "RDF_PROPERTY",
    "INSTANCE",
    "UNKNOWN"
  ];

  // src/view.ts
  var PAGE_SIZE = 15;
  var CONTROL_DIMENSIONS = {
    track_selector: "track",
    testcase_selector: "testcase",
    relation_chart: "relation",
    matcher_chart: "matcher",
    outcome_chart: "outcome",
    left_type_chart: "leftType",
    right_type_chart: "rightType",
    residual_chart: "residual",
    per_testcase_stack: "perTestCase",
    per_matcher_stack: "perMatcher"
  };
  var STACKED_CONTROLS = /* @__PURE__ */ new Set(["per_testcase_stack", "per_matcher_stack"]);
  var Universes = class {
    constructor(rows, binWidth) {
      this.categories = /* @__PURE__ */ new Map();
      for (const dim of Object.values(CONTROL_DIMENSIONS)) {
        if (this.categories.has(dim)) continue;
        const seen = /* @__PURE__ */ new Set();
        const accessor = ACCESSORS[dim];
        for (const row of rows) seen.add(accessor(row));
        this.categories.set(dim, sortCategories(dim, [...seen]));
      }
      this.binWidth = binWidth;
      let maxConfidence = 1;
      for (const row of rows) {
        if (row.confidence > maxConfidence) maxConfidence = row.confidence;
      }
      this.binCount = Math.max(1, Math.ceil((maxConfidence + binWidth) / binWidth));
    }
  };
  function sortCategories(dim, values) {
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
  function categoryControl(kind, rows, masks, state, universes) {
    var _a;
    const dimension = CONTROL_DIMENSIONS[kind];
    const accessor = ACCESSORS[dimension];
    const bit = dimensionBit(dimension);
    const counts = /* @__PURE__ */ new Map();
    for (const value of (_a = universes.categories.get(dimension)) != null ? _a : []) {
      counts.set(value, {
        value,
        count: 0,
        tp: 0,
        fp: 0,
        fn: 0,
        selected: state.isSelected(dimension, value)
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
      maxCount
    };
  }
  function histogramControl(rows, masks, state, universes) {
    const width = universes.binWidth;
    const counts = new Array(universes.binCount).fill(0);
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
        inBrush: brush === null || hi > brush[0] && lo <= brush[1]
      };
    });
    return {
      kind: "confidence_histogram",
      bins,
      brush,
      maxCount: Math.max(1, ...counts)
    };
  }
  function visibleRows(rows, masks) {
    const out = [];
    for (let i = 0; i < rows.length; i++) {
      if (passesAll(masks[i])) out.push(rows[i]);
    }
    return out;
  }
  function computeView(rows, config, state, universes, page = 0) {
    const masks = computeMasks(rows, state);
    const visible = visibleRows(rows, masks);
    const controls = [];
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
          rows: visible.slice(current * PAGE_SIZE, (current + 1) * PAGE_SIZE)
        });
      }
    }
    return { totalRows: rows.length, visibleCount: visible.length, controls };
  }

  // src/controller.ts
  var Dashboard = class {
    constructor(root, config, rows) {
      this.root = root;
      this.config = config;
      this.rows = rows;
      this.state = new FilterState();
      this.page = 0;
      this.universes = new Universes(rows, config.confidenceBinWidth || 0.05);
    }
    update() {
      const view = computeView(
        this.rows,
        this.config,
        this.state,
        this.universes,
        this.page
      );
      this.page = pageOf(view);
      renderDashboard(this.root, this.config.title, view, this.handlers());
      return view;
    }
    toggle(dimension, value) {
      this.state.toggle(dimension, value);
      this.page = 0;
      return this.update();
    }
    setBrush(lo, hi) {
      this.state.brush = [lo, hi];
      this.page = 0;
      return this.update();
    }
    clearBrush() {
      this.state.brush = null;
      this.page = 0;
      return this.update();
    }
    reset() {
      this.state.clear();
      this.page = 0;
      return this.update();
    }
    turnPage(delta) {
      this.page += delta;
      return this.update();
    }
    handlers() {
      return {
        onToggle: (control, value) => this.toggle(control.dimension, value),
        onBrush: (lo, hi) => this.setBrush(lo, hi),
        onClearBrush: () => this.clearBrush(),
        onReset: () => this.reset(),
        onPage: (delta) => this.turnPage(delta)
      };
    }
  };
  function pageOf(view) {
    for (const control of view.controls) {
      if (control.kind === "correspondence_table") {
        return control.page;
      }
    }
    return 0;
  }
  function embeddedJson(doc, id) {
    const node = doc.getElementById(id);
    if (!node || !node.textContent) {
      throw new Error(`embedded block #${id} is missing`);
    }
    return JSON.parse(node.textContent);
  }
  function boot(doc) {
    const root = doc.getElementById("app");
    if (!root) return null;
    try {
      const config = embeddedJson(doc, "dashboard-config");
      const data = embeddedJson(doc, "dashboard-data");
      const dashboard = new Dashboard(
        root,
        config,
        decodeRows(data.csv)
      );
      dashboard.update();
      return dashboard;
    } catch (error) {
      const banner = doc.createElement("div");
      banner.className = "ad-error-banner";
      banner.textContent = `Failed to load the embedded dashboard data: ${String(error)}`;
      root.appendChild(banner);
      return null;
    }
  }

  // src/main.ts
  boot(document);
})();
