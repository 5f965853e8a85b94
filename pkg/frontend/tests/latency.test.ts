import { describe, expect, it } from "vitest";

import { Dashboard } from "../src/controller";
import { loadEmbeddedPage, mountPoint, syntheticRows } from "./helpers";

describe("interaction latency at scale", () => {
  it("one filter change on 200,000 rows re-renders in under 500 ms", () => {
    const { config } = loadEmbeddedPage();
    const rows = syntheticRows(200_000);
    const dashboard = new Dashboard(mountPoint(), config, rows);
    dashboard.update(); // initial load is outside the interaction budget

    const interactions: Array<() => unknown> = [
      () => dashboard.toggle("matcher", "matcher3"),
      () => dashboard.setBrush(0.59, 1.05),
      () => dashboard.toggle("outcome", "FN"),
      () => dashboard.reset(),
    ];
    for (const interact of interactions) {
      const started = performance.now();
      interact();
      const elapsed = performance.now() - started;
      expect(elapsed).toBeLessThan(500);
    }
  });

  it("load + first render of 200,000 rows completes", () => {
    const { config } = loadEmbeddedPage();
    const rows = syntheticRows(200_000);
    const dashboard = new Dashboard(mountPoint(), config, rows);
    const view = dashboard.update();
    expect(view.totalRows).toBe(200_000);
    expect(view.visibleCount).toBe(200_000);
    expect(document.querySelectorAll(".ad-card")).toHaveLength(13);
  });
});
