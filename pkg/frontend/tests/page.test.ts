import { readFileSync } from "node:fs";

import { Browser } from "happy-dom";
import { afterEach, describe, expect, it } from "vitest";

import { fixturePath } from "./helpers";

/**
 * Whole-page integration: load the actual rendered dashboard file (inline
 * bundle included) into a scripted browser page and click around, exactly
 * as a user opening the file from disk would.
 */
describe("rendered dashboard file", () => {
  let browser: Browser;

  afterEach(async () => {
    await browser.close();
  });

  async function openFixture() {
    browser = new Browser({
      settings: {
        enableJavaScriptEvaluation: true,
        suppressInsecureJavaScriptEnvironmentWarning: true,
      },
    });
    const page = browser.newPage();
    page.content = readFileSync(fixturePath("minicampaign.html"), "utf-8");
    await page.waitUntilComplete();
    return page.mainFrame.document;
  }

  it("boots, drills down, and resets from the inline bundle alone", async () => {
    const doc = await openFixture();
    expect(doc.querySelectorAll(".ad-card")).toHaveLength(13);
    expect(doc.querySelector(".ad-rowcount")!.textContent)
      .toContain("19 of 19");

    // unfiltered metric table equals the CLI summary for matcherA
    const cells = [...doc.querySelectorAll("[data-kind=metric_table] td")]
      .slice(0, 10).map((c) => c.textContent);
    expect(cells).toEqual(["matcherA", "5", "1", "3", "0.8333", "0.6250",
                           "0.7143", "0.7500", "0.5667", "0.6456"]);

    const matcherB = [...doc.querySelectorAll(
      "[data-kind=matcher_chart] .ad-bar-row")].find(
      (r) => r.getAttribute("data-value") === "matcherB")!;
    (matcherB as unknown as HTMLElement).click();
    const fn = [...doc.querySelectorAll(
      "[data-kind=outcome_chart] .ad-bar-row")].find(
      (r) => r.getAttribute("data-value") === "FN")!;
    (fn as unknown as HTMLElement).click();

    expect(doc.querySelector(".ad-rowcount")!.textContent)
      .toContain("7 of 19");
    const rows = doc.querySelectorAll(
      "[data-kind=correspondence_table] tr[class^=ad-row-]");
    expect(rows).toHaveLength(7);
    expect([...rows].every((r) => r.className === "ad-row-fn")).toBe(true);

    (doc.querySelector("button.ad-reset") as unknown as HTMLElement).click();
    expect(doc.querySelector(".ad-rowcount")!.textContent)
      .toContain("19 of 19");
  });
});
