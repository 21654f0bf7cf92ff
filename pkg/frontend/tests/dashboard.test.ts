import { describe, expect, it } from "vitest";

import { renderReport } from "../src/views/dashboard.js";
import type { ReportView } from "../src/types.js";

function reportWith(alpha: number | null, status: "ok" | "undefined" | "insufficient_data"): ReportView {
  const counts = { first: 0, second: 2, same: 0 };
  return {
    schemaVersion: 1,
    release: "fixture",
    counts: {
      total: 2,
      byKind: { metaphor_vs_literal: 2 },
      specificityTested: 2,
      valid: 2,
      invalid: 0,
      invalidReasons: {},
    },
    specificityDistribution: { first_more_specific: 2, second_more_specific: 0, same_level: 0 },
    caseSplit: { direct_relation: 2, common_hypernym: 0 },
    crossTab: { merged: {}, unmerged: {} },
    conditionalRates: {},
    emotionByKind: {
      metaphor_vs_literal: { n: 2, counts, unadjudicated: 0, alpha: { status, value: alpha } },
    },
    invalidRecords: [],
    presentation: {
      specificityDistributionPct: { first_more_specific: "100.0", second_more_specific: "0.0", same_level: "0.0" },
      caseSplitPct: {},
      crossTabPct: {},
      conditionalRatesPct: {},
      emotionByKindPct: { metaphor_vs_literal: { first: "0.0", second: "100.0", same: "0.0" } },
      emotionDeltasVsLiteral: {},
    },
  };
}

describe("dashboard rendering", () => {
  it("shows a negative alpha verbatim from the report", () => {
    // two annotators disagreeing on both items: the definitional oracle
    // (tests/oracles.py in the backend suite) gives exactly -1/2; the
    // dashboard displays the service-computed value, never recomputes
    const container = document.createElement("div");
    renderReport(container, reportWith(-0.5, "ok"));
    const section = container.querySelector("[data-role=kind-metaphor_vs_literal]")!;
    expect(section.textContent).toContain("alpha: -0.5000");
  });

  it("renders zero-data reports without errors", () => {
    const container = document.createElement("div");
    const report = reportWith(null, "insufficient_data");
    report.counts.total = 0;
    report.emotionByKind["metaphor_vs_literal"].n = 0;
    renderReport(container, report);
    expect(container.textContent).toContain("0 records");
    expect(container.textContent).toContain("alpha: n/a");
  });
});
