// Progress dashboard. Every number shown here comes straight from the
// service report (counts and pre-rendered percentage strings); the
// workbench never computes statistics itself, so the dashboard always
// equals the CLI report for the same store.

import type { ApiClient } from "../api.js";
import type { ReportView } from "../types.js";

const KIND_TITLES: Record<string, string> = {
  metaphor_vs_literal: "metaphor vs literal",
  metaphor_vs_same_specificity_literal: "metaphor vs same-specificity literal",
  literal_vs_more_specific_literal: "literal vs more-specific literal",
};

const ROW_TITLES: Record<string, string> = {
  first: "first more emotional",
  second: "second more emotional",
  same: "similarly emotional",
};

function alphaText(entry: ReportView["emotionByKind"][string]["alpha"]): string {
  if (entry.status === "ok" && entry.value !== null) {
    return entry.value.toFixed(4);
  }
  return entry.status === "undefined" ? "undefined" : "n/a";
}

function section(title: string): [HTMLElement, HTMLElement] {
  const wrapper = document.createElement("section");
  const heading = document.createElement("h3");
  heading.textContent = title;
  wrapper.append(heading);
  return [wrapper, heading];
}

export function renderReport(container: HTMLElement, report: ReportView): void {
  container.replaceChildren();
  const heading = document.createElement("h2");
  heading.textContent = "Progress dashboard";
  const release = document.createElement("p");
  release.textContent = `release: ${report.release}`;
  const totals = document.createElement("p");
  totals.dataset.role = "totals";
  totals.textContent =
    `${report.counts.total} records | specificity-tested ${report.counts.specificityTested}` +
    ` | valid ${report.counts.valid} | invalid ${report.counts.invalid}`;
  container.append(heading, release, totals);

  const [specificity] = section("Specificity of valid metaphor-literal pairs");
  for (const [column, count] of Object.entries(report.specificityDistribution)) {
    const line = document.createElement("p");
    line.textContent = `${column}: ${count} (${report.presentation.specificityDistributionPct[column]}%)`;
    specificity.append(line);
  }
  container.append(specificity);

  for (const [kind, entry] of Object.entries(report.emotionByKind)) {
    const [wrapper] = section(`Emotion: ${KIND_TITLES[kind] ?? kind}`);
    wrapper.dataset.role = `kind-${kind}`;
    const meta = document.createElement("p");
    meta.textContent = `gold-labeled pairs: ${entry.n} | alpha: ${alphaText(entry.alpha)}`;
    wrapper.append(meta);
    for (const row of ["first", "second", "same"]) {
      const line = document.createElement("p");
      const pct = report.presentation.emotionByKindPct[kind]?.[row] ?? "0.0";
      line.textContent = `${ROW_TITLES[row]}: ${entry.counts[row]} (${pct}%)`;
      wrapper.append(line);
    }
    container.append(wrapper);
  }
}

export async function renderDashboard(container: HTMLElement, api: ApiClient): Promise<void> {
  try {
    renderReport(container, await api.report());
    container.querySelector("[data-role=stale]")?.remove();
  } catch {
    // keep the previous numbers on screen, but flag them as stale
    if (!container.querySelector("[data-role=stale]")) {
      const badge = document.createElement("p");
      badge.dataset.role = "stale";
      badge.textContent = "service unreachable; showing stale numbers";
      container.prepend(badge);
    }
  }
}
