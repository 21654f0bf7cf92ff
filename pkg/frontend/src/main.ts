// Workbench shell: a small hash router over the four views. The annotation
// flow per record is disambiguate both terms, optionally build paraphrase
// pairs, then label emotion for the queued pairs; the dashboard refreshes
// after every acknowledged label.

import { ApiClient } from "./api.js";
import { WorkbenchState } from "./state.js";
import { renderDashboard } from "./views/dashboard.js";
import { renderDisambiguation } from "./views/disambiguation.js";
import { renderLabeling } from "./views/labeling.js";
import { renderParaphraseBuilder } from "./views/paraphrase.js";
import type { LabelingHandle } from "./views/labeling.js";

function serviceUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? "http://127.0.0.1:8700";
}

function annotatorName(): string {
  const params = new URLSearchParams(window.location.search);
  const fromQuery = params.get("annotator");
  if (fromQuery) {
    return fromQuery;
  }
  const stored = window.localStorage.getItem("lexispec-annotator");
  if (stored) {
    return stored;
  }
  const entered = window.prompt("Annotator name?") || "anonymous";
  window.localStorage.setItem("lexispec-annotator", entered);
  return entered;
}

export async function bootstrap(root: HTMLElement): Promise<void> {
  const api = new ApiClient(serviceUrl());
  const state = new WorkbenchState(annotatorName());
  state.setRecords(await api.records());

  const nav = document.createElement("nav");
  for (const [hash, title] of [
    ["#/queue", "Label queue"],
    ["#/records", "Records"],
    ["#/dashboard", "Dashboard"],
  ]) {
    const link = document.createElement("a");
    link.href = hash;
    link.textContent = title;
    nav.append(link);
  }
  const outlet = document.createElement("main");
  root.replaceChildren(nav, outlet);

  let labelingHandle: LabelingHandle | null = null;

  const showQueue = async () => {
    labelingHandle?.dispose();
    const record = state.current();
    if (!record) {
      outlet.replaceChildren();
      const done = document.createElement("p");
      done.textContent = "Queue empty: every pair carries your label.";
      outlet.append(done);
      return;
    }
    // blinded projection: the labeling view never sees specificity fields
    labelingHandle = renderLabeling(outlet, {
      api,
      pair: {
        recordId: record.recordId,
        sentence1: record.sentence1,
        sentence2: record.sentence2,
      },
      annotator: state.annotator,
      presentation: state.presentationFor(record.recordId),
      onLabeled: () => {
        state.completed(record.recordId);
        void api.records().then((records) => state.setRecords(records));
        void showQueue();
      },
    });
  };

  const showRecords = async () => {
    labelingHandle?.dispose();
    outlet.replaceChildren();
    const list = document.createElement("ul");
    for (const record of state.records.values()) {
      const item = document.createElement("li");
      const open = document.createElement("a");
      open.href = `#/record/${record.recordId}`;
      open.textContent = `${record.recordId} (${record.kind}): ${record.term1} vs ${record.term2}`;
      item.append(open);
      list.append(item);
    }
    outlet.append(list);
  };

  const showRecord = async (recordId: string) => {
    labelingHandle?.dispose();
    outlet.replaceChildren();
    const record = await api.record(recordId);
    const first = document.createElement("section");
    const second = document.createElement("section");
    const sister = document.createElement("section");
    const hyponym = document.createElement("section");
    outlet.append(first, second, sister, hyponym);
    const refresh = () => void showRecord(recordId);
    await renderDisambiguation(first, { api, record, slot: "first", onChosen: refresh });
    await renderDisambiguation(second, { api, record, slot: "second", onChosen: refresh });
    await renderParaphraseBuilder(sister, { api, record, mode: "sister", onCreated: refresh });
    await renderParaphraseBuilder(hyponym, { api, record, mode: "hyponym", onCreated: refresh });
  };

  const showDashboard = async () => {
    labelingHandle?.dispose();
    await renderDashboard(outlet, api);
  };

  const route = async () => {
    const hash = window.location.hash || "#/queue";
    const recordMatch = /^#\/record\/(.+)$/.exec(hash);
    if (recordMatch) {
      await showRecord(decodeURIComponent(recordMatch[1]));
    } else if (hash === "#/records") {
      await showRecords();
    } else if (hash === "#/dashboard") {
      await showDashboard();
    } else {
      await showQueue();
    }
  };

  window.addEventListener("hashchange", () => void route());
  await route();
}

if (typeof document !== "undefined" && document.getElementById("workbench-root")) {
  void bootstrap(document.getElementById("workbench-root") as HTMLElement);
}
