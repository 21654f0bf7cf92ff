// The labeling view must not leak the hierarchy analysis: no element
// rendered before submission may contain specificity verdict text, case
// names, hop counts, or hierarchy vocabulary.

import { describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { renderLabeling } from "../src/views/labeling.js";

const SPECIFICITY_TOKENS =
  /first_more_specific|second_more_specific|same_level|more specific|more general|specificity|hypernym|hyponym|direct_relation|common_hypernym|verdict|hops/i;

function jsonResponse(doc: unknown): Response {
  return new Response(JSON.stringify(doc), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}

describe("labeling view blinding", () => {
  it("renders no specificity evidence before submission", () => {
    const fetchSpy = vi.fn(async () =>
      jsonResponse({ schemaVersion: 1, seq: 1, record: {} }),
    );
    const api = new ApiClient("http://service.invalid", fetchSpy);
    const container = document.createElement("div");
    const handle = renderLabeling(container, {
      api,
      pair: {
        recordId: "r01",
        sentence1: "The reviewer ripped the proposal without mercy.",
        sentence2: "The reviewer criticized the proposal without mercy.",
      },
      annotator: "blind-check",
      presentation: "forward",
    });

    expect(container.innerHTML).not.toMatch(SPECIFICITY_TOKENS);
    expect(container.querySelectorAll("[data-specificity]").length).toBe(0);
    // nothing was fetched during rendering: no channel for evidence to leak
    expect(fetchSpy).not.toHaveBeenCalled();
    handle.dispose();
  });

  it("maps sides to record-relative labels under swapped presentation", async () => {
    const posts: { url: string; body: any }[] = [];
    const fetchSpy = vi.fn(async (url: string, init?: RequestInit) => {
      posts.push({ url, body: JSON.parse(String(init?.body)) });
      return jsonResponse({ schemaVersion: 1, seq: 1, record: {} });
    });
    const api = new ApiClient("http://service.invalid", fetchSpy);
    const container = document.createElement("div");
    document.body.append(container);
    const handle = renderLabeling(container, {
      api,
      pair: { recordId: "r01", sentence1: "First sentence.", sentence2: "Second sentence." },
      annotator: "blind-check",
      presentation: "swapped",
    });

    const left = container.querySelector("[data-role=left-sentence]")!;
    expect(left.textContent).toBe("Second sentence.");
    (container.querySelector("[data-role=choose-left]") as HTMLButtonElement).click();
    await vi.waitFor(() => expect(posts.length).toBe(1));
    // displayed-left is the record's SECOND sentence under swapped order
    expect(posts[0].body.label).toBe("second");
    expect(posts[0].body.presentation).toBe("swapped");
    handle.dispose();
    container.remove();
  });

  it("keyboard shortcuts 1/2/3 submit left/right/same", async () => {
    const posts: any[] = [];
    const fetchSpy = vi.fn(async (_url: string, init?: RequestInit) => {
      posts.push(JSON.parse(String(init?.body)));
      return jsonResponse({ schemaVersion: 1, seq: posts.length, record: {} });
    });
    const api = new ApiClient("http://service.invalid", fetchSpy);
    const container = document.createElement("div");
    document.body.append(container);
    const handle = renderLabeling(container, {
      api,
      pair: { recordId: "r02", sentence1: "One.", sentence2: "Two." },
      annotator: "kb",
      presentation: "forward",
    });
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "3" }));
    await vi.waitFor(() => expect(posts.length).toBe(1));
    expect(posts[0].label).toBe("same");

    // double submission is guarded client-side
    document.dispatchEvent(new KeyboardEvent("keydown", { key: "1" }));
    await new Promise((resolve) => setTimeout(resolve, 20));
    expect(posts.length).toBe(1);
    handle.dispose();
    container.remove();
  });
});
