// Blinded emotion labeling. The view receives only the two sentences --
// never the specificity verdict, hierarchy evidence, or hop counts -- so an
// annotator cannot be primed by the hierarchy analysis. Sides are shown in
// a per-(record, annotator) deterministic order; the permutation is posted
// with the label so first/second always refer to the record's own term
// order regardless of display side. Keys 1/2/3 map to left/right/same.

import type { ApiClient } from "../api.js";
import type { EmotionChoice, LabelingPair, Presentation } from "../types.js";

export interface LabelingDeps {
  api: ApiClient;
  pair: LabelingPair;
  annotator: string;
  presentation: Presentation;
  onLabeled?: (label: EmotionChoice) => void;
}

export interface LabelingHandle {
  dispose(): void;
}

export function renderLabeling(container: HTMLElement, deps: LabelingDeps): LabelingHandle {
  const { api, pair, annotator, presentation } = deps;
  const leftIsFirst = presentation === "forward";

  container.replaceChildren();
  const heading = document.createElement("h2");
  heading.textContent = "Which sentence is more emotional?";
  const sides = document.createElement("div");
  sides.className = "sides";
  const left = document.createElement("blockquote");
  left.dataset.role = "left-sentence";
  left.textContent = leftIsFirst ? pair.sentence1 : pair.sentence2;
  const right = document.createElement("blockquote");
  right.dataset.role = "right-sentence";
  right.textContent = leftIsFirst ? pair.sentence2 : pair.sentence1;
  sides.append(left, right);
  const buttons = document.createElement("div");
  buttons.dataset.role = "choices";
  const status = document.createElement("p");
  status.dataset.role = "status";
  container.append(heading, sides, buttons, status);

  let submitted = false;
  const idempotencyKey = `${pair.recordId}:${annotator}:${Date.now()}`;

  const labelFor = (side: "left" | "right" | "same"): EmotionChoice => {
    if (side === "same") {
      return "same";
    }
    const leftLabel: EmotionChoice = leftIsFirst ? "first" : "second";
    const rightLabel: EmotionChoice = leftIsFirst ? "second" : "first";
    return side === "left" ? leftLabel : rightLabel;
  };

  const submit = (side: "left" | "right" | "same") => {
    if (submitted) {
      return; // double-submit guard; the idempotency key backs this up server-side
    }
    submitted = true;
    const label = labelFor(side);
    void api
      .labelEmotion(pair.recordId, annotator, label, presentation, idempotencyKey)
      .then(() => {
        status.textContent = "label recorded";
        deps.onLabeled?.(label);
      })
      .catch((error) => {
        submitted = false;
        status.textContent = `submit failed, try again: ${String(error)}`;
      });
  };

  const choices: [string, "left" | "right" | "same", string][] = [
    ["1", "left", "Left is more emotional"],
    ["2", "right", "Right is more emotional"],
    ["3", "same", "Similarly emotional"],
  ];
  for (const [shortcut, side, title] of choices) {
    const button = document.createElement("button");
    button.type = "button";
    button.dataset.role = `choose-${side}`;
    button.textContent = `${shortcut}. ${title}`;
    button.addEventListener("click", () => submit(side));
    buttons.append(button);
  }

  const onKey = (event: KeyboardEvent) => {
    if (event.key === "1") submit("left");
    else if (event.key === "2") submit("right");
    else if (event.key === "3") submit("same");
  };
  container.ownerDocument.addEventListener("keydown", onKey);

  return {
    dispose() {
      container.ownerDocument.removeEventListener("keydown", onKey);
    },
  };
}
