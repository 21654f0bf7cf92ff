// Synset disambiguation: list candidate senses of the target term with
// glosses and examples, let the annotator pick the best-suiting one, and
// post the choice. The hierarchy panel then shows the chosen synset's
// paths to the roots and its position relative to the counterpart term.

import type { ApiClient } from "../api.js";
import { senseKeyLemma, senseKeyPos } from "../types.js";
import type { RecordView, SynsetView } from "../types.js";

export interface DisambiguationDeps {
  api: ApiClient;
  record: RecordView;
  slot: "first" | "second";
  onChosen?: (record: RecordView) => void;
}

function candidateItem(
  synset: SynsetView,
  index: number,
  choose: (key: string) => void,
): HTMLLIElement {
  const item = document.createElement("li");
  const button = document.createElement("button");
  button.type = "button";
  button.dataset.role = "candidate";
  button.dataset.key = synset.key;
  button.textContent = `${index + 1}. ${synset.key} [${synset.lemmas.join(", ")}]`;
  button.addEventListener("click", () => choose(synset.key));
  const gloss = document.createElement("p");
  gloss.className = "gloss";
  gloss.textContent = synset.gloss + (synset.examples.length ? ` — "${synset.examples[0]}"` : "");
  item.append(button, gloss);
  return item;
}

export async function renderDisambiguation(
  container: HTMLElement,
  deps: DisambiguationDeps,
): Promise<void> {
  const { api, record, slot } = deps;
  const term = slot === "first" ? record.term1 : record.term2;
  const sentence = slot === "first" ? record.sentence1 : record.sentence2;
  const counterpart = slot === "first" ? record.term2 : record.term1;

  container.replaceChildren();
  const heading = document.createElement("h2");
  heading.textContent = `Choose the sense of "${senseKeyLemma(term)}"`;
  const context = document.createElement("blockquote");
  context.textContent = sentence;
  const list = document.createElement("ul");
  list.dataset.role = "candidates";
  const hierarchy = document.createElement("section");
  hierarchy.dataset.role = "hierarchy";
  const status = document.createElement("p");
  status.dataset.role = "status";
  container.append(heading, context, list, hierarchy, status);

  const choose = async (key: string) => {
    try {
      const result = await api.chooseSynset(record.recordId, slot, key);
      status.textContent = `chose ${key}`;
      await showHierarchy(key);
      deps.onChosen?.(result.record);
    } catch (error) {
      status.textContent = `choice failed, try again: ${String(error)}`;
    }
  };

  const showHierarchy = async (key: string) => {
    hierarchy.replaceChildren();
    const title = document.createElement("h3");
    title.textContent = `Position of ${key}`;
    hierarchy.append(title);
    const paths = await api.paths(key);
    for (const path of paths) {
      const line = document.createElement("p");
      line.className = "path";
      line.textContent = path.join(" → ");
      hierarchy.append(line);
    }
    try {
      const relation = await api.specificity(key, counterpart);
      const line = document.createElement("p");
      line.dataset.role = "relation";
      line.textContent = `vs ${counterpart}: ${relation.verdict} (${relation.case})`;
      hierarchy.append(line);
    } catch {
      // counterpart may not resolve yet; the panel simply omits the relation
    }
  };

  let candidates: SynsetView[] = [];
  try {
    candidates = await api.synsets(senseKeyLemma(term), senseKeyPos(term));
  } catch (error) {
    status.textContent = `lookup failed: ${String(error)}`;
  }

  if (candidates.length === 0) {
    // unknown lemma: offer manual sense-key entry
    const form = document.createElement("form");
    form.dataset.role = "manual-entry";
    const input = document.createElement("input");
    input.name = "key";
    input.placeholder = "lemma.pos.NN";
    const submit = document.createElement("button");
    submit.type = "submit";
    submit.textContent = "Use this sense key";
    form.append(input, submit);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      if (input.value.trim()) {
        void choose(input.value.trim());
      }
    });
    container.append(form);
    status.textContent = "no candidates found; enter a sense key manually";
    return;
  }

  candidates.forEach((synset, index) => {
    list.append(candidateItem(synset, index, (key) => void choose(key)));
  });
}
