// Paraphrase builder. Sister mode lists same-level senses of the first
// term (same-specificity literal paraphrase); hyponym mode lists direct
// hyponyms of the second, literal term (more specific literal paraphrase).
// Choosing a candidate pre-fills the sentence with the target word swapped
// for the candidate's first lemma, ready for hand editing; submitting posts
// the paraphrase event and the new pair enters the labeling queue.

import type { ApiClient } from "../api.js";
import { prefillSentence } from "../state.js";
import { senseKeyLemma } from "../types.js";
import type { ParaphraseMode, RecordView, SynsetView } from "../types.js";

export interface ParaphraseDeps {
  api: ApiClient;
  record: RecordView;
  mode: ParaphraseMode;
  onCreated?: (record: RecordView) => void;
}

export async function renderParaphraseBuilder(
  container: HTMLElement,
  deps: ParaphraseDeps,
): Promise<void> {
  const { api, record, mode } = deps;
  const sourceTerm = mode === "sister" ? record.term1 : record.term2;
  const sourceSentence = mode === "sister" ? record.sentence1 : record.sentence2;

  container.replaceChildren();
  const heading = document.createElement("h2");
  heading.textContent =
    mode === "sister"
      ? `Same-specificity paraphrase of "${senseKeyLemma(sourceTerm)}" (${sourceTerm})`
      : `More specific paraphrase of "${senseKeyLemma(sourceTerm)}" (${sourceTerm})`;
  const context = document.createElement("blockquote");
  context.textContent = sourceSentence;
  const list = document.createElement("ul");
  list.dataset.role = "paraphrase-candidates";
  const editor = document.createElement("form");
  editor.dataset.role = "editor";
  editor.hidden = true;
  const sentenceInput = document.createElement("textarea");
  sentenceInput.name = "sentence";
  sentenceInput.rows = 3;
  const chosenNote = document.createElement("p");
  chosenNote.dataset.role = "chosen";
  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Create pair";
  const status = document.createElement("p");
  status.dataset.role = "status";
  editor.append(chosenNote, sentenceInput, submit);
  container.append(heading, context, list, editor, status);

  let chosenKey: string | null = null;

  editor.addEventListener("submit", (event) => {
    event.preventDefault();
    const sentence = sentenceInput.value.trim();
    if (!chosenKey) {
      status.textContent = "pick a candidate first";
      return;
    }
    if (!sentence) {
      status.textContent = "the paraphrased sentence must not be empty";
      return;
    }
    void api
      .createParaphrase(record.recordId, mode, chosenKey, sentence)
      .then((result) => {
        status.textContent = `created ${result.record.recordId}`;
        deps.onCreated?.(result.record);
      })
      .catch((error) => {
        status.textContent = `creation failed: ${String(error)}`;
      });
  });

  let candidates: SynsetView[] = [];
  try {
    candidates =
      mode === "sister" ? await api.sisters(sourceTerm) : await api.hyponyms(sourceTerm);
  } catch (error) {
    status.textContent = `candidate lookup failed: ${String(error)}`;
  }

  if (candidates.length === 0) {
    // nothing at this level / no hyponyms: the mode cannot apply to this record
    const note = document.createElement("p");
    note.dataset.role = "mode-disabled";
    note.textContent =
      mode === "sister"
        ? "No sense with the same specificity exists for this term; this pair cannot be built."
        : "This sense has no more specific senses below it; this pair cannot be built.";
    container.append(note);
    return;
  }

  for (const synset of candidates) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.dataset.role = "paraphrase-candidate";
    button.dataset.key = synset.key;
    button.textContent = `${synset.key} [${synset.lemmas.join(", ")}]`;
    const gloss = document.createElement("p");
    gloss.className = "gloss";
    gloss.textContent = synset.gloss;
    button.addEventListener("click", () => {
      chosenKey = synset.key;
      chosenNote.textContent = `paraphrasing with ${synset.key}`;
      sentenceInput.value = prefillSentence(
        sourceSentence,
        senseKeyLemma(sourceTerm),
        synset.lemmas[0],
      );
      editor.hidden = false;
    });
    item.append(button, gloss);
    list.append(item);
  }
}
