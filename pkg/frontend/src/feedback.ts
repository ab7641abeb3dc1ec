/**
 * Feedback panel rendering: score, validation problems, witness words
 * grouped by what the submission got wrong, and the accepting-run trace.
 */

import type { GradeResponse, Witness } from "./api.js";

export function displayWord(word: string): string {
  return word === "" ? "ε" : word;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function witnessGroup(title: string, witnesses: Witness[]): HTMLElement {
  const group = el("div", "feedback-group");
  group.appendChild(el("h3", "", title));
  const list = el("ul", "witness-list");
  for (const witness of witnesses) {
    list.appendChild(el("li", "witness-word", displayWord(witness.word)));
  }
  group.appendChild(list);
  return group;
}

export function renderFeedback(result: GradeResponse, container: HTMLElement): void {
  container.textContent = "";

  const pct = (result.score * 100).toFixed(result.score === 1 || result.score === 0 ? 0 : 1);
  const headline = el("div", `score ${result.score === 1 ? "score-full" : "score-partial"}`);
  headline.textContent = result.equivalent
    ? `Score: ${pct}% — correct, your machine accepts exactly the target language`
    : `Score: ${pct}%`;
  container.appendChild(headline);

  if (!result.valid) {
    const intro = el("p", "", "The drawing breaks these conventions (offending parts are red):");
    container.appendChild(intro);
    const list = el("ul", "validation-list");
    for (const problem of result.validation_errors) {
      list.appendChild(el("li", "validation-error", problem.message));
    }
    container.appendChild(list);
    return;
  }
  if (result.equivalent) return;

  const accepted = result.witnesses.filter((w) => w.classification === "incorrectly_accepted");
  const rejected = result.witnesses.filter((w) => w.classification === "incorrectly_rejected");
  if (accepted.length > 0) {
    container.appendChild(
      witnessGroup("Your machine accepts these, but it should not:", accepted),
    );
  }
  if (rejected.length > 0) {
    container.appendChild(
      witnessGroup("Your machine rejects these, but it should accept them:", rejected),
    );
  }
  if (result.accepted_trace) {
    const trace = el(
      "p",
      "trace",
      `Run on ${displayWord(accepted[0]?.word ?? "")}: ` + result.accepted_trace.join(" → "),
    );
    container.appendChild(trace);
  }
}

export function renderError(message: string, container: HTMLElement): void {
  container.textContent = "";
  container.appendChild(el("div", "score score-error", `Grading failed: ${message}`));
  container.appendChild(el("p", "", "Your drawing is untouched; fix the problem and try again."));
}
