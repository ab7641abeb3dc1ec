/** Application bootstrap: question picker, canvas editor, Save & Grade. */

import { GraderClient, type QuestionDetail } from "./api.js";
import type { FsmDocument } from "./document.js";
import { Editor } from "./editor.js";
import { renderError, renderFeedback } from "./feedback.js";
import { CanvasModel } from "./model.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const STORAGE_PREFIX = "fsmgrader-drawing:";

function savedDrawing(questionId: string): FsmDocument | null {
  try {
    const raw = localStorage.getItem(STORAGE_PREFIX + questionId);
    return raw ? (JSON.parse(raw) as FsmDocument) : null;
  } catch {
    return null;
  }
}

function storeDrawing(questionId: string, doc: FsmDocument): void {
  try {
    localStorage.setItem(STORAGE_PREFIX + questionId, JSON.stringify(doc));
  } catch {
    // storage full or disabled: drawings simply will not persist
  }
}

export async function start(): Promise<void> {
  const client = new GraderClient(
    new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000",
  );
  const picker = byId<HTMLSelectElement>("question-picker");
  const prompt = byId<HTMLParagraphElement>("prompt");
  const alphabetLine = byId<HTMLParagraphElement>("alphabet");
  const canvas = byId<HTMLCanvasElement>("editor-canvas");
  const gradeButton = byId<HTMLButtonElement>("grade-button");
  const epsilonButton = byId<HTMLButtonElement>("epsilon-button");
  const exportButton = byId<HTMLButtonElement>("export-button");
  const feedback = byId<HTMLDivElement>("feedback");

  let question: QuestionDetail | null = null;
  const editor = new Editor(canvas, new CanvasModel(["0", "1"], "dfa"));

  editor.onChange = () => {
    editor.clearHighlights();
    if (question) storeDrawing(question.question_id, editor.model.serialize());
    gradeButton.textContent = "Save & Grade";
  };

  async function loadQuestion(id: string): Promise<void> {
    question = await client.getQuestion(id);
    const model = new CanvasModel(question.alphabet, question.fsm_type);
    const stored = savedDrawing(id);
    if (stored) model.loadDocument(stored, canvas.width, canvas.height);
    editor.setModel(model);
    prompt.textContent = question.prompt;
    alphabetLine.textContent =
      `Alphabet: {${question.alphabet.join(", ")}}` +
      (question.implicit_dump_state ? " · missing transitions go to a dump state" : "");
    epsilonButton.style.display = question.fsm_type === "nfa" ? "" : "none";
    feedback.textContent = "";
    editor.render();
  }

  async function saveAndGrade(): Promise<void> {
    if (!question) return;
    gradeButton.disabled = true;
    try {
      const submission = editor.model.serialize();
      storeDrawing(question.question_id, submission);
      const result = await client.grade(question.question_id, submission);
      editor.model.dirty = false;
      renderFeedback(result, feedback);
      const refs = result.validation_errors.flatMap((problem) => problem.element_refs);
      editor.setHighlights(editor.model.resolveHighlights(refs));
      gradeButton.textContent =
        result.score === 1 ? "Save & Grade ✓" : "Save & Grade";
    } catch (error) {
      renderError(error instanceof Error ? error.message : String(error), feedback);
    } finally {
      gradeButton.disabled = false;
    }
  }

  gradeButton.addEventListener("click", () => void saveAndGrade());
  epsilonButton.addEventListener("click", () => editor.toggleEpsilonOnSelection());
  exportButton.addEventListener("click", () => {
    const text = JSON.stringify(editor.model.serialize(), null, 2);
    void navigator.clipboard?.writeText(text).catch(() => {});
    console.log(text);
    window.alert("Drawing JSON copied to clipboard (and logged to the console).");
  });
  picker.addEventListener("change", () => void loadQuestion(picker.value));

  try {
    const questions = await client.listQuestions();
    for (const entry of questions) {
      const option = document.createElement("option");
      option.value = entry.question_id;
      option.textContent = entry.question_id;
      picker.appendChild(option);
    }
    if (questions.length > 0) {
      picker.value = questions[0].question_id;
      await loadQuestion(picker.value);
    }
  } catch (error) {
    renderError(
      `cannot reach the grading service (${error instanceof Error ? error.message : error}); ` +
        "start it with: fsmgrader serve --bank questions --cors-origin <this origin>",
      feedback,
    );
  }
}

if (typeof document !== "undefined" && document.getElementById("editor-canvas")) {
  void start();
}
