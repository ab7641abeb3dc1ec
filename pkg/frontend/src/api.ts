/** Typed client for the grading service endpoints. */

import type { FsmDocument, FsmType } from "./document.js";

export interface QuestionSummary {
  question_id: string;
  prompt: string;
}

export interface QuestionDetail {
  question_id: string;
  prompt: string;
  alphabet: string[];
  fsm_type: FsmType;
  implicit_dump_state: boolean;
}

export type Classification = "incorrectly_accepted" | "incorrectly_rejected";

export interface Witness {
  word: string;
  classification: Classification;
}

export interface ValidationErrorOut {
  code: string;
  message: string;
  element_refs: (string | [string, string, string])[];
}

export interface LengthRow {
  length: number;
  mismatched: number;
  reference_count: number;
  ratio: number;
}

export interface PartialCreditOut {
  k: number;
  density_difference: number;
  score: number;
  per_length: LengthRow[];
}

export interface GradeResponse {
  valid: boolean;
  score: number;
  equivalent: boolean;
  density_difference: number | null;
  partial_credit: PartialCreditOut | null;
  witnesses: Witness[];
  accepted_trace: string[] | null;
  validation_errors: ValidationErrorOut[];
}

async function reject(response: Response): Promise<never> {
  const info = await response.json().catch(() => ({}) as Record<string, unknown>);
  const detail = (info as { detail?: string; error?: string }).detail;
  const error = (info as { error?: string }).error;
  throw new Error(detail || error || `HTTP ${response.status}`);
}

export class GraderClient {
  constructor(private readonly baseUrl: string = "") {}

  async listQuestions(): Promise<QuestionSummary[]> {
    const response = await fetch(`${this.baseUrl}/questions`);
    if (!response.ok) await reject(response);
    return (await response.json()) as QuestionSummary[];
  }

  async getQuestion(id: string): Promise<QuestionDetail> {
    const response = await fetch(`${this.baseUrl}/questions/${encodeURIComponent(id)}`);
    if (!response.ok) await reject(response);
    return (await response.json()) as QuestionDetail;
  }

  async grade(id: string, submission: FsmDocument): Promise<GradeResponse> {
    const response = await fetch(`${this.baseUrl}/questions/${encodeURIComponent(id)}/grade`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(submission),
    });
    if (!response.ok) await reject(response);
    return (await response.json()) as GradeResponse;
  }
}
