/**
 * Wire format shared with the grading service. A DFA cell maps a symbolto a
 * single target state; NFA cells (and ill-formed DFA drawings with parallel
 * edges) use lists. The empty-string key is an epsilon move.
 */

export type FsmType = "dfa" | "nfa";

export type TransitionTargets = string | string[];

export interface FsmDocument {
  states: string[];
  input_symbols: string[];
  transitions: Record<string, Record<string, TransitionTargets>>;
  initial_state: string | string[] | null;
  final_states: string[];
}

export function targetList(targets: TransitionTargets): string[] {
  return typeof targets === "string" ? [targets] : targets;
}

export function initialList(doc: FsmDocument): string[] {
  if (doc.initial_state === null) return [];
  return typeof doc.initial_state === "string" ? [doc.initial_state] : doc.initial_state;
}

function normalizedTransitions(doc: FsmDocument): Map<string, Map<string, Set<string>>> {
  const out = new Map<string, Map<string, Set<string>>>();
  for (const [state, row] of Object.entries(doc.transitions)) {
    const cells = new Map<string, Set<string>>();
    for (const [symbol, targets] of Object.entries(row)) {
      const set = new Set(targetList(targets));
      if (set.size > 0) cells.set(symbol, set);
    }
    if (cells.size > 0) out.set(state, cells);
  }
  return out;
}

function sameSet(a: Set<string>, b: Set<string>): boolean {
  if (a.size !== b.size) return false;
  for (const item of a) if (!b.has(item)) return false;
  return true;
}

/**
 * Equality up to presentation: same states, alphabet, transition relation,
 * start markers, and accepting set, ignoring entry order and the
 * string-versus-singleton-list shape of cells.
 */
export function semanticallyEqual(a: FsmDocument, b: FsmDocument): boolean {
  if (!sameSet(new Set(a.states), new Set(b.states))) return false;
  if (!sameSet(new Set(a.input_symbols), new Set(b.input_symbols))) return false;
  if (!sameSet(new Set(initialList(a)), new Set(initialList(b)))) return false;
  if (!sameSet(new Set(a.final_states), new Set(b.final_states))) return false;
  const ta = normalizedTransitions(a);
  const tb = normalizedTransitions(b);
  if (ta.size !== tb.size) return false;
  for (const [state, cells] of ta) {
    const other = tb.get(state);
    if (!other || other.size !== cells.size) return false;
    for (const [symbol, targets] of cells) {
      const otherTargets = other.get(symbol);
      if (!otherTargets || !sameSet(targets, otherTargets)) return false;
    }
  }
  return true;
}
