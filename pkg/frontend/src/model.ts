/**
 * The drawing model behind the canvas: nodes and edges with pixel positions
 * and curvature, plus undo history and the dirty flag. Node ids are internal
 * only; serialization uses labels as state names and never leaks positions,
 * so two drawings of the same machine grade identically.
 */

import type { FsmDocument, FsmType } from "./document.js";
import { initialList, targetList } from "./document.js";

export interface CanvasNode {
  id: string;
  x: number;
  y: number;
  label: string;
  isAccepting: boolean;
  isStart: boolean;
}

export interface CanvasEdge {
  id: string;
  sourceId: string;
  targetId: string; // may equal sourceId: self loop
  symbols: string[]; // "" denotes epsilon (NFA questions only)
  curveOffset: number; // perpendicular control-point offset, presentation only
}

export interface HighlightSet {
  nodeIds: Set<string>;
  edgeIds: Set<string>;
}

export type ElementRef = string | [string, string, string];

interface Snapshot {
  nodes: CanvasNode[];
  edges: CanvasEdge[];
  nextNode: number;
  nextEdge: number;
}

export class CanvasModel {
  readonly alphabet: string[];
  readonly fsmType: FsmType;
  nodes: CanvasNode[] = [];
  edges: CanvasEdge[] = [];
  dirty = false;

  private nextNode = 0;
  private nextEdge = 0;
  private history: Snapshot[] = [];

  constructor(alphabet: string[], fsmType: FsmType) {
    this.alphabet = [...alphabet];
    this.fsmType = fsmType;
  }

  // --- undo ----------------------------------------------------------------

  private snapshot(): void {
    this.history.push({
      nodes: this.nodes.map((n) => ({ ...n })),
      edges: this.edges.map((e) => ({ ...e, symbols: [...e.symbols] })),
      nextNode: this.nextNode,
      nextEdge: this.nextEdge,
    });
    if (this.history.length > 200) this.history.shift();
    this.dirty = true;
  }

  undo(): boolean {
    const prev = this.history.pop();
    if (!prev) return false;
    this.nodes = prev.nodes;
    this.edges = prev.edges;
    this.nextNode = prev.nextNode;
    this.nextEdge = prev.nextEdge;
    this.dirty = true;
    return true;
  }

  // --- node operations -------------------------------------------------------

  addNode(x: number, y: number): CanvasNode {
    this.snapshot();
    let label = `q${this.nextNode}`;
    while (this.nodes.some((n) => n.label === label)) {
      this.nextNode += 1;
      label = `q${this.nextNode}`;
    }
    const node: CanvasNode = {
      id: `n${this.nextNode}`,
      x,
      y,
      label,
      isAccepting: false,
      isStart: false,
    };
    this.nextNode += 1;
    this.nodes.push(node);
    return node;
  }

  node(id: string): CanvasNode | undefined {
    return this.nodes.find((n) => n.id === id);
  }

  edge(id: string): CanvasEdge | undefined {
    return this.edges.find((e) => e.id === id);
  }

  /** Position changes are presentation-only: no snapshot, no dirty flag. */
  moveNode(id: string, x: number, y: number): void {
    const node = this.node(id);
    if (!node) return;
    node.x = x;
    node.y = y;
  }

  setLabel(id: string, label: string): void {
    const node = this.node(id);
    if (!node || node.label === label) return;
    this.snapshot();
    node.label = label;
  }

  toggleAccepting(id: string): void {
    const node = this.node(id);
    if (!node) return;
    this.snapshot();
    node.isAccepting = !node.isAccepting;
  }

  toggleStart(id: string): void {
    const node = this.node(id);
    if (!node) return;
    this.snapshot();
    node.isStart = !node.isStart;
  }

  removeNode(id: string): void {
    if (!this.node(id)) return;
    this.snapshot();
    this.nodes = this.nodes.filter((n) => n.id !== id);
    this.edges = this.edges.filter((e) => e.sourceId !== id && e.targetId !== id);
  }

  // --- edge operations -------------------------------------------------------

  /** Draws (or reuses) the arrow between two nodes; self loops allowed. */
  addEdge(sourceId: string, targetId: string): CanvasEdge {
    const existing = this.edges.find((e) => e.sourceId === sourceId && e.targetId === targetId);
    if (existing) return existing;
    this.snapshot();
    const opposite = this.edges.some((e) => e.sourceId === targetId && e.targetId === sourceId);
    const edge: CanvasEdge = {
      id: `e${this.nextEdge}`,
      sourceId,
      targetId,
      symbols: [],
      curveOffset: sourceId === targetId ? 40 : opposite ? 40 : 0,
    };
    this.nextEdge += 1;
    this.edges.push(edge);
    return edge;
  }

  /**
   * Toggle a symbol on an arrow. Anything outside the question alphabet is
   * rejected (epsilon "" is legal only on NFA questions).
   */
  toggleSymbol(edgeId: string, symbol: string): boolean {
    const edge = this.edge(edgeId);
    if (!edge) return false;
    const legal = symbol === "" ? this.fsmType === "nfa" : this.alphabet.includes(symbol);
    if (!legal) return false;
    this.snapshot();
    if (edge.symbols.includes(symbol)) {
      edge.symbols = edge.symbols.filter((s) => s !== symbol);
    } else {
      edge.symbols.push(symbol);
    }
    return true;
  }

  /** Curvature is presentation-only, like positions. */
  setCurve(edgeId: string, offset: number): void {
    const edge = this.edge(edgeId);
    if (!edge) return;
    edge.curveOffset = offset;
  }

  removeEdge(id: string): void {
    if (!this.edge(id)) return;
    this.snapshot();
    this.edges = this.edges.filter((e) => e.id !== id);
  }

  // --- serialization -----------------------------------------------------------

  /**
   * The document the grader sees. Labels become state names; ids, positions,
   * and curvature never appear. Arrows with no symbols yet are skipped.
   */
  serialize(): FsmDocument {
    const labelOf = new Map(this.nodes.map((n) => [n.id, n.label]));
    const transitions: Record<string, Record<string, string[]>> = {};
    for (const edge of this.edges) {
      const source = labelOf.get(edge.sourceId);
      const target = labelOf.get(edge.targetId);
      if (source === undefined || target === undefined) continue;
      for (const symbol of edge.symbols) {
        const row = (transitions[source] ??= {});
        const cell = (row[symbol] ??= []);
        if (!cell.includes(target)) cell.push(target);
      }
    }
    const wireTransitions: Record<string, Record<string, string | string[]>> = {};
    for (const [state, row] of Object.entries(transitions)) {
      wireTransitions[state] = {};
      for (const [symbol, targets] of Object.entries(row)) {
        wireTransitions[state][symbol] =
          this.fsmType === "dfa" && targets.length === 1 ? targets[0] : targets;
      }
    }
    const starts = this.nodes.filter((n) => n.isStart).map((n) => n.label);
    return {
      states: this.nodes.map((n) => n.label),
      input_symbols: [...this.alphabet],
      transitions: wireTransitions,
      initial_state: starts.length === 1 ? starts[0] : starts.length === 0 ? null : starts,
      final_states: this.nodes.filter((n) => n.isAccepting).map((n) => n.label),
    };
  }

  /** Rebuild the drawing from a document, laying states out on a circle. */
  loadDocument(doc: FsmDocument, width = 800, height = 500): void {
    this.nodes = [];
    this.edges = [];
    this.history = [];
    this.nextNode = 0;
    this.nextEdge = 0;
    const starts = new Set(initialList(doc));
    const finals = new Set(doc.final_states);
    const radius = Math.min(width, height) / 2 - 80;
    const byLabel = new Map<string, string>();
    doc.states.forEach((label, i) => {
      const angle = (2 * Math.PI * i) / doc.states.length - Math.PI / 2;
      const node: CanvasNode = {
        id: `n${this.nextNode}`,
        x: width / 2 + radius * Math.cos(angle),
        y: height / 2 + radius * Math.sin(angle),
        label,
        isAccepting: finals.has(label),
        isStart: starts.has(label),
      };
      this.nextNode += 1;
      this.nodes.push(node);
      if (!byLabel.has(label)) byLabel.set(label, node.id);
    });
    for (const [state, row] of Object.entries(doc.transitions)) {
      const sourceId = byLabel.get(state);
      if (sourceId === undefined) continue;
      for (const [symbol, targets] of Object.entries(row)) {
        for (const target of targetList(targets)) {
          const targetId = byLabel.get(target);
          if (targetId === undefined) continue;
          const edge = this.addEdge(sourceId, targetId);
          if (!edge.symbols.includes(symbol)) edge.symbols.push(symbol);
        }
      }
    }
    this.history = [];
    this.dirty = false;
  }

  // --- highlights ---------------------------------------------------------------

  /**
   * Resolve grader element references (state names and transition triples)
   * to drawn elements. References that match nothing are dropped with a
   * console warning rather than breaking rendering.
   */
  resolveHighlights(refs: ElementRef[]): HighlightSet {
    const nodeIds = new Set<string>();
    const edgeIds = new Set<string>();
    const labelOf = new Map(this.nodes.map((n) => [n.id, n.label]));
    for (const ref of refs) {
      if (typeof ref === "string") {
        const matches = this.nodes.filter((n) => n.label === ref);
        if (matches.length === 0) {
          console.warn(`highlight dropped: no state labeled ${JSON.stringify(ref)}`);
          continue;
        }
        for (const node of matches) nodeIds.add(node.id);
      } else {
        const [source, symbol, target] = ref;
        const matches = this.edges.filter(
          (e) =>
            labelOf.get(e.sourceId) === source &&
            labelOf.get(e.targetId) === target &&
            e.symbols.includes(symbol),
        );
        if (matches.length === 0) {
          console.warn(`highlight dropped: no transition ${source} -${symbol}-> ${target}`);
          continue;
        }
        for (const edge of matches) edgeIds.add(edge.id);
      }
    }
    return { nodeIds, edgeIds };
  }
}
