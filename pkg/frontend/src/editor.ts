/**
 * Canvas editor. Gestures follow the familiar pen-and-paper designer style:
 *
 * - click empty space: new state
 * - drag a state: move it (layout only, never affects the grade)
 * - shift-drag from state to state (or back to itself): new transition
 * - drag from empty space onto a state: toggle its start marker
 *   (drawn as the inbound arrow from nowhere)
 * - double-click a state: toggle accepting
 * - click a state or arrow to select it; type alphabet characters to toggle
 *   symbols on a selected arrow, type to edit a selected state's label
 * - drag an arrow's midpoint: adjust curvature
 * - Delete removes the selection, Ctrl+Z undoes
 */

import type { CanvasEdge, CanvasNode, HighlightSet } from "./model.js";
import { CanvasModel } from "./model.js";

const NODE_RADIUS = 26;
const HIT_SLOP = 8;
const CLICK_SLOP = 5;

type Selection = { kind: "node" | "edge"; id: string } | null;

type Drag =
  | { kind: "none" }
  | { kind: "pending-node"; id: string; startX: number; startY: number; moved: boolean }
  | { kind: "pending-empty"; startX: number; startY: number; moved: boolean }
  | { kind: "link"; sourceId: string; x: number; y: number }
  | { kind: "curve"; edgeId: string };

interface Point {
  x: number;
  y: number;
}

export class Editor {
  model: CanvasModel;
  selection: Selection = null;
  onChange: () => void = () => {};

  private highlights: HighlightSet = { nodeIds: new Set(), edgeIds: new Set() };
  private drag: Drag = { kind: "none" };
  private createdAt = new Map<string, number>();
  private readonly ctx: CanvasRenderingContext2D;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    model: CanvasModel,
  ) {
    this.model = model;
    const ctx = canvas.getContext("2d");
    if (!ctx) throw new Error("canvas 2d context unavailable");
    this.ctx = ctx;
    canvas.addEventListener("mousedown", (e) => this.onMouseDown(e));
    canvas.addEventListener("mousemove", (e) => this.onMouseMove(e));
    canvas.addEventListener("mouseup", (e) => this.onMouseUp(e));
    canvas.addEventListener("dblclick", (e) => this.onDoubleClick(e));
    canvas.addEventListener("keydown", (e) => this.onKeyDown(e));
    canvas.tabIndex = 0; // make the canvas focusable for keyboard editing
  }

  setModel(model: CanvasModel): void {
    this.model = model;
    this.selection = null;
    this.highlights = { nodeIds: new Set(), edgeIds: new Set() };
    this.drag = { kind: "none" };
    this.render();
  }

  setHighlights(highlights: HighlightSet): void {
    this.highlights = highlights;
    this.render();
  }

  clearHighlights(): void {
    this.setHighlights({ nodeIds: new Set(), edgeIds: new Set() });
  }

  // --- geometry ---------------------------------------------------------------

  private pointer(e: MouseEvent): Point {
    const rect = this.canvas.getBoundingClientRect();
    return { x: e.clientX - rect.left, y: e.clientY - rect.top };
  }

  private nodeAt(p: Point): CanvasNode | undefined {
    for (let i = this.model.nodes.length - 1; i >= 0; i--) {
      const node = this.model.nodes[i];
      if (Math.hypot(node.x - p.x, node.y - p.y) <= NODE_RADIUS) return node;
    }
    return undefined;
  }

  private edgePath(edge: CanvasEdge): Point[] {
    const source = this.model.node(edge.sourceId);
    const target = this.model.node(edge.targetId);
    if (!source || !target) return [];
    const points: Point[] = [];
    if (edge.sourceId === edge.targetId) {
      const r = NODE_RADIUS * 0.8 + Math.abs(edge.curveOffset) * 0.5;
      const cx = source.x;
      const cy = source.y - NODE_RADIUS - r * 0.9;
      for (let i = 0; i <= 24; i++) {
        const a = (2 * Math.PI * i) / 24;
        points.push({ x: cx + r * Math.cos(a), y: cy + r * Math.sin(a) });
      }
      return points;
    }
    const mid = this.controlPoint(edge, source, target);
    for (let i = 0; i <= 24; i++) {
      const t = i / 24;
      const x = (1 - t) * (1 - t) * source.x + 2 * (1 - t) * t * mid.x + t * t * target.x;
      const y = (1 - t) * (1 - t) * source.y + 2 * (1 - t) * t * mid.y + t * t * target.y;
      points.push({ x, y });
    }
    return points;
  }

  private controlPoint(edge: CanvasEdge, source: CanvasNode, target: CanvasNode): Point {
    const mx = (source.x + target.x) / 2;
    const my = (source.y + target.y) / 2;
    const dx = target.x - source.x;
    const dy = target.y - source.y;
    const len = Math.hypot(dx, dy) || 1;
    return { x: mx - (dy / len) * edge.curveOffset * 2, y: my + (dx / len) * edge.curveOffset * 2 };
  }

  private edgeMidpoint(edge: CanvasEdge): Point | undefined {
    const path = this.edgePath(edge);
    return path[Math.floor(path.length / 2)];
  }

  private edgeAt(p: Point): CanvasEdge | undefined {
    for (const edge of this.model.edges) {
      for (const point of this.edgePath(edge)) {
        if (Math.hypot(point.x - p.x, point.y - p.y) <= HIT_SLOP) return edge;
      }
    }
    return undefined;
  }

  // --- gestures ---------------------------------------------------------------

  private onMouseDown(e: MouseEvent): void {
    this.canvas.focus();
    const p = this.pointer(e);
    const node = this.nodeAt(p);
    if (node) {
      if (e.shiftKey) {
        this.drag = { kind: "link", sourceId: node.id, x: p.x, y: p.y };
      } else {
        this.drag = { kind: "pending-node", id: node.id, startX: p.x, startY: p.y, moved: false };
      }
      this.render();
      return;
    }
    const edge = this.edgeAt(p);
    if (edge) {
      const mid = this.edgeMidpoint(edge);
      if (mid && Math.hypot(mid.x - p.x, mid.y - p.y) <= HIT_SLOP * 1.5) {
        this.drag = { kind: "curve", edgeId: edge.id };
      } else {
        this.selection = { kind: "edge", id: edge.id };
      }
      this.render();
      return;
    }
    this.drag = { kind: "pending-empty", startX: p.x, startY: p.y, moved: false };
  }

  private onMouseMove(e: MouseEvent): void {
    const p = this.pointer(e);
    switch (this.drag.kind) {
      case "pending-node": {
        if (
          this.drag.moved ||
          Math.hypot(p.x - this.drag.startX, p.y - this.drag.startY) > CLICK_SLOP
        ) {
          this.drag.moved = true;
          this.model.moveNode(this.drag.id, p.x, p.y);
          this.render();
        }
        break;
      }
      case "pending-empty": {
        if (Math.hypot(p.x - this.drag.startX, p.y - this.drag.startY) > CLICK_SLOP) {
          this.drag.moved = true;
          this.render();
          this.drawStartPreview({ x: this.drag.startX, y: this.drag.startY }, p);
        }
        break;
      }
      case "link": {
        this.drag.x = p.x;
        this.drag.y = p.y;
        this.render();
        this.drawLinkPreview(this.drag.sourceId, p);
        break;
      }
      case "curve": {
        const edge = this.model.edge(this.drag.edgeId);
        if (edge) {
          const source = this.model.node(edge.sourceId);
          const target = this.model.node(edge.targetId);
          if (source && target) {
            if (edge.sourceId === edge.targetId) {
              this.model.setCurve(edge.id, Math.max(10, source.y - NODE_RADIUS - p.y));
            } else {
              const dx = target.x - source.x;
              const dy = target.y - source.y;
              const len = Math.hypot(dx, dy) || 1;
              const mx = (source.x + target.x) / 2;
              const my = (source.y + target.y) / 2;
              const offset = ((p.x - mx) * -dy + (p.y - my) * dx) / len;
              this.model.setCurve(edge.id, offset);
            }
          }
          this.render();
        }
        break;
      }
      case "none":
        break;
    }
  }

  private onMouseUp(e: MouseEvent): void {
    const p = this.pointer(e);
    const drag = this.drag;
    this.drag = { kind: "none" };
    switch (drag.kind) {
      case "pending-node": {
        if (!drag.moved) this.selection = { kind: "node", id: drag.id };
        break;
      }
      case "pending-empty": {
        const target = this.nodeAt(p);
        if (drag.moved && target) {
          // inbound arrow drawn from empty space: the start-state gesture
          this.model.toggleStart(target.id);
          this.onChange();
        } else if (!drag.moved && !this.edgeAt(p)) {
          const node = this.model.addNode(p.x, p.y);
          this.createdAt.set(node.id, Date.now());
          this.selection = { kind: "node", id: node.id };
          this.onChange();
        } else if (!drag.moved) {
          this.selection = null;
        }
        break;
      }
      case "link": {
        const target = this.nodeAt(p);
        if (target) {
          const edge = this.model.addEdge(drag.sourceId, target.id);
          this.selection = { kind: "edge", id: edge.id };
          this.onChange();
        }
        break;
      }
      case "curve":
      case "none":
        break;
    }
    this.render();
  }

  private onDoubleClick(e: MouseEvent): void {
    const node = this.nodeAt(this.pointer(e));
    if (!node) return;
    // the click that created a node arrives again as part of this dblclick;
    // do not instantly toggle acceptance on brand-new states
    const born = this.createdAt.get(node.id);
    if (born !== undefined && Date.now() - born < 500) return;
    this.model.toggleAccepting(node.id);
    this.selection = { kind: "node", id: node.id };
    this.onChange();
    this.render();
  }

  private onKeyDown(e: KeyboardEvent): void {
    if ((e.ctrlKey || e.metaKey) && e.key.toLowerCase() === "z") {
      e.preventDefault();
      if (this.model.undo()) {
        this.selection = null;
        this.onChange();
        this.render();
      }
      return;
    }
    if (!this.selection) return;
    if (e.key === "Delete" || e.key === "Backspace") {
      if (this.selection.kind === "node") {
        const node = this.model.node(this.selection.id);
        if (node && e.key === "Backspace" && node.label.length > 0) {
          this.model.setLabel(node.id, node.label.slice(0, -1));
        } else if (node && e.key === "Delete") {
          this.model.removeNode(node.id);
          this.selection = null;
        }
      } else if (e.key === "Delete") {
        this.model.removeEdge(this.selection.id);
        this.selection = null;
      }
      e.preventDefault();
      this.onChange();
      this.render();
      return;
    }
    if (e.key.length !== 1 || e.ctrlKey || e.metaKey || e.altKey) return;
    if (this.selection.kind === "node") {
      const node = this.model.node(this.selection.id);
      if (node) this.model.setLabel(node.id, node.label + e.key);
    } else {
      // symbol labels are restricted to the question alphabet
      if (!this.model.toggleSymbol(this.selection.id, e.key)) return;
    }
    e.preventDefault();
    this.onChange();
    this.render();
  }

  toggleEpsilonOnSelection(): void {
    if (this.selection?.kind !== "edge") return;
    if (this.model.toggleSymbol(this.selection.id, "")) {
      this.onChange();
      this.render();
    }
  }

  // --- rendering ----------------------------------------------------------------

  render(): void {
    const { ctx, canvas } = this;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.font = "14px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    for (const edge of this.model.edges) this.drawEdge(edge);
    for (const node of this.model.nodes) this.drawNode(node);
  }

  private strokeFor(id: string, kind: "node" | "edge"): string {
    const highlighted =
      kind === "node" ? this.highlights.nodeIds.has(id) : this.highlights.edgeIds.has(id);
    if (highlighted) return "#d11";
    if (this.selection && this.selection.kind === kind && this.selection.id === id) {
      return "#06c";
    }
    return "#333";
  }

  private drawNode(node: CanvasNode): void {
    const { ctx } = this;
    const stroke = this.strokeFor(node.id, "node");
    ctx.lineWidth = 2;
    ctx.strokeStyle = stroke;
    ctx.fillStyle = "#fff";
    ctx.beginPath();
    ctx.arc(node.x, node.y, NODE_RADIUS, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    if (node.isAccepting) {
      ctx.beginPath();
      ctx.arc(node.x, node.y, NODE_RADIUS - 5, 0, 2 * Math.PI);
      ctx.stroke();
    }
    if (node.isStart) {
      const fromX = node.x - NODE_RADIUS - 42;
      this.drawArrow({ x: fromX, y: node.y }, { x: node.x - NODE_RADIUS, y: node.y }, stroke);
    }
    ctx.fillStyle = stroke;
    ctx.fillText(node.label, node.x, node.y);
  }

  private drawEdge(edge: CanvasEdge): void {
    const { ctx } = this;
    const source = this.model.node(edge.sourceId);
    const target = this.model.node(edge.targetId);
    if (!source || !target) return;
    const stroke = this.strokeFor(edge.id, "edge");
    ctx.strokeStyle = stroke;
    ctx.lineWidth = 2;
    const path = this.edgePath(edge);
    if (path.length === 0) return;
    ctx.beginPath();
    ctx.moveTo(path[0].x, path[0].y);
    for (const point of path) ctx.lineTo(point.x, point.y);
    ctx.stroke();
    if (edge.sourceId !== edge.targetId) {
      const tip = this.clipToNode(path, target);
      if (tip) this.drawArrowHead(tip.from, tip.to, stroke);
    }
    const mid = this.edgeMidpoint(edge);
    if (mid) {
      const label = edge.symbols.length
        ? edge.symbols.map((s) => (s === "" ? "ε" : s)).join(",")
        : "?";
      ctx.fillStyle = stroke;
      ctx.fillText(label, mid.x, mid.y - 10);
      if (this.selection?.kind === "edge" && this.selection.id === edge.id) {
        ctx.fillStyle = "#06c";
        ctx.beginPath();
        ctx.arc(mid.x, mid.y, 4, 0, 2 * Math.PI);
        ctx.fill();
      }
    }
  }

  private clipToNode(path: Point[], node: CanvasNode): { from: Point; to: Point } | undefined {
    for (let i = path.length - 1; i > 0; i--) {
      if (Math.hypot(path[i].x - node.x, path[i].y - node.y) > NODE_RADIUS) {
        return { from: path[i], to: path[Math.min(i + 1, path.length - 1)] };
      }
    }
    return undefined;
  }

  private drawArrow(from: Point, to: Point, stroke: string): void {
    const { ctx } = this;
    ctx.strokeStyle = stroke;
    ctx.beginPath();
    ctx.moveTo(from.x, from.y);
    ctx.lineTo(to.x, to.y);
    ctx.stroke();
    this.drawArrowHead(from, to, stroke);
  }

  private drawArrowHead(from: Point, to: Point, stroke: string): void {
    const { ctx } = this;
    const angle = Math.atan2(to.y - from.y, to.x - from.x);
    ctx.fillStyle = stroke;
    ctx.beginPath();
    ctx.moveTo(to.x, to.y);
    ctx.lineTo(to.x - 10 * Math.cos(angle - 0.4), to.y - 10 * Math.sin(angle - 0.4));
    ctx.lineTo(to.x - 10 * Math.cos(angle + 0.4), to.y - 10 * Math.sin(angle + 0.4));
    ctx.closePath();
    ctx.fill();
  }

  private drawLinkPreview(sourceId: string, to: Point): void {
    const source = this.model.node(sourceId);
    if (!source) return;
    this.ctx.setLineDash([6, 4]);
    this.drawArrow({ x: source.x, y: source.y }, to, "#06c");
    this.ctx.setLineDash([]);
  }

  private drawStartPreview(from: Point, to: Point): void {
    this.ctx.setLineDash([6, 4]);
    this.drawArrow(from, to, "#080");
    this.ctx.setLineDash([]);
  }
}
