/**
 * SVG markup generation for the canvas: grid, edges, vertices, and the
 * analysis overlay (flex arrows at vertices, stress labels on edges).
 * Pure string building, so it is testable without a DOM.
 */

import type { StressEntry } from "./api.js";
import type { CanvasState } from "./state.js";

export interface Overlay {
  flex?: Record<string, number[]> | null;
  stress?: StressEntry[] | null;
}

const VERTEX_RADIUS = 7;

function fmt(x: number): string {
  return Number.isInteger(x) ? String(x) : x.toFixed(2);
}

function escapeText(value: string): string {
  return value.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function gridLines(
  state: CanvasState,
  width: number,
  height: number,
): string[] {
  if (!state.grid.enabled || state.grid.spacing <= 0) {
    return [];
  }
  const lines: string[] = [];
  const s = state.grid.spacing;
  for (let x = 0; x <= width; x += s) {
    lines.push(
      `<line class="grid" x1="${fmt(x)}" y1="0" x2="${fmt(x)}" y2="${fmt(height)}"/>`,
    );
  }
  for (let y = 0; y <= height; y += s) {
    lines.push(
      `<line class="grid" x1="0" y1="${fmt(y)}" x2="${fmt(width)}" y2="${fmt(y)}"/>`,
    );
  }
  return lines;
}

function flexArrowScale(flex: Record<string, number[]>): number {
  let largest = 0;
  for (const vec of Object.values(flex)) {
    largest = Math.max(largest, Math.hypot(vec[0] ?? 0, vec[1] ?? 0));
  }
  return largest > 0 ? 42 / largest : 0;
}

export function renderScene(
  state: CanvasState,
  overlay: Overlay = {},
  viewport: { width: number; height: number } = { width: 800, height: 600 },
): string {
  const byId = new Map(state.vertices.map((v) => [v.id, v]));
  const parts: string[] = [...gridLines(state, viewport.width, viewport.height)];

  const stressByEdge = new Map<string, number>();
  for (const entry of overlay.stress ?? []) {
    stressByEdge.set(entry.edge.join(","), entry.weight);
  }

  for (const [a, b] of state.edges) {
    const p = byId.get(a);
    const q = byId.get(b);
    if (!p || !q) continue;
    parts.push(
      `<line class="edge" data-edge="${a},${b}" x1="${fmt(p.x)}" y1="${fmt(p.y)}" ` +
        `x2="${fmt(q.x)}" y2="${fmt(q.y)}"/>`,
    );
    const weight = stressByEdge.get(`${a},${b}`);
    if (weight !== undefined) {
      const mx = (p.x + q.x) / 2;
      const my = (p.y + q.y) / 2;
      parts.push(
        `<text class="stress-label" x="${fmt(mx)}" y="${fmt(my - 4)}">` +
          `${escapeText(weight.toPrecision(3))}</text>`,
      );
    }
  }

  const flex = overlay.flex ?? null;
  if (flex) {
    const scale = flexArrowScale(flex);
    for (const v of state.vertices) {
      const vec = flex[String(v.id)];
      if (!vec || scale === 0) continue;
      const dx = (vec[0] ?? 0) * scale;
      // flex vectors live in mathematical coordinates; the canvas y axis is flipped
      const dy = -(vec[1] ?? 0) * scale;
      if (Math.abs(dx) < 1e-9 && Math.abs(dy) < 1e-9) continue;
      parts.push(
        `<line class="flex-arrow" data-vertex="${v.id}" x1="${fmt(v.x)}" y1="${fmt(v.y)}" ` +
          `x2="${fmt(v.x + dx)}" y2="${fmt(v.y + dy)}" marker-end="url(#arrowhead)"/>`,
      );
    }
  }

  for (const v of state.vertices) {
    parts.push(
      `<circle class="vertex" data-id="${v.id}" cx="${fmt(v.x)}" cy="${fmt(v.y)}" ` +
        `r="${VERTEX_RADIUS}"/>`,
    );
    parts.push(
      `<text class="vertex-label" x="${fmt(v.x + 10)}" y="${fmt(v.y - 10)}">${v.id}</text>`,
    );
  }
  return parts.join("\n");
}

export const SVG_DEFS =
  '<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" refX="6" refY="3" ' +
  'orient="auto"><path d="M0,0 L6,3 L0,6 z" fill="#2e7d32"/></marker></defs>';
