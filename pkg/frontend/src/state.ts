/**
 * Canvas editor state: vertices with positions, edges, grid snapping.
 *
 * The state always mirrors a valid graph document.  Vertex ids grow
 * monotonically and are never reused within a session, so labels stay
 * stable while drawing.  All operations are pure and return new states.
 */

export interface CanvasVertex {
  id: number;
  x: number;
  y: number;
}

export interface GridConfig {
  enabled: boolean;
  spacing: number;
}

export type EdgePair = [number, number];

export interface CanvasState {
  vertices: CanvasVertex[];
  edges: EdgePair[];
  grid: GridConfig;
  pendingEdgeFrom: number | null;
  nextId: number;
}

export interface GraphDocument {
  vertices: number[];
  edges: EdgePair[];
}

export interface FrameworkDocument {
  graph: GraphDocument;
  mode: "exact" | "approx";
  realization: Record<string, string[]>;
}

export function emptyState(grid: GridConfig = { enabled: false, spacing: 20 }): CanvasState {
  return { vertices: [], edges: [], grid, pendingEdgeFrom: null, nextId: 0 };
}

export function snapPoint(grid: GridConfig, x: number, y: number): { x: number; y: number } {
  if (!grid.enabled || grid.spacing <= 0) {
    return { x, y };
  }
  const s = grid.spacing;
  return { x: Math.round(x / s) * s, y: Math.round(y / s) * s };
}

function normalized(a: number, b: number): EdgePair {
  return a < b ? [a, b] : [b, a];
}

function hasEdge(state: CanvasState, a: number, b: number): boolean {
  const [u, v] = normalized(a, b);
  return state.edges.some(([p, q]) => p === u && q === v);
}

/** Left click on empty canvas: create the next vertex (snapped to the grid). */
export function clickEmpty(state: CanvasState, x: number, y: number): CanvasState {
  const point = snapPoint(state.grid, x, y);
  const vertex = { id: state.nextId, x: point.x, y: point.y };
  return {
    ...state,
    vertices: [...state.vertices, vertex],
    nextId: state.nextId + 1,
  };
}

/** Drag from one vertex to another: add the edge if it is missing. */
export function dragVertexToVertex(state: CanvasState, a: number, b: number): CanvasState {
  if (a === b || hasEdge(state, a, b)) {
    return { ...state, pendingEdgeFrom: null };
  }
  const ids = new Set(state.vertices.map((v) => v.id));
  if (!ids.has(a) || !ids.has(b)) {
    return { ...state, pendingEdgeFrom: null };
  }
  return {
    ...state,
    edges: [...state.edges, normalized(a, b)],
    pendingEdgeFrom: null,
  };
}

/** Double click on a vertex: remove it together with its incident edges. */
export function doubleClickVertex(state: CanvasState, id: number): CanvasState {
  if (!state.vertices.some((v) => v.id === id)) {
    return state;
  }
  return {
    ...state,
    vertices: state.vertices.filter((v) => v.id !== id),
    edges: state.edges.filter(([u, v]) => u !== id && v !== id),
    pendingEdgeFrom: state.pendingEdgeFrom === id ? null : state.pendingEdgeFrom,
  };
}

/** Double click on an edge: remove exactly that edge. */
export function doubleClickEdge(state: CanvasState, a: number, b: number): CanvasState {
  const [u, v] = normalized(a, b);
  return {
    ...state,
    edges: state.edges.filter(([p, q]) => !(p === u && q === v)),
  };
}

export function moveVertex(state: CanvasState, id: number, x: number, y: number): CanvasState {
  const point = snapPoint(state.grid, x, y);
  return {
    ...state,
    vertices: state.vertices.map((v) => (v.id === id ? { ...v, ...point } : v)),
  };
}

export function withGrid(state: CanvasState, grid: GridConfig): CanvasState {
  return { ...state, grid };
}

// -- hit testing --------------------------------------------------------------

export function findVertexAt(
  state: CanvasState,
  x: number,
  y: number,
  radius = 12,
): CanvasVertex | null {
  let best: CanvasVertex | null = null;
  let bestDist = radius * radius;
  for (const v of state.vertices) {
    const d = (v.x - x) ** 2 + (v.y - y) ** 2;
    if (d <= bestDist) {
      best = v;
      bestDist = d;
    }
  }
  return best;
}

export function findEdgeAt(
  state: CanvasState,
  x: number,
  y: number,
  tolerance = 6,
): EdgePair | null {
  const byId = new Map(state.vertices.map((v) => [v.id, v]));
  for (const [a, b] of state.edges) {
    const p = byId.get(a);
    const q = byId.get(b);
    if (!p || !q) continue;
    const lengthSq = (q.x - p.x) ** 2 + (q.y - p.y) ** 2;
    if (lengthSq === 0) continue;
    let t = ((x - p.x) * (q.x - p.x) + (y - p.y) * (q.y - p.y)) / lengthSq;
    t = Math.max(0, Math.min(1, t));
    const dx = x - (p.x + t * (q.x - p.x));
    const dy = y - (p.y + t * (q.y - p.y));
    if (dx * dx + dy * dy <= tolerance * tolerance) {
      return [a, b];
    }
  }
  return null;
}

// -- document export ------------------------------------------------------------

function sortedEdges(edges: EdgePair[]): EdgePair[] {
  return [...edges].sort((a, b) => a[0] - b[0] || a[1] - b[1]);
}

export function toGraphDocument(state: CanvasState): GraphDocument {
  return {
    vertices: state.vertices.map((v) => v.id).sort((a, b) => a - b),
    edges: sortedEdges(state.edges),
  };
}

/** Framework document using the canvas positions as the realization. */
export function toFrameworkDocument(state: CanvasState): FrameworkDocument {
  const realization: Record<string, string[]> = {};
  for (const v of state.vertices) {
    realization[String(v.id)] = [String(v.x), String(v.y)];
  }
  return { graph: toGraphDocument(state), mode: "approx", realization };
}

/** Import a framework document, mapping its coordinates into the viewport. */
export function stateFromFramework(
  doc: FrameworkDocument,
  viewport: { width: number; height: number },
  grid: GridConfig = { enabled: false, spacing: 20 },
): CanvasState {
  const points = Object.entries(doc.realization).map(([id, coords]) => ({
    id: Number(id),
    x: Number(coords[0]),
    y: Number(coords[1] ?? 0),
  }));
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const loX = Math.min(...xs);
  const hiX = Math.max(...xs);
  const loY = Math.min(...ys);
  const hiY = Math.max(...ys);
  const margin = 0.12;
  const scale = Math.min(
    (viewport.width * (1 - 2 * margin)) / Math.max(hiX - loX, 1e-9),
    (viewport.height * (1 - 2 * margin)) / Math.max(hiY - loY, 1e-9),
  );
  const offsetX = (viewport.width - scale * (hiX - loX)) / 2;
  const offsetY = (viewport.height - scale * (hiY - loY)) / 2;
  const vertices = points
    .sort((a, b) => a.id - b.id)
    .map((p) => ({
      id: p.id,
      x: offsetX + scale * (p.x - loX),
      // canvas y axis points down, mathematical y axis points up
      y: viewport.height - offsetY - scale * (p.y - loY),
    }));
  return {
    vertices,
    edges: sortedEdges(doc.graph.edges.map(([a, b]) => normalized(a, b))),
    grid,
    pendingEdgeFrom: null,
    nextId: points.length ? Math.max(...points.map((p) => p.id)) + 1 : 0,
  };
}
