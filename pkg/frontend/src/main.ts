/**
 * Browser entry point: wires pointer events on the SVG canvas to the state
 * operations, keeps the analysis panel in sync, and plays tracked motions.
 */

import { ApiClient } from "./api.js";
import { AnalysisPanel, badgeText, type PanelSnapshot } from "./panel.js";
import { SVG_DEFS, renderScene } from "./render.js";
import {
  type CanvasState,
  type FrameworkDocument,
  clickEmpty,
  doubleClickEdge,
  doubleClickVertex,
  dragVertexToVertex,
  emptyState,
  findEdgeAt,
  findVertexAt,
  stateFromFramework,
  toFrameworkDocument,
  withGrid,
} from "./state.js";

const WIDTH = 800;
const HEIGHT = 600;

function expect<T extends Element>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) {
    throw new Error(`missing element ${selector}`);
  }
  return node;
}

function main(): void {
  const svg = expect<SVGSVGElement>("#canvas");
  const badges = expect<HTMLElement>("#badges");
  const statusLine = expect<HTMLElement>("#status");
  const gridToggle = expect<HTMLInputElement>("#grid-enabled");
  const gridSpacing = expect<HTMLInputElement>("#grid-spacing");
  const clearButton = expect<HTMLButtonElement>("#clear");
  const loadPrism = expect<HTMLButtonElement>("#load-prism");
  const motionButton = expect<HTMLButtonElement>("#play-motion");

  const api = new ApiClient("");
  let state: CanvasState = emptyState();
  let snapshot: PanelSnapshot = { status: "idle", flexes: [], stresses: [] };
  let motionTimer: number | null = null;

  const panel = new AnalysisPanel(api, (next) => {
    snapshot = next;
    redraw();
  });

  function redraw(motionPositions?: Record<string, number[]>): void {
    const overlay = {
      flex: snapshot.flexes[0] ?? null,
      stress: snapshot.stresses[0] ?? null,
    };
    const drawn = motionPositions
      ? {
          ...state,
          vertices: state.vertices.map((v) => {
            const coords = motionPositions[String(v.id)];
            return coords ? { ...v, x: coords[0], y: coords[1] } : v;
          }),
        }
      : state;
    svg.innerHTML = SVG_DEFS + renderScene(drawn, motionPositions ? {} : overlay, {
      width: WIDTH,
      height: HEIGHT,
    });
    badges.innerHTML = "";
    for (const [label, verdict] of [
      ["rigid", snapshot.rigid],
      ["minimally rigid", snapshot.minRigid],
      ["globally rigid", snapshot.globallyRigid],
    ] as const) {
      const div = document.createElement("div");
      div.className = "badge" + (verdict ? (verdict.value ? " yes" : " no") : "");
      div.textContent = badgeText(label, verdict);
      badges.appendChild(div);
    }
    statusLine.textContent =
      snapshot.status === "error" ? `error: ${snapshot.error}` : snapshot.status;
  }

  function update(next: CanvasState): void {
    state = next;
    stopMotion();
    redraw();
    panel.schedule(state);
  }

  function stopMotion(): void {
    if (motionTimer !== null) {
      window.clearInterval(motionTimer);
      motionTimer = null;
    }
  }

  function pointerPosition(event: MouseEvent): { x: number; y: number } {
    const rect = svg.getBoundingClientRect();
    return { x: event.clientX - rect.left, y: event.clientY - rect.top };
  }

  let dragFrom: number | null = null;
  let moved = false;
  // empty-canvas clicks commit after a short delay so a double click on an
  // edge or empty space never leaves a stray vertex behind
  let pendingCreate: number | null = null;

  function cancelPendingCreate(): void {
    if (pendingCreate !== null) {
      window.clearTimeout(pendingCreate);
      pendingCreate = null;
    }
  }

  svg.addEventListener("pointerdown", (event) => {
    const { x, y } = pointerPosition(event);
    const vertex = findVertexAt(state, x, y);
    dragFrom = vertex ? vertex.id : null;
    moved = false;
  });

  svg.addEventListener("pointermove", () => {
    if (dragFrom !== null) {
      moved = true;
    }
  });

  svg.addEventListener("pointerup", (event) => {
    const { x, y } = pointerPosition(event);
    const target = findVertexAt(state, x, y);
    if (dragFrom !== null && target && target.id !== dragFrom) {
      update(dragVertexToVertex(state, dragFrom, target.id));
    } else if (dragFrom === null && !target && !moved) {
      cancelPendingCreate();
      pendingCreate = window.setTimeout(() => {
        pendingCreate = null;
        update(clickEmpty(state, x, y));
      }, 260);
    }
    dragFrom = null;
  });

  svg.addEventListener("dblclick", (event) => {
    cancelPendingCreate();
    const { x, y } = pointerPosition(event);
    const vertex = findVertexAt(state, x, y);
    if (vertex) {
      update(doubleClickVertex(state, vertex.id));
      return;
    }
    const edge = findEdgeAt(state, x, y);
    if (edge) {
      update(doubleClickEdge(state, edge[0], edge[1]));
    }
  });

  gridToggle.addEventListener("change", () => {
    state = withGrid(state, {
      enabled: gridToggle.checked,
      spacing: Number(gridSpacing.value) || 20,
    });
    redraw();
  });
  gridSpacing.addEventListener("change", () => {
    state = withGrid(state, {
      enabled: gridToggle.checked,
      spacing: Number(gridSpacing.value) || 20,
    });
    redraw();
  });

  clearButton.addEventListener("click", () => update(emptyState(state.grid)));

  loadPrism.addEventListener("click", async () => {
    const doc = (await api.fetchCatalog(
      "ThreePrism",
      "parallel",
      "framework",
    )) as FrameworkDocument;
    update(stateFromFramework(doc, { width: WIDTH, height: HEIGHT }, state.grid));
  });

  motionButton.addEventListener("click", async () => {
    stopMotion();
    if (state.edges.length === 0) {
      return;
    }
    try {
      // unpinned: samples stay near the drawn position, which plays back nicely
      const response = await api.approximateMotion(
        toFrameworkDocument(state),
        240,
        4,
        0,
        null,
      );
      let frame = 0;
      motionTimer = window.setInterval(() => {
        frame = (frame + 1) % response.samples.length;
        redraw(response.samples[frame]);
      }, 40);
    } catch (error) {
      statusLine.textContent = `motion failed: ${
        error instanceof Error ? error.message : error
      }`;
    }
  });

  redraw();
}

main();
