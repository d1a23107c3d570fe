import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { AnalysisPanel, DEBOUNCE_MS, badgeText, type TimerHandle } from "../src/panel.js";
import { clickEmpty, dragVertexToVertex, emptyState } from "../src/state.js";

const PRISM_ANALYSIS = {
  results: {
    rigid: { value: true, method: "sparsity", failure_probability_bound: 0, seed: null },
    "min-rigid": { value: true, method: "sparsity", failure_probability_bound: 0, seed: null },
    "globally-rigid": {
      value: false,
      method: "combinatorial-2d",
      failure_probability_bound: 0,
      seed: null,
    },
  },
};

const EMPTY_FLEXES = { flexes: [], stresses: [], trivial_dim: 3 };

/** Manually driven timers so the debounce window is observable. */
class FakeTimers {
  private queue: { at: number; callback: () => void; id: number }[] = [];
  private now = 0;
  private counter = 0;

  set(callback: () => void, ms: number): TimerHandle {
    const id = ++this.counter;
    this.queue.push({ at: this.now + ms, callback, id });
    return { id };
  }

  clear(handle: TimerHandle): void {
    this.queue = this.queue.filter((entry) => entry.id !== handle.id);
  }

  async advance(ms: number): Promise<void> {
    this.now += ms;
    const due = this.queue.filter((e) => e.at <= this.now).sort((a, b) => a.at - b.at);
    this.queue = this.queue.filter((e) => e.at > this.now);
    for (const entry of due) {
      entry.callback();
    }
    // drain the microtask queue behind the request chain
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

function jsonResponse(body: unknown): Response {
  return {
    ok: true,
    json: () => Promise.resolve(body),
  } as unknown as Response;
}

function stubApi(log: { analyze: unknown[]; flexes: unknown[] }) {
  return new ApiClient("", (input, init) => {
    const payload = init?.body ? JSON.parse(String(init.body)) : {};
    if (input.includes("/api/graph/analyze")) {
      log.analyze.push(payload);
      return Promise.resolve(jsonResponse(PRISM_ANALYSIS));
    }
    if (input.includes("/api/framework/flexes")) {
      log.flexes.push(payload);
      return Promise.resolve(jsonResponse(EMPTY_FLEXES));
    }
    throw new Error(`unexpected request ${input}`);
  });
}

function drawTriangle() {
  let state = emptyState();
  state = clickEmpty(state, 0, 0);
  state = clickEmpty(state, 100, 0);
  state = clickEmpty(state, 50, 80);
  state = dragVertexToVertex(state, 0, 1);
  state = dragVertexToVertex(state, 1, 2);
  state = dragVertexToVertex(state, 0, 2);
  return state;
}

describe("analysis panel", () => {
  it("updates badges only after the debounce window", async () => {
    const log = { analyze: [], flexes: [] };
    const timers = new FakeTimers();
    const updates: string[] = [];
    const panel = new AnalysisPanel(
      stubApi(log),
      (snapshot) => updates.push(snapshot.status),
      DEBOUNCE_MS,
      timers,
    );
    panel.schedule(drawTriangle());
    expect(panel.current().status).toBe("pending");
    await timers.advance(DEBOUNCE_MS - 1);
    expect(log.analyze.length).toBe(0);
    expect(panel.current().rigid).toBeUndefined();
    await timers.advance(1);
    expect(log.analyze.length).toBe(1);
    expect(panel.current().status).toBe("ready");
    expect(panel.current().rigid?.value).toBe(true);
    expect(panel.current().rigid?.method).toBe("sparsity");
    expect(panel.current().globallyRigid?.value).toBe(false);
    expect(updates).toContain("ready");
  });

  it("coalesces rapid edits into a single request", async () => {
    const log = { analyze: [], flexes: [] };
    const timers = new FakeTimers();
    const panel = new AnalysisPanel(stubApi(log), () => {}, DEBOUNCE_MS, timers);
    const first = drawTriangle();
    const second = clickEmpty(first, 300, 300);
    panel.schedule(first);
    await timers.advance(100);
    panel.schedule(second);
    await timers.advance(DEBOUNCE_MS);
    expect(log.analyze.length).toBe(1);
    const sent = log.analyze[0] as { graph: { vertices: number[] } };
    expect(sent.graph.vertices).toEqual([0, 1, 2, 3]);
  });

  it("drops stale responses (latest wins)", async () => {
    let release: (() => void) | null = null;
    const slowFirst = new Promise<void>((resolve) => {
      release = resolve;
    });
    let calls = 0;
    const api = new ApiClient("", async (input) => {
      if (input.includes("/api/graph/analyze")) {
        calls += 1;
        if (calls === 1) {
          await slowFirst;
          return jsonResponse({
            results: {
              rigid: { value: false, method: "stale", failure_probability_bound: 0, seed: null },
            },
          });
        }
        return jsonResponse(PRISM_ANALYSIS);
      }
      return jsonResponse(EMPTY_FLEXES);
    });
    const panel = new AnalysisPanel(api, () => {});
    const state = drawTriangle();
    const one = panel.analyze(state);
    const two = panel.analyze(state);
    await two;
    release!();
    await one;
    expect(panel.current().rigid?.method).toBe("sparsity");
  });

  it("reports service failures", async () => {
    const api = new ApiClient("", () =>
      Promise.resolve({
        ok: false,
        json: () => Promise.resolve({ error: "schema-error", message: "bad graph" }),
      } as unknown as Response),
    );
    const panel = new AnalysisPanel(api, () => {});
    await panel.analyze(drawTriangle());
    expect(panel.current().status).toBe("error");
    expect(panel.current().error).toContain("bad graph");
  });

  it("formats badges with method and failure bound", () => {
    expect(
      badgeText("rigid", {
        value: true,
        method: "randomized",
        failure_probability_bound: 1e-6,
        seed: 7,
      }),
    ).toBe("rigid: yes (randomized, err<=0.000001)");
    expect(badgeText("rigid", undefined)).toBe("rigid: ?");
  });
});
