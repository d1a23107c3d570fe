/**
 * Analysis panel controller: debounced re-analysis after every edit, with
 * latest-wins handling so stale responses never overwrite newer ones.
 */

import type { ApiClient, FlexesResponse, Verdict } from "./api.js";
import type { CanvasState } from "./state.js";
import { toFrameworkDocument, toGraphDocument } from "./state.js";

export interface PanelSnapshot {
  status: "idle" | "pending" | "ready" | "error";
  error?: string;
  rigid?: Verdict;
  minRigid?: Verdict;
  globallyRigid?: Verdict;
  flexes: Record<string, number[]>[];
  stresses: FlexesResponse["stresses"];
  trivialDim?: number;
}

export interface TimerHandle {
  id: unknown;
}

export interface Timers {
  set(callback: () => void, ms: number): TimerHandle;
  clear(handle: TimerHandle): void;
}

const defaultTimers: Timers = {
  set: (callback, ms) => ({ id: setTimeout(callback, ms) }),
  clear: (handle) => clearTimeout(handle.id as ReturnType<typeof setTimeout>),
};

export const DEBOUNCE_MS = 300;

export class AnalysisPanel {
  private snapshot: PanelSnapshot = { status: "idle", flexes: [], stresses: [] };
  private timer: TimerHandle | null = null;
  private requestToken = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly onUpdate: (snapshot: PanelSnapshot) => void,
    private readonly debounceMs: number = DEBOUNCE_MS,
    private readonly timers: Timers = defaultTimers,
  ) {}

  current(): PanelSnapshot {
    return this.snapshot;
  }

  /** Called after every edit; coalesces bursts into one request. */
  schedule(state: CanvasState): void {
    if (this.timer !== null) {
      this.timers.clear(this.timer);
    }
    this.publish({ ...this.snapshot, status: "pending" });
    this.timer = this.timers.set(() => {
      this.timer = null;
      void this.analyze(state);
    }, this.debounceMs);
  }

  async analyze(state: CanvasState): Promise<void> {
    const token = ++this.requestToken;
    if (state.vertices.length === 0) {
      this.publish({ status: "idle", flexes: [], stresses: [] });
      return;
    }
    try {
      const graphPromise = this.api.analyzeGraph(toGraphDocument(state));
      const flexesPromise =
        state.edges.length > 0
          ? this.api.frameworkFlexes(toFrameworkDocument(state))
          : Promise.resolve<FlexesResponse>({ flexes: [], stresses: [], trivial_dim: 0 });
      const [analysis, flexes] = await Promise.all([graphPromise, flexesPromise]);
      if (token !== this.requestToken) {
        return; // a newer request exists; drop this answer
      }
      this.publish({
        status: "ready",
        rigid: analysis.results["rigid"],
        minRigid: analysis.results["min-rigid"],
        globallyRigid: analysis.results["globally-rigid"],
        flexes: flexes.flexes,
        stresses: flexes.stresses,
        trivialDim: flexes.trivial_dim,
      });
    } catch (error) {
      if (token !== this.requestToken) {
        return;
      }
      this.publish({
        status: "error",
        error: error instanceof Error ? error.message : String(error),
        flexes: [],
        stresses: [],
      });
    }
  }

  private publish(snapshot: PanelSnapshot): void {
    this.snapshot = snapshot;
    this.onUpdate(snapshot);
  }
}

/** One-line badge text: verdict plus the method and failure bound behind it. */
export function badgeText(name: string, verdict: Verdict | undefined): string {
  if (!verdict) {
    return `${name}: ?`;
  }
  const outcome = verdict.value ? "yes" : "no";
  const bound =
    verdict.failure_probability_bound > 0
      ? `, err<=${verdict.failure_probability_bound}`
      : "";
  return `${name}: ${outcome} (${verdict.method}${bound})`;
}
