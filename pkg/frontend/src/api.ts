/**
 * Thin client for the analysis service.  All rigidity math lives on the
 * server; this module only moves documents back and forth.
 */

import type { FrameworkDocument, GraphDocument } from "./state.js";

export interface Verdict {
  value: boolean;
  method: string;
  failure_probability_bound: number;
  seed: number | null;
}

export interface GraphAnalysis {
  results: Record<string, Verdict>;
}

export interface StressEntry {
  edge: [number, number];
  weight: number;
}

export interface FlexesResponse {
  flexes: Record<string, number[]>[];
  stresses: StressEntry[][];
  trivial_dim: number;
}

export interface MotionResponse {
  samples: Record<string, number[]>[];
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(body?.error ?? "error", body?.message ?? "request failed");
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  analyzeGraph(
    graph: GraphDocument,
    properties: string[] = ["rigid", "min-rigid", "globally-rigid"],
    dim = 2,
  ): Promise<GraphAnalysis> {
    return this.post("/api/graph/analyze", { graph, dim, properties });
  }

  frameworkFlexes(framework: FrameworkDocument): Promise<FlexesResponse> {
    return this.post("/api/framework/flexes", { framework });
  }

  approximateMotion(
    framework: FrameworkDocument,
    steps: number,
    stepSize: number,
    chosenFlex = 0,
    fixedPair: [number, number] | null = null,
  ): Promise<MotionResponse> {
    return this.post("/api/motion/approximate", {
      framework,
      steps,
      step_size: stepSize,
      chosen_flex: chosenFlex,
      fixed_pair: fixedPair,
    });
  }

  fetchCatalog(
    name: string,
    params: string,
    kind: "graph" | "framework",
  ): Promise<FrameworkDocument | GraphDocument> {
    const query = new URLSearchParams({ name, params, kind });
    return this.request(`/api/db?${query.toString()}`);
  }
}
