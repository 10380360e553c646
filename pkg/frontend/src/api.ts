// Typed client over the documented bundle API surface. No other paths.

import type {
  ClustersPayload,
  ComparePayload,
  CorrelationsPayload,
  MappingPayload,
  Meta,
  ModelPayload,
  SummaryPayload,
  TermsPayload,
} from "./types.js";
import type { ViewState } from "./state.js";

export const API_SURFACE = [
  "/api/meta",
  "/api/sections",
  "/api/sections/{s}/model",
  "/api/sections/{s}/terms",
  "/api/sections/{s}/clusters",
  "/api/sections/{s}/manova",
  "/api/sections/{s}/mapping",
  "/api/documents/{id}/summary",
  "/api/compare",
  "/api/correlations",
] as const;

export type FetchLike = (url: string) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(public url: string, public status: number, detail: string) {
    super(`${status} on ${url}: ${detail}`);
  }
}

export class ApiClient {
  constructor(private base: string = "", private fetchFn: FetchLike = fetch) {}

  private async get<T>(path: string): Promise<T> {
    const url = this.base + path;
    const resp = await this.fetchFn(url);
    if (!resp.ok) {
      let detail = "";
      try {
        detail = JSON.stringify(await resp.json());
      } catch {
        /* body may not be JSON */
      }
      throw new ApiError(url, resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  meta(): Promise<Meta> {
    return this.get("/api/meta");
  }

  model(section: string): Promise<ModelPayload> {
    return this.get(`/api/sections/${encodeURIComponent(section)}/model`);
  }

  terms(section: string, lambda: number, topN = 15): Promise<TermsPayload> {
    const s = encodeURIComponent(section);
    return this.get(`/api/sections/${s}/terms?lambda=${lambda}&top_n=${topN}`);
  }

  clusters(state: ViewState): Promise<ClustersPayload> {
    const s = encodeURIComponent(state.section);
    const q = new URLSearchParams({ algo: state.algo });
    if (state.k !== null) q.set("k", String(state.k));
    if (state.linkage !== null) q.set("linkage", state.linkage);
    return this.get(`/api/sections/${s}/clusters?${q}`);
  }

  mapping(section: string, method: string): Promise<MappingPayload> {
    const s = encodeURIComponent(section);
    return this.get(`/api/sections/${s}/mapping?method=${encodeURIComponent(method)}`);
  }

  summary(docId: string, section: string): Promise<SummaryPayload> {
    const d = encodeURIComponent(docId);
    return this.get(`/api/documents/${d}/summary?section=${encodeURIComponent(section)}`);
  }

  compare(section: string, ids: string[]): Promise<ComparePayload> {
    const s = encodeURIComponent(section);
    return this.get(`/api/compare?section=${s}&ids=${ids.map(encodeURIComponent).join(",")}`);
  }

  correlations(section: string): Promise<CorrelationsPayload> {
    return this.get(`/api/correlations?section=${encodeURIComponent(section)}`);
  }
}
