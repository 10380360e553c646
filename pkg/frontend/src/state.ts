// Application view state: everything a shared URL must reproduce.

import type { Meta } from "./types.js";

export interface ViewState {
  section: string;
  view: "map" | "scatter";
  mapping: string; // "mds" | "tsne"
  algo: string; // "agglomerative" | "kmeans" | "hdbscan"
  k: number | null;
  linkage: string | null;
  docs: string[]; // selected document ids
  lambda: number;
  topic: number; // selected topic index
  covariates: string[]; // selected covariate names ([] = all)
}

export function defaultState(meta: Meta): ViewState {
  const algo = meta.defaults.algorithm ?? "agglomerative";
  const variant = (meta.clustering[algo] ?? [])[0] ?? {};
  return {
    section: meta.section_ids[0] ?? "",
    view: meta.geo ? "map" : "scatter",
    mapping: meta.defaults.mapping ?? meta.mapping_methods[0] ?? "mds",
    algo,
    k: typeof variant.k === "number" ? variant.k : null,
    linkage: typeof variant.linkage === "string" ? variant.linkage : null,
    docs: [],
    lambda: meta.defaults.lambda ?? 0.6,
    topic: 0,
    covariates: [],
  };
}

export function encodeState(state: ViewState): string {
  const q = new URLSearchParams();
  q.set("section", state.section);
  q.set("view", state.view);
  q.set("mapping", state.mapping);
  q.set("algo", state.algo);
  if (state.k !== null) q.set("k", String(state.k));
  if (state.linkage !== null) q.set("linkage", state.linkage);
  if (state.docs.length) q.set("docs", state.docs.join(","));
  q.set("lambda", String(state.lambda));
  q.set("topic", String(state.topic));
  if (state.covariates.length) q.set("covs", state.covariates.join(","));
  return q.toString();
}

export function decodeState(query: string): ViewState {
  const q = new URLSearchParams(query);
  const view = q.get("view") === "map" ? "map" : "scatter";
  const kRaw = q.get("k");
  return {
    section: q.get("section") ?? "",
    view,
    mapping: q.get("mapping") ?? "mds",
    algo: q.get("algo") ?? "agglomerative",
    k: kRaw === null ? null : Number(kRaw),
    linkage: q.get("linkage"),
    docs: (q.get("docs") ?? "").split(",").filter((s) => s.length > 0),
    lambda: Number(q.get("lambda") ?? "0.6"),
    topic: Number(q.get("topic") ?? "0"),
    covariates: (q.get("covs") ?? "").split(",").filter((s) => s.length > 0),
  };
}

/** Check every id against /api/meta; returns the offending field names. */
export function validateState(state: ViewState, meta: Meta): string[] {
  const bad: string[] = [];
  if (!meta.section_ids.includes(state.section)) bad.push("section");
  if (!meta.mapping_methods.includes(state.mapping)) bad.push("mapping");
  if (!(state.algo in meta.clustering)) bad.push("algo");
  if (!state.docs.every((d) => meta.doc_ids.includes(d))) bad.push("docs");
  if (!(state.lambda >= 0 && state.lambda <= 1)) bad.push("lambda");
  if (!state.covariates.every((c) => meta.covariates.includes(c))) bad.push("covariates");
  if (!Number.isInteger(state.topic) || state.topic < 0) bad.push("topic");
  return bad;
}

export type ViewKey =
  | "mapping"
  | "clusters"
  | "radar"
  | "violin"
  | "bars"
  | "intertopic"
  | "correlations"
  | "summary";

export const ALL_VIEWS: ViewKey[] = [
  "mapping",
  "clusters",
  "radar",
  "violin",
  "bars",
  "intertopic",
  "correlations",
  "summary",
];

/** Which views must refetch/re-render when one state field changes. */
export function affectedViews(field: keyof ViewState): ViewKey[] {
  switch (field) {
    case "section":
      return [...ALL_VIEWS];
    case "view":
      return []; // map vs scatter re-renders from cached payloads
    case "mapping":
      return ["mapping"];
    case "algo":
    case "k":
    case "linkage":
      return ["clusters"];
    case "docs":
      return ["radar", "violin", "summary"];
    case "lambda":
      return ["bars"];
    case "topic":
      return ["bars", "intertopic", "summary"];
    case "covariates":
      return ["correlations"];
  }
}
