// Payload shapes of the bundle API (the only backend this app talks to).

export interface ClusterParams {
  k?: number;
  linkage?: string;
  [key: string]: unknown;
}

export interface Meta {
  version: number;
  created: string;
  doc_ids: string[];
  entity_ids: Record<string, string>;
  covariates: string[];
  section_ids: string[];
  geo: boolean;
  defaults: { mapping?: string; algorithm?: string; lambda?: number };
  clustering: Record<string, ClusterParams[]>;
  mapping_methods: string[];
}

export interface SectionInfo {
  id: string;
  topics: string[];
  K: number;
  method: string;
}

export interface ModelPayload {
  method: string;
  K: number;
  labels: string[];
  phi: number[][];
  theta: number[][];
  vocab: string[];
  doc_ids: string[];
  doc_lengths: number[];
  coherence: number | null;
  intertopic: { coords: number[][]; prevalence: number[]; metric: string };
}

export interface TermsPayload {
  lambda: number;
  labels: string[];
  topics: [string, number][][];
  saliency: [string, number][];
  topic_weights: number[];
}

export interface ManovaReport {
  wilks_lambda?: number | null;
  F_stat?: number | null;
  p_value?: number | null;
  fallback_used?: string;
  error?: string;
}

export interface ClustersPayload {
  algo: string;
  params: ClusterParams;
  doc_ids: string[];
  labels: number[];
  n_clusters: number;
  manova: ManovaReport;
}

export interface MappingPayload {
  method: string;
  doc_ids: string[];
  coords: number[][];
}

export interface SummaryPayload {
  doc_id: string;
  section: string;
  summary: string;
  path: string;
  sentences: string[];
  sentence_indices: number[];
  dominant_topic: number | null;
  top_words: string[];
}

export interface ComparePayload {
  section: string;
  topics: string[];
  docs: { doc_id: string; theta: number[] }[];
  distribution: { topic: string; values: number[]; doc_ids: string[] }[];
}

export interface CorrelationsPayload {
  method: string;
  topic_labels: string[];
  covariate_names: string[];
  r: (number | null)[][];
  p: (number | null)[][];
  note: (string | null)[][];
}
