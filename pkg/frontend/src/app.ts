// Application shell: control panel, state <-> URL sync, per-view fetch
// orchestration with stale-response discard, and view mounting.

import { ApiClient } from "./api.js";
import type { CountryFeature } from "./geo.js";
import { affectedViews, decodeState, defaultState, encodeState, validateState } from "./state.js";
import type { ViewKey, ViewState } from "./state.js";
import type { ClustersPayload, ComparePayload, Meta } from "./types.js";
import { esc } from "./svg.js";
import { renderBars } from "./views/bars.js";
import { renderHeatmap } from "./views/heatmap.js";
import { renderIntertopic } from "./views/intertopic.js";
import { renderMap } from "./views/map.js";
import { renderRadar } from "./views/radar.js";
import { renderScatter } from "./views/scatter.js";
import { renderSummary } from "./views/summary.js";
import { renderViolin } from "./views/violin.js";

export interface AppDeps {
  client: ApiClient;
  root: HTMLElement;
  countries: CountryFeature[];
  onStateChange?: (query: string) => void;
}

const PANELS: [ViewKey | "main", string][] = [
  ["main", "clustering"],
  ["radar", "topic distributions (selected documents)"],
  ["violin", "topic distributions (all documents)"],
  ["bars", "keywords"],
  ["intertopic", "intertopic map"],
  ["correlations", "covariate correlations"],
  ["summary", "document summaries"],
];

export class App {
  state!: ViewState;
  private meta!: Meta;
  private versions = new Map<string, number>();
  private cache: {
    clusters?: ClustersPayload;
    compare?: ComparePayload;
    mapping?: import("./types.js").MappingPayload;
    model?: import("./types.js").ModelPayload;
  } = {};

  constructor(private deps: AppDeps) {}

  async start(initialQuery: string): Promise<void> {
    try {
      this.meta = await this.deps.client.meta();
    } catch (err) {
      this.renderError(String(err), () => void this.start(initialQuery));
      return;
    }
    const fromUrl = initialQuery ? decodeState(initialQuery) : null;
    this.state =
      fromUrl && validateState(fromUrl, this.meta).length === 0 ? fromUrl : defaultState(this.meta);
    this.renderShell();
    await this.refresh([...affectedViews("section")]);
  }

  /** Apply one control change; only the affected views refetch. */
  async apply<K extends keyof ViewState>(field: K, value: ViewState[K]): Promise<void> {
    const next = { ...this.state, [field]: value };
    if (field === "section") {
      next.topic = 0;
      next.docs = [];
    }
    if (field === "algo") {
      const variant = (this.meta.clustering[String(value)] ?? [])[0] ?? {};
      next.k = typeof variant.k === "number" ? variant.k : null;
      next.linkage = typeof variant.linkage === "string" ? variant.linkage : null;
    }
    const bad = validateState(next, this.meta);
    if (bad.length) {
      this.renderError(`invalid state fields: ${bad.join(", ")}`, () => void 0);
      return;
    }
    this.state = next;
    this.deps.onStateChange?.(encodeState(this.state));
    this.renderControls();
    await this.refresh(affectedViews(field));
  }

  private bump(view: string): number {
    const v = (this.versions.get(view) ?? 0) + 1;
    this.versions.set(view, v);
    return v;
  }

  private fresh(view: string, version: number): boolean {
    return this.versions.get(view) === version;
  }

  private async refresh(views: ViewKey[]): Promise<void> {
    const c = this.deps.client;
    const s = this.state;
    const jobs: Promise<void>[] = [];

    if (views.includes("mapping") || views.includes("clusters")) {
      const v = this.bump("main");
      jobs.push(
        Promise.all([
          c.mapping(s.section, s.mapping),
          c.clusters(s),
          this.cache.model && !views.includes("clusters") ? Promise.resolve(this.cache.model) : c.model(s.section),
        ]).then(([mapping, clusters, model]) => {
          if (!this.fresh("main", v)) return;
          this.cache.mapping = mapping;
          this.cache.clusters = clusters;
          this.cache.model = model;
          this.renderMain();
          this.mount("intertopic", renderIntertopic(model, this.state.topic));
        }).catch((err) => this.mountError("main", err)),
      );
    }
    if (views.includes("radar") || views.includes("violin")) {
      const v = this.bump("compare");
      const ids = s.docs.length ? s.docs : this.meta.doc_ids.slice(0, 2);
      jobs.push(
        c.compare(s.section, ids).then((payload) => {
          if (!this.fresh("compare", v)) return;
          this.cache.compare = payload;
          this.mount("radar", renderRadar(payload));
          this.mount("violin", renderViolin(payload, s.docs));
        }).catch((err) => this.mountError("radar", err)),
      );
    }
    if (views.includes("bars")) {
      const v = this.bump("bars");
      jobs.push(
        c.terms(s.section, s.lambda).then((terms) => {
          if (!this.fresh("bars", v)) return;
          this.mount("bars", renderBars(terms, s.topic));
        }).catch((err) => this.mountError("bars", err)),
      );
    }
    if (views.includes("intertopic") && this.cache.model) {
      this.mount("intertopic", renderIntertopic(this.cache.model, s.topic));
    }
    if (views.includes("correlations")) {
      const v = this.bump("correlations");
      jobs.push(
        c.correlations(s.section).then((payload) => {
          if (!this.fresh("correlations", v)) return;
          this.mount("correlations", renderHeatmap(payload, s.covariates));
        }).catch((err) => this.mountError("correlations", err)),
      );
    }
    if (views.includes("summary")) {
      const v = this.bump("summary");
      const ids = s.docs.length ? s.docs.slice(0, 3) : this.meta.doc_ids.slice(0, 1);
      jobs.push(
        Promise.all(ids.map((d) => c.summary(d, s.section))).then((payloads) => {
          if (!this.fresh("summary", v)) return;
          this.mount("summary", payloads.map(renderSummary).join(""));
        }).catch((err) => this.mountError("summary", err)),
      );
    }
    await Promise.all(jobs);
  }

  private renderMain(): void {
    const { mapping, clusters } = this.cache;
    if (!mapping || !clusters) return;
    const geoPossible = this.meta.geo && this.deps.countries.length > 0;
    const useMap = this.state.view === "map" && geoPossible;
    const html = useMap
      ? renderMap({ clusters, entityOf: this.meta.entity_ids, countries: this.deps.countries })
      : renderScatter({ mapping, clusters, selected: this.state.docs });
    this.mount("main", html);
  }

  private mount(panel: string, html: string): void {
    const target = this.deps.root.querySelector(`[data-panel="${panel}"] .panel-body`);
    if (target) target.innerHTML = html;
  }

  private mountError(panel: string, err: unknown): void {
    this.mount(panel, `<div class="error">${esc(String(err))}</div>`);
  }

  private renderError(message: string, retry: () => void): void {
    this.deps.root.innerHTML = `<div class="error-panel"><p>${esc(message)}</p><button id="retry">retry</button></div>`;
    this.deps.root.querySelector("#retry")?.addEventListener("click", retry);
  }

  private renderShell(): void {
    const panels = PANELS.map(
      ([key, title]) =>
        `<section class="panel" data-panel="${key}"><h2>${esc(title)}</h2><div class="panel-body"></div></section>`,
    ).join("");
    this.deps.root.innerHTML = `<div class="layout"><aside id="controls"></aside><main class="panels">${panels}</main></div>`;
    this.renderControls();
  }

  private renderControls(): void {
    const host = this.deps.root.querySelector("#controls");
    if (!host) return;
    const m = this.meta;
    const s = this.state;
    const opt = (v: string, cur: string) => `<option value="${esc(v)}"${v === cur ? " selected" : ""}>${esc(v)}</option>`;
    const variants = m.clustering[s.algo] ?? [];
    const ks = [...new Set(variants.map((p) => p.k).filter((k): k is number => typeof k === "number"))];
    host.innerHTML = [
      `<label>section <select id="c-section">${m.section_ids.map((x) => opt(x, s.section)).join("")}</select></label>`,
      m.geo
        ? `<label>view <select id="c-view">${["map", "scatter"].map((x) => opt(x, s.view)).join("")}</select></label>`
        : "",
      `<label>mapping <select id="c-mapping">${m.mapping_methods.map((x) => opt(x, s.mapping)).join("")}</select></label>`,
      `<label>clustering <select id="c-algo">${Object.keys(m.clustering).map((x) => opt(x, s.algo)).join("")}</select></label>`,
      ks.length
        ? `<label>k <select id="c-k">${ks.map((k) => `<option value="${k}"${k === s.k ? " selected" : ""}>${k}</option>`).join("")}</select></label>`
        : "",
      `<label>documents <select id="c-docs" multiple size="6">${m.doc_ids
        .map((d) => `<option value="${esc(d)}"${s.docs.includes(d) ? " selected" : ""}>${esc(d)}</option>`)
        .join("")}</select></label>`,
      `<label>relevance λ <input id="c-lambda" type="range" min="0" max="1" step="0.05" value="${s.lambda}"/> <span id="c-lambda-val">${s.lambda}</span></label>`,
      `<label>topic <input id="c-topic" type="number" min="0" value="${s.topic}"/></label>`,
    ].join("");

    const on = (id: string, event: string, fn: (el: HTMLElement) => void) => {
      const node = host.querySelector(id);
      node?.addEventListener(event, () => fn(node as HTMLElement));
    };
    on("#c-section", "change", (n) => void this.apply("section", (n as HTMLSelectElement).value));
    on("#c-view", "change", (n) => {
      void this.apply("view", (n as HTMLSelectElement).value as ViewState["view"]);
      this.renderMain();
    });
    on("#c-mapping", "change", (n) => void this.apply("mapping", (n as HTMLSelectElement).value));
    on("#c-algo", "change", (n) => void this.apply("algo", (n as HTMLSelectElement).value));
    on("#c-k", "change", (n) => void this.apply("k", Number((n as HTMLSelectElement).value)));
    on("#c-docs", "change", (n) => {
      const sel = [...(n as HTMLSelectElement).selectedOptions].map((o) => o.value);
      void this.apply("docs", sel);
    });
    on("#c-lambda", "change", (n) => void this.apply("lambda", Number((n as HTMLInputElement).value)));
    on("#c-topic", "change", (n) => void this.apply("topic", Number((n as HTMLInputElement).value)));
  }
}
