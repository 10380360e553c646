// Snapshot + behavior tests for all seven visualization areas, driven by
// payloads captured from the fixture bundle's API.

import { describe, expect, it } from "vitest";

import type { CountryFeature } from "../src/geo.js";
import { NUMERIC_TO_ALPHA2, topologyToCountries } from "../src/geo.js";
import type {
  ClustersPayload,
  ComparePayload,
  CorrelationsPayload,
  MappingPayload,
  Meta,
  ModelPayload,
  SummaryPayload,
  TermsPayload,
} from "../src/types.js";
import { renderBars } from "../src/views/bars.js";
import { renderHeatmap } from "../src/views/heatmap.js";
import { renderIntertopic } from "../src/views/intertopic.js";
import { renderMap } from "../src/views/map.js";
import { renderRadar } from "../src/views/radar.js";
import { renderScatter } from "../src/views/scatter.js";
import { renderSummary } from "../src/views/summary.js";
import { renderViolin } from "../src/views/violin.js";

import clustersFixture from "./fixtures/clusters_climate_agg_k2.json";
import compareFixture from "./fixtures/compare_climate_AT_SE.json";
import correlationsFixture from "./fixtures/correlations_climate.json";
import mappingFixture from "./fixtures/mapping_climate_mds.json";
import metaFixture from "./fixtures/meta.json";
import modelFixture from "./fixtures/model_climate.json";
import summaryFixture from "./fixtures/summary_AT_climate.json";
import termsDefaultFixture from "./fixtures/terms_climate_default.json";
import termsLambda1Fixture from "./fixtures/terms_climate_lambda1.json";

const meta = metaFixture as unknown as Meta;
const clusters = clustersFixture as unknown as ClustersPayload;
const compare = compareFixture as unknown as ComparePayload;
const correlations = correlationsFixture as unknown as CorrelationsPayload;
const mapping = mappingFixture as unknown as MappingPayload;
const model = modelFixture as unknown as ModelPayload;
const summary = summaryFixture as unknown as SummaryPayload;
const termsDefault = termsDefaultFixture as unknown as TermsPayload;
const termsLambda1 = termsLambda1Fixture as unknown as TermsPayload;

// a tiny two-country "world" keeps the choropleth snapshot readable
const miniWorld: CountryFeature[] = [
  {
    alpha2: "AT",
    name: "Austria",
    geometry: { type: "Polygon", coordinates: [[[10, 46], [17, 46], [17, 49], [10, 49], [10, 46]]] },
  },
  {
    alpha2: "SE",
    name: "Sweden",
    geometry: { type: "Polygon", coordinates: [[[11, 55], [24, 55], [24, 69], [11, 69], [11, 55]]] },
  },
  {
    alpha2: null,
    name: "Terra Incognita",
    geometry: { type: "Polygon", coordinates: [[[-20, -10], [-10, -10], [-10, 0], [-20, 0], [-20, -10]]] },
  },
];

describe("area 1: clustering geovisualization (choropleth)", () => {
  it("matches snapshot", () => {
    const svg = renderMap({ clusters, entityOf: meta.entity_ids, countries: miniWorld });
    expect(svg).toMatchSnapshot();
  });

  it("colors matched countries by cluster and lists unmatched entities", () => {
    const svg = renderMap({ clusters, entityOf: meta.entity_ids, countries: miniWorld });
    expect(svg).toContain('data-entity="AT"');
    expect(svg).toContain("no basemap match for:");
    expect(svg).toContain("MANOVA p = ");
  });

  it("decodes the bundled world atlas and finds fixture countries", () => {
    // the real basemap: public-domain Natural Earth via world-atlas
    return import("world-atlas/countries-110m.json").then((world) => {
      const countries = topologyToCountries(world.default ?? world);
      const alpha2 = new Set(countries.map((c) => c.alpha2));
      for (const id of meta.doc_ids) {
        expect(alpha2.has(meta.entity_ids[id]!), id).toBe(true);
      }
      expect(Object.keys(NUMERIC_TO_ALPHA2).length).toBeGreaterThan(100);
    });
  });
});

describe("area 2: dimensionality-reduction scatter", () => {
  const svg = renderScatter({ mapping, clusters, selected: ["AT"] });

  it("matches snapshot", () => {
    expect(svg).toMatchSnapshot();
  });

  it("shows one distinct legend color per cluster and the MANOVA p", () => {
    const legendRects = svg.match(/<g class="legend">([\s\S]*?)<\/g>/)?.[1] ?? "";
    const fills = [...legendRects.matchAll(/fill="(#[0-9a-f]{6})"/g)].map((m) => m[1]);
    expect(new Set(fills).size).toBe(clusters.n_clusters);
    expect(svg).toContain("MANOVA p = ");
  });

  it("rings the selected documents", () => {
    expect(svg).toContain('stroke-width="1.5"');
  });
});

describe("area 3: radar of selected documents", () => {
  it("matches snapshot", () => {
    expect(renderRadar(compare)).toMatchSnapshot();
  });

  it("overlays one polygon per selected document", () => {
    const svg = renderRadar(compare);
    expect(svg).toContain('data-doc="AT"');
    expect(svg).toContain('data-doc="SE"');
    expect((svg.match(/<polygon[^>]*data-doc=/g) ?? []).length).toBe(2);
  });
});

describe("area 4: violins with per-document markers", () => {
  it("matches snapshot", () => {
    expect(renderViolin(compare, ["AT", "SE"])).toMatchSnapshot();
  });

  it("marks the document at a topic's maximum at the top of that violin", () => {
    const values = [0.1, 0.2, 0.9, 0.4];
    const docs = ["A", "B", "C", "D"];
    const payload: ComparePayload = {
      section: "s",
      topics: ["t0"],
      docs: [],
      distribution: [{ topic: "t0", values, doc_ids: docs }],
    };
    const svg = renderViolin(payload, ["C", "B"]);
    const lines = [...svg.matchAll(/<line[^>]*data-doc="([A-Z])"[^>]*>/g)];
    const yOf = new Map(
      lines.map((m) => [m[1], Number(/y1="([-0-9.]+)"/.exec(m[0])![1])]),
    );
    // smaller y = higher on screen; C holds the maximum value
    expect(yOf.get("C")!).toBeLessThan(yOf.get("B")!);
  });
});

describe("area 5: keyword bars with the relevance slider", () => {
  it("matches snapshot", () => {
    expect(renderBars(termsDefault, 0)).toMatchSnapshot();
  });

  it("lambda = 1 ordering equals the model's phi ordering", () => {
    for (let k = 0; k < model.K; k++) {
      const ranked = termsLambda1.topics[k]!.map(([term]) => term);
      const phiOrder = model.vocab
        .map((term, v) => ({ term, phi: model.phi[k]![v]! }))
        .sort((a, b) => b.phi - a.phi)
        .slice(0, ranked.length)
        .map((x) => x.term);
      expect(ranked).toEqual(phiOrder);
    }
  });

  it("renders the lambda value in the caption", () => {
    expect(renderBars(termsDefault, 0)).toContain("λ = 0.6");
  });
});

describe("area 6: intertopic distance map", () => {
  it("matches snapshot", () => {
    expect(renderIntertopic(model, 0)).toMatchSnapshot();
  });

  it("scales circle area with prevalence", () => {
    const svg = renderIntertopic(model, 0);
    const radii = [...svg.matchAll(/r="([0-9.]+)"/g)].map((m) => Number(m[1]));
    const prev = model.intertopic.prevalence;
    const order = [...prev.keys()].sort((a, b) => prev[a]! - prev[b]!);
    const radiiSorted = [...radii].sort((a, b) => a - b);
    expect(radii[order[order.length - 1]!]).toBe(radiiSorted[radiiSorted.length - 1]);
  });
});

describe("area 7a: correlation heatmap", () => {
  it("matches snapshot", () => {
    expect(renderHeatmap(correlations)).toMatchSnapshot();
  });

  it("renders a null cell for undefined correlations", () => {
    const payload: CorrelationsPayload = {
      method: "pearson",
      topic_labels: ["t0"],
      covariate_names: ["const"],
      r: [[null]],
      p: [[null]],
      note: [["constant input"]],
    };
    expect(renderHeatmap(payload)).toContain("constant input");
  });

  it("can filter to the selected covariates", () => {
    const svg = renderHeatmap(correlations, ["gdp"]);
    expect(svg).toContain(">gdp</text>");
    expect(svg).not.toContain(">emissions</text>");
  });
});

describe("area 7b: summary panel", () => {
  it("matches snapshot", () => {
    expect(renderSummary(summary)).toMatchSnapshot();
  });

  it("highlights important words inside sentences", () => {
    const html = renderSummary(summary);
    expect(html).toContain("<mark>");
    expect(html).toContain('class="chip"');
    expect(html).toContain(summary.path);
  });
});
