// Choropleth of cluster membership for country entities (Table-1 area 1a).

import type { Geometry, Position } from "geojson";
import type { CountryFeature } from "../geo.js";
import type { ClustersPayload } from "../types.js";
import { clusterColor, el, esc, fmt, formatP } from "../svg.js";

const W = 960;
const H = 500;

function project([lon, lat]: number[]): [number, number] {
  return [((lon! + 180) / 360) * W, ((90 - lat!) / 180) * H];
}

function ringPath(ring: Position[]): string {
  return (
    ring
      .map((pt, i) => {
        const [x, y] = project(pt as number[]);
        return `${i === 0 ? "M" : "L"}${fmt(x)},${fmt(y)}`;
      })
      .join("") + "Z"
  );
}

function geometryPath(geom: Geometry): string {
  if (geom.type === "Polygon") {
    return geom.coordinates.map(ringPath).join("");
  }
  if (geom.type === "MultiPolygon") {
    return geom.coordinates.map((poly) => poly.map(ringPath).join("")).join("");
  }
  return "";
}

export interface MapInput {
  clusters: ClustersPayload;
  entityOf: Record<string, string>; // doc_id -> entity_id (alpha-2 when geo)
  countries: CountryFeature[];
}

export function renderMap({ clusters, entityOf, countries }: MapInput): string {
  const byEntity = new Map<string, number>();
  clusters.doc_ids.forEach((docId, i) => {
    byEntity.set(entityOf[docId] ?? docId, clusters.labels[i]!);
  });

  const matched = new Set<string>();
  const paths = countries
    .map((c) => {
      const label = c.alpha2 !== null ? byEntity.get(c.alpha2) : undefined;
      if (label !== undefined && c.alpha2 !== null) matched.add(c.alpha2);
      const fill = label === undefined ? "#e8e8e8" : clusterColor(label);
      return el("path", {
        d: geometryPath(c.geometry),
        fill,
        stroke: "#ffffff",
        "stroke-width": 0.5,
        "data-entity": c.alpha2 ?? "",
        "data-name": c.name,
      });
    })
    .join("");

  const unmatched = [...byEntity.keys()].filter((e) => !matched.has(e)).sort();
  const legend = legendFor(clusters);
  const notice = unmatched.length
    ? el(
        "text",
        { x: 8, y: H - 10, class: "map-notice", "font-size": 12 },
        esc(`no basemap match for: ${unmatched.join(", ")} (shown in scatter view)`),
      )
    : "";

  return el(
    "svg",
    { viewBox: `0 0 ${W} ${H}`, class: "view-map", role: "img" },
    paths + legend + notice + manovaBadge(clusters, W - 8, 18),
  );
}

export function legendFor(clusters: ClustersPayload): string {
  const entries: string[] = [];
  for (let c = 0; c < clusters.n_clusters; c++) {
    entries.push(
      el("rect", { x: 8, y: 10 + c * 18, width: 12, height: 12, fill: clusterColor(c) }) +
        el("text", { x: 24, y: 20 + c * 18, "font-size": 12 }, esc(`cluster ${c}`)),
    );
  }
  if (clusters.labels.some((l) => l < 0)) {
    const c = clusters.n_clusters;
    entries.push(
      el("rect", { x: 8, y: 10 + c * 18, width: 12, height: 12, fill: clusterColor(-1) }) +
        el("text", { x: 24, y: 20 + c * 18, "font-size": 12 }, "noise"),
    );
  }
  return el("g", { class: "legend" }, entries.join(""));
}

export function manovaBadge(clusters: ClustersPayload, x: number, y: number): string {
  const m = clusters.manova;
  const text = m.error ? `MANOVA: ${m.error}` : `MANOVA p = ${formatP(m.p_value)}`;
  return el("text", { x, y, "text-anchor": "end", class: "manova", "font-size": 12 }, esc(text));
}
