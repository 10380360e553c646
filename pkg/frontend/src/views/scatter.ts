// Dimensionality-reduction mapping, cluster-colored (Table-1 area 1b).

import type { ClustersPayload, MappingPayload } from "../types.js";
import { clusterColor, el, esc, fmt, linearScale } from "../svg.js";
import { legendFor, manovaBadge } from "./map.js";

const W = 640;
const H = 480;
const PAD = 40;

export interface ScatterInput {
  mapping: MappingPayload;
  clusters: ClustersPayload;
  selected: string[];
}

export function renderScatter({ mapping, clusters, selected }: ScatterInput): string {
  const xs = mapping.coords.map((c) => c[0]!);
  const ys = mapping.coords.map((c) => c[1]!);
  const sx = linearScale([Math.min(...xs), Math.max(...xs)], [PAD, W - PAD]);
  const sy = linearScale([Math.min(...ys), Math.max(...ys)], [H - PAD, PAD]);

  const labelOf = new Map(clusters.doc_ids.map((d, i) => [d, clusters.labels[i]!]));
  const points = mapping.doc_ids
    .map((docId, i) => {
      const x = sx(xs[i]!);
      const y = sy(ys[i]!);
      const label = labelOf.get(docId) ?? -1;
      const ring = selected.includes(docId)
        ? el("circle", { cx: x, cy: y, r: 10, fill: "none", stroke: "#222222", "stroke-width": 1.5 })
        : "";
      return (
        ring +
        el("circle", { cx: x, cy: y, r: 6, fill: clusterColor(label), "data-doc": docId }) +
        el("text", { x: x + 8, y: y + 4, "font-size": 11 }, esc(docId))
      );
    })
    .join("");

  const caption = el(
    "text",
    { x: PAD, y: 16, "font-size": 12, class: "caption" },
    esc(`${mapping.method} mapping`),
  );
  return el(
    "svg",
    { viewBox: `0 0 ${W} ${H}`, class: "view-scatter", role: "img" },
    caption + points + legendFor(clusters) + manovaBadge(clusters, W - 8, 18),
  );
}
