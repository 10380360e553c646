// Radar overlay of topic distributions for the selected documents.

import type { ComparePayload } from "../types.js";
import { docColor, el, esc, fmt } from "../svg.js";

const SIZE = 420;
const CX = SIZE / 2;
const CY = SIZE / 2;
const R = SIZE / 2 - 60;

function spoke(k: number, total: number, radius: number): [number, number] {
  const angle = (2 * Math.PI * k) / total - Math.PI / 2;
  return [CX + radius * Math.cos(angle), CY + radius * Math.sin(angle)];
}

export function renderRadar(payload: ComparePayload): string {
  const K = payload.topics.length;
  const maxTheta = Math.max(0.0001, ...payload.docs.flatMap((d) => d.theta));

  const rings = [0.25, 0.5, 0.75, 1.0]
    .map((f) => {
      const pts = Array.from({ length: K }, (_, k) => spoke(k, K, R * f))
        .map(([x, y]) => `${fmt(x)},${fmt(y)}`)
        .join(" ");
      return el("polygon", { points: pts, fill: "none", stroke: "#dddddd" });
    })
    .join("");

  const axes = payload.topics
    .map((label, k) => {
      const [x, y] = spoke(k, K, R);
      const [lx, ly] = spoke(k, K, R + 24);
      return (
        el("line", { x1: CX, y1: CY, x2: x, y2: y, stroke: "#cccccc" }) +
        el("text", { x: lx, y: ly, "text-anchor": "middle", "font-size": 11 }, esc(label))
      );
    })
    .join("");

  const polygons = payload.docs
    .map((doc, i) => {
      const pts = doc.theta
        .map((t, k) => spoke(k, K, (R * t) / maxTheta))
        .map(([x, y]) => `${fmt(x)},${fmt(y)}`)
        .join(" ");
      return el("polygon", {
        points: pts,
        fill: docColor(i),
        "fill-opacity": 0.25,
        stroke: docColor(i),
        "stroke-width": 2,
        "data-doc": doc.doc_id,
      });
    })
    .join("");

  const legend = payload.docs
    .map((doc, i) =>
      el("rect", { x: 8, y: 8 + i * 18, width: 12, height: 12, fill: docColor(i) }) +
      el("text", { x: 24, y: 18 + i * 18, "font-size": 12 }, esc(doc.doc_id)),
    )
    .join("");

  const hint = payload.docs.length
    ? ""
    : el("text", { x: CX, y: CY, "text-anchor": "middle", "font-size": 12 }, "select documents to compare");

  return el(
    "svg",
    { viewBox: `0 0 ${SIZE} ${SIZE}`, class: "view-radar", role: "img" },
    rings + axes + polygons + legend + hint,
  );
}
