// Violin plot of each topic's distribution across all documents, with the
// selected documents marked at their positions.

import type { ComparePayload } from "../types.js";
import { docColor, el, esc, fmt, linearScale } from "../svg.js";

const W = 640;
const H = 380;
const PAD_Y = 36;
const HALF_MAX = 34;

function gaussianDensity(values: number[], at: number, bandwidth: number): number {
  const inv = 1 / (bandwidth * Math.sqrt(2 * Math.PI));
  let total = 0;
  for (const v of values) {
    const z = (at - v) / bandwidth;
    total += inv * Math.exp(-0.5 * z * z);
  }
  return total / values.length;
}

function silverman(values: number[]): number {
  const n = values.length;
  const mean = values.reduce((a, b) => a + b, 0) / n;
  const sd = Math.sqrt(values.reduce((a, b) => a + (b - mean) ** 2, 0) / Math.max(1, n - 1));
  return Math.max(1e-3, 1.06 * (sd || 0.05) * Math.pow(n, -0.2));
}

export function renderViolin(payload: ComparePayload, selected: string[]): string {
  const K = payload.distribution.length;
  const colW = W / Math.max(1, K);
  const sy = linearScale([0, 1], [H - PAD_Y, PAD_Y]);

  const parts = payload.distribution.map((dist, k) => {
    const cx = colW * k + colW / 2;
    const bw = silverman(dist.values);
    const steps = 25;
    const samples = Array.from({ length: steps }, (_, i) => i / (steps - 1));
    const dens = samples.map((t) => gaussianDensity(dist.values, t, bw));
    const dMax = Math.max(...dens, 1e-12);

    const right = samples.map((t, i) => `${fmt(cx + (dens[i]! / dMax) * HALF_MAX)},${fmt(sy(t))}`);
    const left = samples
      .slice()
      .reverse()
      .map((t, i) => `${fmt(cx - (dens[steps - 1 - i]! / dMax) * HALF_MAX)},${fmt(sy(t))}`);
    const shape = el("polygon", {
      points: [...right, ...left].join(" "),
      fill: "#b3cde3",
      stroke: "#6497b1",
      "data-topic": dist.topic,
    });

    const markers = selected
      .map((docId, si) => {
        const idx = dist.doc_ids.indexOf(docId);
        if (idx < 0) return "";
        const y = sy(dist.values[idx]!);
        return (
          el("line", {
            x1: cx - HALF_MAX,
            x2: cx + HALF_MAX,
            y1: y,
            y2: y,
            stroke: docColor(si),
            "stroke-width": 2,
            "data-doc": docId,
            "data-topic": dist.topic,
          }) + el("text", { x: cx + HALF_MAX + 4, y: y + 4, "font-size": 10, fill: docColor(si) }, esc(docId))
        );
      })
      .join("");

    const label = el(
      "text",
      { x: cx, y: H - 12, "text-anchor": "middle", "font-size": 11 },
      esc(dist.topic),
    );
    return shape + markers + label;
  });

  const axisLabel = el("text", { x: 6, y: PAD_Y - 8, "font-size": 11 }, "topic share");
  return el("svg", { viewBox: `0 0 ${W} ${H}`, class: "view-violin", role: "img" }, axisLabel + parts.join(""));
}
