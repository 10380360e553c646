// Intertopic distance map: MDS of topic-topic divergences, circle area
// proportional to topic prevalence (the LDAvis-style overview).

import type { ModelPayload } from "../types.js";
import { el, esc, fmt, linearScale } from "../svg.js";

const SIZE = 420;
const PAD = 50;

export function renderIntertopic(model: ModelPayload, selectedTopic: number): string {
  const coords = model.intertopic.coords;
  const prevalence = model.intertopic.prevalence;
  const xs = coords.map((c) => c[0]!);
  const ys = coords.map((c) => c[1]!);
  const sx = linearScale([Math.min(...xs), Math.max(...xs)], [PAD, SIZE - PAD]);
  const sy = linearScale([Math.min(...ys), Math.max(...ys)], [SIZE - PAD, PAD]);

  // area proportional to prevalence -> radius ~ sqrt
  const maxPrev = Math.max(...prevalence, 1e-9);
  const radius = (p: number) => 8 + 30 * Math.sqrt(p / maxPrev);

  const circles = coords
    .map((c, k) => {
      const x = sx(c[0]!);
      const y = sy(c[1]!);
      const selected = k === selectedTopic;
      return (
        el("circle", {
          cx: x,
          cy: y,
          r: radius(prevalence[k] ?? 0),
          fill: selected ? "#f28e2b" : "#4e79a7",
          "fill-opacity": 0.55,
          stroke: selected ? "#b35900" : "#2f5a7d",
          "data-topic": k,
        }) +
        el(
          "text",
          { x, y: y + 4, "text-anchor": "middle", "font-size": 11, fill: "#222222" },
          esc(model.labels[k] ?? String(k)),
        )
      );
    })
    .join("");

  const caption = el(
    "text",
    { x: 8, y: 16, "font-size": 12, class: "caption" },
    esc(`intertopic map (${model.intertopic.metric}); area ∝ prevalence`),
  );
  return el("svg", { viewBox: `0 0 ${SIZE} ${SIZE}`, class: "view-intertopic", role: "img" }, caption + circles);
}
