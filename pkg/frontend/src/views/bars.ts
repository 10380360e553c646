// Keyword bars for the selected topic, driven by the relevance slider.

import type { TermsPayload } from "../types.js";
import { el, esc, fmt, linearScale } from "../svg.js";

const W = 420;
const BAR_H = 18;
const GAP = 4;
const LABEL_W = 110;

export function renderBars(terms: TermsPayload, topic: number): string {
  const ranked = terms.topics[topic] ?? [];
  const H = 40 + ranked.length * (BAR_H + GAP);
  const scores = ranked.map(([, s]) => s);
  const lo = Math.min(...scores, 0);
  const hi = Math.max(...scores, lo + 1e-9);
  const sx = linearScale([lo, hi], [0, W - LABEL_W - 60]);

  const bars = ranked
    .map(([term, score], i) => {
      const y = 32 + i * (BAR_H + GAP);
      return (
        el("text", { x: LABEL_W - 6, y: y + 13, "text-anchor": "end", "font-size": 11 }, esc(term)) +
        el("rect", {
          x: LABEL_W,
          y,
          width: Math.max(1, sx(score)),
          height: BAR_H,
          fill: "#4e79a7",
          "data-term": term,
        }) +
        el("text", { x: LABEL_W + sx(score) + 4, y: y + 13, "font-size": 10 }, fmt(score))
      );
    })
    .join("");

  const title = el(
    "text",
    { x: 8, y: 16, "font-size": 12, class: "caption" },
    esc(`${terms.labels[topic] ?? `topic ${topic}`} — relevance λ = ${terms.lambda}`),
  );
  return el("svg", { viewBox: `0 0 ${W} ${H}`, class: "view-bars", role: "img" }, title + bars);
}
