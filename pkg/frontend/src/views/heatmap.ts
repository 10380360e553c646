// Correlation heatmap: topic probabilities vs document covariates.

import type { CorrelationsPayload } from "../types.js";
import { el, esc, fmt, formatP } from "../svg.js";

const CELL = 56;
const LEFT = 120;
const TOP = 56;

function cellColor(r: number): string {
  // blue (-1) .. white (0) .. red (+1)
  const t = Math.max(-1, Math.min(1, r));
  const other = Math.round(255 * (1 - Math.abs(t)));
  const hex = (v: number) => v.toString(16).padStart(2, "0");
  return t >= 0 ? `#ff${hex(other)}${hex(other)}` : `#${hex(other)}${hex(other)}ff`;
}

export function renderHeatmap(payload: CorrelationsPayload, covariates: string[] = []): string {
  const names = covariates.length
    ? payload.covariate_names.filter((n) => covariates.includes(n))
    : payload.covariate_names;
  const colOf = new Map(payload.covariate_names.map((n, i) => [n, i]));
  const K = payload.topic_labels.length;
  const W = LEFT + names.length * CELL + 20;
  const H = TOP + K * CELL + 20;

  const header = names
    .map((name, j) =>
      el(
        "text",
        { x: LEFT + j * CELL + CELL / 2, y: TOP - 10, "text-anchor": "middle", "font-size": 11 },
        esc(name),
      ),
    )
    .join("");

  const rows = payload.topic_labels
    .map((label, i) => {
      const rowLabel = el(
        "text",
        { x: LEFT - 8, y: TOP + i * CELL + CELL / 2 + 4, "text-anchor": "end", "font-size": 11 },
        esc(label),
      );
      const cells = names
        .map((name, j) => {
          const src = colOf.get(name)!;
          const r = payload.r[i]?.[src] ?? null;
          const p = payload.p[i]?.[src] ?? null;
          const note = payload.note[i]?.[src] ?? null;
          const x = LEFT + j * CELL;
          const y = TOP + i * CELL;
          if (r === null) {
            return (
              el("rect", { x, y, width: CELL - 2, height: CELL - 2, fill: "#f0f0f0", stroke: "#cccccc" }) +
              el("text", { x: x + CELL / 2, y: y + CELL / 2 + 4, "text-anchor": "middle", "font-size": 10 },
                 esc(note ?? "n/a"))
            );
          }
          const star = p !== null && p < 0.05 ? "*" : "";
          return (
            el("rect", {
              x, y, width: CELL - 2, height: CELL - 2, fill: cellColor(r), stroke: "#cccccc",
              "data-p": formatP(p),
            }) +
            el("text", { x: x + CELL / 2, y: y + CELL / 2 + 4, "text-anchor": "middle", "font-size": 11 },
               `${fmt(Math.round(r * 100) / 100)}${star}`)
          );
        })
        .join("");
      return rowLabel + cells;
    })
    .join("");

  const caption = el(
    "text",
    { x: 8, y: 16, "font-size": 12, class: "caption" },
    esc(`${payload.method} correlation; * marks p < 0.05`),
  );
  return el("svg", { viewBox: `0 0 ${W} ${H}`, class: "view-heatmap", role: "img" }, caption + header + rows);
}
