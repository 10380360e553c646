// Tiny SVG/HTML string helpers; every view renders through these.

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function el(tag: string, attrs: Record<string, string | number> = {}, children = ""): string {
  const parts = Object.entries(attrs)
    .map(([k, v]) => `${k}="${typeof v === "number" ? fmt(v) : esc(v)}"`)
    .join(" ");
  const open = parts ? `<${tag} ${parts}>` : `<${tag}>`;
  return `${open}${children}</${tag}>`;
}

/** Fixed-precision coordinates keep snapshots stable across platforms. */
export function fmt(x: number): string {
  if (!Number.isFinite(x)) return "0";
  const rounded = Math.round(x * 1000) / 1000;
  return String(Object.is(rounded, -0) ? 0 : rounded);
}

export function linearScale(domain: [number, number], range: [number, number]) {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  return (x: number) => r0 + ((x - d0) / span) * (r1 - r0);
}

export const CLUSTER_COLORS = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#76b7b2",
  "#edc948",
  "#ff9da7",
];

export const NOISE_COLOR = "#9aa0a6";

export function clusterColor(label: number): string {
  if (label < 0) return NOISE_COLOR;
  return CLUSTER_COLORS[label % CLUSTER_COLORS.length]!;
}

export const DOC_COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"];

export function docColor(i: number): string {
  return DOC_COLORS[i % DOC_COLORS.length]!;
}

export function formatP(p: number | null | undefined): string {
  if (p === null || p === undefined) return "n/a";
  if (p < 1e-4) return p.toExponential(1);
  return p.toFixed(4);
}
