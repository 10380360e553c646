// Summary panel: generated summary, the most important sentences, and the
// dominant topic's words highlighted inside them.

import type { SummaryPayload } from "../types.js";
import { esc } from "../svg.js";

function highlight(sentence: string, words: string[]): string {
  let html = esc(sentence);
  for (const word of words) {
    if (!word) continue;
    const pattern = new RegExp(`\\b(${word.replace(/[.*+?^${}()|[\]\\]/g, "\\$&")}\\w*)`, "gi");
    html = html.replace(pattern, "<mark>$1</mark>");
  }
  return html;
}

export function renderSummary(payload: SummaryPayload): string {
  const badge = `<span class="badge badge-${esc(payload.path)}">${esc(payload.path)}</span>`;
  const words = payload.top_words
    .map((w) => `<span class="chip">${esc(w)}</span>`)
    .join("");
  const sentences = payload.sentences
    .map((s) => `<li>${highlight(s, payload.top_words)}</li>`)
    .join("");
  return [
    `<div class="view-summary" data-doc="${esc(payload.doc_id)}" data-section="${esc(payload.section)}">`,
    `<h3>${esc(payload.doc_id)} — ${esc(payload.section)} ${badge}</h3>`,
    `<p class="summary-text">${esc(payload.summary)}</p>`,
    `<h4>most important words</h4>`,
    `<div class="chips">${words}</div>`,
    `<h4>most important sentences</h4>`,
    `<ul class="sentences">${sentences}</ul>`,
    `</div>`,
  ].join("");
}
