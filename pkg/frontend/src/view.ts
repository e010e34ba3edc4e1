// DOM rendering. The whole view derives from the state on every change;
// event wiring stays in app.ts via delegation on data attributes.

import { LOWER_BEADS, UPPER_BEADS, friendlyFormula, friendlyTags, readValue } from "./model.js";
import type { ViewState } from "./app.js";
import type { LanguageCode } from "./types.js";

const LANGUAGES: LanguageCode[] = ["english", "french", "maori", "breton"];

function escapeHtml(text: string): string {
  return text.replace(/[&<>"]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;" })[c]!);
}

function beadButton(rod: number, part: "lower" | "upper", index: number, active: boolean): string {
  return (
    `<button class="bead${active ? " active" : ""}" data-bead ` +
    `data-rod="${rod}" data-part="${part}" data-index="${index}" ` +
    `aria-label="rod ${rod} ${part} bead ${index}"></button>`
  );
}

function renderRod(rod: number, lower: number, upper: number): string {
  const upperBeads = [];
  for (let i = UPPER_BEADS; i >= 1; i--) upperBeads.push(beadButton(rod, "upper", i, i <= upper));
  const lowerBeads = [];
  for (let i = 1; i <= LOWER_BEADS; i++) lowerBeads.push(beadButton(rod, "lower", i, i <= lower));
  return (
    `<div class="rod" data-rod-col="${rod}">` +
    `<div class="part upper">${upperBeads.join("")}</div>` +
    `<div class="beam"></div>` +
    `<div class="part lower">${lowerBeads.join("")}</div>` +
    `</div>`
  );
}

function renderAbacus(state: ViewState): string {
  // units rod on the right
  const rods = state.config.rods.map((rod, i) => renderRod(i, rod.lower, rod.upper)).reverse();
  return `<div class="abacus">${rods.join("")}</div>`;
}

function renderToolbar(state: ViewState): string {
  return (
    `<div class="toolbar">` +
    `<button data-action="see-number" class="${state.seeNumberOn ? "on" : ""}">see number</button>` +
    `<button data-action="set-zero">set to zero</button>` +
    `<button data-action="positioning">positioning</button>` +
    `</div>`
  );
}

function renderNumberDisplay(state: ViewState): string {
  // the digit display exists only while see-number is on
  if (!state.seeNumberOn) return `<div class="number-display off" data-display></div>`;
  return `<div class="number-display on" data-display>${readValue(state.config)}</div>`;
}

function renderLanguagePanel(state: ViewState): string {
  if (!state.wordsPanelOn) return "";
  const shown: LanguageCode[] = state.teacherMode
    ? LANGUAGES
    : [state.task?.language ?? state.panelLanguage];
  const rows = shown
    .map((lang) => {
      const entry = state.words[lang];
      return `<div class="words-row"><span class="lang">${lang}</span> <span class="words">${
        entry ? escapeHtml(entry) : "&mdash;"
      }</span></div>`;
    })
    .join("");
  return `<div class="language-panel">${rows}</div>`;
}

function renderTaskPanel(state: ViewState): string {
  if (!state.task) return `<div class="task-panel">no task started</div>`;
  const task = state.task;
  const label =
    task.kind === "set_and_say"
      ? `Set and say ${task.target} (${task.language})`
      : task.kind === "set_number"
        ? `Set ${task.target}`
        : "Read the number";
  const answerBox =
    task.kind === "set_number"
      ? ""
      : `<input data-answer placeholder="${task.kind === "read_number" ? "the number" : "say it in words"}" ` +
        `value="${escapeHtml(state.answer)}">`;
  return (
    `<div class="task-panel"><span class="task-label">${label}</span> ${answerBox}` +
    `<button data-action="submit">submit</button></div>`
  );
}

function renderFeedback(state: ViewState): string {
  if (!state.feedback) return "";
  const { correct, report } = state.feedback;
  const verdict = correct
    ? `<span class="verdict ok">correct</span>`
    : `<span class="verdict wrong">not yet</span>`;
  const tags = friendlyTags(report.tags)
    .map((t) => `<li>${escapeHtml(t)}</li>`)
    .join("");
  return (
    `<div class="feedback" data-feedback>${verdict}` +
    `<div class="formula">${escapeHtml(friendlyFormula(report.formula))}</div>` +
    (tags ? `<ul class="tags">${tags}</ul>` : "") +
    `</div>`
  );
}

export function renderApp(state: ViewState): string {
  const banner = state.banner ? `<div class="banner" data-banner>${escapeHtml(state.banner)}</div>` : "";
  return (
    `<div class="suanpan-app">` +
    banner +
    renderTaskPanel(state) +
    renderNumberDisplay(state) +
    renderAbacus(state) +
    renderToolbar(state) +
    renderLanguagePanel(state) +
    renderFeedback(state) +
    `</div>`
  );
}
