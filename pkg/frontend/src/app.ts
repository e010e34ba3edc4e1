// The interactive virtual abacus. Clicks update the local mirror at once
// and accumulate in the pending trace; the server stays authoritative by
// replaying the trace on submit. Positioning asks the server to normalize
// (overflow comes back as a banner), and a failed submit keeps the trace
// buffered so the same attempt can be retried.

import { ApiClient, ApiError } from "./api.js";
import { applyClick, zeros, readValue } from "./model.js";
import { renderApp } from "./view.js";
import type {
  AttemptVerdict,
  ConfigJson,
  GestureJson,
  LanguageCode,
  TaskJson,
} from "./types.js";

export interface ViewState {
  config: ConfigJson;
  seeNumberOn: boolean;
  task: TaskJson | null;
  pending: GestureJson[];
  answer: string;
  feedback: AttemptVerdict | null;
  banner: string | null;
  teacherMode: boolean;
  wordsPanelOn: boolean;
  panelLanguage: LanguageCode;
  words: Partial<Record<LanguageCode, string>>;
}

export interface AppOptions {
  rodCount?: number;
  teacherMode?: boolean;
  wordsPanelOn?: boolean;
  participant?: string;
}

const LANGUAGES: LanguageCode[] = ["english", "french", "maori", "breton"];

export class AbacusApp {
  state: ViewState;
  private sessionId: string | null = null;
  private attemptId: string | null = null;
  private taskStarted = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    options: AppOptions = {},
    private readonly participant: string = options.participant ?? "anonymous",
  ) {
    this.state = {
      config: zeros(options.rodCount ?? 2),
      seeNumberOn: false,
      task: null,
      pending: [],
      answer: "",
      feedback: null,
      banner: null,
      teacherMode: options.teacherMode ?? false,
      wordsPanelOn: options.wordsPanelOn ?? false,
      panelLanguage: "english",
      words: {},
    };
    this.root.addEventListener("click", (event) => this.onClick(event));
    this.root.addEventListener("input", (event) => this.onInput(event));
    this.render();
  }

  // ---- event delegation --------------------------------------------------
  private onClick(event: Event): void {
    const target = event.target as HTMLElement | null;
    if (!target) return;
    const bead = target.closest("[data-bead]") as HTMLElement | null;
    if (bead) {
      this.beadClick(
        Number(bead.dataset.rod),
        bead.dataset.part as "lower" | "upper",
        Number(bead.dataset.index),
      );
      return;
    }
    const action = (target.closest("[data-action]") as HTMLElement | null)?.dataset.action;
    if (action === "see-number") this.iconSeeNumber();
    else if (action === "set-zero") this.iconSetZero();
    else if (action === "positioning") void this.iconPositioning();
    else if (action === "submit") void this.submit();
  }

  private onInput(event: Event): void {
    const target = event.target as HTMLElement | null;
    if (target && "answer" in (target as HTMLElement).dataset) {
      this.state.answer = (target as HTMLInputElement).value;
    }
  }

  private now(): number {
    return this.taskStarted ? Date.now() - this.taskStarted : 0;
  }

  // ---- actions -----------------------------------------------------------
  startTask(task: TaskJson): void {
    this.state.task = task;
    this.state.config = zeros(task.rod_count);
    this.state.pending = [];
    this.state.answer = "";
    this.state.feedback = null;
    this.state.banner = null;
    this.attemptId = null;
    this.taskStarted = Date.now();
    this.render();
  }

  beadClick(rod: number, part: "lower" | "upper", index: number): void {
    this.state.config = applyClick(this.state.config, rod, part, index);
    this.state.pending.push(
      part === "lower"
        ? { type: "click_lower", rod, index, t: this.now() }
        : { type: "click_upper", rod, index, t: this.now() },
    );
    this.refreshWords();
    this.render();
  }

  iconSeeNumber(): void {
    this.state.seeNumberOn = !this.state.seeNumberOn;
    this.state.pending.push({ type: "icon_see_number", on: this.state.seeNumberOn, t: this.now() });
    this.render();
  }

  iconSetZero(): void {
    this.state.config = zeros(this.state.config.rods.length);
    this.state.pending.push({ type: "icon_set_zero", t: this.now() });
    this.refreshWords();
    this.render();
  }

  async iconPositioning(): Promise<void> {
    try {
      const normalized = await this.api.normalize(this.state.config);
      this.state.config = normalized;
      this.state.pending.push({ type: "icon_positioning", t: this.now() });
      this.state.banner = null;
    } catch (err) {
      // overflow (or any rejection): the icon press did not happen
      this.state.banner = err instanceof ApiError ? err.message : "positioning failed: server unreachable";
    }
    this.refreshWords();
    this.render();
  }

  async submit(): Promise<void> {
    const task = this.state.task;
    if (!task || this.state.pending.length === 0) {
      this.state.banner = "nothing to submit yet";
      this.render();
      return;
    }
    this.attemptId = this.attemptId ?? newAttemptId();
    const trace = {
      register: "virtual_abacus" as const,
      gestures: this.state.pending,
      ...(task.target !== undefined ? { target: task.target } : {}),
    };
    try {
      if (!this.sessionId) {
        this.sessionId = (await this.api.createSession(this.participant)).id;
      }
      const verdict = await this.api.submitAttempt(
        this.sessionId,
        task,
        trace,
        task.kind === "set_number" ? undefined : this.state.answer,
        this.attemptId,
      );
      this.state.feedback = verdict;
      this.state.banner = null;
      this.attemptId = null; // next submit is a new attempt
    } catch (err) {
      if (err instanceof ApiError) {
        this.state.banner = `${err.code}: ${err.message}`;
      } else {
        // network failure: the trace stays buffered, same attempt id retries
        this.state.banner = "offline - your attempt is kept, submit again to retry";
      }
    }
    this.render();
  }

  setWordsPanel(on: boolean): void {
    this.state.wordsPanelOn = on;
    this.refreshWords();
    this.render();
  }

  setTeacherMode(on: boolean): void {
    this.state.teacherMode = on;
    this.refreshWords();
    this.render();
  }

  setPanelLanguage(lang: LanguageCode): void {
    this.state.panelLanguage = lang;
    this.refreshWords();
    this.render();
  }

  // live verbalization of the current value, where the tables cover it
  private refreshWords(): void {
    if (!this.state.wordsPanelOn) return;
    const value = readValue(this.state.config);
    const wanted: LanguageCode[] = this.state.teacherMode
      ? LANGUAGES
      : [this.state.task?.language ?? this.state.panelLanguage];
    for (const lang of wanted) {
      this.api
        .verbalize(value, lang)
        .then((form) => {
          if (readValue(this.state.config) === value) {
            this.state.words[lang] = form.words;
            this.render();
          }
        })
        .catch(() => {
          this.state.words[lang] = undefined;
        });
    }
  }

  render(): void {
    this.root.innerHTML = renderApp(this.state);
  }
}

function newAttemptId(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) return crypto.randomUUID();
  return Math.random().toString(36).slice(2);
}

export function mount(root: HTMLElement, apiBase: string, options: AppOptions = {}): AbacusApp {
  return new AbacusApp(root, new ApiClient(apiBase), options);
}
